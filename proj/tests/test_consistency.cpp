#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "qes/consistency.hpp"

using qes::CheckReport;
using qes::Poly;
using qes::Rational;
using qes::RootSet;

namespace {

Poly<Rational> rp(std::initializer_list<long> coeffs) {
    std::vector<Rational> v;
    for (long c : coeffs) v.emplace_back(c);
    return Poly<Rational>::from_coeffs(std::move(v));
}

const CheckReport* find_report(const std::vector<CheckReport>& reports, const std::string& name) {
    for (const auto& r : reports)
        if (r.name == name) return &r;
    return nullptr;
}

}  // namespace

TEST_CASE("substitution check on classical degree-2 solutions") {
    // monic Hermite H_2: y = z^2 - 1/2 solves y'' - 2z y' + 4 y = 0
    const auto hermite = qes::verify_polynomial_solution(
        rp({1}), rp({0, -2}), rp({4}),
        Poly<Rational>::from_coeffs({Rational(-1, 2), Rational(0), Rational(1)}));
    CHECK(hermite.passed);
    CHECK(hermite.tower == "exact");

    // monic Legendre degree 2: y = z^2 - 1/3 solves (1-z^2) y'' - 2z y' + 6 y = 0
    const auto legendre = qes::verify_polynomial_solution(
        rp({1, 0, -1}), rp({0, -2}), rp({6}),
        Poly<Rational>::from_coeffs({Rational(-1, 3), Rational(0), Rational(1)}));
    CHECK(legendre.passed);

    // perturbing Z must fail
    const auto broken = qes::verify_polynomial_solution(
        rp({1, 0, -1}), rp({0, -2}), rp({7}),
        Poly<Rational>::from_coeffs({Rational(-1, 3), Rational(0), Rational(1)}));
    CHECK(!broken.passed);

    // float tower accepts rounded data
    const auto approx = qes::verify_polynomial_solution(
        Poly<double>::from_coeffs({1.0}), Poly<double>::from_coeffs({0.0, -2.0}),
        Poly<double>::from_coeffs({4.0}), Poly<double>::from_coeffs({-0.5 + 1e-13, 0.0, 1.0}));
    CHECK(approx.passed);
    CHECK(approx.tower == "float");
}

TEST_CASE("cross check: k = 2 is the vacuous-constants case") {
    const RootSet<Rational> roots({Rational(1, 2), Rational(-3)});
    const auto report = qes::cross_check_constants(roots, rp({1}), rp({0, -2}), 2, 2);
    CHECK(report.passed);
}

TEST_CASE("cross check on the k = 3, n = 1 worked example") {
    const RootSet<Rational> roots({Rational(3)});
    const Poly<Rational> Y = rp({-15, 2, 1});  // b2 = 1, b1 = 2, Y(3) = 0
    const Poly<Rational> X = rp({2, -1, 4, 0});  // a3 = 0, rest arbitrary
    const auto report = qes::cross_check_constants(roots, X, Y, 1, 3);
    CHECK(report.passed);
    const auto constants = qes::constants_linear_system(roots, X, Y, 1, 3);
    CHECK(constants.at(1) == Rational(-4));
}

TEST_CASE("cross check holds on 100 random exact instances") {
    std::mt19937_64 rng(424243);
    for (int i = 0; i < 100; ++i) {
        const int k = 4 + i % 3;
        const int n = 1 + i % 6;
        const auto inst = qes::random_instance(rng, k, n);
        const auto report = qes::cross_check_constants(inst.roots, inst.X, inst.Y, n, k);
        CHECK(report.passed);
    }
}

TEST_CASE("identity suite on a concrete root set") {
    // roots {1, 2}: e1^2 = 9 = m2 + 2 m11 = 5 + 4 and m2*m1 = 15 = m3 + m21 = 9 + 6
    const RootSet<Rational> roots({Rational(1), Rational(2)});
    const auto inst_x = rp({1, 0, 0, 2, -1});  // arbitrary k = 4 frame
    const auto inst_y = rp({0, 1, -2, 3});
    const auto reports = qes::identity_suite(roots, inst_x, inst_y, 2, 4);

    const auto* pairs = find_report(reports, "identity_e2_as_distinct_pairs");
    REQUIRE(pairs != nullptr);
    CHECK(pairs->passed);
    const auto* squared = find_report(reports, "identity_e1_squared");
    REQUIRE(squared != nullptr);
    CHECK(squared->passed);
    CHECK(squared->detail == "9 vs 9");
    const auto* product = find_report(reports, "identity_power_pair_product");
    REQUIRE(product != nullptr);
    CHECK(product->passed);
    CHECK(product->detail == "15 vs 15");

    // k = 4 exposes c1 and c2 but skips the c3 checks
    const auto* c2 = find_report(reports, "c2_expanded_form");
    REQUIRE(c2 != nullptr);
    CHECK(c2->passed);
    CHECK(c2->detail.rfind("skipped", 0) != 0);
    const auto* c3 = find_report(reports, "c3_expanded_form");
    REQUIRE(c3 != nullptr);
    CHECK(c3->detail.rfind("skipped", 0) == 0);
    const auto* triple = find_report(reports, "c3_triple_partition_coefficient_vanishes");
    REQUIRE(triple != nullptr);
    CHECK(triple->detail.rfind("skipped", 0) == 0);
}

TEST_CASE("identity suite passes fully at k = 5 and 6") {
    std::mt19937_64 rng(20270101);
    for (int i = 0; i < 30; ++i) {
        const int k = 5 + i % 2;
        const int n = 1 + i % 6;
        const auto inst = qes::random_instance(rng, k, n);
        for (const auto& report : qes::identity_suite(inst.roots, inst.X, inst.Y, n, k)) {
            CHECK(report.passed);
            CHECK(report.detail.rfind("skipped", 0) != 0);  // nothing skipped at k >= 5
            CHECK(report.tower == "exact");
        }
    }
}

TEST_CASE("end to end: consistent instances solve their reduced equation exactly") {
    std::mt19937_64 rng(515151);
    for (int i = 0; i < 40; ++i) {
        const int k = 2 + i % 5;
        const int n = 1 + i % std::min(6, 2 * k - 1);
        const auto inst = qes::bethe_consistent_instance(rng, k, n);
        const auto constants = qes::constants_linear_system(inst.roots, inst.X, inst.Y, n, k);
        const auto z = qes::build_z(inst.X, inst.Y, n, constants);
        CHECK(qes::verify_polynomial_solution(inst.X, inst.Y, z, qes::monic_from_roots(inst.roots))
                  .passed);

        // on these instances the raw residuals vanish exactly as well
        for (const auto& r : qes::bethe_residual(inst.roots, inst.X, inst.Y))
            CHECK(r == Rational(0));
    }
}

TEST_CASE("check suite is deterministic and fully green") {
    const auto first = qes::run_check_suite(777, 20, 10, 20);
    const auto second = qes::run_check_suite(777, 20, 10, 20);
    REQUIRE(first.size() == second.size());
    for (std::size_t i = 0; i < first.size(); ++i) {
        CHECK(first[i].name == second[i].name);
        CHECK(first[i].passed == second[i].passed);
        CHECK(first[i].detail == second[i].detail);
        CHECK(first[i].passed);
    }
    // a different seed still passes but generates different instances
    const auto other = qes::run_check_suite(778, 20, 10, 20);
    bool any_difference = false;
    for (std::size_t i = 0; i < std::min(first.size(), other.size()); ++i)
        if (first[i].detail != other[i].detail) any_difference = true;
    CHECK(any_difference);
}

TEST_CASE("random generators honor their contracts") {
    std::mt19937_64 rng(31415);
    for (int i = 0; i < 20; ++i) {
        const auto roots = qes::random_rootset(rng, 6);
        CHECK(roots.n() == 6);
        for (int j = 1; j < roots.n(); ++j) CHECK(roots[j - 1] < roots[j]);
    }
    for (int i = 0; i < 10; ++i) {
        const auto inst = qes::bethe_consistent_instance(rng, 3, 2);
        CHECK(!inst.X.is_zero());
        for (int j = 0; j < inst.roots.n(); ++j)
            CHECK(qes::evaluate(inst.X, inst.roots[j]) != Rational(0));
    }
}
