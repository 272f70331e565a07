#ifndef QES_CONSISTENCY_HPP
#define QES_CONSISTENCY_HPP

// Executable verification layer. Substitution checks for polynomial
// solutions of the reduced equation, the cross-check that ties the two
// integration-constant computations to the root-side coefficient
// formulas, a suite of monomial/elementary symmetric identities together
// with the expanded forms of the three lowest constants, and seeded
// random instance generators. Exact rational arithmetic is the arbiter
// for every theorem-level check.

#include <array>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qes/detail/elim.hpp"
#include "qes/enu.hpp"
#include "qes/fba.hpp"
#include "qes/poly.hpp"
#include "qes/rootset.hpp"
#include "qes/scalar.hpp"
#include "qes/symfunc.hpp"

namespace qes {

struct CheckReport {
    std::string name;
    bool passed = false;
    std::string detail;
    std::string tower;  // "exact" or "float"
};

namespace detail {

template <class S>
const char* tower_name() {
    return is_exact_scalar_v<S> ? "exact" : "float";
}

template <class S>
std::string scalar_text(const S& v) {
    if constexpr (is_exact_scalar_v<S>) {
        return format_rational(v);
    } else {
        std::ostringstream os;
        os << v;
        return os.str();
    }
}

template <class S>
std::string vector_text(const std::vector<S>& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += scalar_text(v[i]);
    }
    return out + "]";
}

}  // namespace detail

/// Whether y solves X y'' + Y y' + Z y = 0: the residual polynomial must
/// vanish identically (exact tower) or stay below 1e-9 of the scale of
/// the three assembled terms (double tower).
template <class S>
CheckReport verify_polynomial_solution(const Poly<S>& X, const Poly<S>& Y, const Poly<S>& Z,
                                       const Poly<S>& y) {
    const Poly<S> t1 = X * derivative(y, 2);
    const Poly<S> t2 = Y * derivative(y);
    const Poly<S> t3 = Z * y;
    const Poly<S> residual = t1 + t2 + t3;

    CheckReport report;
    report.name = "polynomial_solution";
    report.tower = detail::tower_name<S>();
    if constexpr (is_exact_scalar_v<S>) {
        report.passed = residual.is_zero();
        report.detail = report.passed ? "residual identically zero"
                                      : "residual " + to_string(residual);
    } else {
        const S scale = std::max(std::max(S(1), max_abs_coeff(t1)),
                                 std::max(max_abs_coeff(t2), max_abs_coeff(t3)));
        const S dev = max_abs_coeff(residual);
        report.passed = dev <= S(1e-9) * scale;
        report.detail = "max residual coefficient " + detail::scalar_text(dev);
    }
    return report;
}

template <class S>
CheckReport verify_polynomial_solution(const ReducedEq<S>& eq, const Poly<S>& y) {
    return verify_polynomial_solution(eq.X, eq.Y, eq.Z, y);
}

/// Four-way agreement: integration constants from the triangular system
/// and from the closed form, and the c vector from the root-side
/// formulas against the coefficient relations fed with the system's
/// constants.
template <class S>
CheckReport cross_check_constants(const RootSet<S>& rs, const Poly<S>& X, const Poly<S>& Y,
                                  int n, int k) {
    const IntegrationConstants<S> lin = constants_linear_system(rs, X, Y, n, k);
    const IntegrationConstants<S> closed = constants_closed_form(rs, X, Y, n, k);
    const std::vector<S> c_roots = coefficients_from_roots(rs, X, Y, k);
    const std::vector<S> c_relations = coefficient_relations(X, Y, n, lin);

    const auto agree = [](const std::vector<S>& a, const std::vector<S>& b) {
        if constexpr (is_exact_scalar_v<S>) {
            return a == b;
        } else {
            if (a.size() != b.size()) return false;
            S scale(1);
            for (const S& v : a) scale = std::max(scale, scalar_abs(v));
            for (std::size_t i = 0; i < a.size(); ++i)
                if (scalar_abs(a[i] - b[i]) > S(1e-9) * scale) return false;
            return true;
        }
    };

    CheckReport report;
    report.name = "cross_check_constants";
    report.tower = detail::tower_name<S>();
    const bool constants_ok = agree(lin.values, closed.values);
    const bool coeffs_ok = agree(c_roots, c_relations);
    report.passed = constants_ok && coeffs_ok;
    if (report.passed) {
        report.detail = "constants " + detail::vector_text(lin.values) + ", c " +
                        detail::vector_text(c_roots);
    } else {
        report.detail = "system " + detail::vector_text(lin.values) + " vs closed " +
                        detail::vector_text(closed.values) + "; roots " +
                        detail::vector_text(c_roots) + " vs relations " +
                        detail::vector_text(c_relations);
    }
    return report;
}

namespace detail {

// Symbolic vectors over the basis {1, m_(1), m_(2), m_(3), m_(1,1),
// m_(2,1), m_(1,1,1)} with rational coefficients. Only the products that
// occur while substituting the first three rows of the triangular system
// are defined; anything else is a logic error.
enum SymBasis : int { kOne = 0, kM1, kM2, kM3, kM11, kM21, kM111, kSymBasisSize };

using SymVec = std::array<Rational, kSymBasisSize>;

inline SymVec sym_zero() {
    SymVec v;
    v.fill(Rational(0));
    return v;
}

inline SymVec sym_add(const SymVec& a, const SymVec& b) {
    SymVec out;
    for (int i = 0; i < kSymBasisSize; ++i) out[static_cast<std::size_t>(i)] =
        a[static_cast<std::size_t>(i)] + b[static_cast<std::size_t>(i)];
    return out;
}

inline SymVec sym_scale(const SymVec& a, const Rational& s) {
    SymVec out;
    for (int i = 0; i < kSymBasisSize; ++i) out[static_cast<std::size_t>(i)] =
        a[static_cast<std::size_t>(i)] * s;
    return out;
}

/// Multiply by m_(1): 1 -> m1; m1 -> m2 + 2 m11; m2 -> m3 + m21;
/// m11 -> m21 + 3 m111.
inline SymVec sym_mul_m1(const SymVec& v) {
    if (v[kM3] != Rational(0) || v[kM21] != Rational(0) || v[kM111] != Rational(0))
        throw std::logic_error("unsupported symbolic product");
    SymVec out = sym_zero();
    out[kM1] += v[kOne];
    out[kM2] += v[kM1];
    out[kM11] += Rational(2) * v[kM1];
    out[kM3] += v[kM2];
    out[kM21] += v[kM2];
    out[kM21] += v[kM11];
    out[kM111] += Rational(3) * v[kM11];
    return out;
}

/// Multiply by m_(1,1) = e_2: 1 -> m11; m1 -> m21 + 3 m111.
inline SymVec sym_mul_m11(const SymVec& v) {
    if (v[kM2] != Rational(0) || v[kM3] != Rational(0) || v[kM21] != Rational(0) ||
        v[kM111] != Rational(0))
        throw std::logic_error("unsupported symbolic product");
    SymVec out = sym_zero();
    out[kM11] += v[kOne];
    out[kM21] += v[kM1];
    out[kM111] += Rational(3) * v[kM1];
    return out;
}

/// e_p as a basis vector, p <= 3 (e_2 = m11, e_3 = m111).
inline SymVec sym_elementary(int p) {
    SymVec out = sym_zero();
    switch (p) {
        case 0: out[kOne] = Rational(1); break;
        case 1: out[kM1] = Rational(1); break;
        case 2: out[kM11] = Rational(1); break;
        case 3: out[kM111] = Rational(1); break;
        default: throw std::logic_error("sym_elementary beyond e_3");
    }
    return out;
}

inline Rational sym_eval(const SymVec& v, const RootSet<Rational>& rs) {
    // m_(1,1,1) is the sum over distinct triples, i.e. e_3
    Rational acc = v[kOne];
    acc += v[kM1] * monomial(rs, Partition2(1, 0));
    acc += v[kM2] * monomial(rs, Partition2(2, 0));
    acc += v[kM3] * monomial(rs, Partition2(3, 0));
    acc += v[kM11] * monomial(rs, Partition2(1, 1));
    acc += v[kM21] * monomial(rs, Partition2(2, 1));
    acc += v[kM111] * elementary(rs, 3);
    return acc;
}

/// Right side of row r of the triangular system, as a symbolic vector.
inline SymVec sym_row_rhs(const Poly<Rational>& X, const Poly<Rational>& Y, int n, int k, int r) {
    const RowTerms<Rational> terms = constants_row_terms<Rational>(X, Y, n, k, r);
    SymVec acc = sym_zero();
    for (int p = 0; p <= r - 3; ++p)
        acc = sym_add(acc, sym_scale(sym_elementary(p), terms.e_mult[static_cast<std::size_t>(p)]));
    acc = sym_add(acc, sym_scale(sym_elementary(r - 2), terms.tail_mult));
    return acc;
}

/// C_1 .. C_3 (scaled by 1/(k-2-q)!) obtained by symbolic forward
/// substitution through the first three rows of the system, exactly the
/// derivation that expands them into monomial symmetric polynomials.
inline std::vector<SymVec> sym_constants_from_system(const Poly<Rational>& X,
                                                     const Poly<Rational>& Y, int n, int k,
                                                     int upto_q) {
    std::vector<SymVec> scaled;  // entry q-1 holds C_q / (k-2-q)!
    for (int q = 1; q <= upto_q; ++q) {
        const int r = q + 2;
        SymVec acc = sym_row_rhs(X, Y, n, k, r);
        // move the lower-constant terms of the row to the right side:
        // C_q/(k-2-q)! = rhs + sum_{p=1}^{r-3} (-1)^{p+1} C_{q-p}/(k-2-q+p)! e_p
        for (int p = 1; p <= r - 3; ++p) {
            const SymVec& lower = scaled[static_cast<std::size_t>(q - p - 1)];
            SymVec mult;
            if (p == 1)
                mult = sym_mul_m1(lower);
            else if (p == 2)
                mult = sym_mul_m11(lower);
            else
                throw std::logic_error("symbolic substitution limited to three rows");
            acc = sym_add(acc, sym_scale(mult, (p % 2 == 1) ? Rational(1) : Rational(-1)));
        }
        scaled.push_back(acc);
    }
    return scaled;
}

/// C_q / (k-2-q)! straight from the closed form, q <= 3.
inline SymVec sym_constant_closed_form(const Poly<Rational>& X, const Poly<Rational>& Y, int n,
                                       int k, int q) {
    const auto one_part = [](int m) {
        switch (m) {
            case 1: return kM1;
            case 2: return kM2;
            case 3: return kM3;
            default: throw std::logic_error("one-part basis beyond m_(3)");
        }
    };
    SymVec acc = sym_zero();
    for (int t = 0; t <= q - 1; ++t)
        acc[one_part(q - t)] -= Rational(2) * Rational(n - 1) * X.coeff(k - t) + Y.coeff(k - t - 1);
    for (int s = 1; 2 * s <= q; ++s)
        for (int t = 0; t <= q - 2 * s; ++t) {
            const int hi = q - t - s;
            const int basis = (hi == 1 && s == 1) ? kM11 : (hi == 2 && s == 1) ? kM21
                                                                               : -1;
            if (basis < 0) throw std::logic_error("two-part basis beyond m_(2,1)");
            acc[static_cast<std::size_t>(basis)] -= Rational(2) * X.coeff(k - t);
        }
    acc[kOne] -= Rational(n) * Rational(n - 1) / (Rational(k) * Rational(k - 1)) * Rational(q) *
                 Rational(2 * k - q - 1) * X.coeff(k - q);
    acc[kOne] -= Rational(n) / Rational(k - 1) * Rational(q) * Y.coeff(k - q - 1);
    return acc;
}

/// The explicit expanded displays of the three lowest constants
/// (scaled by 1/(k-2-q)!), transcribed term by term.
inline SymVec sym_constant_expanded(const Poly<Rational>& X, const Poly<Rational>& Y, int n,
                                    int k, int q) {
    const Rational nn = Rational(n);
    const Rational a_k = X.coeff(k), a_k1 = X.coeff(k - 1), a_k2 = X.coeff(k - 2),
                   a_k3 = X.coeff(k - 3);
    const Rational b_k1 = Y.coeff(k - 1), b_k2 = Y.coeff(k - 2), b_k3 = Y.coeff(k - 3),
                   b_k4 = Y.coeff(k - 4);
    SymVec acc = sym_zero();
    if (q == 1) {
        acc[kM1] = -(Rational(2) * (nn - 1) * a_k + b_k1);
        acc[kOne] = -(Rational(2) * nn * (nn - 1) / Rational(k) * a_k1 + nn / Rational(k - 1) * b_k2);
    } else if (q == 2) {
        acc[kM2] = -(Rational(2) * (nn - 1) * a_k + b_k1);
        acc[kM1] = -(Rational(2) * (nn - 1) * a_k1 + b_k2);
        acc[kM11] = -Rational(2) * a_k;
        acc[kOne] = -(Rational(2) * nn * (nn - 1) * Rational(2 * k - 3) /
                          (Rational(k) * Rational(k - 1)) * a_k2 +
                      Rational(2) * nn / Rational(k - 1) * b_k3);
    } else if (q == 3) {
        acc[kM3] = -(Rational(2) * (nn - 1) * a_k + b_k1);
        acc[kM2] = -(Rational(2) * (nn - 1) * a_k1 + b_k2);
        acc[kM1] = -(Rational(2) * (nn - 1) * a_k2 + b_k3);
        acc[kM21] = -Rational(2) * a_k;
        acc[kM11] = -Rational(2) * a_k1;
        acc[kOne] = -(Rational(6) * nn * (nn - 1) * Rational(k - 2) /
                          (Rational(k) * Rational(k - 1)) * a_k3 +
                      Rational(3) * nn / Rational(k - 1) * b_k4);
    } else {
        throw std::logic_error("expanded form available for q <= 3 only");
    }
    return acc;
}

inline std::string sym_text(const SymVec& v) {
    static const char* names[kSymBasisSize] = {"1",      "m(1)",   "m(2)",  "m(3)",
                                               "m(1,1)", "m(2,1)", "m(1,1,1)"};
    std::string out;
    for (int i = 0; i < kSymBasisSize; ++i) {
        if (v[static_cast<std::size_t>(i)] == Rational(0)) continue;
        if (!out.empty()) out += " + ";
        out += format_rational(v[static_cast<std::size_t>(i)]) + "*" + names[i];
    }
    return out.empty() ? "0" : out;
}

}  // namespace detail

/// The exact identity battery on one instance: the five symmetric
/// identities on the root set, agreement of the three lowest integration
/// constants between the system substitution, the closed form, the
/// explicit expanded displays and the numeric solvers, and the vanishing
/// of the three-part partition coefficient in C_3. Checks whose k
/// requirement is not met are reported as skipped.
inline std::vector<CheckReport> identity_suite(const RootSet<Rational>& rs,
                                               const Poly<Rational>& X, const Poly<Rational>& Y,
                                               int n, int k) {
    using detail::SymVec;
    std::vector<CheckReport> reports;
    const auto push = [&reports](std::string name, bool passed, std::string detail_text) {
        reports.push_back(CheckReport{std::move(name), passed, std::move(detail_text), "exact"});
    };
    const auto skip = [&reports](std::string name, std::string why) {
        reports.push_back(CheckReport{std::move(name), true, "skipped: " + std::move(why), "exact"});
    };

    // symmetric-function identities on the root set
    const Rational e1 = elementary(rs, 1), e2 = elementary(rs, 2), e3 = elementary(rs, 3);
    const Rational m1 = monomial(rs, Partition2(1, 0)), m2 = monomial(rs, Partition2(2, 0));
    const Rational m3 = monomial(rs, Partition2(3, 0)), m11 = monomial(rs, Partition2(1, 1));
    const Rational m21 = monomial(rs, Partition2(2, 1));

    push("identity_e2_as_distinct_pairs", e2 == m11,
         format_rational(e2) + " vs " + format_rational(m11));
    push("identity_e1_squared", e1 * e1 == m2 + 2 * m11,
         format_rational(e1 * e1) + " vs " + format_rational(m2 + 2 * m11));
    Rational triples(0);
    for (int i = 0; i < rs.n(); ++i)
        for (int j = i + 1; j < rs.n(); ++j)
            for (int l = j + 1; l < rs.n(); ++l) triples += rs[i] * rs[j] * rs[l];
    push("identity_e3_as_distinct_triples", e3 == triples,
         format_rational(e3) + " vs " + format_rational(triples));
    push("identity_power_pair_product", m2 * m1 == m3 + m21,
         format_rational(m2 * m1) + " vs " + format_rational(m3 + m21));
    push("identity_pair_power_product", m11 * m1 == m21 + 3 * e3,
         format_rational(m11 * m1) + " vs " + format_rational(m21 + 3 * e3));

    // expanded forms of the three lowest constants
    const int max_q = std::min(3, k - 2);
    const std::vector<SymVec> from_system =
        (max_q >= 1) ? detail::sym_constants_from_system(X, Y, n, k, max_q)
                     : std::vector<SymVec>{};
    const IntegrationConstants<Rational> numeric = constants_linear_system(rs, X, Y, n, k);

    for (int q = 1; q <= 3; ++q) {
        const std::string base = "c" + std::to_string(q);
        if (q > k - 2) {
            skip(base + "_expanded_form", "requires k >= " + std::to_string(q + 2));
            continue;
        }
        const SymVec sys = from_system[static_cast<std::size_t>(q - 1)];
        const SymVec closed = detail::sym_constant_closed_form(X, Y, n, k, q);
        const SymVec expanded = detail::sym_constant_expanded(X, Y, n, k, q);
        const bool sym_ok = (sys == closed) && (closed == expanded);
        const Rational scale = rational_factorial(k - 2 - q);
        const bool numeric_ok = detail::sym_eval(sys, rs) * scale == numeric.at(q);
        push(base + "_expanded_form", sym_ok && numeric_ok,
             "system: " + detail::sym_text(sys) + "; closed: " + detail::sym_text(closed));
    }

    if (k - 2 >= 3) {
        const Rational coeff = from_system[2][detail::kM111];
        push("c3_triple_partition_coefficient_vanishes", coeff == Rational(0),
             "coefficient of m(1,1,1): " + format_rational(coeff));
    } else {
        skip("c3_triple_partition_coefficient_vanishes", "requires k >= 5");
    }
    return reports;
}

// ---------------------------------------------------------------------------
// Seeded random instances. Coefficients and roots are rationals with
// numerators and denominators bounded by 20; roots are forced distinct
// by rejection.

struct RandomInstance {
    Poly<Rational> X;
    Poly<Rational> Y;
    RootSet<Rational> roots;
    int k = 2;
    int n = 0;
};

namespace detail {

inline long rand_range(std::mt19937_64& rng, long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline Rational rand_rational(std::mt19937_64& rng, long max_mag = 20) {
    return Rational(rand_range(rng, -max_mag, max_mag), rand_range(rng, 1, max_mag));
}

inline Rational rand_nonzero_rational(std::mt19937_64& rng, long max_mag = 20) {
    for (;;) {
        const Rational r = rand_rational(rng, max_mag);
        if (r != Rational(0)) return r;
    }
}

}  // namespace detail

inline RootSet<Rational> random_rootset(std::mt19937_64& rng, int n) {
    std::vector<Rational> roots;
    roots.reserve(static_cast<std::size_t>(n));
    while (static_cast<int>(roots.size()) < n) {
        const Rational z = detail::rand_rational(rng);
        if (std::find(roots.begin(), roots.end(), z) == roots.end()) roots.push_back(z);
    }
    return RootSet<Rational>(std::move(roots));
}

/// Arbitrary random instance: independent roots and coefficients. The
/// identity-level checks hold on these without any compatibility
/// between (X, Y) and the roots.
inline RandomInstance random_instance(std::mt19937_64& rng, int k, int n) {
    RandomInstance inst;
    inst.k = k;
    inst.n = n;
    inst.roots = random_rootset(rng, n);
    for (;;) {
        std::vector<Rational> a(static_cast<std::size_t>(k) + 1);
        for (auto& v : a) v = detail::rand_rational(rng);
        inst.X = Poly<Rational>::from_coeffs(std::move(a));
        if (!inst.X.is_zero()) break;
    }
    std::vector<Rational> b(static_cast<std::size_t>(k));
    for (auto& v : b) v = detail::rand_rational(rng);
    inst.Y = Poly<Rational>::from_coeffs(std::move(b));
    return inst;
}

/// Random instance whose (X, Y) are drawn from the exact solution space
/// of the Bethe ansatz equations for the drawn roots, so the monic root
/// polynomial genuinely solves the reduced equation once Z is built from
/// the integration constants. Requires n <= 2k (free coefficients must
/// outnumber the root conditions).
inline RandomInstance bethe_consistent_instance(std::mt19937_64& rng, int k, int n) {
    if (n > 2 * k) throw std::invalid_argument("needs n <= 2k for a nontrivial solution space");
    for (int attempt = 0; attempt < 256; ++attempt) {
        const RootSet<Rational> roots = random_rootset(rng, n);
        // condition i: X(z_i) * sum_{j != i} 2/(z_i - z_j) + Y(z_i) = 0,
        // linear in the 2k+1 stacked coefficients (a_0..a_k, b_0..b_{k-1})
        const std::size_t cols = static_cast<std::size_t>(2 * k + 1);
        detail::RationalMatrix m(static_cast<std::size_t>(n), std::vector<Rational>(cols, Rational(0)));
        for (int i = 0; i < n; ++i) {
            Rational pair_sum(0);
            for (int j = 0; j < n; ++j)
                if (j != i) pair_sum += Rational(2) / (roots[i] - roots[j]);
            Rational zp(1);
            for (int l = 0; l <= k; ++l) {
                m[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)] = pair_sum * zp;
                zp *= roots[i];
            }
            zp = Rational(1);
            for (int l = 0; l < k; ++l) {
                m[static_cast<std::size_t>(i)][static_cast<std::size_t>(k + 1 + l)] = zp;
                zp *= roots[i];
            }
        }
        const auto basis = detail::kernel_basis(std::move(m), cols);
        if (basis.empty()) continue;

        std::vector<Rational> u(cols, Rational(0));
        for (const auto& vec : basis) {
            const Rational w = detail::rand_rational(rng, 5);
            for (std::size_t j = 0; j < cols; ++j) u[j] += w * vec[j];
        }
        std::vector<Rational> a(u.begin(), u.begin() + k + 1);
        std::vector<Rational> b(u.begin() + k + 1, u.end());
        const Poly<Rational> X = Poly<Rational>::from_coeffs(std::move(a));
        const Poly<Rational> Y = Poly<Rational>::from_coeffs(std::move(b));
        if (X.is_zero()) continue;
        bool pole_free = true;
        for (int i = 0; i < n; ++i)
            if (evaluate(X, roots[i]) == Rational(0)) {
                pole_free = false;
                break;
            }
        if (!pole_free) continue;

        RandomInstance inst;
        inst.k = k;
        inst.n = n;
        inst.roots = roots;
        inst.X = X;
        inst.Y = Y;
        return inst;
    }
    throw std::runtime_error("failed to draw a pole-free consistent instance");
}

/// The seeded battery behind the check-suite command: cross-checks on
/// arbitrary instances, identity suites, and end-to-end substitution
/// checks on consistent instances.
inline std::vector<CheckReport> run_check_suite(std::uint64_t seed, int cross_checks = 100,
                                                int identity_runs = 50,
                                                int substitution_checks = 100) {
    std::mt19937_64 rng(seed);
    std::vector<CheckReport> reports;

    for (int i = 0; i < cross_checks; ++i) {
        const int k = 3 + i % 4;
        const int n = 1 + i % 6;
        const RandomInstance inst = random_instance(rng, k, n);
        CheckReport r = cross_check_constants(inst.roots, inst.X, inst.Y, inst.n, inst.k);
        r.name += "[" + std::to_string(i) + "]";
        reports.push_back(std::move(r));
    }
    for (int i = 0; i < identity_runs; ++i) {
        const int k = 5 + i % 2;
        const int n = 1 + i % 6;
        const RandomInstance inst = random_instance(rng, k, n);
        for (CheckReport r : identity_suite(inst.roots, inst.X, inst.Y, inst.n, inst.k)) {
            r.name += "[" + std::to_string(i) + "]";
            reports.push_back(std::move(r));
        }
    }
    for (int i = 0; i < substitution_checks; ++i) {
        const int k = 3 + i % 4;
        const int n = 1 + i % 6;
        const RandomInstance inst = bethe_consistent_instance(rng, k, n);
        const IntegrationConstants<Rational> c =
            constants_linear_system(inst.roots, inst.X, inst.Y, inst.n, inst.k);
        const Poly<Rational> Z = build_z(inst.X, inst.Y, inst.n, c);
        CheckReport r = verify_polynomial_solution(inst.X, inst.Y, Z, monic_from_roots(inst.roots));
        r.name = "substitution[" + std::to_string(i) + "]";
        reports.push_back(std::move(r));
    }
    return reports;
}

}  // namespace qes

#endif  // QES_CONSISTENCY_HPP
