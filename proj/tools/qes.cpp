// qes: polynomial solutions of second-order ODEs with polynomial
// coefficients. Subcommands cover the factorization route (factorize),
// the root-solver route (solve), the integration constants (constants),
// substitution verification (verify), and the seeded identity battery
// (check-suite). All results are JSON on stdout; structured errors go to
// stderr. Exit codes: 0 success, 1 checks failed or nothing found,
// 2 invalid input.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qes/consistency.hpp"
#include "qes/enu.hpp"
#include "qes/fba.hpp"
#include "qes/io.hpp"

namespace {

using qes::Json;
using qes::Mode;
using qes::Poly;
using qes::ProblemFile;
using qes::Rational;
using qes::RootSet;

struct Overrides {
    std::optional<std::string> mode;
    std::optional<std::uint64_t> seed;
    std::optional<int> starts;
    std::optional<double> tol;
};

ProblemFile load_problem(const std::string& path, const Overrides& over) {
    std::ifstream in(path);
    if (!in) throw qes::ParseError("io_error", "cannot open input file \"" + path + "\"");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    ProblemFile pf = qes::parse_problem_text(buffer.str());

    if (over.mode) {
        const Mode requested = qes::parse_mode(*over.mode);
        if (requested == Mode::exact && pf.roots_float)
            throw qes::ParseError("bad_mode", "cannot reinterpret float roots in exact mode");
        if (requested == Mode::floating && pf.roots_exact) {
            std::vector<double> roots;
            roots.reserve(pf.roots_exact->size());
            for (const auto& r : *pf.roots_exact) roots.push_back(qes::to_double(r));
            pf.roots_float = std::move(roots);
            pf.roots_exact.reset();
        }
        pf.mode = requested;
    }
    if (over.seed) pf.solver.seed = *over.seed;
    if (over.starts) {
        if (*over.starts < 1) throw qes::ParseError("bad_value", "--starts must be positive");
        pf.solver.starts = *over.starts;
    }
    if (over.tol) {
        if (!(*over.tol > 0)) throw qes::ParseError("bad_value", "--tol must be positive");
        pf.solver.tol = *over.tol;
    }
    return pf;
}

template <class S>
std::vector<S> scalars_from(const std::vector<Rational>& values) {
    std::vector<S> out;
    out.reserve(values.size());
    for (const auto& r : values) {
        if constexpr (qes::is_exact_scalar_v<S>)
            out.push_back(r);
        else
            out.push_back(qes::to_double(r));
    }
    return out;
}

template <class S>
Poly<S> poly_from(const std::vector<Rational>& coeffs) {
    return Poly<S>::from_coeffs(scalars_from<S>(coeffs));
}

template <class S>
RootSet<S> roots_from(const ProblemFile& pf) {
    if constexpr (qes::is_exact_scalar_v<S>) {
        if (!pf.roots_exact) throw qes::ParseError("missing_field", "this command needs \"roots\"");
        return RootSet<S>(*pf.roots_exact);
    } else {
        if (pf.roots_float) return RootSet<S>(*pf.roots_float);
        if (pf.roots_exact) {
            std::vector<double> roots;
            for (const auto& r : *pf.roots_exact) roots.push_back(qes::to_double(r));
            return RootSet<S>(roots);
        }
        throw qes::ParseError("missing_field", "this command needs \"roots\"");
    }
}

Json problem_header(const char* command, const ProblemFile& pf) {
    Json j;
    j["schema_version"] = qes::kSchemaVersion;
    j["command"] = command;
    j["mode"] = qes::mode_name(pf.mode);
    j["k"] = pf.k;
    j["n"] = pf.n;
    return j;
}

int emit(const Json& j) {
    std::cout << j.dump(2) << "\n";
    return 0;
}

int run_factorize(const ProblemFile& pf) {
    if (pf.mode != Mode::exact)
        throw qes::ParseError("bad_mode", "factorize runs in exact mode only");
    if (!pf.sigma_tilde)
        throw qes::ParseError("missing_field",
                              "factorize needs \"sigma_tilde\" (length 2k-1); \"a\" carries sigma "
                              "and \"b\" carries tau_tilde");
    const qes::NUInput<Rational> input(poly_from<Rational>(pf.b), poly_from<Rational>(pf.a),
                                       poly_from<Rational>(*pf.sigma_tilde), pf.k);

    std::vector<qes::GPi<Rational>> pairs;
    if (pf.g) {
        const Poly<Rational> g = poly_from<Rational>(*pf.g);
        for (const auto& pi : qes::pi_candidates(input, g)) pairs.push_back({g, pi});
    } else {
        if (pf.k > 3)
            throw qes::ParseError("bad_value",
                                  "the g search supports k in {2, 3}; supply \"g\" for larger k");
        pairs = qes::find_g(input);
    }

    Json out = problem_header("factorize", pf);
    Json list = Json::array();
    for (const auto& [g, pi] : pairs) {
        const auto fact = qes::assemble(input, g, pi);
        Json item;
        item["g"] = qes::poly_json(fact.g);
        item["pi"] = qes::poly_json(fact.pi);
        item["tau"] = qes::poly_json(fact.tau);
        item["h"] = qes::poly_json(fact.h);
        item["sigma_bar"] = qes::poly_json(fact.sigma_bar);
        item["phi_logderiv"] = Json{{"num", qes::poly_json(fact.phi_logderiv.num)},
                                    {"den", qes::poly_json(fact.phi_logderiv.den)}};
        list.push_back(std::move(item));
    }
    out["factorizations"] = std::move(list);
    return emit(out);
}

int run_solve(const ProblemFile& pf) {
    const qes::BetheProblem problem(poly_from<double>(pf.a), poly_from<double>(pf.b), pf.n, pf.k);
    qes::SolverConfig cfg;
    cfg.starts = pf.solver.starts;
    cfg.max_iter = pf.solver.max_iter;
    cfg.tol = pf.solver.tol;
    cfg.seed = pf.solver.seed;
    cfg.damping = pf.solver.damping;
    if (pf.n < 1) throw qes::ParseError("bad_value", "solve needs n >= 1");

    const auto solutions = qes::solve_bethe(problem, cfg);

    Json out = problem_header("solve", pf);
    out["seed"] = cfg.seed;
    Json list = Json::array();
    for (const auto& sol : solutions) {
        Json item;
        item["roots"] = qes::detail::double_array(sol.roots.roots());
        item["c"] = qes::detail::double_array(sol.c);
        item["residual_norm"] = sol.residual_norm;
        item["newton_iterations"] = sol.newton_iterations;
        item["converged"] = sol.converged;
        list.push_back(std::move(item));
    }
    out["solutions"] = std::move(list);
    emit(out);
    return solutions.empty() ? 1 : 0;
}

template <class S>
int constants_impl(const ProblemFile& pf) {
    const RootSet<S> roots = roots_from<S>(pf);
    const Poly<S> X = poly_from<S>(pf.a);
    const Poly<S> Y = poly_from<S>(pf.b);
    const auto lin = qes::constants_linear_system(roots, X, Y, pf.n, pf.k);
    const auto closed = qes::constants_closed_form(roots, X, Y, pf.n, pf.k);
    const auto c = qes::coefficient_relations(X, Y, pf.n, lin);

    bool agree;
    if constexpr (qes::is_exact_scalar_v<S>) {
        agree = lin.values == closed.values;
    } else {
        agree = lin.values.size() == closed.values.size();
        S scale(1);
        for (const auto& v : lin.values) scale = std::max(scale, qes::scalar_abs(v));
        for (std::size_t i = 0; agree && i < lin.values.size(); ++i)
            agree = qes::scalar_abs(lin.values[i] - closed.values[i]) <= S(1e-9) * scale;
    }

    const auto scalar_list = [](const std::vector<S>& v) {
        if constexpr (qes::is_exact_scalar_v<S>) {
            return qes::detail::rational_array(v);
        } else {
            return qes::detail::double_array(v);
        }
    };

    Json out = problem_header("constants", pf);
    out["linear_system"] = scalar_list(lin.values);
    out["closed_form"] = scalar_list(closed.values);
    out["agree"] = agree;
    out["c"] = scalar_list(c);
    if (pf.k == 2) out["note"] = "k=2: no integration constants";
    emit(out);
    return agree ? 0 : 1;
}

int run_constants(const ProblemFile& pf) {
    return pf.mode == Mode::exact ? constants_impl<Rational>(pf) : constants_impl<double>(pf);
}

template <class S>
int verify_impl(const ProblemFile& pf) {
    if (!pf.c && !pf.constants)
        throw qes::ParseError("missing_field", "verify needs \"c\" or \"constants\"");
    const RootSet<S> roots = roots_from<S>(pf);
    const Poly<S> X = poly_from<S>(pf.a);
    const Poly<S> Y = poly_from<S>(pf.b);
    const Poly<S> Z =
        pf.c ? poly_from<S>(*pf.c)
             : qes::build_z(X, Y, pf.n,
                            qes::IntegrationConstants<S>(scalars_from<S>(*pf.constants), pf.n, pf.k));
    const auto report = qes::verify_polynomial_solution(X, Y, Z, qes::monic_from_roots(roots));

    Json out = problem_header("verify", pf);
    out["checks"] = Json::array({qes::check_report_json(report)});
    out["passed"] = report.passed;
    emit(out);
    return report.passed ? 0 : 1;
}

int run_verify(const ProblemFile& pf) {
    return pf.mode == Mode::exact ? verify_impl<Rational>(pf) : verify_impl<double>(pf);
}

int run_check_suite(const ProblemFile& pf) {
    if (pf.mode != Mode::exact)
        throw qes::ParseError("bad_mode", "check-suite runs in exact mode only");
    const auto reports = qes::run_check_suite(pf.solver.seed);

    Json out;
    out["schema_version"] = qes::kSchemaVersion;
    out["command"] = "check-suite";
    out["seed"] = pf.solver.seed;
    Json checks = Json::array();
    int passed = 0;
    for (const auto& report : reports) {
        checks.push_back(qes::check_report_json(report));
        if (report.passed) ++passed;
    }
    out["checks"] = std::move(checks);
    out["summary"] = Json{{"total", static_cast<int>(reports.size())},
                          {"passed", passed},
                          {"failed", static_cast<int>(reports.size()) - passed}};
    emit(out);
    return passed == static_cast<int>(reports.size()) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"polynomial solutions of second-order ODEs with polynomial coefficients"};
    app.require_subcommand(1);

    std::string input_path;
    Overrides over;

    const auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--input", input_path, "problem file (JSON)")->required();
        cmd->add_option("--mode", over.mode, "override the computation tower: exact|float");
        cmd->add_option("--seed", over.seed, "override the solver seed");
        cmd->add_option("--starts", over.starts, "override the number of solver starts");
        cmd->add_option("--tol", over.tol, "override the solver tolerance");
    };

    CLI::App* factorize = app.add_subcommand("factorize", "search g and assemble factorizations");
    CLI::App* solve = app.add_subcommand("solve", "solve the Bethe ansatz equations for the roots");
    CLI::App* constants = app.add_subcommand("constants", "integration constants from given roots");
    CLI::App* verify = app.add_subcommand("verify", "check a polynomial solution by substitution");
    CLI::App* check_suite = app.add_subcommand("check-suite", "seeded identity battery");
    for (CLI::App* cmd : {factorize, solve, constants, verify, check_suite}) add_common(cmd);

    CLI11_PARSE(app, argc, argv);

    try {
        ProblemFile pf = load_problem(input_path, over);
        if (factorize->parsed()) return run_factorize(pf);
        if (solve->parsed()) return run_solve(pf);
        if (constants->parsed()) return run_constants(pf);
        if (verify->parsed()) return run_verify(pf);
        return run_check_suite(pf);
    } catch (const qes::ParseError& e) {
        std::cerr << qes::error_json(e.code, e.what()).dump(2) << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << qes::error_json("invalid_input", e.what()).dump(2) << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << qes::error_json("internal_error", e.what()).dump(2) << "\n";
        return 2;
    }
}
