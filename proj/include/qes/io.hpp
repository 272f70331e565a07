#ifndef QES_IO_HPP
#define QES_IO_HPP

// Problem-file parsing and report emission for the command-line surface.
// Rational data travels as "p/q" strings so exact values never pass
// through floating point; root arrays are strings in exact mode and JSON
// numbers in float mode. Field order in emitted documents is fixed and
// all randomness is surfaced, so identical inputs and seeds produce
// byte-identical output.

#include <json.hpp>

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qes/consistency.hpp"
#include "qes/rootset.hpp"
#include "qes/scalar.hpp"

namespace qes {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Invalid input; code is a stable machine-readable slug.
struct ParseError : std::runtime_error {
    std::string code;
    ParseError(std::string code_, const std::string& message)
        : std::runtime_error(message), code(std::move(code_)) {}
};

enum class Mode { exact, floating };

inline std::string mode_name(Mode m) { return m == Mode::exact ? "exact" : "float"; }

inline Mode parse_mode(const std::string& text) {
    if (text == "exact") return Mode::exact;
    if (text == "float") return Mode::floating;
    throw ParseError("bad_mode", "mode must be \"exact\" or \"float\", got \"" + text + "\"");
}

struct SolverSettings {
    int starts = 32;
    int max_iter = 100;
    double tol = 1e-12;
    std::uint64_t seed = 1;
    double damping = 0.5;

    friend bool operator==(const SolverSettings&, const SolverSettings&) = default;
};

struct ProblemFile {
    int k = 2;
    int n = 0;
    Mode mode = Mode::exact;
    std::vector<Rational> a;  // X coefficients, length k+1
    std::vector<Rational> b;  // Y coefficients, length k
    std::optional<std::vector<Rational>> c;            // Z coefficients, length k-1
    std::optional<std::vector<Rational>> roots_exact;  // length n, exact mode
    std::optional<std::vector<double>> roots_float;    // length n, float mode
    std::optional<std::vector<Rational>> constants;    // length k-2
    std::optional<std::vector<Rational>> sigma_tilde;  // length 2k-1, factorize input
    std::optional<std::vector<Rational>> g;            // length k-1, user-supplied g

    SolverSettings solver;

    friend bool operator==(const ProblemFile&, const ProblemFile&) = default;
};

namespace detail {

inline const Json& require_field(const Json& j, const char* field) {
    const auto it = j.find(field);
    if (it == j.end()) throw ParseError("missing_field", std::string("missing field \"") + field + "\"");
    return *it;
}

inline int parse_int_field(const Json& j, const char* field) {
    const Json& v = require_field(j, field);
    if (!v.is_number_integer()) throw ParseError("bad_type", std::string("\"") + field + "\" must be an integer");
    return v.get<int>();
}

inline std::vector<Rational> parse_rational_array(const Json& v, const char* field, int expected) {
    if (!v.is_array())
        throw ParseError("bad_type", std::string("\"") + field + "\" must be an array");
    if (expected >= 0 && static_cast<int>(v.size()) != expected)
        throw ParseError("length_mismatch", std::string("\"") + field + "\" must have length " +
                                                std::to_string(expected) + ", got " +
                                                std::to_string(v.size()));
    std::vector<Rational> out;
    out.reserve(v.size());
    for (const auto& item : v) {
        if (!item.is_string())
            throw ParseError("bad_type", std::string("\"") + field + "\" entries must be \"p/q\" strings");
        try {
            out.push_back(parse_rational(item.get<std::string>()));
        } catch (const std::invalid_argument& e) {
            throw ParseError("bad_rational", std::string("in \"") + field + "\": " + e.what());
        }
    }
    return out;
}

inline Json rational_array(const std::vector<Rational>& v) {
    Json out = Json::array();
    for (const auto& r : v) out.push_back(format_rational(r));
    return out;
}

inline Json double_array(const std::vector<double>& v) {
    Json out = Json::array();
    for (double x : v) out.push_back(x);
    return out;
}

}  // namespace detail

inline ProblemFile parse_problem_file(const Json& j) {
    if (!j.is_object()) throw ParseError("bad_type", "problem file must be a JSON object");
    static const char* known[] = {"schema_version", "k",     "n",           "mode",
                                  "a",              "b",     "c",           "roots",
                                  "constants",      "sigma_tilde",          "g",
                                  "solver"};
    for (const auto& item : j.items()) {
        bool ok = false;
        for (const char* name : known)
            if (item.key() == name) ok = true;
        if (!ok) throw ParseError("unknown_field", "unknown field \"" + item.key() + "\"");
    }

    ProblemFile pf;
    pf.k = detail::parse_int_field(j, "k");
    if (pf.k < 2) throw ParseError("bad_value", "k must be at least 2");
    pf.n = detail::parse_int_field(j, "n");
    if (pf.n < 0) throw ParseError("bad_value", "n must be nonnegative");

    const Json& mode = detail::require_field(j, "mode");
    if (!mode.is_string()) throw ParseError("bad_type", "\"mode\" must be a string");
    pf.mode = parse_mode(mode.get<std::string>());

    pf.a = detail::parse_rational_array(detail::require_field(j, "a"), "a", pf.k + 1);
    pf.b = detail::parse_rational_array(detail::require_field(j, "b"), "b", pf.k);
    if (j.contains("c")) pf.c = detail::parse_rational_array(j["c"], "c", pf.k - 1);
    if (j.contains("constants"))
        pf.constants = detail::parse_rational_array(j["constants"], "constants", pf.k - 2);
    if (j.contains("sigma_tilde"))
        pf.sigma_tilde = detail::parse_rational_array(j["sigma_tilde"], "sigma_tilde", 2 * pf.k - 1);
    if (j.contains("g")) pf.g = detail::parse_rational_array(j["g"], "g", pf.k - 1);

    if (j.contains("roots")) {
        const Json& roots = j["roots"];
        if (!roots.is_array()) throw ParseError("bad_type", "\"roots\" must be an array");
        if (static_cast<int>(roots.size()) != pf.n)
            throw ParseError("length_mismatch", "\"roots\" must have length n = " + std::to_string(pf.n));
        if (pf.mode == Mode::exact) {
            pf.roots_exact = detail::parse_rational_array(roots, "roots", pf.n);
            try {
                RootSet<Rational> check(*pf.roots_exact);
            } catch (const std::invalid_argument&) {
                throw ParseError("repeated_roots", "roots must be distinct");
            }
        } else {
            std::vector<double> out;
            out.reserve(roots.size());
            for (const auto& item : roots) {
                if (!item.is_number())
                    throw ParseError("bad_type", "float-mode roots must be JSON numbers");
                const double x = item.get<double>();
                if (!std::isfinite(x)) throw ParseError("bad_value", "roots must be finite");
                out.push_back(x);
            }
            try {
                RootSet<double> check(out);
            } catch (const std::invalid_argument&) {
                throw ParseError("repeated_roots", "roots must be distinct");
            }
            pf.roots_float = std::move(out);
        }
    }

    if (j.contains("solver")) {
        const Json& s = j["solver"];
        if (!s.is_object()) throw ParseError("bad_type", "\"solver\" must be an object");
        for (const auto& item : s.items()) {
            const std::string& key = item.key();
            const Json& v = item.value();
            if (key == "starts") {
                if (!v.is_number_integer() || v.get<int>() < 1)
                    throw ParseError("bad_value", "solver.starts must be a positive integer");
                pf.solver.starts = v.get<int>();
            } else if (key == "max_iter") {
                if (!v.is_number_integer() || v.get<int>() < 1)
                    throw ParseError("bad_value", "solver.max_iter must be a positive integer");
                pf.solver.max_iter = v.get<int>();
            } else if (key == "tol") {
                if (!v.is_number() || !(v.get<double>() > 0))
                    throw ParseError("bad_value", "solver.tol must be positive");
                pf.solver.tol = v.get<double>();
            } else if (key == "seed") {
                if (!v.is_number_unsigned() && !v.is_number_integer())
                    throw ParseError("bad_value", "solver.seed must be an integer");
                pf.solver.seed = v.get<std::uint64_t>();
            } else if (key == "damping") {
                if (!v.is_number() || !(v.get<double>() > 0) || !(v.get<double>() < 1))
                    throw ParseError("bad_value", "solver.damping must lie in (0, 1)");
                pf.solver.damping = v.get<double>();
            } else {
                throw ParseError("unknown_field", "unknown solver field \"" + key + "\"");
            }
        }
    }
    return pf;
}

inline ProblemFile parse_problem_text(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError("malformed_json", e.what());
    }
    return parse_problem_file(j);
}

inline Json emit_problem_file(const ProblemFile& pf) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["k"] = pf.k;
    j["n"] = pf.n;
    j["mode"] = mode_name(pf.mode);
    j["a"] = detail::rational_array(pf.a);
    j["b"] = detail::rational_array(pf.b);
    if (pf.c) j["c"] = detail::rational_array(*pf.c);
    if (pf.roots_exact) j["roots"] = detail::rational_array(*pf.roots_exact);
    if (pf.roots_float) j["roots"] = detail::double_array(*pf.roots_float);
    if (pf.constants) j["constants"] = detail::rational_array(*pf.constants);
    if (pf.sigma_tilde) j["sigma_tilde"] = detail::rational_array(*pf.sigma_tilde);
    if (pf.g) j["g"] = detail::rational_array(*pf.g);
    j["solver"] = Json{{"starts", pf.solver.starts},
                       {"max_iter", pf.solver.max_iter},
                       {"tol", pf.solver.tol},
                       {"seed", pf.solver.seed},
                       {"damping", pf.solver.damping}};
    return j;
}

inline Json check_report_json(const CheckReport& report) {
    Json j;
    j["name"] = report.name;
    j["passed"] = report.passed;
    j["tower"] = report.tower;
    j["detail"] = report.detail;
    return j;
}

inline Json error_json(const std::string& code, const std::string& message) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["error"] = Json{{"code", code}, {"message", message}};
    return j;
}

template <class S>
Json poly_json(const Poly<S>& p) {
    if constexpr (is_exact_scalar_v<S>) {
        Json out = Json::array();
        for (const auto& coeff : p.coeffs()) out.push_back(format_rational(coeff));
        return out;
    } else {
        Json out = Json::array();
        for (const auto& coeff : p.coeffs()) out.push_back(coeff);
        return out;
    }
}

}  // namespace qes

#endif  // QES_IO_HPP
