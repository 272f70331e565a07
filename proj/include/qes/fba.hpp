#ifndef QES_FBA_HPP
#define QES_FBA_HPP

// Functional Bethe ansatz pipeline: the algebraic equations satisfied by
// the roots of a polynomial solution, a damped multi-start Newton solver
// for those roots, and the reduced-equation coefficients c_0 .. c_{k-2}
// recovered from the roots along two independent routes.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qes/poly.hpp"
#include "qes/rootset.hpp"
#include "qes/scalar.hpp"
#include "qes/symfunc.hpp"

namespace qes {

/// A root coincides with a zero of X, so the ansatz equations are singular there.
struct PoleError : std::domain_error {
    using std::domain_error::domain_error;
};

struct BetheProblem {
    Poly<double> X;  // degree <= k
    Poly<double> Y;  // degree <= k-1
    int n = 0;
    int k = 2;

    BetheProblem(Poly<double> x, Poly<double> y, int n_, int k_)
        : X(std::move(x)), Y(std::move(y)), n(n_), k(k_) {
        if (k < 2 || n < 0) throw std::invalid_argument("invalid n or k");
        if (X.is_zero()) throw std::invalid_argument("X must not be identically zero");
        if (X.degree() > k || Y.degree() > k - 1)
            throw std::invalid_argument("coefficient degree bound violated");
    }
};

struct SolverConfig {
    int starts = 32;
    int max_iter = 100;
    double tol = 1e-12;
    std::uint64_t seed = 1;
    double damping = 0.5;  // step shrink factor during backtracking
};

struct BetheSolution {
    RootSet<double> roots;
    double residual_norm = 0.0;
    std::vector<double> c;
    bool converged = false;
    int newton_iterations = 0;
};

/// residual_i = sum_{j != i} 2/(z_i - z_j) + Y(z_i)/X(z_i); all zero
/// exactly when the roots satisfy the Bethe ansatz equations.
template <class S>
std::vector<S> bethe_residual(const RootSet<S>& rs, const Poly<S>& X, const Poly<S>& Y) {
    const int n = rs.n();
    std::vector<S> out(static_cast<std::size_t>(n), S(0));
    for (int i = 0; i < n; ++i) {
        const S xv = evaluate(X, rs[i]);
        if (xv == S(0)) throw PoleError("root collides with a zero of X");
        S acc = evaluate(Y, rs[i]) / xv;
        for (int j = 0; j < n; ++j)
            if (j != i) acc += S(2) / (rs[i] - rs[j]);
        out[static_cast<std::size_t>(i)] = acc;
    }
    return out;
}

/// c_q = -2 sum_m a_{q+m+1} S_m - sum_m b_{q+m+1} T_m through the literal
/// pair sums.
template <class S>
std::vector<S> coefficients_via_sums(const RootSet<S>& rs, const Poly<S>& X, const Poly<S>& Y,
                                     int k) {
    if (k < 2) throw std::invalid_argument("k must be at least 2");
    std::vector<S> c(static_cast<std::size_t>(k - 1), S(0));
    for (int q = 0; q <= k - 2; ++q) {
        S acc(0);
        for (int m = 1; m <= k - 1 - q; ++m)
            acc -= S(2) * X.coeff(q + m + 1) * bethe_sum_direct(rs, m);
        for (int m = 0; m <= k - 2 - q; ++m) acc -= Y.coeff(q + m + 1) * power_sum(rs, m);
        c[static_cast<std::size_t>(q)] = acc;
    }
    return c;
}

/// The same coefficients through the closed forms of the pair sums in
/// monomial symmetric polynomials of the roots.
template <class S>
std::vector<S> coefficients_via_monomials(const RootSet<S>& rs, const Poly<S>& X,
                                          const Poly<S>& Y, int k) {
    if (k < 2) throw std::invalid_argument("k must be at least 2");
    const int n = rs.n();
    std::vector<S> c(static_cast<std::size_t>(k - 1), S(0));
    c[static_cast<std::size_t>(k - 2)] =
        -S(n) * S(n - 1) * X.coeff(k) - S(n) * Y.coeff(k - 1);
    for (int l = 0; l <= k - 3; ++l) {
        S acc = -S(n) * S(n - 1) * X.coeff(l + 2) - S(n) * Y.coeff(l + 1);
        for (int m = 2; m <= k - 1 - l; ++m) {
            S sm = S(n - 1) * monomial(rs, Partition2(m - 1, 0));
            for (int p = 1; 2 * p <= m - 1; ++p) sm += monomial(rs, Partition2(m - 1 - p, p));
            acc -= S(2) * X.coeff(l + m + 1) * sm;
        }
        for (int m = 1; m <= k - 2 - l; ++m) acc -= Y.coeff(l + m + 1) * monomial(rs, Partition2(m, 0));
        c[static_cast<std::size_t>(l)] = acc;
    }
    return c;
}

/// Coefficient vector c_0 .. c_{k-2} from the roots, with the two routes
/// cross-checked: exactly in the exact tower, to a small relative bound
/// in the double tower.
template <class S>
std::vector<S> coefficients_from_roots(const RootSet<S>& rs, const Poly<S>& X, const Poly<S>& Y,
                                       int k) {
    const std::vector<S> sums = coefficients_via_sums(rs, X, Y, k);
    const std::vector<S> monos = coefficients_via_monomials(rs, X, Y, k);
    if constexpr (is_exact_scalar_v<S>) {
        if (sums != monos) throw std::logic_error("coefficient routes disagree");
    } else {
        S scale(1);
        for (const S& v : sums) scale = std::max(scale, scalar_abs(v));
        for (std::size_t i = 0; i < sums.size(); ++i)
            if (scalar_abs(sums[i] - monos[i]) > S(1e-6) * scale)
                throw std::logic_error("coefficient routes disagree beyond float tolerance");
    }
    return sums;
}

namespace detail {

inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline bool pole_guarded_ok(const std::vector<double>& z, const Poly<double>& X) {
    for (std::size_t i = 0; i < z.size(); ++i) {
        if (!std::isfinite(z[i])) return false;
        if (std::fabs(evaluate(X, z[i])) < 1e-12) return false;
        for (std::size_t j = i + 1; j < z.size(); ++j)
            if (std::fabs(z[i] - z[j]) < 1e-12) return false;
    }
    return true;
}

inline double residual_inf_norm(const std::vector<double>& z, const Poly<double>& X,
                                const Poly<double>& Y) {
    double norm = 0.0;
    const int n = static_cast<int>(z.size());
    for (int i = 0; i < n; ++i) {
        double acc = evaluate(Y, z[static_cast<std::size_t>(i)]) /
                     evaluate(X, z[static_cast<std::size_t>(i)]);
        for (int j = 0; j < n; ++j)
            if (j != i) acc += 2.0 / (z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)]);
        norm = std::max(norm, std::fabs(acc));
    }
    return norm;
}

/// Whether the monic root polynomial really solves X y'' + Y y' + Z y = 0
/// with Z built from the coefficient vector. When the ratio Y/X decays at
/// infinity, a widely escaped configuration can drive the raw residual
/// below any tolerance without being a solution; this substitution test
/// is what separates genuine roots from such artifacts.
inline bool substitution_ok(const RootSet<double>& roots, const Poly<double>& X,
                            const Poly<double>& Y, const std::vector<double>& c) {
    const Poly<double> z_poly = Poly<double>::from_coeffs(std::vector<double>(c));
    const Poly<double> y = monic_from_roots(roots);
    const Poly<double> t1 = X * derivative(y, 2);
    const Poly<double> t2 = Y * derivative(y);
    const Poly<double> t3 = z_poly * y;
    const double scale = std::max(std::max(1.0, max_abs_coeff(t1)),
                                  std::max(max_abs_coeff(t2), max_abs_coeff(t3)));
    return max_abs_coeff(t1 + t2 + t3) <= 1e-8 * scale;
}

}  // namespace detail

/// Damped multi-start Newton solver for the Bethe ansatz equations.
/// Starts are scaled Chebyshev-like configurations with seeded jitter;
/// iterates that cross a pole of the residual or fail to reduce its
/// max-norm are backtracked by the damping factor down to a floor of
/// 2^-20 per step. Converged configurations must additionally pass the
/// substitution test (the monic root polynomial solves the reduced
/// equation to 1e-8 of its scale), which discards escaped pseudo-roots.
/// Results are deduplicated (sorted roots closer than 1e-8 are the same
/// solution, the smaller residual wins) and reported in order of the
/// start that first found them. Deterministic for a given
/// (problem, config).
inline std::vector<BetheSolution> solve_bethe(const BetheProblem& prob,
                                              const SolverConfig& cfg = {}) {
    if (prob.n < 1) throw std::invalid_argument("solver needs n >= 1");
    const int n = prob.n;
    const Poly<double>& X = prob.X;
    const Poly<double>& Y = prob.Y;

    const double a_scale = std::max(1.0, to_double(max_abs_coeff(X)));
    const double radius = 1.0 + to_double(max_abs_coeff(Y)) / a_scale;
    constexpr double kStepFloor = 0x1.0p-20;
    constexpr double kPi = 3.14159265358979323846;
    const Poly<double> Xd = derivative(X);
    const Poly<double> Yd = derivative(Y);

    std::vector<BetheSolution> kept;
    for (int start = 0; start < cfg.starts; ++start) {
        std::mt19937_64 rng(cfg.seed + 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(start + 1));
        const double scale = radius * (0.15 + 0.85 * detail::uniform01(rng));
        std::vector<double> z(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            const double angle = kPi * (2.0 * i + 1.0) / (2.0 * n);
            z[static_cast<std::size_t>(i)] =
                scale * std::cos(angle) + 0.08 * radius * (2.0 * detail::uniform01(rng) - 1.0);
        }
        std::sort(z.begin(), z.end());
        for (std::size_t i = 1; i < z.size(); ++i)
            if (z[i] - z[i - 1] < 1e-4 * radius) z[i] = z[i - 1] + 1e-4 * radius;

        if (!detail::pole_guarded_ok(z, X)) continue;

        bool converged = false;
        int iterations = 0;
        double norm = detail::residual_inf_norm(z, X, Y);
        for (int it = 0; it < cfg.max_iter && std::isfinite(norm); ++it) {
            if (norm <= cfg.tol) {
                converged = true;
                iterations = it;
                break;
            }
            Eigen::VectorXd F(n);
            Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
            for (int i = 0; i < n; ++i) {
                const double zi = z[static_cast<std::size_t>(i)];
                const double xv = evaluate(X, zi);
                double acc = evaluate(Y, zi) / xv;
                double diag = (evaluate(Yd, zi) * xv - evaluate(Y, zi) * evaluate(Xd, zi)) / (xv * xv);
                for (int j = 0; j < n; ++j) {
                    if (j == i) continue;
                    const double gap = zi - z[static_cast<std::size_t>(j)];
                    acc += 2.0 / gap;
                    const double pair = 2.0 / (gap * gap);
                    diag -= pair;
                    J(i, j) = pair;
                }
                F(i) = acc;
                J(i, i) = diag;
            }
            const Eigen::VectorXd step = J.partialPivLu().solve(-F);
            if (!step.allFinite()) break;

            double t = 1.0;
            std::vector<double> candidate(static_cast<std::size_t>(n));
            bool accepted = false;
            while (t >= kStepFloor) {
                for (int i = 0; i < n; ++i)
                    candidate[static_cast<std::size_t>(i)] = z[static_cast<std::size_t>(i)] + t * step(i);
                if (detail::pole_guarded_ok(candidate, X)) {
                    const double cand_norm = detail::residual_inf_norm(candidate, X, Y);
                    if (std::isfinite(cand_norm) && cand_norm < norm) {
                        z = candidate;
                        norm = cand_norm;
                        accepted = true;
                        break;
                    }
                }
                t *= cfg.damping;
            }
            if (!accepted) break;
        }
        if (!converged && norm <= cfg.tol && std::isfinite(norm)) {
            converged = true;  // converged on the last allowed iteration
            iterations = cfg.max_iter;
        }
        if (!converged) continue;

        BetheSolution sol;
        try {
            sol.roots = RootSet<double>(z);
        } catch (const std::invalid_argument&) {
            continue;  // coalesced beyond the RootSet gap requirement
        }
        sol.residual_norm = detail::residual_inf_norm(sol.roots.roots(), X, Y);
        sol.c = coefficients_from_roots(sol.roots, X, Y, prob.k);
        sol.converged = true;
        sol.newton_iterations = iterations;
        if (!detail::substitution_ok(sol.roots, X, Y, sol.c)) continue;

        bool duplicate = false;
        for (auto& existing : kept) {
            if (existing.roots.n() != sol.roots.n()) continue;
            double diff = 0.0;
            for (int i = 0; i < sol.roots.n(); ++i)
                diff = std::max(diff, std::fabs(existing.roots[i] - sol.roots[i]));
            if (diff < 1e-8) {
                duplicate = true;
                if (sol.residual_norm < existing.residual_norm) existing = sol;
                break;
            }
        }
        if (!duplicate) kept.push_back(std::move(sol));
    }
    return kept;
}

}  // namespace qes

#endif  // QES_FBA_HPP
