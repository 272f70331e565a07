#ifndef QES_ENU_HPP
#define QES_ENU_HPP

// Extended Nikiforov-Uvarov pipeline. Starting from the coefficient
// triple (tau_tilde, sigma, sigma_tilde) of a second-order equation with
// at most k+1 singular points, this module factorizes the equation
// through a polynomial pi whose defining radicand must be a perfect
// square, builds the reduced equation X y'' + Y y' + Z y = 0, expresses
// the degree-n solvability condition, and computes the k-2 integration
// constants two independent ways: by forward substitution on a
// triangular linear system in elementary symmetric polynomials of the
// roots, and by a closed form in monomial symmetric polynomials.

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qes/detail/bivariate.hpp"
#include "qes/detail/elim.hpp"
#include "qes/poly.hpp"
#include "qes/rootset.hpp"
#include "qes/scalar.hpp"
#include "qes/symfunc.hpp"

namespace qes {

template <class S>
struct PolyRatio {
    Poly<S> num;
    Poly<S> den;
};

template <class S>
struct NUInput {
    Poly<S> tau_tilde;   // degree <= k-1
    Poly<S> sigma;       // degree <= k, nonzero
    Poly<S> sigma_tilde; // degree <= 2k-2
    int k = 2;

    NUInput(Poly<S> tau_tilde_, Poly<S> sigma_, Poly<S> sigma_tilde_, int k_)
        : tau_tilde(std::move(tau_tilde_)),
          sigma(std::move(sigma_)),
          sigma_tilde(std::move(sigma_tilde_)),
          k(k_) {
        if (k < 2) throw std::invalid_argument("k must be at least 2");
        if (sigma.is_zero()) throw std::invalid_argument("sigma must not be identically zero");
        if (tau_tilde.degree() > k - 1 || sigma.degree() > k || sigma_tilde.degree() > 2 * k - 2)
            throw std::invalid_argument("coefficient degree bound violated");
    }
};

template <class S>
struct NUFactorization {
    Poly<S> g;          // degree <= k-2
    Poly<S> pi;         // degree <= k-1
    Poly<S> tau;        // tau_tilde + 2 pi
    Poly<S> h;          // g + pi'
    Poly<S> sigma_bar;  // sigma * h
    PolyRatio<S> phi_logderiv;  // phi'/phi = pi / sigma
};

template <class S>
struct GPi {
    Poly<S> g;
    Poly<S> pi;
};

template <class S>
struct ReducedEq {
    Poly<S> X;  // degree <= k
    Poly<S> Y;  // degree <= k-1
    Poly<S> Z;  // degree <= k-2
    int k = 2;

    ReducedEq(Poly<S> x, Poly<S> y, Poly<S> z, int k_)
        : X(std::move(x)), Y(std::move(y)), Z(std::move(z)), k(k_) {
        if (k < 2) throw std::invalid_argument("k must be at least 2");
        if (X.degree() > k || Y.degree() > k - 1 || Z.degree() > k - 2)
            throw std::invalid_argument("coefficient degree bound violated");
    }

    S a(int l) const { return X.coeff(l); }
    S b(int l) const { return Y.coeff(l); }
    S c(int l) const { return Z.coeff(l); }
};

/// The k-2 free constants of the degree-n solvability condition,
/// ordered C_1 .. C_{k-2}. Empty exactly when k == 2.
template <class S>
struct IntegrationConstants {
    std::vector<S> values;
    int n = 0;
    int k = 2;

    IntegrationConstants() = default;
    IntegrationConstants(std::vector<S> values_, int n_, int k_)
        : values(std::move(values_)), n(n_), k(k_) {
        if (k < 2 || n < 0) throw std::invalid_argument("invalid n or k");
        if (static_cast<int>(values.size()) != k - 2)
            throw std::invalid_argument("constants vector must have length k-2");
    }

    /// C_q, 1-based.
    const S& at(int q) const { return values.at(static_cast<std::size_t>(q - 1)); }
};

/// Both branches of the factorizing polynomial for a given g, or an
/// empty list when the radicand is not a perfect square.
template <class S>
std::vector<Poly<S>> pi_candidates(const NUInput<S>& inp, const Poly<S>& g) {
    if (g.degree() > inp.k - 2) throw std::invalid_argument("deg g exceeds k-2");
    const Poly<S> half = (derivative(inp.sigma) - inp.tau_tilde) / S(2);
    const Poly<S> radicand = half * half - inp.sigma_tilde + g * inp.sigma;
    const auto root = poly_sqrt(radicand);
    if (!root) return {};
    return {half + *root, half - *root};
}

namespace detail {

inline bool poly_less(const Poly<Rational>& a, const Poly<Rational>& b) {
    return std::lexicographical_compare(a.coeffs().begin(), a.coeffs().end(),
                                        b.coeffs().begin(), b.coeffs().end());
}

inline const std::vector<Rational>& sample_grid() {
    static const std::vector<Rational> grid = {Rational(0), Rational(1), Rational(-1),
                                               Rational(2), Rational(-2)};
    return grid;
}

/// Common rational roots of two univariate polynomials, at least one of
/// which is nonzero; both zero falls back to the sample grid.
inline std::vector<Rational> common_roots(const Poly<Rational>& a, const Poly<Rational>& b) {
    if (a.is_zero() && b.is_zero()) return sample_grid();
    if (a.is_zero()) return rational_roots(b);
    if (b.is_zero()) return rational_roots(a);
    std::vector<Rational> out;
    for (const Rational& r : rational_roots(a))
        if (evaluate(b, r) == Rational(0)) out.push_back(r);
    return out;
}

/// Transpose the variable roles: coefficient polynomials in v indexed by
/// the power of u.
inline BiPoly bi_transpose(const BiPoly& p) {
    BiPoly out;
    for (int i = 0; i < static_cast<int>(p.size()); ++i) {
        const Poly<Rational>& c = p[static_cast<std::size_t>(i)];
        for (int j = 0; j <= c.degree(); ++j) {
            if (j >= static_cast<int>(out.size())) out.resize(static_cast<std::size_t>(j) + 1);
            std::vector<Rational> entry = out[static_cast<std::size_t>(j)].coeffs();
            entry.resize(std::max(entry.size(), static_cast<std::size_t>(i) + 1), Rational(0));
            entry[static_cast<std::size_t>(i)] = c.coeff(j);
            out[static_cast<std::size_t>(j)] = Poly<Rational>::from_coeffs(std::move(entry));
        }
    }
    bi_trim(out);
    return out;
}

/// Candidate (u, v) pairs with F(u, v) = 0 for a single bivariate
/// condition. A vanishing F or a one-dimensional solution set is sampled
/// at canonical representatives (both variable directions) rather than
/// enumerated.
inline void zero_set_single(const BiPoly& f, std::vector<std::pair<Rational, Rational>>& out) {
    if (bi_is_zero(f)) {
        for (const auto& u : sample_grid())
            for (const auto& v : sample_grid()) out.emplace_back(u, v);
        return;
    }
    if (bi_deg_v(f) == 0) {
        for (const Rational& u : rational_roots(f[0]))
            for (const auto& v : sample_grid()) out.emplace_back(u, v);
        return;
    }
    for (const auto& u : sample_grid()) {
        const Poly<Rational> fv = bi_eval_u(f, u);
        if (fv.is_zero()) {
            for (const auto& v : sample_grid()) out.emplace_back(u, v);
        } else {
            for (const Rational& v : rational_roots(fv)) out.emplace_back(u, v);
        }
    }
    const BiPoly swapped = bi_transpose(f);
    if (bi_deg_v(swapped) >= 1) {
        for (const auto& v : sample_grid()) {
            const Poly<Rational> fu = bi_eval_u(swapped, v);
            if (!fu.is_zero())
                for (const Rational& u : rational_roots(fu)) out.emplace_back(u, v);
        }
    }
}

/// Candidate (u, v) pairs with A(u, v) = B(u, v) = 0, eliminating v by a
/// Sylvester resultant in the generic case. Positive-dimensional
/// intersections are sampled, not enumerated; spurious candidates are
/// harmless because every candidate is verified downstream.
inline void zero_set_pair(const BiPoly& a, const BiPoly& b,
                          std::vector<std::pair<Rational, Rational>>& out) {
    if (bi_is_zero(a) && bi_is_zero(b)) {
        zero_set_single(a, out);
        return;
    }
    if (bi_is_zero(a)) return zero_set_single(b, out);
    if (bi_is_zero(b)) return zero_set_single(a, out);

    const int da = bi_deg_v(a);
    const int db = bi_deg_v(b);
    if (da == 0 && db == 0) {
        for (const Rational& u : common_roots(a[0], b[0]))
            for (const auto& v : sample_grid()) out.emplace_back(u, v);
        return;
    }
    if (da == 0 || db == 0) {
        const BiPoly& flat = (da == 0) ? a : b;    // depends only on u
        const BiPoly& other = (da == 0) ? b : a;
        for (const Rational& u : rational_roots(flat[0])) {
            const Poly<Rational> ov = bi_eval_u(other, u);
            if (ov.is_zero()) {
                for (const auto& v : sample_grid()) out.emplace_back(u, v);
            } else {
                for (const Rational& v : rational_roots(ov)) out.emplace_back(u, v);
            }
        }
        return;
    }

    const Poly<Rational> res = resultant_v(a, b);
    const std::vector<Rational> us =
        res.is_zero() ? sample_grid() : rational_roots(res);
    for (const Rational& u : us)
        for (const Rational& v : common_roots(bi_eval_u(a, u), bi_eval_u(b, u)))
            out.emplace_back(u, v);
}

template <class S>
void append_verified(const NUInput<S>& inp, const Poly<S>& g, std::vector<GPi<S>>& out) {
    for (const Poly<S>& pi : pi_candidates(inp, g)) out.push_back(GPi<S>{g, pi});
}

inline std::vector<GPi<Rational>> dedup_sorted(std::vector<GPi<Rational>> found) {
    std::sort(found.begin(), found.end(), [](const GPi<Rational>& x, const GPi<Rational>& y) {
        if (x.g != y.g) return poly_less(x.g, y.g);
        return poly_less(x.pi, y.pi);
    });
    found.erase(std::unique(found.begin(), found.end(),
                            [](const GPi<Rational>& x, const GPi<Rational>& y) {
                                return x.g == y.g && x.pi == y.pi;
                            }),
                found.end());
    return found;
}

/// k = 2: g is a constant g0 and the radicand is a quadratic in z whose
/// discriminant is a polynomial of degree <= 2 in g0. A real perfect
/// square forces that discriminant to vanish, so its rational roots are
/// a complete candidate set over the rationals.
inline std::vector<GPi<Rational>> find_g_k2(const NUInput<Rational>& inp) {
    using P = Poly<Rational>;
    const P half = (derivative(inp.sigma) - inp.tau_tilde) / Rational(2);
    const P base = half * half - inp.sigma_tilde;  // radicand at g == 0

    // radicand coefficient j as an affine polynomial in g0
    const auto rj = [&](int j) {
        return P::from_coeffs({base.coeff(j), inp.sigma.coeff(j)});
    };
    const P r2 = rj(2), r1 = rj(1), r0 = rj(0);
    const P disc = r1 * r1 - Rational(4) * (r2 * r0);

    std::vector<Rational> candidates;
    if (!disc.is_zero()) {
        candidates = rational_roots(disc);
    } else {
        // every g0 gives a vanishing discriminant; sample representatives
        candidates = sample_grid();
        for (const P* rc : {&r2, &r1, &r0})
            if (rc->degree() == 1) candidates.push_back(-rc->coeff(0) / rc->coeff(1));
    }

    std::vector<GPi<Rational>> found;
    for (const Rational& g0 : candidates) append_verified(inp, P(g0), found);
    return dedup_sorted(std::move(found));
}

/// k = 3: g = g1 z + g0 and the radicand R is a quartic in z with
/// coefficients affine in (g1, g0). For a genuinely quartic R the
/// perfect-square requirement is equivalent to two polynomial conditions
/// obtained by matching R against (alpha z^2 + beta z + gamma)^2 and
/// clearing alpha: 8 r4^2 r1 + r3^3 - 4 r2 r3 r4 = 0 and
/// 64 r4^3 r0 - (4 r2 r4 - r3^2)^2 = 0. Degenerate branches with r4 = 0
/// need r3 = 0 as well and reduce to the quadratic discriminant case.
/// Every candidate is verified through the exact polynomial square root,
/// so the returned list contains only genuine factorizations.
inline std::vector<GPi<Rational>> find_g_k3(const NUInput<Rational>& inp) {
    using P = Poly<Rational>;
    const P half = (derivative(inp.sigma) - inp.tau_tilde) / Rational(2);
    const P base = half * half - inp.sigma_tilde;  // radicand at g == 0

    // radicand coefficient j as a bivariate polynomial in (u, v) = (g1, g0)
    const auto rj = [&](int j) {
        BiPoly out(2);
        out[0] = P::from_coeffs({base.coeff(j), inp.sigma.coeff(j - 1)});
        out[1] = P(inp.sigma.coeff(j));
        bi_trim(out);
        return out;
    };
    const BiPoly r4 = rj(4), r3 = rj(3), r2 = rj(2), r1 = rj(1), r0 = rj(0);

    std::vector<std::pair<Rational, Rational>> candidates;

    // generic quartic family
    const BiPoly cond_a = bi_add(bi_scale(bi_mul(bi_mul(r4, r4), r1), Rational(8)),
                                 bi_sub(bi_mul(bi_mul(r3, r3), r3),
                                        bi_scale(bi_mul(bi_mul(r2, r3), r4), Rational(4))));
    const BiPoly inner = bi_sub(bi_scale(bi_mul(r2, r4), Rational(4)), bi_mul(r3, r3));
    const BiPoly cond_b = bi_sub(bi_scale(bi_mul(bi_mul(bi_mul(r4, r4), r4), r0), Rational(64)),
                                 bi_mul(inner, inner));
    zero_set_pair(cond_a, cond_b, candidates);

    // degenerate family: r4 = 0 (and then r3 = 0) drops the radicand to a
    // quadratic in z; r4 depends only on g1 because sigma has degree <= 3.
    const P q4 = r4.empty() ? P() : r4[0];
    if (q4.is_zero()) {
        const P q3 = (bi_deg_v(r3) <= 0) ? (r3.empty() ? P() : r3[0]) : P();
        if (bi_deg_v(r3) >= 1) {
            // r3 still involves g0: its zero line feeds the quadratic case
            for (const auto& u : sample_grid()) {
                const P r3v = bi_eval_u(r3, u);
                if (r3v.is_zero()) continue;
                for (const Rational& v : rational_roots(r3v)) candidates.emplace_back(u, v);
            }
        } else if (q3.is_zero()) {
            // radicand quadratic everywhere: one discriminant condition
            const BiPoly disc2 = bi_sub(bi_mul(r1, r1), bi_scale(bi_mul(r2, r0), Rational(4)));
            zero_set_single(disc2, candidates);
        } else if (q3.degree() == 1) {
            const Rational u_star = -q3.coeff(0) / q3.coeff(1);
            const BiPoly disc2 = bi_sub(bi_mul(r1, r1), bi_scale(bi_mul(r2, r0), Rational(4)));
            const P dv = bi_eval_u(disc2, u_star);
            if (dv.is_zero()) {
                for (const auto& v : sample_grid()) candidates.emplace_back(u_star, v);
            } else {
                for (const Rational& v : rational_roots(dv)) candidates.emplace_back(u_star, v);
            }
        }
    } else if (q4.degree() == 1) {
        const Rational u_star = -q4.coeff(0) / q4.coeff(1);
        const P r3v = bi_eval_u(r3, u_star);
        if (r3v.is_zero()) {
            const BiPoly disc2 = bi_sub(bi_mul(r1, r1), bi_scale(bi_mul(r2, r0), Rational(4)));
            const P dv = bi_eval_u(disc2, u_star);
            if (dv.is_zero()) {
                for (const auto& v : sample_grid()) candidates.emplace_back(u_star, v);
            } else {
                for (const Rational& v : rational_roots(dv)) candidates.emplace_back(u_star, v);
            }
        } else if (r3v.degree() >= 1) {
            for (const Rational& v : rational_roots(r3v)) candidates.emplace_back(u_star, v);
        }
    }

    std::vector<GPi<Rational>> found;
    for (const auto& [g1, g0] : candidates)
        append_verified(inp, P::from_coeffs({g0, g1}), found);
    return dedup_sorted(std::move(found));
}

}  // namespace detail

/// Search for admissible g. Supported for k in {2, 3}; for larger k the
/// caller supplies g and verifies through pi_candidates. Solutions whose
/// g coefficients are irrational are not representable in the exact
/// tower and are not returned; families admitting a continuum of g are
/// sampled at canonical representatives. Every returned pair is exactly
/// verified.
inline std::vector<GPi<Rational>> find_g(const NUInput<Rational>& inp) {
    if (inp.k == 2) return detail::find_g_k2(inp);
    if (inp.k == 3) return detail::find_g_k3(inp);
    throw std::invalid_argument("find_g supports k in {2, 3}; supply g and use pi_candidates");
}

/// Completes a factorization from a verified (g, pi) pair and checks the
/// divisibility sigma | sigma_bar that makes the reduced equation exist.
template <class S>
NUFactorization<S> assemble(const NUInput<S>& inp, const Poly<S>& g, const Poly<S>& pi) {
    if (g.degree() > inp.k - 2) throw std::invalid_argument("deg g exceeds k-2");
    if (pi.degree() > inp.k - 1) throw std::invalid_argument("deg pi exceeds k-1");

    NUFactorization<S> out;
    out.g = g;
    out.pi = pi;
    out.tau = inp.tau_tilde + S(2) * pi;
    out.h = g + derivative(pi);
    out.sigma_bar = inp.sigma_tilde + pi * pi + pi * (inp.tau_tilde - derivative(inp.sigma)) +
                    derivative(pi) * inp.sigma;

    const auto quotient = exact_divide(out.sigma_bar, inp.sigma);
    bool consistent = quotient.has_value();
    if (consistent) {
        if constexpr (is_exact_scalar_v<S>) {
            consistent = (*quotient == out.h);
        } else {
            const S scale = std::max(S(1), max_abs_coeff(out.h));
            consistent = max_abs_coeff(*quotient - out.h) <= S(kFloatDivisibilityRelTol) * scale;
        }
    }
    if (!consistent)
        throw std::invalid_argument("sigma_bar is not sigma * h: inconsistent (g, pi)");

    out.phi_logderiv = PolyRatio<S>{pi, inp.sigma};
    return out;
}

/// The reduced equation read off a factorization: X = sigma, Y = tau,
/// Z = h.
template <class S>
ReducedEq<S> reduced_equation(const NUInput<S>& inp, const NUFactorization<S>& fact) {
    return ReducedEq<S>(inp.sigma, fact.tau, fact.h, inp.k);
}

/// Z polynomial of the degree-n condition:
/// Z = -[n(n-1)/(k(k-1))] X'' - [n/(k-1)] Y' + sum_l C_{k-l-2} z^l / l!.
template <class S>
Poly<S> build_z(const Poly<S>& X, const Poly<S>& Y, int n, const IntegrationConstants<S>& c) {
    const int k = c.k;
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    if (X.degree() > k || Y.degree() > k - 1)
        throw std::invalid_argument("degree-bound violation on X or Y");

    const S quad_factor = -(S(n) * S(n - 1)) / (S(k) * S(k - 1));
    const S lin_factor = -S(n) / S(k - 1);
    Poly<S> z = quad_factor * derivative(X, 2) + lin_factor * derivative(Y);
    for (int l = 0; l <= k - 3; ++l)
        z = z + Poly<S>::term(c.at(k - l - 2) / scalar_factorial<S>(l), l);
    return z;
}

/// Ascending coefficients c_0 .. c_{k-2} of the same Z, written through
/// the coefficient relations instead of polynomial arithmetic.
template <class S>
std::vector<S> coefficient_relations(const Poly<S>& X, const Poly<S>& Y, int n,
                                     const IntegrationConstants<S>& c) {
    const int k = c.k;
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    if (X.degree() > k || Y.degree() > k - 1)
        throw std::invalid_argument("degree-bound violation on X or Y");

    std::vector<S> out(static_cast<std::size_t>(k - 1), S(0));
    out[static_cast<std::size_t>(k - 2)] =
        -S(n) * S(n - 1) * X.coeff(k) - S(n) * Y.coeff(k - 1);
    for (int l = 0; l <= k - 3; ++l) {
        S v = -(S(n) * S(n - 1)) / (S(k) * S(k - 1)) * S(l + 2) * S(l + 1) * X.coeff(l + 2);
        v -= S(n) / S(k - 1) * S(l + 1) * Y.coeff(l + 1);
        v += c.at(k - l - 2) / scalar_factorial<S>(l);
        out[static_cast<std::size_t>(l)] = v;
    }
    return out;
}

/// Whether (sigma, tau, h) kills the coefficient of the undifferentiated
/// term after the k-2 fold derivative, i.e. admits a degree-n polynomial
/// solution:
/// binom(n+k-2,k) sigma^(k) + binom(n+k-2,k-1) tau^(k-1)
///   + binom(n+k-2,k-2) h^(k-2) == 0.
template <class S>
bool degree_condition_check(const Poly<S>& sigma, const Poly<S>& tau, const Poly<S>& h, int n,
                            int k) {
    if (k < 2 || n < 0) throw std::invalid_argument("invalid n or k");
    if (sigma.degree() > k || tau.degree() > k - 1 || h.degree() > k - 2)
        throw std::invalid_argument("degree bounds of the reduced equation violated");

    const Poly<S> t1 = scalar_binomial<S>(n + k - 2, k) * derivative(sigma, k);
    const Poly<S> t2 = scalar_binomial<S>(n + k - 2, k - 1) * derivative(tau, k - 1);
    const Poly<S> t3 = scalar_binomial<S>(n + k - 2, k - 2) * derivative(h, k - 2);
    const Poly<S> total = t1 + t2 + t3;
    if constexpr (is_exact_scalar_v<S>) {
        return total.is_zero();
    } else {
        const S scale = std::max(
            std::max(S(1), max_abs_coeff(t1)),
            std::max(max_abs_coeff(t2), max_abs_coeff(t3)));
        return max_abs_coeff(total) <= S(1e-9) * scale;
    }
}

/// Multipliers of e_0 .. e_{r-3} and of the closing e_{r-2} on the right
/// side of row r of the triangular system for the integration constants.
/// Shared between the numeric solver and the symbolic identity checks.
template <class S>
struct RowTerms {
    std::vector<S> e_mult;
    S tail_mult = S(0);
};

template <class S>
RowTerms<S> constants_row_terms(const Poly<S>& X, const Poly<S>& Y, int n, int k, int r) {
    if (r < 3 || r > k) throw std::invalid_argument("row index out of range");
    RowTerms<S> out;
    out.e_mult.reserve(static_cast<std::size_t>(r - 2));
    const S kk = S(k) * S(k - 1);
    for (int p = 0; p <= r - 3; ++p) {
        const long long rp2 = r - p - 2;
        const long long quad = rp2 * (2LL * k - r + p + 1);
        const long long lin = 2LL * p * k * k + 2LL * k * (r - 2LL * p - 2) - rp2 * (rp2 + 1);
        const long long con = 1LL * k * (k - 1) * p * (p + 1);
        const S a_bracket = (S(quad) * S(n) * S(n) - S(lin) * S(n) + S(con)) / kk;
        const S b_bracket = (S(rp2) * S(n) - S(k - 1) * S(p)) / S(k - 1);
        const S term = a_bracket * X.coeff(k - r + 2 + p) + b_bracket * Y.coeff(k - r + 1 + p);
        out.e_mult.push_back((p % 2 == 0) ? -term : term);
    }
    const S closing = S(r - 2) * (S(2 * n - r + 1) * X.coeff(k) + Y.coeff(k - 1));
    out.tail_mult = ((r - 1) % 2 == 0) ? -closing : closing;
    return out;
}

/// The assembled lower-triangular system M C = rhs, rows r = 3 .. k.
template <class S>
struct ConstantsSystem {
    int k = 2;
    std::vector<std::vector<S>> matrix;  // (k-2) x (k-2)
    std::vector<S> rhs;
};

template <class S>
ConstantsSystem<S> constants_system(const RootSet<S>& rs, const Poly<S>& X, const Poly<S>& Y,
                                    int n, int k) {
    if (k < 2) throw std::invalid_argument("k must be at least 2");
    if (n != rs.n()) throw std::invalid_argument("n must equal the number of roots");
    if (X.degree() > k || Y.degree() > k - 1)
        throw std::invalid_argument("degree-bound violation on X or Y");

    const int m = k - 2;
    ConstantsSystem<S> sys;
    sys.k = k;
    sys.matrix.assign(static_cast<std::size_t>(m), std::vector<S>(static_cast<std::size_t>(m), S(0)));
    sys.rhs.assign(static_cast<std::size_t>(m), S(0));
    for (int r = 3; r <= k; ++r) {
        const int row = r - 3;
        const RowTerms<S> terms = constants_row_terms<S>(X, Y, n, k, r);
        for (int p = 0; p <= r - 3; ++p) {
            const int q = r - 2 - p;  // column of C_q
            const S sign = (p % 2 == 0) ? S(1) : S(-1);
            sys.matrix[static_cast<std::size_t>(row)][static_cast<std::size_t>(q - 1)] =
                sign * elementary(rs, p) / scalar_factorial<S>(k - r + p);
        }
        S acc(0);
        for (int p = 0; p <= r - 3; ++p)
            acc += terms.e_mult[static_cast<std::size_t>(p)] * elementary(rs, p);
        acc += terms.tail_mult * elementary(rs, r - 2);
        sys.rhs[static_cast<std::size_t>(row)] = acc;
    }
    return sys;
}

/// Integration constants by forward substitution on the triangular
/// system; the diagonal is 1/(k-r)! so the solution is always unique.
template <class S>
IntegrationConstants<S> constants_linear_system(const RootSet<S>& rs, const Poly<S>& X,
                                                const Poly<S>& Y, int n, int k) {
    const ConstantsSystem<S> sys = constants_system(rs, X, Y, n, k);
    const int m = k - 2;
    std::vector<S> c(static_cast<std::size_t>(m), S(0));
    for (int i = 0; i < m; ++i) {
        S acc = sys.rhs[static_cast<std::size_t>(i)];
        for (int j = 0; j < i; ++j)
            acc -= sys.matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                   c[static_cast<std::size_t>(j)];
        c[static_cast<std::size_t>(i)] = acc / sys.matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
    }
    return IntegrationConstants<S>(std::move(c), n, k);
}

/// Integration constants straight from the closed form in monomial
/// symmetric polynomials of the roots (partitions of at most two parts):
/// C_q / (k-2-q)! = - sum_t [2(n-1) a_{k-t} + b_{k-t-1}] m_(q-t)
///                  - sum_{s,t} 2 a_{k-t} m_(q-t-s, s)
///                  - [n(n-1)/(k(k-1))] q (2k-q-1) a_{k-q}
///                  - [n/(k-1)] q b_{k-q-1}.
template <class S>
IntegrationConstants<S> constants_closed_form(const RootSet<S>& rs, const Poly<S>& X,
                                              const Poly<S>& Y, int n, int k) {
    if (k < 2) throw std::invalid_argument("k must be at least 2");
    if (n != rs.n()) throw std::invalid_argument("n must equal the number of roots");
    if (X.degree() > k || Y.degree() > k - 1)
        throw std::invalid_argument("degree-bound violation on X or Y");

    std::vector<S> values;
    values.reserve(static_cast<std::size_t>(k - 2));
    for (int q = 1; q <= k - 2; ++q) {
        S acc(0);
        for (int t = 0; t <= q - 1; ++t)
            acc -= (S(2) * S(n - 1) * X.coeff(k - t) + Y.coeff(k - t - 1)) *
                   monomial(rs, Partition2(q - t, 0));
        for (int s = 1; 2 * s <= q; ++s)
            for (int t = 0; t <= q - 2 * s; ++t)
                acc -= S(2) * X.coeff(k - t) * monomial(rs, Partition2(q - t - s, s));
        acc -= (S(n) * S(n - 1)) / (S(k) * S(k - 1)) * S(q) * S(2 * k - q - 1) * X.coeff(k - q);
        acc -= S(n) / S(k - 1) * S(q) * Y.coeff(k - q - 1);
        values.push_back(acc * scalar_factorial<S>(k - 2 - q));
    }
    return IntegrationConstants<S>(std::move(values), n, k);
}

}  // namespace qes

#endif  // QES_ENU_HPP
