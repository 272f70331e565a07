#ifndef QES_DETAIL_BIVARIATE_HPP
#define QES_DETAIL_BIVARIATE_HPP

// Minimal bivariate polynomial layer over the rationals used by the
// perfect-square search: values live in Q[u][v], stored as a vector of
// coefficient polynomials in u indexed by the power of v. Just enough
// ring arithmetic for building discriminant-style conditions and a
// Sylvester resultant that eliminates v.

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "qes/detail/elim.hpp"
#include "qes/poly.hpp"
#include "qes/scalar.hpp"

namespace qes::detail {

using BiPoly = std::vector<Poly<Rational>>;  // index = power of v

inline void bi_trim(BiPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

inline bool bi_is_zero(const BiPoly& p) {
    return std::all_of(p.begin(), p.end(), [](const auto& c) { return c.is_zero(); });
}

inline int bi_deg_v(const BiPoly& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (!p[static_cast<std::size_t>(i)].is_zero()) return i;
    return -1;
}

inline int bi_max_deg_u(const BiPoly& p) {
    int d = -1;
    for (const auto& c : p) d = std::max(d, c.degree());
    return d;
}

inline BiPoly bi_add(const BiPoly& a, const BiPoly& b) {
    BiPoly out(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (i < a.size()) out[i] = out[i] + a[i];
        if (i < b.size()) out[i] = out[i] + b[i];
    }
    bi_trim(out);
    return out;
}

inline BiPoly bi_sub(const BiPoly& a, const BiPoly& b) {
    BiPoly neg = b;
    for (auto& c : neg) c = -c;
    return bi_add(a, neg);
}

inline BiPoly bi_mul(const BiPoly& a, const BiPoly& b) {
    if (bi_is_zero(a) || bi_is_zero(b)) return {};
    BiPoly out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = out[i + j] + a[i] * b[j];
    bi_trim(out);
    return out;
}

inline BiPoly bi_scale(const BiPoly& a, const Rational& s) {
    BiPoly out = a;
    for (auto& c : out) c = c * s;
    bi_trim(out);
    return out;
}

/// Specialize u -> t, leaving a univariate polynomial in v.
inline Poly<Rational> bi_eval_u(const BiPoly& p, const Rational& t) {
    std::vector<Rational> coeffs;
    coeffs.reserve(p.size());
    for (const auto& c : p) coeffs.push_back(evaluate(c, t));
    return Poly<Rational>::from_coeffs(std::move(coeffs));
}

/// Resultant of a and b with respect to v, a polynomial in u. Computed by
/// interpolating the determinant of the Sylvester matrix at enough sample
/// points; the fixed generic degrees make determinant and specialization
/// commute, so sample values are exact.
inline Poly<Rational> resultant_v(const BiPoly& a, const BiPoly& b) {
    const int da = bi_deg_v(a);
    const int db = bi_deg_v(b);
    if (da < 1 || db < 1) throw std::invalid_argument("resultant needs positive degrees in v");
    const int bound = db * std::max(0, bi_max_deg_u(a)) + da * std::max(0, bi_max_deg_u(b));

    const auto coeff_v = [](const BiPoly& p, int j) {
        if (j < 0 || j >= static_cast<int>(p.size())) return Poly<Rational>();
        return p[static_cast<std::size_t>(j)];
    };

    std::vector<Rational> xs, ys;
    xs.reserve(static_cast<std::size_t>(bound) + 1);
    ys.reserve(static_cast<std::size_t>(bound) + 1);
    long t = 0;
    while (static_cast<int>(xs.size()) <= bound) {
        const Rational x(t);
        const std::size_t dim = static_cast<std::size_t>(da + db);
        RationalMatrix m(dim, std::vector<Rational>(dim, Rational(0)));
        for (int row = 0; row < db; ++row)
            for (int i = 0; i <= da; ++i)
                m[static_cast<std::size_t>(row)][static_cast<std::size_t>(row + i)] =
                    evaluate(coeff_v(a, da - i), x);
        for (int row = 0; row < da; ++row)
            for (int i = 0; i <= db; ++i)
                m[static_cast<std::size_t>(db + row)][static_cast<std::size_t>(row + i)] =
                    evaluate(coeff_v(b, db - i), x);
        xs.push_back(x);
        ys.push_back(determinant(std::move(m)));
        t = (t > 0) ? -t : (-t + 1);  // 0, 1, -1, 2, -2, ...
    }
    return lagrange_interpolate(xs, ys);
}

}  // namespace qes::detail

#endif  // QES_DETAIL_BIVARIATE_HPP
