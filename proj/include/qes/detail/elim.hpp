#ifndef QES_DETAIL_ELIM_HPP
#define QES_DETAIL_ELIM_HPP

// Internal exact-elimination helpers: field division with remainder,
// monic Euclidean gcd, square-free reduction, rational root extraction
// (numeric isolation followed by exact verification), small dense
// determinants and kernels over the rationals, and Lagrange
// interpolation. Not part of the public surface.

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qes/poly.hpp"
#include "qes/scalar.hpp"

namespace qes::detail {

template <class S>
std::pair<Poly<S>, Poly<S>> poly_divmod(const Poly<S>& num, const Poly<S>& den) {
    if (den.is_zero()) throw std::invalid_argument("division by zero polynomial");
    if (num.degree() < den.degree()) return {Poly<S>(), num};
    std::vector<S> rem = num.coeffs();
    std::vector<S> quot(static_cast<std::size_t>(num.degree() - den.degree()) + 1, S(0));
    const S lead = den.leading();
    for (int i = num.degree() - den.degree(); i >= 0; --i) {
        const S q = rem[static_cast<std::size_t>(i + den.degree())] / lead;
        quot[static_cast<std::size_t>(i)] = q;
        if (q == S(0)) continue;
        for (int j = 0; j <= den.degree(); ++j)
            rem[static_cast<std::size_t>(i + j)] -= q * den.coeff(j);
    }
    return {Poly<S>::from_coeffs(std::move(quot)), Poly<S>::from_coeffs(std::move(rem))};
}

/// Monic gcd via the Euclidean algorithm, normalizing each remainder to
/// keep rational coefficient growth in check.
inline Poly<Rational> poly_gcd(Poly<Rational> a, Poly<Rational> b) {
    const auto monic = [](const Poly<Rational>& p) {
        return p.is_zero() ? p : p / p.leading();
    };
    a = monic(a);
    b = monic(b);
    while (!b.is_zero()) {
        Poly<Rational> r = poly_divmod(a, b).second;
        a = b;
        b = monic(r);
    }
    return a;
}

inline Poly<Rational> squarefree_part(const Poly<Rational>& f) {
    if (f.degree() < 1) return f;
    const Poly<Rational> g = poly_gcd(f, derivative(f));
    if (g.degree() < 1) return f;
    const auto q = exact_divide(f, g);
    return q ? *q : f;
}

/// Approximate real roots of an exact polynomial: scale, convert to
/// double, companion-matrix eigenvalues, and a short Newton polish.
inline std::vector<double> approx_real_roots(const Poly<Rational>& f) {
    const int d = f.degree();
    if (d < 1) return {};
    const Rational scale = max_abs_coeff(f);
    std::vector<double> c(static_cast<std::size_t>(d) + 1);
    for (int i = 0; i <= d; ++i) c[static_cast<std::size_t>(i)] = to_double(f.coeff(i) / scale);
    if (c.back() == 0.0) return {};  // leading term underflowed

    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(d, d);
    for (int i = 1; i < d; ++i) companion(i, i - 1) = 1.0;
    for (int i = 0; i < d; ++i) companion(i, d - 1) = -c[static_cast<std::size_t>(i)] / c.back();
    Eigen::EigenSolver<Eigen::MatrixXd> es(companion, /*computeEigenvectors=*/false);

    const auto eval = [&](double x) {
        double acc = 0.0;
        for (int i = d; i >= 0; --i) acc = acc * x + c[static_cast<std::size_t>(i)];
        return acc;
    };
    const auto eval_d = [&](double x) {
        double acc = 0.0;
        for (int i = d; i >= 1; --i) acc = acc * x + i * c[static_cast<std::size_t>(i)];
        return acc;
    };

    std::vector<double> roots;
    for (int i = 0; i < d; ++i) {
        const std::complex<double> lambda = es.eigenvalues()(i);
        if (std::abs(lambda.imag()) > 1e-6 * (1.0 + std::abs(lambda.real()))) continue;
        double x = lambda.real();
        for (int it = 0; it < 8; ++it) {
            const double fd = eval_d(x);
            if (fd == 0.0 || !std::isfinite(fd)) break;
            const double step = eval(x) / fd;
            if (!std::isfinite(step)) break;
            x -= step;
        }
        if (std::isfinite(x)) roots.push_back(x);
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

/// Continued-fraction convergents of x, in increasing denominator order.
/// Values too large for reliable double->integer reconstruction yield
/// an empty list.
inline std::vector<Rational> convergents(double x, long long den_cap = 1000000000000LL) {
    if (!std::isfinite(x) || std::abs(x) > 1e12) return {};
    std::vector<Rational> out;
    BigInt h_prev(1), k_prev(0);
    double frac = x;
    BigInt h(static_cast<long long>(std::floor(frac))), k(1);
    out.emplace_back(h, k);
    double rem = frac - std::floor(frac);
    for (int it = 0; it < 48; ++it) {
        if (rem < 1e-14) break;
        const double inv = 1.0 / rem;
        const double fl = std::floor(inv);
        if (!(fl < 9e14)) break;
        const BigInt a(static_cast<long long>(fl));
        const BigInt h_next = a * h + h_prev;
        const BigInt k_next = a * k + k_prev;
        h_prev = h;
        k_prev = k;
        h = h_next;
        k = k_next;
        if (k > den_cap) break;
        out.emplace_back(h, k);
        rem = inv - fl;
    }
    return out;
}

/// All rational roots of f that this routine can certify. Degrees <= 2
/// are solved exactly and completely; higher degrees go through numeric
/// isolation plus continued-fraction reconstruction, so a rational root
/// with an extremely large numerator or denominator may be missed. Every
/// returned value satisfies f(root) == 0 exactly.
inline std::vector<Rational> rational_roots(const Poly<Rational>& f) {
    if (f.is_zero()) throw std::invalid_argument("rational_roots of the zero polynomial");
    std::vector<Rational> out;
    const auto push = [&out](const Rational& r) {
        if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
    };
    if (f.degree() >= 1 && f.coeff(0) == Rational(0)) push(Rational(0));

    if (f.degree() == 1) {
        push(-f.coeff(0) / f.coeff(1));
    } else if (f.degree() == 2) {
        const Rational a = f.coeff(2), b = f.coeff(1), c0 = f.coeff(0);
        const auto sd = exact_sqrt(b * b - 4 * a * c0);
        if (sd) {
            push((-b + *sd) / (2 * a));
            push((-b - *sd) / (2 * a));
        }
    } else if (f.degree() >= 3) {
        const Poly<Rational> sf = squarefree_part(f);
        for (const double x : approx_real_roots(sf)) {
            for (const Rational& cand : convergents(x)) {
                if (evaluate(f, cand) == Rational(0)) {
                    push(cand);
                    break;
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

using RationalMatrix = std::vector<std::vector<Rational>>;

inline Rational determinant(RationalMatrix m) {
    const std::size_t n = m.size();
    Rational det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col] == Rational(0)) ++pivot;
        if (pivot == n) return Rational(0);
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t row = col + 1; row < n; ++row) {
            if (m[row][col] == Rational(0)) continue;
            const Rational factor = m[row][col] / m[col][col];
            for (std::size_t j = col; j < n; ++j) m[row][j] -= factor * m[col][j];
        }
    }
    return det;
}

/// Basis of the null space of an r x c rational matrix.
inline std::vector<std::vector<Rational>> kernel_basis(RationalMatrix m, std::size_t cols) {
    const std::size_t rows = m.size();
    std::vector<long> pivot_of_col(cols, -1);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][col] == Rational(0)) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[rank]);
        const Rational lead = m[rank][col];
        for (std::size_t j = 0; j < cols; ++j) m[rank][j] /= lead;
        for (std::size_t row = 0; row < rows; ++row) {
            if (row == rank || m[row][col] == Rational(0)) continue;
            const Rational factor = m[row][col];
            for (std::size_t j = 0; j < cols; ++j) m[row][j] -= factor * m[rank][j];
        }
        pivot_of_col[col] = static_cast<long>(rank);
        ++rank;
    }
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free_col = 0; free_col < cols; ++free_col) {
        if (pivot_of_col[free_col] >= 0) continue;
        std::vector<Rational> v(cols, Rational(0));
        v[free_col] = Rational(1);
        for (std::size_t col = 0; col < cols; ++col)
            if (pivot_of_col[col] >= 0)
                v[col] = -m[static_cast<std::size_t>(pivot_of_col[col])][free_col];
        basis.push_back(std::move(v));
    }
    return basis;
}

inline Poly<Rational> lagrange_interpolate(const std::vector<Rational>& xs,
                                           const std::vector<Rational>& ys) {
    if (xs.size() != ys.size()) throw std::invalid_argument("interpolation length mismatch");
    Poly<Rational> acc;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        Poly<Rational> basis(Rational(1));
        Rational denom(1);
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (j == i) continue;
            basis = basis * Poly<Rational>::from_coeffs({-xs[j], Rational(1)});
            denom *= xs[i] - xs[j];
        }
        acc = acc + basis * (ys[i] / denom);
    }
    return acc;
}

}  // namespace qes::detail

#endif  // QES_DETAIL_ELIM_HPP
