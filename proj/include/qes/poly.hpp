#ifndef QES_POLY_HPP
#define QES_POLY_HPP

// Dense univariate polynomial arithmetic over one scalar tower, with exact
// division and polynomial square root. Coefficients are stored in ascending
// power order; the trailing coefficient is nonzero unless the polynomial is
// identically zero, and degree() is -1 exactly for the zero polynomial.

#include <algorithm>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qes/scalar.hpp"

namespace qes {

// Relative tolerances used only by the double tower; the exact tower
// admits no tolerance anywhere.
inline constexpr double kFloatDivisibilityRelTol = 1e-9;
inline constexpr double kFloatSqrtRelTol = 1e-9;

template <class Scalar>
class Poly {
  public:
    Poly() = default;

    explicit Poly(const Scalar& constant) {
        if (!(constant == Scalar(0))) coeffs_.push_back(constant);
    }

    static Poly from_coeffs(std::vector<Scalar> ascending) {
        Poly p;
        p.coeffs_ = std::move(ascending);
        p.trim();
        return p;
    }

    /// coeff * z^power
    static Poly term(const Scalar& coeff, int power) {
        if (power < 0) throw std::invalid_argument("negative power");
        if (coeff == Scalar(0)) return Poly();
        Poly p;
        p.coeffs_.assign(static_cast<std::size_t>(power) + 1, Scalar(0));
        p.coeffs_.back() = coeff;
        return p;
    }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    /// Coefficient of z^i; zero outside the stored range.
    Scalar coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Scalar(0);
        return coeffs_[static_cast<std::size_t>(i)];
    }

    const std::vector<Scalar>& coeffs() const { return coeffs_; }

    Scalar leading() const {
        if (coeffs_.empty()) return Scalar(0);
        return coeffs_.back();
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  private:
    std::vector<Scalar> coeffs_;

    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == Scalar(0)) coeffs_.pop_back();
    }

    template <class S>
    friend Poly<S> operator+(const Poly<S>&, const Poly<S>&);
    template <class S>
    friend Poly<S> operator-(const Poly<S>&, const Poly<S>&);
    template <class S>
    friend Poly<S> operator*(const Poly<S>&, const Poly<S>&);
};

template <class S>
Poly<S> operator+(const Poly<S>& a, const Poly<S>& b) {
    std::vector<S> out(std::max(a.coeffs().size(), b.coeffs().size()), S(0));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    return Poly<S>::from_coeffs(std::move(out));
}

template <class S>
Poly<S> operator-(const Poly<S>& a, const Poly<S>& b) {
    std::vector<S> out(std::max(a.coeffs().size(), b.coeffs().size()), S(0));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
    return Poly<S>::from_coeffs(std::move(out));
}

template <class S>
Poly<S> operator-(const Poly<S>& a) {
    std::vector<S> out = a.coeffs();
    for (auto& c : out) c = -c;
    return Poly<S>::from_coeffs(std::move(out));
}

template <class S>
Poly<S> operator*(const Poly<S>& a, const Poly<S>& b) {
    if (a.is_zero() || b.is_zero()) return Poly<S>();
    std::vector<S> out(a.coeffs().size() + b.coeffs().size() - 1, S(0));
    for (std::size_t i = 0; i < a.coeffs().size(); ++i)
        for (std::size_t j = 0; j < b.coeffs().size(); ++j)
            out[i + j] += a.coeffs()[i] * b.coeffs()[j];
    return Poly<S>::from_coeffs(std::move(out));
}

template <class S>
Poly<S> operator*(const Poly<S>& a, const S& s) {
    std::vector<S> out = a.coeffs();
    for (auto& c : out) c *= s;
    return Poly<S>::from_coeffs(std::move(out));
}

template <class S>
Poly<S> operator*(const S& s, const Poly<S>& a) {
    return a * s;
}

template <class S>
Poly<S> operator/(const Poly<S>& a, const S& s) {
    if (s == S(0)) throw std::invalid_argument("division by zero scalar");
    std::vector<S> out = a.coeffs();
    for (auto& c : out) c /= s;
    return Poly<S>::from_coeffs(std::move(out));
}

/// order-fold formal derivative.
template <class S>
Poly<S> derivative(const Poly<S>& p, int order = 1) {
    if (order < 0) throw std::invalid_argument("negative derivative order");
    Poly<S> cur = p;
    for (int o = 0; o < order; ++o) {
        if (cur.is_zero()) return cur;
        std::vector<S> out;
        out.reserve(cur.coeffs().size());
        for (std::size_t i = 1; i < cur.coeffs().size(); ++i)
            out.push_back(cur.coeffs()[i] * S(static_cast<int>(i)));
        cur = Poly<S>::from_coeffs(std::move(out));
    }
    return cur;
}

/// Horner evaluation.
template <class S>
S evaluate(const Poly<S>& p, const S& z) {
    S acc(0);
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * z + *it;
    return acc;
}

template <class S>
S max_abs_coeff(const Poly<S>& p) {
    S m(0);
    for (const auto& c : p.coeffs()) m = std::max(m, scalar_abs(c));
    return m;
}

/// Quotient of an exact polynomial division, or nullopt when the divisor
/// does not divide. The exact tower requires a literally zero remainder;
/// the double tower accepts a remainder below kFloatDivisibilityRelTol
/// relative to the numerator's largest coefficient.
template <class S>
std::optional<Poly<S>> exact_divide(const Poly<S>& num, const Poly<S>& den) {
    if (den.is_zero()) throw std::invalid_argument("division by zero polynomial");
    if (num.is_zero()) return Poly<S>();
    if (num.degree() < den.degree()) return std::nullopt;

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
    const Poly<S> remainder = Poly<S>::from_coeffs(std::move(rem));
    if constexpr (is_exact_scalar_v<S>) {
        if (!remainder.is_zero()) return std::nullopt;
    } else {
        const S bound = S(kFloatDivisibilityRelTol) * max_abs_coeff(num);
        if (max_abs_coeff(remainder) > bound) return std::nullopt;
    }
    return Poly<S>::from_coeffs(std::move(quot));
}

/// Polynomial square root by coefficient matching from the leading term
/// down: s with s*s == p and positive leading coefficient, or nullopt.
/// The zero polynomial returns zero.
template <class S>
std::optional<Poly<S>> poly_sqrt(const Poly<S>& p) {
    if (p.is_zero()) return Poly<S>();
    if (p.degree() % 2 != 0) return std::nullopt;
    const int d = p.degree() / 2;
    const auto lead = exact_sqrt(p.leading());
    if (!lead) return std::nullopt;

    std::vector<S> s(static_cast<std::size_t>(d) + 1, S(0));
    s[static_cast<std::size_t>(d)] = *lead;
    for (int j = d - 1; j >= 0; --j) {
        S acc = p.coeff(d + j);
        for (int u = j + 1; u <= d - 1; ++u) {
            const int v = d + j - u;
            if (v > d || v < 0) continue;
            acc -= s[static_cast<std::size_t>(u)] * s[static_cast<std::size_t>(v)];
        }
        s[static_cast<std::size_t>(j)] = acc / (S(2) * *lead);
    }
    Poly<S> root = Poly<S>::from_coeffs(std::move(s));
    const Poly<S> diff = root * root - p;
    if constexpr (is_exact_scalar_v<S>) {
        if (!diff.is_zero()) return std::nullopt;
    } else {
        const S bound = S(kFloatSqrtRelTol) * std::max(S(1), max_abs_coeff(p));
        if (max_abs_coeff(diff) > bound) return std::nullopt;
    }
    return root;
}

template <class S>
std::string to_string(const Poly<S>& p) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        if (i) os << ", ";
        if constexpr (is_exact_scalar_v<S>)
            os << format_rational(p.coeffs()[i]);
        else
            os << p.coeffs()[i];
    }
    os << "]";
    return os.str();
}

template <class S>
std::ostream& operator<<(std::ostream& os, const Poly<S>& p) {
    return os << to_string(p);
}

}  // namespace qes

#endif  // QES_POLY_HPP
