#ifndef QES_SCALAR_HPP
#define QES_SCALAR_HPP

// The two scalar towers of the library: arbitrary-precision rationals
// (ground truth for every algebraic identity) and IEEE doubles (used by
// the Newton root solver). Generic code is templated on the scalar and
// never mixes towers; mixing is rejected at compile time.

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>

namespace qes {

namespace mp = boost::multiprecision;

using BigInt = mp::number<mp::cpp_int_backend<>, mp::et_off>;
using Rational = mp::number<mp::rational_adaptor<mp::cpp_int_backend<>>, mp::et_off>;

template <class S>
inline constexpr bool is_exact_scalar_v = std::is_same_v<S, Rational>;

inline double scalar_abs(double x) { return std::fabs(x); }
inline Rational scalar_abs(const Rational& x) { return x < 0 ? Rational(-x) : x; }

inline double to_double(double x) { return x; }
inline double to_double(const Rational& x) { return x.convert_to<double>(); }

/// Square root within the tower. For rationals this succeeds only on
/// perfect squares (numerator and denominator both square integers);
/// for doubles any nonnegative value has a root.
inline std::optional<double> exact_sqrt(double x) {
    if (x < 0) return std::nullopt;
    return std::sqrt(x);
}

inline std::optional<Rational> exact_sqrt(const Rational& x) {
    if (x < 0) return std::nullopt;
    const BigInt num = mp::numerator(x);
    const BigInt den = mp::denominator(x);
    const BigInt sn = mp::sqrt(num);
    const BigInt sd = mp::sqrt(den);
    if (sn * sn != num || sd * sd != den) return std::nullopt;
    return Rational(sn, sd);
}

inline Rational rational_binomial(long long n, long long k) {
    if (k < 0 || k > n) return Rational(0);
    Rational r(1);
    for (long long i = 0; i < k; ++i) r *= Rational(n - i, i + 1);
    return r;
}

inline Rational rational_factorial(long long n) {
    Rational r(1);
    for (long long i = 2; i <= n; ++i) r *= i;
    return r;
}

template <class S>
S scalar_binomial(long long n, long long k) {
    if constexpr (is_exact_scalar_v<S>) {
        return rational_binomial(n, k);
    } else {
        return to_double(rational_binomial(n, k));
    }
}

template <class S>
S scalar_factorial(long long n) {
    if constexpr (is_exact_scalar_v<S>) {
        return rational_factorial(n);
    } else {
        return to_double(rational_factorial(n));
    }
}

/// Strict parser for "p", "-p" or "p/q" with integer p, q and q > 0 after
/// sign normalization. Anything else (including "1/0") is rejected.
inline Rational parse_rational(const std::string& text) {
    const auto is_int = [](const std::string& s) {
        std::size_t i = (!s.empty() && (s[0] == '+' || s[0] == '-')) ? 1 : 0;
        if (i >= s.size()) return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
        if (!is_int(text)) throw std::invalid_argument("not a rational: '" + text + "'");
        return Rational(BigInt(text));
    }
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    if (!is_int(num) || !is_int(den))
        throw std::invalid_argument("not a rational: '" + text + "'");
    const BigInt d(den);
    if (d == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
    return Rational(BigInt(num), d);
}

/// Canonical text form: "p" for integers, "p/q" otherwise, q > 0, lowest terms.
inline std::string format_rational(const Rational& x) {
    const BigInt num = mp::numerator(x);
    const BigInt den = mp::denominator(x);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

}  // namespace qes

#endif  // QES_SCALAR_HPP
