#ifndef QES_SYMFUNC_HPP
#define QES_SYMFUNC_HPP

// Symmetric-function kernel over a root set: elementary symmetric
// polynomials e_l, monomial symmetric polynomials for partitions with at
// most two parts, power sums, and the pair sums of the Bethe ansatz.
// Everything is a naive O(n^2) evaluation; n stays single-digit here.

#include <stdexcept>
#include <vector>

#include "qes/rootset.hpp"
#include "qes/scalar.hpp"

namespace qes {

/// e_l over the roots; e_0 = 1, e_l = 0 for l > n.
template <class S>
S elementary(const RootSet<S>& rs, int l) {
    if (l < 0) throw std::invalid_argument("negative index");
    if (l == 0) return S(1);
    if (l > rs.n()) return S(0);
    // running product of (1 + z_i t), keeping coefficients up to t^l
    std::vector<S> e(static_cast<std::size_t>(l) + 1, S(0));
    e[0] = S(1);
    for (int i = 0; i < rs.n(); ++i)
        for (int j = std::min(l, i + 1); j >= 1; --j)
            e[static_cast<std::size_t>(j)] += rs[i] * e[static_cast<std::size_t>(j - 1)];
    return e[static_cast<std::size_t>(l)];
}

/// Monomial symmetric polynomial m_lambda for a partition with at most
/// two nonzero parts: the sum of all distinct monomials z_i^p z_j^q.
/// Equal parts count each unordered pair once.
template <class S>
S monomial(const RootSet<S>& rs, const Partition2& lam) {
    const int n = rs.n();
    if (lam.p == 0) return S(1);  // empty partition
    if (lam.q == 0) {
        S acc(0);
        for (const auto& z : rs) {
            S zp(1);
            for (int t = 0; t < lam.p; ++t) zp *= z;
            acc += zp;
        }
        return acc;
    }
    if (n < 2) return S(0);  // both parts nonzero: empty sum
    const auto pow_to = [](const S& z, int e) {
        S r(1);
        for (int t = 0; t < e; ++t) r *= z;
        return r;
    };
    S acc(0);
    if (lam.p == lam.q) {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) acc += pow_to(rs[i], lam.p) * pow_to(rs[j], lam.p);
    } else {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j) acc += pow_to(rs[i], lam.p) * pow_to(rs[j], lam.q);
    }
    return acc;
}

/// Power sum over the roots; the zeroth is n.
template <class S>
S power_sum(const RootSet<S>& rs, int m) {
    if (m < 0) throw std::invalid_argument("negative index");
    if (m == 0) return S(rs.n());
    return monomial(rs, Partition2(m, 0));
}

/// The pair sum sum_{i != j} z_i^m / (z_i - z_j), evaluated literally.
template <class S>
S bethe_sum_direct(const RootSet<S>& rs, int m) {
    if (m < 0) throw std::invalid_argument("negative index");
    const int n = rs.n();
    S acc(0);
    for (int i = 0; i < n; ++i) {
        S zm(1);
        for (int t = 0; t < m; ++t) zm *= rs[i];
        for (int j = 0; j < n; ++j)
            if (j != i) acc += zm / (rs[i] - rs[j]);
    }
    return acc;
}

/// The same pair sum through its closed form: 0 for m = 0,
/// n(n-1)/2 for m = 1, and for m >= 2 a combination of monomial
/// symmetric polynomials with at most two parts.
template <class S>
S bethe_sum_closed(const RootSet<S>& rs, int m) {
    if (m < 0) throw std::invalid_argument("negative index");
    const int n = rs.n();
    if (m == 0) return S(0);
    if (m == 1) return S(n) * S(n - 1) / S(2);
    S acc = S(n - 1) * monomial(rs, Partition2(m - 1, 0));
    for (int p = 1; 2 * p <= m - 1; ++p) acc += monomial(rs, Partition2(m - 1 - p, p));
    return acc;
}

/// Pair sum with both routes evaluated and cross-checked; the exact tower
/// demands equality, the double tower a small relative agreement.
template <class S>
S bethe_sum(const RootSet<S>& rs, int m) {
    const S direct = bethe_sum_direct(rs, m);
    const S closed = bethe_sum_closed(rs, m);
    if constexpr (is_exact_scalar_v<S>) {
        if (direct != closed) throw std::logic_error("pair sum routes disagree");
    } else {
        const S scale = std::max(S(1), std::max(scalar_abs(direct), scalar_abs(closed)));
        if (scalar_abs(direct - closed) > S(1e-6) * scale)
            throw std::logic_error("pair sum routes disagree beyond float tolerance");
    }
    return closed;
}

}  // namespace qes

#endif  // QES_SYMFUNC_HPP
