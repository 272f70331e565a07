#ifndef QES_ROOTSET_HPP
#define QES_ROOTSET_HPP

// Ordered sets of distinct real roots and two-part exponent partitions.
// A RootSet with n == 0 encodes the constant solution y = 1.

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qes/poly.hpp"
#include "qes/scalar.hpp"

namespace qes {

// Double-tower distinctness: the smallest pairwise gap must exceed
// kRootGapRelTol * (1 + max |z_i|). The exact tower requires strict
// inequality only.
inline constexpr double kRootGapRelTol = 1e-10;

template <class Scalar>
class RootSet {
  public:
    RootSet() = default;

    /// Sorts the given roots ascending and rejects repeated ones.
    explicit RootSet(std::vector<Scalar> roots) : roots_(std::move(roots)) {
        std::sort(roots_.begin(), roots_.end());
        if constexpr (is_exact_scalar_v<Scalar>) {
            for (std::size_t i = 1; i < roots_.size(); ++i)
                if (roots_[i - 1] == roots_[i]) throw std::invalid_argument("repeated roots");
        } else {
            Scalar max_abs(0);
            for (const auto& z : roots_) max_abs = std::max(max_abs, scalar_abs(z));
            const Scalar gap_bound = Scalar(kRootGapRelTol) * (Scalar(1) + max_abs);
            for (std::size_t i = 1; i < roots_.size(); ++i)
                if (!(roots_[i] - roots_[i - 1] > gap_bound))
                    throw std::invalid_argument("repeated or nearly coincident roots");
        }
    }

    int n() const { return static_cast<int>(roots_.size()); }
    const std::vector<Scalar>& roots() const { return roots_; }
    const Scalar& operator[](int i) const { return roots_[static_cast<std::size_t>(i)]; }

    auto begin() const { return roots_.begin(); }
    auto end() const { return roots_.end(); }

    friend bool operator==(const RootSet& a, const RootSet& b) { return a.roots_ == b.roots_; }

  private:
    std::vector<Scalar> roots_;
};

/// Monic polynomial with exactly the given roots, prod_i (z - z_i);
/// the empty set yields 1.
template <class S>
Poly<S> monic_from_roots(const RootSet<S>& rs) {
    Poly<S> y(S(1));
    for (const auto& z : rs) y = y * Poly<S>::from_coeffs({-z, S(1)});
    return y;
}

/// Exponent partition with at most two nonzero parts, p >= q >= 0.
/// (0,0) is the empty partition whose monomial symmetric polynomial is 1.
struct Partition2 {
    int p = 0;
    int q = 0;

    Partition2(int p_, int q_) : p(p_), q(q_) {
        if (q < 0 || p < q) throw std::invalid_argument("partition parts must satisfy p >= q >= 0");
    }
};

}  // namespace qes

#endif  // QES_ROOTSET_HPP
