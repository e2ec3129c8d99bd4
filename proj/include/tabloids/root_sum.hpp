#pragma once

#include <cmath>
#include <complex>
#include <numeric>
#include <string>
#include <vector>

#include "tabloids/common.hpp"

namespace tabloids {

// Multiplicative order of zeta_l^j for a primitive l-th root of unity
// zeta_l (equivalently, of the j-th power of any element of order l).
inline int power_order(int l, long long j) {
  if (l <= 0) fail(Errc::non_positive_part, "order must be positive");
  long long r = ((j % l) + l) % l;
  return l / static_cast<int>(std::gcd(static_cast<long long>(l), r));
}

// A sum of l-th roots of unity with nonnegative integer multiplicities:
// coeffs[e] counts occurrences of zeta_l^e. No cyclotomic reduction is
// performed; values live in the free module over exponents mod l, which
// keeps every comparison in this library exact.
class RootSum {
 public:
  explicit RootSum(int order)
      : order_(order), coeffs_(static_cast<std::size_t>(order), 0) {
    if (order <= 0) fail(Errc::non_positive_part, "order must be positive");
  }

  RootSum(int order, std::vector<Count> coeffs)
      : order_(order), coeffs_(std::move(coeffs)) {
    if (order <= 0) fail(Errc::non_positive_part, "order must be positive");
    if (static_cast<int>(coeffs_.size()) != order)
      fail(Errc::length_mismatch, "coefficient vector length != order");
  }

  int order() const { return order_; }
  const std::vector<Count>& coeffs() const { return coeffs_; }
  Count coeff(int e) const { return coeffs_[static_cast<std::size_t>(e)]; }

  void add_at(int exponent, Count mult) {
    coeffs_[static_cast<std::size_t>(exponent % order_)] += mult;
  }

  friend RootSum operator+(const RootSum& a, const RootSum& b) {
    if (a.order_ != b.order_)
      fail(Errc::order_mismatch, "adding root sums of different order");
    RootSum r(a.order_);
    for (int e = 0; e < a.order_; ++e)
      r.coeffs_[static_cast<std::size_t>(e)] =
          a.coeffs_[static_cast<std::size_t>(e)] +
          b.coeffs_[static_cast<std::size_t>(e)];
    return r;
  }

  // Exponent substitution zeta^e -> zeta^(k e); multiplicities at exponents
  // with the same image add up.
  RootSum scale_exponent(long long k) const {
    RootSum r(order_);
    long long km = ((k % order_) + order_) % order_;
    for (int e = 0; e < order_; ++e)
      r.coeffs_[static_cast<std::size_t>((km * e) % order_)] +=
          coeffs_[static_cast<std::size_t>(e)];
    return r;
  }

  // Floating-point value; display only, never used in equality checks.
  std::complex<double> eval() const {
    std::complex<double> z = 0.0;
    const double step = 2.0 * M_PI / order_;
    for (int e = 0; e < order_; ++e)
      z += static_cast<double>(coeffs_[static_cast<std::size_t>(e)]) *
           std::complex<double>(std::cos(step * e), std::sin(step * e));
    return z;
  }

  friend bool operator==(const RootSum&, const RootSum&) = default;

 private:
  int order_;
  std::vector<Count> coeffs_;
};

}  // namespace tabloids
