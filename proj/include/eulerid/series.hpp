#pragma once

// Truncated formal power series sum_{n < order} c_n t^n + O(t^order).
//
// Coefficients are stored plain (not divided by n!); the factorial scaling
// is applied only by coeff_factorial. Binary operations truncate to the
// smaller of the two orders.

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "eulerid/rational.hpp"

namespace eulerid {

template <class S>
class TruncatedSeries {
 public:
  using scalar_type = S;

  TruncatedSeries() = default;
  /// Zero series of the given order.
  explicit TruncatedSeries(std::size_t order) : coeffs_(order) {}
  explicit TruncatedSeries(std::vector<S> coeffs) : coeffs_(std::move(coeffs)) {}

  std::size_t order() const { return coeffs_.size(); }
  const std::vector<S>& coeffs() const { return coeffs_; }
  const S& operator[](std::size_t n) const { return coeffs_.at(n); }
  S& operator[](std::size_t n) { return coeffs_.at(n); }

  TruncatedSeries truncated(std::size_t order) const {
    if (order > this->order()) throw std::out_of_range("cannot extend a truncated series");
    return TruncatedSeries(std::vector<S>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(order)));
  }

  /// Number of leading zero coefficients (== order() when identically zero).
  std::size_t leading_zeros() const {
    std::size_t z = 0;
    while (z < coeffs_.size() && coeffs_[z].is_zero()) ++z;
    return z;
  }

  TruncatedSeries operator-() const {
    TruncatedSeries r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<S> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = a.coeffs_[i] + b.coeffs_[i];
    return TruncatedSeries(std::move(v));
  }
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return a + (-b); }

  /// Cauchy product; order min(order(a), order(b)).
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<S> v(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; i + j < n; ++j) v[i + j] = v[i + j] + a.coeffs_[i] * b.coeffs_[j];
    }
    return TruncatedSeries(std::move(v));
  }

  friend TruncatedSeries operator*(const S& c, const TruncatedSeries& s) {
    TruncatedSeries r = s;
    for (auto& x : r.coeffs_) x = c * x;
    return r;
  }

  TruncatedSeries& operator+=(const TruncatedSeries& o) { return *this = *this + o; }
  TruncatedSeries& operator-=(const TruncatedSeries& o) { return *this = *this - o; }
  TruncatedSeries& operator*=(const TruncatedSeries& o) { return *this = *this * o; }

  /// Multiplication by t^k; the order grows by k so no information is lost.
  TruncatedSeries shifted_up(std::size_t k) const {
    std::vector<S> v(k);
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return TruncatedSeries(std::move(v));
  }

  /// Equality on the common order min(order(a), order(b)).
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    for (std::size_t i = 0; i < n; ++i)
      if (!(a.coeffs_[i] == b.coeffs_[i])) return false;
    return true;
  }

 private:
  std::vector<S> coeffs_;
};

using RationalSeries = TruncatedSeries<Rational>;

/// Error raised when a quotient of series would have a pole at t = 0.
class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Converts coefficient-wise into a wider scalar ring.
template <class T, class S>
TruncatedSeries<T> lift(const TruncatedSeries<S>& s) {
  std::vector<T> v;
  v.reserve(s.order());
  for (const auto& c : s.coeffs()) v.push_back(T(c));
  return TruncatedSeries<T>(std::move(v));
}

/// e^{c t} to the given order: coefficients c^n / n!.
template <class S>
TruncatedSeries<S> series_exp_linear(const S& c, std::size_t order) {
  if (order == 0) throw PreconditionError("series_exp_linear: order must be at least 1");
  std::vector<S> v(order);
  v[0] = S(Rational(1));
  for (std::size_t n = 1; n < order; ++n) v[n] = v[n - 1] * c * S(Rational(1, static_cast<long>(n)));
  return TruncatedSeries<S>(std::move(v));
}

/// The constant series c + O(t^order).
template <class S>
TruncatedSeries<S> series_constant(const S& c, std::size_t order) {
  TruncatedSeries<S> s(order);
  if (order > 0) s[0] = c;
  return s;
}

/// num / den where den may vanish at t = 0 to some order z. The common factor
/// t^z is stripped from both; the result has order min(order(num), order(den)) - z.
/// Throws PoleError when num vanishes to a lower order than den, and
/// std::domain_error when den is identically zero to its order.
template <class S>
TruncatedSeries<S> series_div_cancel(const TruncatedSeries<S>& num, const TruncatedSeries<S>& den) {
  const std::size_t z = den.leading_zeros();
  if (z == den.order()) throw std::domain_error("series_div_cancel: denominator is identically zero");
  const std::size_t common = std::min(num.order(), den.order());
  if (z >= common) throw std::domain_error("series_div_cancel: no coefficients left after cancellation");
  if (num.leading_zeros() < z) throw PoleError("series_div_cancel: non-cancelling pole");
  const std::size_t n = common - z;
  const S lead_inv = den[z].inverse();
  std::vector<S> q(n);
  for (std::size_t k = 0; k < n; ++k) {
    S acc = num[k + z];
    for (std::size_t j = 1; j <= k; ++j) acc = acc - den[j + z] * q[k - j];
    q[k] = acc * lead_inv;
  }
  return TruncatedSeries<S>(std::move(q));
}

/// n! * c_n. Throws std::out_of_range when n >= order(s).
template <class S>
S series_coeff_factorial(const TruncatedSeries<S>& s, std::size_t n) {
  if (n >= s.order()) throw std::out_of_range("series_coeff_factorial: index beyond truncation order");
  return S(Rational(factorial(static_cast<unsigned>(n)))) * s[n];
}

}  // namespace eulerid
