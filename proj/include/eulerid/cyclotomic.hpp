#pragma once

// Elements of the cyclotomic field Q(zeta_m), stored as coefficient vectors
// reduced modulo the m-th cyclotomic polynomial. Reduction is eager, so the
// coefficient vector always has length phi(m) and equality within one order
// is a coefficient comparison. Operands of different orders are first
// embedded into Q(zeta_lcm).

#include <map>
#include <mutex>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "eulerid/polynomial.hpp"
#include "eulerid/rational.hpp"

namespace eulerid {

namespace detail {

inline int mobius(unsigned n) {
  int result = 1;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

inline RationalPolynomial x_pow_minus_one(unsigned k) {
  return RationalPolynomial::monomial(Rational(1), k) - RationalPolynomial(Rational(1));
}

inline RationalPolynomial compute_cyclotomic(unsigned m) {
  // Phi_m = prod_{d | m} (x^d - 1)^{mu(m/d)}
  RationalPolynomial num(Rational(1)), den(Rational(1));
  for (unsigned d = 1; d <= m; ++d) {
    if (m % d) continue;
    int mu = mobius(m / d);
    if (mu == 1) num *= x_pow_minus_one(d);
    if (mu == -1) den *= x_pow_minus_one(d);
  }
  auto [q, r] = divmod(num, den);
  if (!r.is_zero()) throw std::logic_error("cyclotomic product did not divide exactly");
  return q;
}

}  // namespace detail

/// The m-th cyclotomic polynomial, memoized. Integer coefficients, degree phi(m).
inline const RationalPolynomial& cyclotomic_polynomial(unsigned m) {
  if (m == 0) throw PreconditionError("cyclotomic_polynomial: order must be positive");
  static std::mutex mutex;
  static std::map<unsigned, RationalPolynomial> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(m); it != cache.end()) return it->second;
  }
  RationalPolynomial phi = detail::compute_cyclotomic(m);
  std::lock_guard lock(mutex);
  // std::map never relocates nodes; a concurrent duplicate insert is a no-op.
  return cache.emplace(m, std::move(phi)).first->second;
}

class CyclotomicNumber {
 public:
  /// Zero, viewed in Q = Q(zeta_1).
  CyclotomicNumber() : order_(1), coeffs_{Rational(0)} {}
  CyclotomicNumber(const Rational& r) : order_(1), coeffs_{r} {}
  CyclotomicNumber(int r) : CyclotomicNumber(Rational(r)) {}

  /// sum coeffs[i] * zeta_m^i, reduced modulo Phi_m. Any length is accepted.
  CyclotomicNumber(unsigned order, std::vector<Rational> coeffs) : order_(order) {
    if (order == 0) throw PreconditionError("cyclotomic order must be positive");
    reduce_from(RationalPolynomial(std::move(coeffs)));
  }

  /// Embedded rational r in Q(zeta_m).
  static CyclotomicNumber rational(unsigned order, const Rational& r) { return CyclotomicNumber(order, {r}); }

  /// zeta_m^k for any integer k.
  static CyclotomicNumber root_of_unity(unsigned order, long long k) {
    long long e = k % static_cast<long long>(order);
    if (e < 0) e += order;
    return CyclotomicNumber(order, RationalPolynomial::monomial(Rational(1), static_cast<std::size_t>(e)).coeffs());
  }

  unsigned order() const { return order_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (!c.is_zero()) return false;
    return true;
  }
  bool is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
      if (!coeffs_[i].is_zero()) return false;
    return true;
  }
  /// The rational value; throws when the element is not in Q.
  Rational to_rational() const {
    if (!is_rational()) throw std::domain_error("cyclotomic number is not rational");
    return coeffs_[0];
  }

  /// Image under Q(zeta_m) -> Q(zeta_target), zeta_m -> zeta_target^(target/m).
  CyclotomicNumber embed(unsigned target) const {
    if (target == order_) return *this;
    if (target % order_) throw PreconditionError("embed: target order must be a multiple of the order");
    const unsigned step = target / order_;
    std::vector<Rational> v((coeffs_.size() - 1) * step + 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i * step] = coeffs_[i];
    return CyclotomicNumber(target, std::move(v));
  }

  RationalPolynomial representative() const { return RationalPolynomial(coeffs_); }

  CyclotomicNumber operator-() const {
    CyclotomicNumber r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  friend CyclotomicNumber operator+(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    if (a.order_ != b.order_) return binary_common(a, b, [](const auto& x, const auto& y) { return x + y; });
    CyclotomicNumber r = a;
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] += b.coeffs_[i];
    return r;
  }
  friend CyclotomicNumber operator-(const CyclotomicNumber& a, const CyclotomicNumber& b) { return a + (-b); }

  friend CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    if (a.order_ != b.order_) return binary_common(a, b, [](const auto& x, const auto& y) { return x * y; });
    if (a.order_ == 1 || b.is_rational()) return a.scaled(b.coeffs_[0]);
    if (a.is_rational()) return b.scaled(a.coeffs_[0]);
    std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return CyclotomicNumber(a.order_, std::move(v));
  }

  CyclotomicNumber& operator+=(const CyclotomicNumber& o) { return *this = *this + o; }
  CyclotomicNumber& operator-=(const CyclotomicNumber& o) { return *this = *this - o; }
  CyclotomicNumber& operator*=(const CyclotomicNumber& o) { return *this = *this * o; }

  /// Multiplicative inverse via the extended Euclidean algorithm against Phi_m.
  CyclotomicNumber inverse() const;

  friend CyclotomicNumber operator/(const CyclotomicNumber& a, const CyclotomicNumber& b) { return a * b.inverse(); }

  friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    if (a.order_ == b.order_) return a.coeffs_ == b.coeffs_;
    const unsigned l = std::lcm(a.order_, b.order_);
    return a.embed(l).coeffs_ == b.embed(l).coeffs_;
  }

  /// Plain rational when the value lies in Q, otherwise "cyc(m:c0,c1,...)".
  std::string to_string() const {
    if (is_rational()) return coeffs_[0].to_string();
    std::string s = "cyc(" + std::to_string(order_) + ":";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) s += (i ? "," : "") + coeffs_[i].to_string();
    return s + ")";
  }

  friend std::ostream& operator<<(std::ostream& os, const CyclotomicNumber& z) { return os << z.to_string(); }

 private:
  CyclotomicNumber scaled(const Rational& c) const {
    CyclotomicNumber r = *this;
    for (auto& x : r.coeffs_) x *= c;
    return r;
  }

  template <class Op>
  static CyclotomicNumber binary_common(const CyclotomicNumber& a, const CyclotomicNumber& b, Op op) {
    const unsigned l = std::lcm(a.order_, b.order_);
    return op(a.embed(l), b.embed(l));
  }

  void reduce_from(const RationalPolynomial& p) {
    const RationalPolynomial& phi = cyclotomic_polynomial(order_);
    const auto width = static_cast<std::size_t>(phi.degree());
    RationalPolynomial r = p.degree() >= phi.degree() ? divmod(p, phi).second : p;
    coeffs_ = r.coeffs();
    coeffs_.resize(width);
  }

  unsigned order_;
  std::vector<Rational> coeffs_;
};

/// z^{-1} in Q(zeta_m). Throws std::domain_error for z == 0.
inline CyclotomicNumber cyc_invert(const CyclotomicNumber& z) {
  if (z.is_zero()) throw std::domain_error("cyc_invert: division by zero");
  if (z.is_rational()) return CyclotomicNumber::rational(z.order(), z.coeffs()[0].inverse());
  // Maintain s_i with s_i * z == r_i (mod Phi_m); Phi_m irreducible makes the final r a unit.
  RationalPolynomial r0 = cyclotomic_polynomial(z.order()), r1 = z.representative();
  RationalPolynomial s0, s1(Rational(1));
  while (r1.degree() > 0) {
    auto [q, r] = divmod(r0, r1);
    RationalPolynomial s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r1.is_zero()) throw std::logic_error("cyc_invert: representative shares a factor with Phi_m");
  return CyclotomicNumber(z.order(), (r1.leading().inverse() * s1).coeffs());
}

inline CyclotomicNumber CyclotomicNumber::inverse() const { return cyc_invert(*this); }

}  // namespace eulerid
