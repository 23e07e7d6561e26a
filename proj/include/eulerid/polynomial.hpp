#pragma once

// Dense univariate polynomials over an exact scalar ring.
//
// Scalar requirements: default construction yields zero, is_zero(), the ring
// operators and ==. Division helpers additionally need inverse().

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

#include "eulerid/rational.hpp"

namespace eulerid {

template <class S>
class Polynomial {
 public:
  using scalar_type = S;

  Polynomial() = default;
  explicit Polynomial(std::vector<S> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<S> coeffs) : coeffs_(coeffs) { trim(); }
  Polynomial(const S& constant) : coeffs_{constant} { trim(); }

  /// c * x^k
  static Polynomial monomial(const S& c, std::size_t k) {
    std::vector<S> v(k + 1);
    v[k] = c;
    return Polynomial(std::move(v));
  }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<S>& coeffs() const { return coeffs_; }

  /// Coefficient of x^k; zero past the degree.
  S coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : S{}; }
  const S& leading() const { return coeffs_.back(); }

  template <class X>
  S operator()(const X& x) const {
    S acc{};
    const S xs(x);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * xs + *it;
    return acc;
  }

  Polynomial operator-() const {
    std::vector<S> v;
    v.reserve(coeffs_.size());
    for (const auto& c : coeffs_) v.push_back(-c);
    return Polynomial(std::move(v));
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = coeffs_[i] + o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) { return *this += -o; }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<S> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] = v[i + j] + a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(v));
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend Polynomial operator*(const S& c, const Polynomial& p) {
    std::vector<S> v;
    v.reserve(p.coeffs_.size());
    for (const auto& x : p.coeffs_) v.push_back(c * x);
    return Polynomial(std::move(v));
  }
  friend Polynomial operator*(const Polynomial& p, const S& c) { return c * p; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.coeffs_.size() != b.coeffs_.size()) return false;
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      if (!(a.coeffs_[i] == b.coeffs_[i])) return false;
    return true;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  std::vector<S> coeffs_;
};

using RationalPolynomial = Polynomial<Rational>;

/// Quotient and remainder; the divisor must be nonzero with invertible leading coefficient.
template <class S>
std::pair<Polynomial<S>, Polynomial<S>> divmod(const Polynomial<S>& a, const Polynomial<S>& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<S> rem = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {Polynomial<S>{}, a};
  std::vector<S> quot(a.degree() - db + 1);
  const S lead_inv = b.leading().inverse();
  for (int k = a.degree(); k >= db; --k) {
    S c = rem[k] * lead_inv;
    quot[k - db] = c;
    if (c.is_zero()) continue;
    for (int j = 0; j <= db; ++j) rem[k - db + j] = rem[k - db + j] - c * b.coeffs()[j];
  }
  rem.resize(db);
  return {Polynomial<S>(std::move(quot)), Polynomial<S>(std::move(rem))};
}

/// p(a + b*x), expanded by Horner's rule.
template <class S>
Polynomial<S> compose_affine(const Polynomial<S>& p, const S& a, const S& b) {
  const Polynomial<S> inner({a, b});
  Polynomial<S> acc;
  for (int k = p.degree(); k >= 0; --k) acc = acc * inner + Polynomial<S>(p.coeffs()[k]);
  return acc;
}

/// Converts coefficient-wise into a wider scalar ring.
template <class T, class S>
Polynomial<T> lift(const Polynomial<S>& p) {
  std::vector<T> v;
  v.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) v.push_back(T(c));
  return Polynomial<T>(std::move(v));
}

}  // namespace eulerid
