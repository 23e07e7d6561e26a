#pragma once

// Exact rational scalars backed by GMP.
//
// A Rational is always canonical: gcd(|num|, den) == 1, den >= 1 and zero is
// 0/1. Nothing here ever rounds.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace eulerid {

using Integer = mpz_class;

/// Raised when an operation is called outside its documented domain.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Rational {
 public:
  Rational() = default;
  Rational(int v) : value_(v) {}
  Rational(long v) : value_(v) {}
  Rational(long long v) : value_(Integer(std::to_string(v))) {}
  Rational(unsigned v) : value_(v) {}
  Rational(unsigned long v) : value_(v) {}
  Rational(const Integer& v) : value_(v) {}
  Rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
  }
  Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

  /// Parses "num" or "num/den" (optional leading sign on num).
  static Rational parse(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = s.find('/');
    auto check_int = [&](const std::string& part) {
      std::size_t i = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
      if (i == part.size()) throw std::invalid_argument("malformed rational literal: " + s);
      for (; i < part.size(); ++i)
        if (part[i] < '0' || part[i] > '9') throw std::invalid_argument("malformed rational literal: " + s);
    };
    auto to_int = [](std::string part) {
      if (part[0] == '+') part.erase(0, 1);
      return Integer(part, 10);
    };
    if (slash == std::string::npos) {
      check_int(s);
      return Rational(to_int(s));
    }
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    check_int(num);
    check_int(den);
    if (den[0] == '-' || den[0] == '+') throw std::invalid_argument("malformed rational literal: " + s);
    Integer d = to_int(den);
    if (d == 0) throw std::invalid_argument("zero denominator in rational literal: " + s);
    return Rational(to_int(num), d);
  }

  Integer numerator() const { return value_.get_num(); }
  Integer denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  /// "num/den", with the denominator omitted when it is 1.
  std::string to_string() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
  }

  Rational operator-() const { return from_mpq(-value_); }
  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("rational division by zero");
    value_ /= o.value_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  Rational inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    return from_mpq(1 / value_);
  }

  /// a^e for e >= 0, with 0^0 = 1.
  Rational pow(unsigned e) const {
    Integer n, d;
    mpz_pow_ui(n.get_mpz_t(), value_.get_num_mpz_t(), e);
    mpz_pow_ui(d.get_mpz_t(), value_.get_den_mpz_t(), e);
    return Rational(n, d);
  }

  const mpq_class& raw() const { return value_; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

 private:
  static Rational from_mpq(const mpq_class& q) {
    Rational r;
    r.value_ = q;
    return r;
  }
  mpq_class value_{0};
};

inline Integer factorial(unsigned n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline Integer ipow(const Integer& base, unsigned e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

/// (-1)^e for any integer exponent.
inline int sign_power(long long e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace eulerid
