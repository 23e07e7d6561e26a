#pragma once

// Finite levels of the fermionic invariant integral on Z_p:
//
//   I_N(f) = sum_{0 <= j < p^N} (-1)^j f(j)
//
// and, over X = lim Z/dp^N Z, the character-twisted version summed over
// 0 <= j < d p^N with chi extended by periodicity. The limit itself is never
// taken; instead finite levels are compared with the independently computed
// E_n under an explicit p-adic valuation bound.

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "eulerid/certificate.hpp"
#include "eulerid/classical.hpp"
#include "eulerid/dirichlet.hpp"
#include "eulerid/twisted.hpp"

namespace eulerid {

/// v_p of a rational; std::nullopt stands for +infinity (q == 0).
using Valuation = std::optional<long>;

inline std::string to_string(const Valuation& v) { return v ? std::to_string(*v) : std::string("inf"); }

inline Valuation padic_valuation(const Rational& q, unsigned p) {
  if (!is_prime(p)) throw PreconditionError("padic_valuation: p must be prime");
  if (q.is_zero()) return std::nullopt;
  const Integer prime(p);
  auto v = [&](Integer n) {
    long k = 0;
    if (n < 0) n = -n;
    while (n % prime == 0) {
      n /= prime;
      ++k;
    }
    return k;
  };
  return v(q.numerator()) - v(q.denominator());
}

/// Integrand x^n, optionally twisted by a character: chi(x) x^n.
struct PartialSumSpec {
  unsigned degree = 0;
  std::optional<DirichletCharacter> character;
  unsigned prime = 3;
  unsigned level = 1;
};

inline void require_odd_prime(unsigned p) {
  if (p % 2 == 0 || !is_prime(p)) throw PreconditionError("p must be an odd prime");
}

inline unsigned long long checked_power(unsigned p, unsigned level) {
  unsigned long long r = 1;
  for (unsigned i = 0; i < level; ++i) {
    if (r > std::numeric_limits<unsigned long long>::max() / p) throw PreconditionError("level too large");
    r *= p;
  }
  return r;
}

/// sum_{0 <= j < p^N} (-1)^j j^n, with 0^0 = 1.
inline Rational partial_sum(unsigned p, unsigned level, unsigned n) {
  require_odd_prime(p);
  if (level < 1) throw PreconditionError("partial_sum: level must be at least 1");
  const unsigned long long bound = checked_power(p, level);
  Integer acc = 0;
  Integer j = 0;
  for (unsigned long long i = 0; i < bound; ++i, ++j) {
    if (i % 2) acc -= ipow(j, n);
    else acc += ipow(j, n);
  }
  return Rational(acc);
}

/// Either integrand; rational results are embedded in the character's field.
inline CyclotomicNumber partial_sum(const PartialSumSpec& spec) {
  if (!spec.character) return partial_sum(spec.prime, spec.level, spec.degree);
  require_odd_prime(spec.prime);
  if (spec.level < 1) throw PreconditionError("partial_sum: level must be at least 1");
  const DirichletCharacter& chi = *spec.character;
  const unsigned long long bound = chi.modulus() * checked_power(spec.prime, spec.level);
  CyclotomicNumber acc = CyclotomicNumber::rational(chi.value_order(), Rational(0));
  for (unsigned long long j = 0; j < bound; ++j) {
    const CyclotomicNumber& v = chi(static_cast<long long>(j % chi.modulus()));
    if (v.is_zero()) continue;
    const CyclotomicNumber term = v * CyclotomicNumber(Rational(ipow(Integer(std::to_string(j)), spec.degree)));
    acc += (j % 2) ? -term : term;
  }
  return acc;
}

struct ValuationRow {
  unsigned prime;
  unsigned degree;
  unsigned level;
  Rational partial;
  Rational euler;
  Valuation valuation;
};

/// Rows (p, n, N) for N = 1..max_level.
inline std::vector<ValuationRow> valuation_table(unsigned p, unsigned n, unsigned max_level) {
  std::vector<ValuationRow> rows;
  const Rational e = euler_number(n);
  for (unsigned level = 1; level <= max_level; ++level) {
    const Rational s = partial_sum(p, level, n);
    rows.push_back({p, n, level, s, e, padic_valuation(s - e, p)});
  }
  return rows;
}

/// For N = 1..max_level: partial sum == (E_n(p^N) + E_n)/2 and v_p(partial sum - E_n) >= N.
inline IdentityCertificate verify_convergence(unsigned p, unsigned n, unsigned max_level) {
  Json params{{"p", p}, {"n", n}, {"max_level", max_level}};
  if (p % 2 == 0 || !is_prime(p)) return error_certificate("fermionic_convergence", params, "p must be an odd prime");
  if (max_level < 1) return error_certificate("fermionic_convergence", params, "max level must be at least 1");
  const RationalPolynomial e = euler_poly(n);
  const Rational e0 = euler_number(n);
  std::vector<Rational> sums, closed;
  Check bound{"valuation_bound", Json::array(), Json::array(), true, nullptr};
  for (const auto& row : valuation_table(p, n, max_level)) {
    sums.push_back(row.partial);
    closed.push_back((e(Rational(ipow(Integer(p), row.level))) + e0) / Rational(2));
    bound.lhs.push_back(to_string(row.valuation));
    bound.rhs.push_back(row.level);
    const bool ok = !row.valuation || *row.valuation >= static_cast<long>(row.level);
    if (!ok && bound.pass) {
      bound.pass = false;
      bound.first_mismatch = Json{{"level", row.level}};
    }
  }
  return make_certificate("fermionic_convergence", params,
                          {compare_sequences("partial_sum_closed_form", sums, closed, "level_position"), bound});
}

/// E_k(s) + (-1)^{s-1} E_k == 2 sum_{l<s} (-1)^{s-1-l} l^k, i.e. the integral
/// equation for the shift f(x) -> f(x + s) applied to f(x) = x^k.
inline IdentityCertificate verify_shift_equation(unsigned shift, unsigned k) {
  Json params{{"n_shift", shift}, {"k", k}};
  if (shift < 1) return error_certificate("shift_equation", params, "shift must be at least 1");
  const Rational e0 = euler_number(k);
  const Rational lhs = euler_poly(k)(Rational(shift)) + ((shift - 1) % 2 ? -e0 : e0);
  Rational sum;
  for (unsigned l = 0; l < shift; ++l) {
    const Rational term = Rational(l).pow(k);
    sum += ((shift - 1 - l) % 2) ? -term : term;
  }
  return make_certificate("shift_equation", params,
                          {compare_values("shifted_integrals_vs_alternating_sum", lhs, Rational(2) * sum)});
}

}  // namespace eulerid
