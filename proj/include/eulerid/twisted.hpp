#pragma once

// Generalized Euler and Genocchi polynomials attached to a Dirichlet
// character of even modulus d, and alternating twisted power sums.
//
//   G_{n,chi}(x) = 2 d^{n-1} sum_{l<d} (-1)^{l-1} chi(l) B_n((l + x)/d)
//   E_{n,chi}(x) = G_{n+1,chi}(x) / (n+1)
//   T_{k,chi}(n) = sum_{l=0}^{n} (-1)^{l-1} chi(l) l^k
//
// The weights are (-1)^{l-1}, not (-1)^l. With this sign E_{n,chi} is the
// negative of the usual literature normalization: for the nontrivial
// character mod 4, E_{n,chi}(0) are the negated secant numbers (-1, 0, 1, 0, -5, ...).
//
// For the principal character the generating function
// 2 sum (-1)^{l-1} chi(l) e^{(l+x)t} / (e^{dt} - 1) has a simple pole at
// t = 0, so gen_euler_series throws PoleError and G_{0,chi} = 2 phi(d) / d.

#include <cstddef>
#include <string>
#include <utility>

#include "eulerid/classical.hpp"
#include "eulerid/cyclotomic.hpp"
#include "eulerid/dirichlet.hpp"
#include "eulerid/polynomial.hpp"
#include "eulerid/series.hpp"

namespace eulerid {

using CyclotomicPolynomial = Polynomial<CyclotomicNumber>;
using CyclotomicSeries = TruncatedSeries<CyclotomicNumber>;

struct TwistedPolynomial {
  unsigned degree;
  unsigned modulus;
  unsigned char_index;
  CyclotomicPolynomial poly;
};

inline void require_even_modulus(const DirichletCharacter& chi, const char* what) {
  if (chi.modulus() % 2) throw PreconditionError(std::string(what) + ": character modulus must be even");
}

/// (-1)^{l-1} chi(l)
inline CyclotomicNumber alternating_weight(const DirichletCharacter& chi, long long l) {
  const CyclotomicNumber& v = chi(l);
  return (l % 2 != 0) ? v : -v;
}

inline TwistedPolynomial gen_genocchi_poly(unsigned n, const DirichletCharacter& chi) {
  require_even_modulus(chi, "gen_genocchi_poly");
  const unsigned d = chi.modulus();
  const RationalPolynomial b = bernoulli_poly(n);
  const Rational inv_d(1L, static_cast<long>(d));
  CyclotomicPolynomial sum;
  for (unsigned l = 0; l < d; ++l) {
    const CyclotomicNumber w = alternating_weight(chi, l);
    if (w.is_zero()) continue;
    sum += w * lift<CyclotomicNumber>(compose_affine(b, Rational(static_cast<long>(l)) * inv_d, inv_d));
  }
  // 2 d^{n-1}
  const Rational scale = Rational(2) * Rational(ipow(Integer(d), n)) * inv_d;
  return {n, d, chi.index(), CyclotomicNumber(scale) * sum};
}

inline TwistedPolynomial gen_euler_poly(unsigned n, const DirichletCharacter& chi) {
  require_even_modulus(chi, "gen_euler_poly");
  TwistedPolynomial g = gen_genocchi_poly(n + 1, chi);
  return {n, g.modulus, g.char_index, CyclotomicNumber(Rational(1L, static_cast<long>(n + 1))) * g.poly};
}

/// T_{k,chi}(n) with 0^0 = 1.
inline CyclotomicNumber twisted_power_sum(unsigned k, const DirichletCharacter& chi, unsigned long long n) {
  CyclotomicNumber sum = CyclotomicNumber::rational(chi.value_order(), Rational(0));
  for (unsigned long long l = 0; l <= n; ++l) {
    const CyclotomicNumber w = alternating_weight(chi, static_cast<long long>(l));
    if (w.is_zero()) continue;
    sum += w * CyclotomicNumber(Rational(ipow(Integer(std::to_string(l)), k)));
  }
  return sum;
}

// Generating-function routes.

/// sum_{a<d} (-1)^{a-1} chi(a) e^{w a t}
inline CyclotomicSeries alternating_character_exp(const DirichletCharacter& chi, const Rational& w, std::size_t order) {
  CyclotomicSeries sum(order);
  for (unsigned a = 0; a < chi.modulus(); ++a) {
    const CyclotomicNumber c = alternating_weight(chi, a);
    if (c.is_zero()) continue;
    sum += c * lift<CyclotomicNumber>(series_exp_linear(w * Rational(static_cast<long>(a)), order));
  }
  return sum;
}

/// e^{c t} - 1
inline CyclotomicSeries exp_minus_one(const Rational& c, std::size_t order) {
  return lift<CyclotomicNumber>(series_exp_linear(c, order) - series_constant(Rational(1), order));
}

/// 2 sum (-1)^{l-1} chi(l) e^{(l+x)t} / (e^{dt} - 1). Throws PoleError for the principal character.
inline CyclotomicSeries gen_euler_series(const DirichletCharacter& chi, const Rational& x, std::size_t order) {
  require_even_modulus(chi, "gen_euler_series");
  const std::size_t work = order + 1;
  const CyclotomicSeries num = CyclotomicNumber(2) * alternating_character_exp(chi, Rational(1), work) *
                               lift<CyclotomicNumber>(series_exp_linear(x, work));
  return series_div_cancel(num, exp_minus_one(Rational(static_cast<long>(chi.modulus())), work));
}

/// 2t sum (-1)^{l-1} chi(l) e^{(l+x)t} / (e^{dt} - 1); always a power series.
inline CyclotomicSeries gen_genocchi_series(const DirichletCharacter& chi, const Rational& x, std::size_t order) {
  require_even_modulus(chi, "gen_genocchi_series");
  const std::size_t work = order + 1;
  const CyclotomicSeries num = (CyclotomicNumber(2) * alternating_character_exp(chi, Rational(1), work) *
                                lift<CyclotomicNumber>(series_exp_linear(x, work)))
                                   .shifted_up(1)
                                   .truncated(work);
  return series_div_cancel(num, exp_minus_one(Rational(static_cast<long>(chi.modulus())), work));
}

}  // namespace eulerid
