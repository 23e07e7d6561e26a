#pragma once

// Bernoulli, Euler and Genocchi numbers and polynomials.
//
// Conventions:
//   B_n : t e^{xt} / (e^t - 1), so B_1 = -1/2.
//   E_n : 2 e^{xt} / (e^t + 1). E_n = E_n(0) is rational (E_1 = -1/2); these
//         are NOT the integer secant numbers that some libraries call Euler numbers.
//   G_n : 2t e^{xt} / (e^t + 1), G_n(x) = n E_{n-1}(x), G_0 = 0.
//
// Each family is available through a recurrence (the primary route) and
// through its generating function (the *_series helpers).

#include <cstddef>
#include <mutex>
#include <string_view>
#include <vector>

#include "eulerid/polynomial.hpp"
#include "eulerid/rational.hpp"
#include "eulerid/series.hpp"

namespace eulerid {

/// C(n, k) from a memoized Pascal triangle; 0 when k > n.
inline Integer binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  static std::mutex mutex;
  static std::vector<std::vector<Integer>> rows{{Integer(1)}};
  std::lock_guard lock(mutex);
  while (rows.size() <= n) {
    const auto& prev = rows.back();
    std::vector<Integer> row(prev.size() + 1);
    row.front() = row.back() = 1;
    for (std::size_t i = 1; i + 1 < row.size(); ++i) row[i] = prev[i - 1] + prev[i];
    rows.push_back(std::move(row));
  }
  return rows[n][k];
}

enum class SequenceKind { bernoulli, euler, genocchi };

inline std::string_view to_string(SequenceKind k) {
  switch (k) {
    case SequenceKind::bernoulli: return "bernoulli";
    case SequenceKind::euler: return "euler";
    case SequenceKind::genocchi: return "genocchi";
  }
  return "?";
}

struct SequenceTable {
  SequenceKind kind;
  std::vector<Rational> values;
};

namespace detail {

// Monotonically growing table guarded by a mutex. Entries never change once
// written, so handing out copies is safe.
template <class Next>
Rational cached_term(std::vector<Rational>& table, std::mutex& mutex, unsigned n, Next next) {
  std::lock_guard lock(mutex);
  while (table.size() <= n) table.push_back(next(table));
  return table[n];
}

}  // namespace detail

/// B_n from sum_{k=0}^{n} C(n+1, k) B_k = 0 (n >= 1), B_0 = 1.
inline Rational bernoulli_number(unsigned n) {
  static std::mutex mutex;
  static std::vector<Rational> table;
  return detail::cached_term(table, mutex, n, [](const std::vector<Rational>& b) {
    const auto m = static_cast<unsigned>(b.size());
    if (m == 0) return Rational(1);
    Rational acc;
    for (unsigned k = 0; k < m; ++k) acc += Rational(binomial(m + 1, k)) * b[k];
    return -acc / Rational(m + 1);
  });
}

/// E_n from E_n = -(1/2) sum_{k<n} C(n, k) E_k, E_0 = 1.
inline Rational euler_number(unsigned n) {
  static std::mutex mutex;
  static std::vector<Rational> table;
  return detail::cached_term(table, mutex, n, [](const std::vector<Rational>& e) {
    const auto m = static_cast<unsigned>(e.size());
    if (m == 0) return Rational(1);
    Rational acc;
    for (unsigned k = 0; k < m; ++k) acc += Rational(binomial(m, k)) * e[k];
    return -acc / Rational(2);
  });
}

/// G_n = n E_{n-1}, G_0 = 0.
inline Rational genocchi_number(unsigned n) { return n == 0 ? Rational(0) : Rational(n) * euler_number(n - 1); }

inline SequenceTable sequence_table(SequenceKind kind, unsigned max_n) {
  SequenceTable t{kind, {}};
  for (unsigned n = 0; n <= max_n; ++n) {
    switch (kind) {
      case SequenceKind::bernoulli: t.values.push_back(bernoulli_number(n)); break;
      case SequenceKind::euler: t.values.push_back(euler_number(n)); break;
      case SequenceKind::genocchi: t.values.push_back(genocchi_number(n)); break;
    }
  }
  return t;
}

namespace detail {

// sum_{k=0}^{n} C(n, k) a_k x^{n-k}
template <class Term>
RationalPolynomial appell(unsigned n, Term a) {
  std::vector<Rational> c(n + 1);
  for (unsigned k = 0; k <= n; ++k) c[n - k] = Rational(binomial(n, k)) * a(k);
  return RationalPolynomial(std::move(c));
}

}  // namespace detail

inline RationalPolynomial bernoulli_poly(unsigned n) { return detail::appell(n, bernoulli_number); }

/// Satisfies E_n(x + 1) + E_n(x) = 2 x^n.
inline RationalPolynomial euler_poly(unsigned n) { return detail::appell(n, euler_number); }

inline RationalPolynomial genocchi_poly(unsigned n) {
  if (n == 0) return {};
  return Rational(n) * euler_poly(n - 1);
}

/// (2 d^n / (n+1)) sum_{l<d} (-1)^{l-1} B_{n+1}(l/d). Requires even d >= 2.
inline Rational moment(unsigned n, unsigned d) {
  if (d < 2 || d % 2) throw PreconditionError("moment: modulus must be even and at least 2");
  const RationalPolynomial b = bernoulli_poly(n + 1);
  Rational sum;
  for (unsigned l = 0; l < d; ++l) {
    Rational term = b(Rational(static_cast<long>(l), static_cast<long>(d)));
    sum += sign_power(static_cast<long long>(l) - 1) == 1 ? term : -term;
  }
  return Rational(2) * Rational(ipow(Integer(d), n)) / Rational(n + 1) * sum;
}

// Generating-function routes. Every series is built to the requested order.

/// t / (e^t - 1)
inline RationalSeries bernoulli_series(std::size_t order) {
  const RationalSeries t = series_constant(Rational(1), order + 1).shifted_up(1).truncated(order + 1);
  const RationalSeries den = series_exp_linear(Rational(1), order + 1) - series_constant(Rational(1), order + 1);
  return series_div_cancel(t, den);
}

/// 2 / (e^t + 1)
inline RationalSeries euler_series(std::size_t order) {
  return series_div_cancel(series_constant(Rational(2), order),
                           series_exp_linear(Rational(1), order) + series_constant(Rational(1), order));
}

/// 2t / (e^t + 1)
inline RationalSeries genocchi_series(std::size_t order) {
  if (order == 0) throw PreconditionError("genocchi_series: order must be at least 1");
  if (order == 1) return RationalSeries(1);
  return euler_series(order - 1).shifted_up(1);
}

/// 2 e^{xt} / (e^t + 1) at a fixed rational x.
inline RationalSeries euler_poly_series(const Rational& x, std::size_t order) {
  return euler_series(order) * series_exp_linear(x, order);
}

}  // namespace eulerid
