#pragma once

// Dirichlet characters modulo d with exact values in Q(zeta_m).
//
// The unit group (Z/dZ)^* is decomposed over a fixed basis: prime-power
// factors in ascending order, the smallest primitive root for odd prime
// powers, 3 for modulus 4, and {-1, 5} for 2^a with a >= 3. Characters are
// indexed by their exponent vector on that basis (mixed radix, first
// generator most significant), so index 0 is always the principal character
// and enumeration order is stable.

#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "eulerid/cyclotomic.hpp"

namespace eulerid {

struct PrimePower {
  unsigned prime;
  unsigned exponent;
  unsigned value;
};

/// Trial-division factorization, ascending primes.
inline std::vector<PrimePower> factorize(unsigned n) {
  std::vector<PrimePower> out;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    PrimePower pp{p, 0, 1};
    while (n % p == 0) {
      n /= p;
      ++pp.exponent;
      pp.value *= p;
    }
    out.push_back(pp);
  }
  if (n > 1) out.push_back({n, 1, n});
  return out;
}

inline unsigned euler_phi(unsigned n) {
  unsigned r = n;
  for (const auto& pp : factorize(n)) r = r / pp.prime * (pp.prime - 1);
  return r;
}

inline bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

inline unsigned mod_pow(std::uint64_t base, std::uint64_t e, unsigned m) {
  std::uint64_t r = 1 % m;
  base %= m;
  while (e) {
    if (e & 1) r = r * base % m;
    base = base * base % m;
    e >>= 1;
  }
  return static_cast<unsigned>(r);
}

/// Multiplicative order of a unit a modulo m.
inline unsigned multiplicative_order(unsigned a, unsigned m) {
  if (m == 1) return 1;
  if (std::gcd(a, m) != 1) throw PreconditionError("multiplicative_order: not a unit");
  unsigned k = 1;
  std::uint64_t x = a % m;
  while (x != 1) {
    x = x * a % m;
    ++k;
  }
  return k;
}

struct UnitGroupBasis {
  unsigned modulus = 1;
  std::vector<unsigned> generators;
  std::vector<unsigned> orders;

  /// lcm of the generator orders (1 for the trivial group).
  unsigned exponent() const {
    unsigned e = 1;
    for (unsigned o : orders) e = std::lcm(e, o);
    return e;
  }
};

namespace detail {

// x with x = a (mod q) and x = 1 (mod r), gcd(q, r) = 1.
inline unsigned crt_lift(unsigned a, unsigned q, unsigned r) {
  for (unsigned x = a % q; x < q * r; x += q)
    if (x % r == 1 % r) return x;
  throw std::logic_error("crt_lift: moduli not coprime");
}

inline unsigned smallest_primitive_root(const PrimePower& pp) {
  const unsigned phi = pp.value / pp.prime * (pp.prime - 1);
  for (unsigned g = 2; g < pp.value; ++g)
    if (std::gcd(g, pp.value) == 1 && multiplicative_order(g, pp.value) == phi) return g;
  throw std::logic_error("no primitive root found");
}

}  // namespace detail

inline UnitGroupBasis unit_group_basis(unsigned d) {
  if (d == 0) throw PreconditionError("unit_group_basis: modulus must be positive");
  UnitGroupBasis basis{d, {}, {}};
  for (const auto& pp : factorize(d)) {
    const unsigned rest = d / pp.value;
    auto add = [&](unsigned local_gen, unsigned order) {
      basis.generators.push_back(detail::crt_lift(local_gen, pp.value, rest));
      basis.orders.push_back(order);
    };
    if (pp.prime == 2) {
      if (pp.exponent == 2) add(3, 2);
      if (pp.exponent >= 3) {
        add(pp.value - 1, 2);
        add(5, pp.value / 4);
      }
    } else {
      add(detail::smallest_primitive_root(pp), pp.value / pp.prime * (pp.prime - 1));
    }
  }
  return basis;
}

class DirichletCharacter {
 public:
  DirichletCharacter(UnitGroupBasis basis, std::vector<unsigned> exponents, unsigned index);

  unsigned modulus() const { return basis_.modulus; }
  unsigned index() const { return index_; }
  unsigned conductor() const { return conductor_; }
  /// Order m of the cyclotomic field holding the values.
  unsigned value_order() const { return value_order_; }
  const std::vector<unsigned>& exponents() const { return exponents_; }
  const std::vector<CyclotomicNumber>& values() const { return values_; }
  const UnitGroupBasis& basis() const { return basis_; }

  bool is_principal() const {
    for (unsigned e : exponents_)
      if (e) return false;
    return true;
  }
  bool is_primitive() const { return conductor_ == modulus(); }
  /// chi(-1) as +1 or -1.
  int parity() const { return values_[(modulus() - 1) % modulus()].to_rational().sign(); }

  /// chi(n mod d) for any integer n.
  const CyclotomicNumber& operator()(long long n) const {
    const auto d = static_cast<long long>(modulus());
    long long r = n % d;
    if (r < 0) r += d;
    return values_[static_cast<std::size_t>(r)];
  }

  friend bool operator==(const DirichletCharacter& a, const DirichletCharacter& b) {
    return a.modulus() == b.modulus() && a.values_ == b.values_;
  }

 private:
  unsigned compute_conductor() const;

  UnitGroupBasis basis_;
  std::vector<unsigned> exponents_;
  unsigned index_;
  unsigned value_order_;
  std::vector<CyclotomicNumber> values_;
  unsigned conductor_ = 1;
};

/// Exponent vectors of every unit on the basis (discrete logarithms), keyed by residue.
inline std::map<unsigned, std::vector<unsigned>> discrete_logs(const UnitGroupBasis& basis) {
  const unsigned d = basis.modulus;
  unsigned count = 1;
  for (unsigned o : basis.orders) count *= o;
  std::map<unsigned, std::vector<unsigned>> logs;
  for (unsigned index = 0; index < count; ++index) {
    std::vector<unsigned> e(basis.orders.size());
    std::uint64_t a = 1 % d;
    unsigned rest = index;
    for (std::size_t i = e.size(); i-- > 0;) {
      e[i] = rest % basis.orders[i];
      rest /= basis.orders[i];
      a = a * mod_pow(basis.generators[i], e[i], d) % d;
    }
    logs.emplace(static_cast<unsigned>(a), std::move(e));
  }
  return logs;
}

inline DirichletCharacter::DirichletCharacter(UnitGroupBasis basis, std::vector<unsigned> exponents, unsigned index)
    : basis_(std::move(basis)), exponents_(std::move(exponents)), index_(index), value_order_(basis_.exponent()) {
  if (exponents_.size() != basis_.generators.size()) throw PreconditionError("exponent vector does not match basis");
  const unsigned d = basis_.modulus;
  const auto logs = discrete_logs(basis_);
  values_.assign(d, CyclotomicNumber::rational(value_order_, Rational(0)));
  for (const auto& [unit, log] : logs) {
    // chi(prod g_i^{k_i}) = zeta_m^{sum e_i k_i m / ord_i}
    std::uint64_t power = 0;
    for (std::size_t i = 0; i < log.size(); ++i)
      power += static_cast<std::uint64_t>(exponents_[i]) * log[i] * (value_order_ / basis_.orders[i]);
    values_[unit] = CyclotomicNumber::root_of_unity(value_order_, static_cast<long long>(power % value_order_));
  }
  conductor_ = compute_conductor();
}

inline unsigned DirichletCharacter::compute_conductor() const {
  const unsigned d = modulus();
  const CyclotomicNumber one = CyclotomicNumber::rational(value_order_, Rational(1));
  for (unsigned f = 1; f <= d; ++f) {
    if (d % f) continue;
    bool trivial_on_kernel = true;
    for (unsigned a = 1 % f; a < d && trivial_on_kernel; a += f)
      if (std::gcd(a, d) == 1 && !(values_[a] == one)) trivial_on_kernel = false;
    if (trivial_on_kernel) return f;
  }
  return d;
}

/// All phi(d) characters modulo d, ordered by index.
inline std::vector<DirichletCharacter> enumerate_characters(unsigned d) {
  const UnitGroupBasis basis = unit_group_basis(d);
  unsigned count = 1;
  for (unsigned o : basis.orders) count *= o;
  std::vector<DirichletCharacter> out;
  out.reserve(count);
  for (unsigned index = 0; index < count; ++index) {
    std::vector<unsigned> e(basis.orders.size());
    unsigned rest = index;
    for (std::size_t i = e.size(); i-- > 0;) {
      e[i] = rest % basis.orders[i];
      rest /= basis.orders[i];
    }
    out.emplace_back(basis, std::move(e), index);
  }
  return out;
}

/// chi(n), extended to all integers by periodicity; zero off the units.
inline CyclotomicNumber char_eval(const DirichletCharacter& chi, long long n) { return chi(n); }

inline unsigned conductor(const DirichletCharacter& chi) { return chi.conductor(); }

/// Character of the given modulus and index; throws PreconditionError when out of range.
inline DirichletCharacter character_at(unsigned d, unsigned index) {
  auto all = enumerate_characters(d);
  if (index >= all.size()) throw PreconditionError("character index out of range for modulus");
  return all[index];
}

}  // namespace eulerid
