#pragma once

// Parameter grids for every verifier and the certificate report built from
// them. Grids are enumerated in ascending parameter order so reports are
// byte-for-byte reproducible.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "eulerid/certificate.hpp"
#include "eulerid/fermionic.hpp"
#include "eulerid/identities.hpp"

namespace eulerid {

/// Which characters of a modulus a grid visits.
enum class CharacterSelection {
  all,           // every character modulo d
  nonprincipal,  // skip the principal character
  primitive,     // conductor == d only
};

inline std::string_view to_string(CharacterSelection s) {
  switch (s) {
    case CharacterSelection::all: return "all";
    case CharacterSelection::nonprincipal: return "nonprincipal";
    case CharacterSelection::primitive: return "primitive";
  }
  return "?";
}

inline CharacterSelection character_selection_from_string(std::string_view s) {
  if (s == "all") return CharacterSelection::all;
  if (s == "nonprincipal") return CharacterSelection::nonprincipal;
  if (s == "primitive") return CharacterSelection::primitive;
  throw std::invalid_argument("unknown character selection");
}

/// Overrides for the default grids. Unset fields use the defaults.
struct SuiteOptions {
  std::optional<unsigned> modulus;
  std::optional<unsigned> max_degree;
  std::optional<unsigned> char_index;
  std::optional<unsigned> prime;
  std::optional<unsigned> level;
  std::optional<unsigned> w1;
  std::optional<unsigned> w2;
  std::optional<Rational> x;
  CharacterSelection characters = CharacterSelection::all;
};

struct SuiteRun {
  std::string suite;
  Json grid;
  std::vector<IdentityCertificate> certificates;

  std::size_t count(Status s) const {
    return static_cast<std::size_t>(
        std::count_if(certificates.begin(), certificates.end(), [s](const auto& c) { return c.status == s; }));
  }
  bool all_passed() const { return count(Status::pass) == certificates.size(); }
};

struct Report {
  std::string suite;
  std::vector<SuiteRun> runs;

  std::size_t count(Status s) const {
    std::size_t n = 0;
    for (const auto& r : runs) n += r.count(s);
    return n;
  }
  std::size_t total() const {
    std::size_t n = 0;
    for (const auto& r : runs) n += r.certificates.size();
    return n;
  }
  bool all_passed() const { return count(Status::pass) == total(); }
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"oracle",   "theorem1", "theorem2", "theorem3", "theorem4",
                                              "eq17",     "theorem5", "fermionic", "shift"};
  return names;
}

/// Suites whose grids range over characters and therefore need an even modulus.
inline bool suite_uses_characters(std::string_view suite) {
  return suite == "theorem4" || suite == "eq17" || suite == "theorem5";
}

namespace detail {

inline std::vector<unsigned> range_to(unsigned max) {
  std::vector<unsigned> v;
  for (unsigned i = 0; i <= max; ++i) v.push_back(i);
  return v;
}

inline std::vector<unsigned> moduli_or(const SuiteOptions& o, std::vector<unsigned> defaults) {
  return o.modulus ? std::vector<unsigned>{*o.modulus} : defaults;
}

inline std::vector<DirichletCharacter> select_characters(unsigned d, const SuiteOptions& o) {
  std::vector<DirichletCharacter> out;
  for (auto& chi : enumerate_characters(d)) {
    if (o.char_index && chi.index() != *o.char_index) continue;
    if (o.characters == CharacterSelection::nonprincipal && chi.is_principal()) continue;
    if (o.characters == CharacterSelection::primitive && !chi.is_primitive()) continue;
    out.push_back(std::move(chi));
  }
  return out;
}

inline Json character_grid(const std::vector<unsigned>& moduli, const SuiteOptions& o) {
  Json g{{"moduli", moduli}, {"characters", to_string(o.characters)}};
  if (o.char_index) g["char_index"] = *o.char_index;
  return g;
}

}  // namespace detail

inline SuiteRun run_suite(std::string_view suite, const SuiteOptions& o = {}) {
  SuiteRun run{std::string(suite), Json::object(), {}};
  auto& out = run.certificates;
  if (suite == "oracle") {
    const unsigned max_n = o.max_degree.value_or(40);
    run.grid = Json{{"kinds", {"bernoulli", "euler", "genocchi"}}, {"max_n", max_n}};
    for (auto kind : {SequenceKind::bernoulli, SequenceKind::euler, SequenceKind::genocchi})
      out.push_back(verify_generating_function_oracle(kind, max_n));
  } else if (suite == "theorem1" || suite == "theorem2" || suite == "theorem3") {
    const bool third = suite == "theorem3";
    const auto moduli = detail::moduli_or(o, third ? std::vector<unsigned>{2, 4, 6, 8} : std::vector<unsigned>{2, 4, 6, 8, 10});
    const unsigned max_n = o.max_degree.value_or(third ? 15 : 20);
    run.grid = Json{{"moduli", moduli}, {"max_n", max_n}};
    for (unsigned d : moduli)
      for (unsigned n = 0; n <= max_n; ++n)
        out.push_back(suite == "theorem1" ? verify_theorem1(d, n)
                      : third             ? verify_theorem3(d, n)
                                          : verify_theorem2(d, n));
    if (suite == "theorem1" && moduli.size() > 1)
      for (unsigned n = 0; n <= max_n; ++n) out.push_back(verify_moment_independence(moduli, n));
  } else if (suite == "theorem4") {
    const auto moduli = detail::moduli_or(o, {4, 8, 12});
    const unsigned max_n = o.max_degree.value_or(10);
    run.grid = detail::character_grid(moduli, o);
    run.grid["max_n"] = max_n;
    for (unsigned d : moduli)
      for (const auto& chi : detail::select_characters(d, o))
        for (unsigned n = 0; n <= max_n; ++n) out.push_back(verify_theorem4(chi, n));
  } else if (suite == "eq17") {
    const auto moduli = detail::moduli_or(o, {4, 8});
    const unsigned max_k = o.max_degree.value_or(8);
    const unsigned max_shift = o.level.value_or(3);
    run.grid = detail::character_grid(moduli, o);
    run.grid["n"] = Json{{"min", 1}, {"max", max_shift}};
    run.grid["max_k"] = max_k;
    for (unsigned d : moduli)
      for (const auto& chi : detail::select_characters(d, o))
        for (unsigned n = 1; n <= max_shift; ++n)
          for (unsigned k = 0; k <= max_k; ++k) out.push_back(verify_eq17(chi, n, k));
  } else if (suite == "theorem5") {
    const auto moduli = detail::moduli_or(o, {4, 8});
    const unsigned max_n = o.max_degree.value_or(8);
    const auto w1s = o.w1 ? std::vector<unsigned>{*o.w1} : std::vector<unsigned>{1, 2, 3};
    const auto w2s = o.w2 ? std::vector<unsigned>{*o.w2} : std::vector<unsigned>{1, 2, 3};
    const auto xs = o.x ? std::vector<Rational>{*o.x} : std::vector<Rational>{Rational(0), Rational(1, 2)};
    run.grid = detail::character_grid(moduli, o);
    run.grid["w1"] = w1s;
    run.grid["w2"] = w2s;
    run.grid["x"] = xs;
    run.grid["max_N"] = max_n;
    for (unsigned d : moduli)
      for (const auto& chi : detail::select_characters(d, o))
        for (unsigned w1 : w1s)
          for (unsigned w2 : w2s)
            for (const auto& x : xs) {
              out.push_back(verify_k_symmetry(chi, w1, w2, x, max_n + 2));
              for (unsigned n = 0; n <= max_n; ++n) out.push_back(verify_theorem5(chi, w1, w2, n, x));
            }
  } else if (suite == "fermionic") {
    const auto primes = o.prime ? std::vector<unsigned>{*o.prime} : std::vector<unsigned>{3, 5, 7};
    const unsigned max_n = o.max_degree.value_or(8);
    const unsigned max_level = o.level.value_or(5);
    run.grid = Json{{"primes", primes}, {"max_n", max_n}, {"max_level", max_level}};
    for (unsigned p : primes)
      for (unsigned n = 0; n <= max_n; ++n) out.push_back(verify_convergence(p, n, max_level));
  } else if (suite == "shift") {
    const unsigned max_shift = o.level.value_or(10);
    const unsigned max_k = o.max_degree.value_or(8);
    run.grid = Json{{"n_shift", Json{{"min", 1}, {"max", max_shift}}}, {"max_k", max_k}};
    for (unsigned s = 1; s <= max_shift; ++s)
      for (unsigned k = 0; k <= max_k; ++k) out.push_back(verify_shift_equation(s, k));
  } else {
    throw std::invalid_argument("unknown suite: " + std::string(suite));
  }
  return run;
}

/// "all" expands to every suite in suite_names() order.
inline Report run_report(std::string_view suite, const SuiteOptions& o = {}) {
  Report report{std::string(suite), {}};
  if (suite == "all") {
    for (const auto& name : suite_names()) report.runs.push_back(run_suite(name, o));
  } else {
    report.runs.push_back(run_suite(suite, o));
  }
  return report;
}

inline Json summary_json(std::size_t total, std::size_t passed, std::size_t failed, std::size_t errors) {
  return Json{{"total", total}, {"passed", passed}, {"failed", failed}, {"errors", errors},
              {"all_passed", passed == total}};
}

inline void to_json(Json& j, const SuiteRun& r) {
  j = Json::object();
  j["suite"] = r.suite;
  j["grid"] = r.grid;
  j["summary"] = summary_json(r.certificates.size(), r.count(Status::pass), r.count(Status::fail), r.count(Status::error));
  j["certificates"] = r.certificates;
}
inline void from_json(const Json& j, SuiteRun& r) {
  r.suite = j.at("suite").get<std::string>();
  r.grid = j.at("grid");
  r.certificates = j.at("certificates").get<std::vector<IdentityCertificate>>();
}

inline void to_json(Json& j, const Report& r) {
  j = Json::object();
  j["suite"] = r.suite;
  j["summary"] = summary_json(r.total(), r.count(Status::pass), r.count(Status::fail), r.count(Status::error));
  j["runs"] = r.runs;
}
inline void from_json(const Json& j, Report& r) {
  r.suite = j.at("suite").get<std::string>();
  r.runs = j.at("runs").get<std::vector<SuiteRun>>();
}

}  // namespace eulerid
