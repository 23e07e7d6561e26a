#pragma once

// JSON serialization of the exact value types.
//
//   Rational          "num/den" (denominator omitted when 1)
//   CyclotomicNumber  {"order": m, "coeffs": [rational strings]}
//   Polynomial        [coefficient, ...], index = degree
//   Character         {"modulus": d, "index": i, "conductor": f, "values": [cyclotomic]}
//
// Every to_json has a matching from_json so emitted documents re-parse into
// equal values.

#include <json.hpp>

#include <string>
#include <vector>

#include "eulerid/cyclotomic.hpp"
#include "eulerid/dirichlet.hpp"
#include "eulerid/polynomial.hpp"
#include "eulerid/rational.hpp"
#include "eulerid/series.hpp"

namespace eulerid {

using Json = nlohmann::ordered_json;

inline void to_json(Json& j, const Rational& r) { j = r.to_string(); }
inline void from_json(const Json& j, Rational& r) { r = Rational::parse(j.get<std::string>()); }

inline void to_json(Json& j, const CyclotomicNumber& z) {
  j = Json::object();
  j["order"] = z.order();
  j["coeffs"] = z.coeffs();
}
inline void from_json(const Json& j, CyclotomicNumber& z) {
  const auto order = j.at("order").get<unsigned>();
  auto coeffs = j.at("coeffs").get<std::vector<Rational>>();
  if (coeffs.size() != cyclotomic_polynomial(order).coeffs().size() - 1)
    throw std::invalid_argument("cyclotomic coefficient vector has the wrong length for its order");
  z = CyclotomicNumber(order, std::move(coeffs));
}

template <class S>
void to_json(Json& j, const Polynomial<S>& p) {
  j = Json::array();
  for (const auto& c : p.coeffs()) j.push_back(c);
}
template <class S>
void from_json(const Json& j, Polynomial<S>& p) {
  p = Polynomial<S>(j.get<std::vector<S>>());
}

template <class S>
void to_json(Json& j, const TruncatedSeries<S>& s) {
  j = Json::object();
  j["order"] = s.order();
  j["coeffs"] = s.coeffs();
}
template <class S>
void from_json(const Json& j, TruncatedSeries<S>& s) {
  s = TruncatedSeries<S>(j.at("coeffs").get<std::vector<S>>());
}

inline void to_json(Json& j, const DirichletCharacter& chi) {
  j = Json::object();
  j["modulus"] = chi.modulus();
  j["index"] = chi.index();
  j["conductor"] = chi.conductor();
  j["parity"] = chi.parity();
  j["values"] = chi.values();
}

/// Rebuilds the character from (modulus, index) and checks the stored values agree.
inline DirichletCharacter character_from_json(const Json& j) {
  DirichletCharacter chi = character_at(j.at("modulus").get<unsigned>(), j.at("index").get<unsigned>());
  if (j.contains("values") && j.at("values").get<std::vector<CyclotomicNumber>>() != chi.values())
    throw std::invalid_argument("character values do not match the enumerated character");
  return chi;
}

}  // namespace eulerid
