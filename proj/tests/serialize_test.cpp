#include <random>

#include "gtest/gtest.h"

#include "eulerid/eulerid.hpp"

namespace eulerid {
namespace {

using Q = Rational;

class RoundTrip : public ::testing::Test {
 protected:
  std::mt19937 rng{20261015};
  Q random_rational() {
    std::uniform_int_distribution<long> num(-10000, 10000), den(1, 999);
    return Q(num(rng), den(rng));
  }
  CyclotomicNumber random_cyclotomic() {
    std::uniform_int_distribution<unsigned> order(1, 24);
    const unsigned m = order(rng);
    std::vector<Q> c(12);
    for (auto& x : c) x = random_rational();
    return CyclotomicNumber(m, c);
  }
};

TEST_F(RoundTrip, Rational) {
  for (int i = 0; i < 300; ++i) {
    const Q x = random_rational();
    EXPECT_EQ(Json(x).get<Q>(), x);
    EXPECT_EQ(Q::parse(Json(x).dump().substr(1, Json(x).dump().size() - 2)), x);
  }
  EXPECT_THROW(Json("1/0").get<Q>(), std::invalid_argument);
}

TEST_F(RoundTrip, Cyclotomic) {
  for (int i = 0; i < 200; ++i) {
    const auto z = random_cyclotomic();
    const auto back = Json::parse(Json(z).dump()).get<CyclotomicNumber>();
    EXPECT_EQ(back, z);
    EXPECT_EQ(Json(back).dump(), Json(z).dump());
  }
  EXPECT_THROW((Json{{"order", 4}, {"coeffs", {"1", "2", "3"}}}.get<CyclotomicNumber>()), std::exception);
}

TEST_F(RoundTrip, PolynomialAndSeries) {
  for (int i = 0; i < 100; ++i) {
    std::vector<Q> c(i % 7);
    for (auto& x : c) x = random_rational();
    const RationalPolynomial p(c);
    EXPECT_EQ(Json::parse(Json(p).dump()).get<RationalPolynomial>(), p);
    const RationalSeries s(c);
    EXPECT_EQ(Json::parse(Json(s).dump()).get<RationalSeries>().coeffs(), s.coeffs());
  }
  const CyclotomicPolynomial g = gen_genocchi_poly(4, character_at(12, 3)).poly;
  EXPECT_EQ(Json(g).get<CyclotomicPolynomial>(), g);
}

TEST(CharacterJson, RoundTrip) {
  for (unsigned d = 1; d <= 30; ++d)
    for (const auto& chi : enumerate_characters(d)) {
      const Json j = Json::parse(Json(chi).dump());
      EXPECT_EQ(character_from_json(j), chi);
      EXPECT_EQ(j["conductor"], chi.conductor());
    }
  Json bad = Json(character_at(5, 1));
  bad["values"] = Json(character_at(5, 2)).at("values");
  EXPECT_THROW(character_from_json(bad), std::invalid_argument);
}

TEST(CertificateJson, RoundTrip) {
  for (const auto& c : {verify_theorem1(4, 5), verify_theorem1(3, 1), verify_theorem5(character_at(4, 0), 1, 2, 1, Q(0)),
                        verify_theorem4(character_at(8, 2), 3)}) {
    const Json j = Json::parse(Json(c).dump());
    const auto back = j.get<IdentityCertificate>();
    EXPECT_EQ(Json(back).dump(), j.dump());
    EXPECT_EQ(back.status, c.status);
  }
}

TEST(ReportJson, RoundTripAndSummary) {
  SuiteOptions o;
  o.max_degree = 3;
  const Report r = run_report("all", o);
  const Json j = Json::parse(Json(r).dump());
  EXPECT_EQ(j["summary"]["total"], r.total());
  EXPECT_EQ(j["summary"]["passed"].get<std::size_t>() + j["summary"]["failed"].get<std::size_t>() +
                j["summary"]["errors"].get<std::size_t>(),
            r.total());
  const auto back = j.get<Report>();
  EXPECT_EQ(Json(back).dump(), j.dump());
  EXPECT_EQ(back.runs.size(), suite_names().size());
}

TEST(ReportJson, NonprincipalSelectionPasses) {
  SuiteOptions o;
  o.max_degree = 4;
  o.characters = CharacterSelection::nonprincipal;
  EXPECT_TRUE(run_report("theorem5", o).all_passed());
  EXPECT_THROW(run_report("nonsense"), std::invalid_argument);
}

}  // namespace
}  // namespace eulerid
