#include <doctest.h>

#include "extprob/fixtures.hpp"
#include "extprob/nps_bridge.hpp"
#include "support/gen.hpp"

using namespace extprob;

namespace {
Rational q(const char* s) { return parse_rational(s); }
StdMeasure m(std::initializer_list<const char*> xs) {
  StdMeasure out;
  for (const char* x : xs) out.mass.push_back(q(x));
  return out;
}
Event ev(std::initializer_list<std::size_t> xs) { return Event::from_indices(xs); }
const NonstdNumber e = NonstdNumber::eps();
const NonstdNumber half = NonstdNumber(q("1/2"));
const LPS mcgee({m({"1/2", "1/2"}), m({"1", "0"})});
}  // namespace

TEST_CASE("LPS to NPS") {
  CHECK(lps_to_nps(mcgee) == NonstdMeasure{{half + e / 2, half - e / 2}});
  CHECK(lps_to_nps(LPS({m({"1/3", "2/3"})})) == NonstdMeasure{{NonstdNumber(q("1/3")), NonstdNumber(q("2/3"))}});
  CHECK(lps_to_nps(LPS({m({"1", "0"}), m({"0", "1"})})) == NonstdMeasure{{1 - e, e}});
  const LPS three({m({"1", "0", "0"}), m({"0", "1", "0"}), m({"0", "0", "1"})});
  CHECK(lps_to_nps(three) == NonstdMeasure{{1 - e - e * e, e, e * e}});
}

TEST_CASE("NPS to LPS") {
  auto d = nps_to_lps(NonstdMeasure{{half + e, half - e}});
  CHECK(d.lps == mcgee);
  CHECK(d.coefficients == std::vector<NonstdNumber>{1 - 2 * e, 2 * e});

  d = nps_to_lps(NonstdMeasure{{NonstdNumber(q("1/4")), NonstdNumber(q("3/4"))}});
  CHECK(d.lps.size() == 1);
  CHECK(d.coefficients == std::vector<NonstdNumber>{1});

  d = nps_to_lps(NonstdMeasure{{1 - e, e}});
  CHECK(d.lps == LPS({m({"1", "0"}), m({"0", "1"})}));
  CHECK(d.coefficients == std::vector<NonstdNumber>{1 - e, e});

  CHECK_THROWS_AS(nps_to_lps(NonstdMeasure{{1 + e, -e}}), Error);
}

TEST_CASE("recompose") {
  CHECK(recompose(mcgee, {1 - 2 * e, 2 * e}) == NonstdMeasure{{half + e, half - e}});
  CHECK_THROWS_AS(recompose(mcgee, {NonstdNumber(1)}), Error);
}

TEST_CASE("NPS to Popper space") {
  auto p = nps_to_popper(fixtures::mcgee_nu1());
  CHECK(p.table.size() == 3);
  CHECK(p.cond(ev({0}), ev({0, 1})) == q("1/2"));

  p = nps_to_popper(NonstdMeasure{{1 - e, e}});
  CHECK(p.cond(ev({1}), ev({0, 1})) == 0);
  CHECK(p.cond(ev({1}), ev({1})) == 1);

  p = nps_to_popper(NonstdMeasure{{NonstdNumber(q("1/4")), NonstdNumber(q("3/4"))}});
  CHECK(p == slps_to_popper(LPS({m({"1/4", "3/4"})})));
}

TEST_CASE("equivalences between nonstandard measures") {
  const auto nu1 = fixtures::mcgee_nu1(), nu2 = fixtures::mcgee_nu2();
  CHECK(nps_simeq(nu1, nu2));
  const auto c = nps_aeq(nu1, nu2);
  REQUIRE_FALSE(c.equivalent());
  REQUIRE(c.witness.has_value());
  CHECK(c.witness->first.value == std::vector<Rational>{1, 0});
  CHECK(c.witness->second.value == std::vector<Rational>{0, 1});
  CHECK(nps_expect_cmp(nu1, c.witness->first, c.witness->second) !=
        nps_expect_cmp(nu2, c.witness->first, c.witness->second));

  CHECK(nps_aeq(fixtures::approxindep_nu(1), fixtures::approxindep_nu(2)).equivalent());
  CHECK(nps_aeq(nu1, nu1).equivalent());
  CHECK(nps_simeq(nu1, nu1));

  CHECK_FALSE(nps_simeq(NonstdMeasure{{1 - e, e}}, NonstdMeasure{{NonstdNumber(1), NonstdNumber(0)}}));
}

TEST_CASE("expected-value comparison") {
  const auto nu1 = fixtures::mcgee_nu1();
  const RandomVariable x{{1, 0}};
  CHECK(nps_expect_cmp(nu1, x, RandomVariable{{0, 1}}) == std::strong_ordering::greater);
  for (const char* alpha : {"2", "3/2", "101/100"})
    CHECK(nps_expect_cmp(nu1, x, RandomVariable{{0, q(alpha)}}) == std::strong_ordering::less);
}

TEST_CASE("characterization of equivalent coefficient schedules") {
  CHECK(verify_aeqchar(mcgee, {1 - e, e}));
  CHECK(verify_aeqchar(mcgee, {1 - 2 * e, 2 * e}));
  CHECK_FALSE(verify_aeqchar(mcgee, {half, half}));
  CHECK_FALSE(verify_aeqchar(mcgee, {1 + e, -e}));
  CHECK_FALSE(verify_aeqchar(mcgee, {1 - e, 2 * e}));
  CHECK_THROWS_AS(verify_aeqchar(mcgee, {NonstdNumber(1)}), Error);
}

TEST_CASE("generated decompositions recompose exactly") {
  gen::Rng rng(5);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t n = static_cast<std::size_t>(gen::uniform(rng, 2, 4));
    const auto nu = gen::any_nps(rng, n);
    const auto d = nps_to_lps(nu);
    CHECK(recompose(d.lps, d.coefficients) == nu);
    CHECK(d.lps.size() <= n);
    CHECK(classify_lps(d.lps).support_witnesses.size() == d.lps.size());
    CHECK(nps_to_popper(nu) == nps_to_popper(recompose(d.lps, gen::power_schedule(d.lps.size()))));
  }
}
