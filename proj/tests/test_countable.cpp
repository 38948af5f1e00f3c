#include <doctest.h>

#include "extprob/countable.hpp"
#include "extprob/fixtures.hpp"

using namespace extprob;

namespace {
Rational q(const char* s) { return parse_rational(s); }
FinCofEvent fin(std::vector<std::uint64_t> xs) { return FinCofEvent::finite(std::move(xs)); }
FinCofEvent cof(std::vector<std::uint64_t> xs) { return FinCofEvent::cofinite(std::move(xs)); }
const NonstdNumber e = NonstdNumber::eps();
}  // namespace

TEST_CASE("finite/cofinite events") {
  const auto a = fin({3, 1, 3});
  CHECK(a.support() == std::vector<std::uint64_t>{1, 3});
  CHECK(to_string(a) == "{1,3}");
  CHECK(to_string(cof({0})) == "N \\ {0}");
  CHECK(a.complement() == cof({1, 3}));
  CHECK((cof({1}) & cof({2})) == cof({1, 2}));
  CHECK((cof({1, 2}) & fin({2, 5})) == fin({5}));
  CHECK((fin({1}) | cof({1, 4})) == cof({4}));
  CHECK((cof({}) - fin({0})) == cof({0}));
  CHECK(fin({1}).subset_of(cof({2})));
  CHECK_FALSE(cof({2}).subset_of(fin({1})));
  CHECK(cof({}).contains(1000000));
}

TEST_CASE("closed-form conditionals") {
  for (std::uint64_t n = 1; n <= 20; ++n) CHECK(fincof_cond(CpsFamily::Mu1, fin({0}), fin({0, n})) == q("1/2"));
  CHECK(fincof_cond(CpsFamily::Mu2, fin({1, 3}), fin({1, 2, 3})) == 1);
  CHECK(fincof_cond(CpsFamily::Mu2, fin({1, 2}), fin({1, 2, 3})) == 0);
  CHECK(fincof_cond(CpsFamily::Mu1, fin({4, 9}), cof({})) == 0);
  CHECK(fincof_cond(CpsFamily::Mu1, cof({4, 9}), cof({1})) == 1);
  CHECK(fincof_cond(CpsFamily::Mu1, fin({0}), fin({0, 1, 2})) == q("1/3"));
  CHECK_THROWS_AS(fincof_cond(CpsFamily::Mu1, fin({0}), fin({})), Error);
}

TEST_CASE("nonstandard values") {
  CHECK(fincof_nps_value(NpsFamily::Nu1, fin({3, 7})) == 2 * e);
  CHECK(fincof_nps_value(NpsFamily::Nu1, cof({3, 7})) == 1 - 2 * e);
  CHECK(fincof_nps_value(NpsFamily::Nu4, fin({1})) == NonstdNumber(q("1/2")) + e);
  CHECK(fincof_nps_value(NpsFamily::Nu4, fin({2})) == NonstdNumber(q("1/4")) - e);
  CHECK_THROWS_AS(fincof_nps_value(NpsFamily::Nu4, fin({0})), Error);
  CHECK(nu4_bet_expectation(2) == 5 * e);
  for (unsigned k = 1; k <= 6; ++k) CHECK(nu4_bet_expectation(k) == NonstdNumber((1L << k) + 1) * e);
}

TEST_CASE("sampled axiom checks") {
  CHECK(sampled_axiom_check(CpsFamily::Mu1, {{fin({0}), fin({0, 1}), fin({0, 1, 2})}}).ok());
  CHECK(sampled_axiom_check(CpsFamily::Mu2, {{fin({5}), fin({5, 9}), fin({5, 9})}}).ok());
  CHECK(sampled_axiom_check(CpsFamily::Mu1, {{fin({1}), fin({1, 2, 3}), cof({})}}).ok());
  CHECK(standard_part(fincof_nps_value(NpsFamily::Nu1, fin({1})) / fincof_nps_value(NpsFamily::Nu1, fin({1, 2, 3}))) ==
        fincof_cond(CpsFamily::Mu1, fin({1}), fin({1, 2, 3})));
  const auto chains = fincof_chains(3);
  CHECK_FALSE(chains.empty());
  CHECK(sampled_axiom_check(CpsFamily::Mu2, chains, false).ok());
}

TEST_CASE("fixture reports") {
  for (const auto& name : fixtures::names()) {
    if (name == "counter1" || name == "counter2") continue;
    const auto r = fixtures::run(name);
    CAPTURE(name);
    CHECK(r.ok());
    CHECK_FALSE(r.lines.empty());
  }
  CHECK_THROWS_AS(fixtures::run("nope"), Error);
}
