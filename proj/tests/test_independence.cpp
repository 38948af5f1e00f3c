#include <doctest.h>

#include "extprob/fixtures.hpp"
#include "extprob/independence.hpp"
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

// (1 - eps, eps) x (1 - eps, eps) on atoms (1,1),(1,2),(2,1),(2,2).
NonstdMeasure product() { return NonstdMeasure{{(1 - e) * (1 - e), (1 - e) * e, e * (1 - e), e * e}}; }
const RandomVariable px{{1, 1, 2, 2}}, py{{1, 2, 1, 2}};
}  // namespace

TEST_CASE("event independence") {
  const auto nu1 = fixtures::approxindep_nu(1), nu2 = fixtures::approxindep_nu(2);
  const Event u = ev({1, 3}), v = ev({2, 3}), v2 = ev({3}), w = Event::full(4);
  CHECK(indep_events(nu1, u, v, w, IndepMode::Exact));
  CHECK_FALSE(indep_events(nu2, u, v, w, IndepMode::Exact));
  CHECK(indep_events(nu1, u, v2, w, IndepMode::Approx));
  CHECK_FALSE(indep_events(nu1, v2, u, w, IndepMode::Approx));
  CHECK(indep_events(nu1, Event{}, v, w, IndepMode::Exact));
  CHECK(indep_events(nps_to_popper(nu1), Event{}, v, w));
}

TEST_CASE("weak independence") {
  const auto na = fixtures::needapproximate();
  CHECK(weak_indep(na.nu, na.x, na.y));
  CHECK(weak_indep(product(), px, py));
  CHECK(weak_indep(product(), px, py, true));
  const NonstdMeasure skew{{NonstdNumber(q("1/2")), NonstdNumber(0), NonstdNumber(0), NonstdNumber(q("1/2"))}};
  CHECK_FALSE(weak_indep(skew, px, py));
  const NonstdMeasure partial{{NonstdNumber(q("1/2")), NonstdNumber(q("1/2")), NonstdNumber(0)}};
  CHECK_FALSE(weak_indep(partial, RandomVariable{{1, 1, 2}}, RandomVariable{{1, 2, 2}}, true));
}

TEST_CASE("approximate independence of sets of variables") {
  const auto na = fixtures::needapproximate();
  const auto r = approx_indep_set(na.nu, na.y, {na.x});
  REQUIRE_FALSE(r.holds);
  REQUIRE(r.failure.has_value());
  CHECK(r.failure->conditioned == q("1/3"));
  CHECK(r.failure->unconditioned == q("1/2"));
  CHECK(r.failure->u_values == std::vector<Rational>{2});
  CHECK(r.failure->given_values == std::vector<std::vector<Rational>>{{2, 3}});

  CHECK(approx_indep_set(product(), px, {py}).holds);
  CHECK(approx_indep_set(na.nu, RandomVariable{std::vector<Rational>(6, 1)}, {na.x}).holds);
  CHECK(approx_mutually_indep(product(), {px, py}));
}

TEST_CASE("exact independence") {
  CHECK(exact_indep(product(), {px, py}));
  CHECK(exact_indep(StdMeasure{{q("1/4"), q("1/4"), q("1/4"), q("1/4")}}, {px, py}));
  CHECK_FALSE(exact_indep(StdMeasure{{q("1/2"), 0, 0, q("1/2")}}, {px, py}));
}

TEST_CASE("nested mixtures") {
  const LPS d2({m({"1", "0"}), m({"0", "1"})});
  CHECK(box_combine(d2, {q("1/4")}) == m({"3/4", "1/4"}));
  CHECK(box_combine(LPS({m({"1/3", "2/3"})}), {}) == m({"1/3", "2/3"}));
  const auto near = box_combine(d2, {q("1/1000")});
  CHECK(near.mass[0] > q("99/100"));
  const LPS d3({m({"1", "0", "0"}), m({"0", "1", "0"}), m({"0", "0", "1"})});
  CHECK(box_combine(d3, {q("1/2"), q("1/2")}) == m({"1/2", "1/4", "1/4"}));
  CHECK_THROWS_AS(box_combine(d2, {}), Error);
  CHECK_THROWS_AS(box_combine(d2, {1}), Error);
}

TEST_CASE("witness verification") {
  const auto target = nps_to_popper(product());
  CHECK(verify_kr_nps(target, {px, py}, product()).accepted);

  const LPS bbd({m({"1", "0", "0", "0"}), m({"1/4", "1/4", "1/4", "1/4"})});
  const auto rejected = verify_bbd_r(bbd, {px, py}, {{q("1/2")}});
  CHECK_FALSE(rejected.accepted);
  CHECK_FALSE(rejected.failures.empty());
  CHECK_FALSE(rejected.notes.empty());

  const LPS uniform({m({"1/4", "1/4", "1/4", "1/4"})});
  CHECK(verify_bbd_r(uniform, {px, py}, {{}}).accepted);

  const auto lps = nps_to_lps(product()).lps;
  const auto bbd_nps = verify_bbd_nps(lps, {px, py}, product());
  CHECK(bbd_nps.accepted);
  CHECK_FALSE(bbd_nps.notes.empty());

  const std::vector<StdMeasure> seq{m({"81/100", "9/100", "9/100", "1/100"}), m({"9801/10000", "99/10000", "99/10000", "1/10000"})};
  CHECK(verify_kr_seq(target, {px, py}, seq).accepted);
  CHECK_FALSE(verify_kr_seq(target, {px, py}, {m({"1/2", "0", "0", "1/2"})}).accepted);
  CHECK_THROWS_AS(verify_kr_seq(target, {px, py}, {}), Error);

  const NonstdMeasure uniform4{std::vector<NonstdNumber>(4, NonstdNumber(q("1/4")))};
  const auto mismatch = verify_kr_nps(nps_to_popper(uniform4), {px, py}, product());
  CHECK_FALSE(mismatch.accepted);
}

TEST_CASE("approximate verdicts agree on equivalent measures") {
  gen::Rng rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = static_cast<std::size_t>(gen::uniform(rng, 2, 4));
    const LPS lps = gen::any_lps(rng, n, static_cast<std::size_t>(gen::uniform(rng, 1, 3)));
    const auto a = recompose(lps, gen::power_schedule(lps.size()));
    const auto b = recompose(lps, gen::scaled_schedule(lps.size()));
    const auto events = all_events(n);
    for (Event u : events)
      for (Event v : events)
        for (Event g : events)
          CHECK(indep_events(a, u, v, g, IndepMode::Approx) == indep_events(b, u, v, g, IndepMode::Approx));
  }
}
