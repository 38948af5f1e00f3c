// Acceptance harness: one PASS/FAIL line per criterion, with wall time and
// the time budget each criterion must meet.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "extprob/countable.hpp"
#include "extprob/fixtures.hpp"
#include "extprob/independence.hpp"
#include "extprob/nps_bridge.hpp"
#include "support/gen.hpp"

using namespace extprob;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::size_t cases = 0;

  void require(bool cond, const std::string& what) {
    if (!cond && pass) {
      pass = false;
      detail = what;
    }
  }
};

const NonstdNumber e = NonstdNumber::eps();
Rational q(const char* s) { return parse_rational(s); }

std::vector<LPS> g_generated;  // every LPS seen by criteria 5, 6 and 11, for criterion 9

Outcome mcgee() {
  Outcome o;
  const auto nu1 = fixtures::mcgee_nu1(), nu2 = fixtures::mcgee_nu2();
  o.require(nu1.mass == std::vector<NonstdNumber>{NonstdNumber(q("1/2")) + e, NonstdNumber(q("1/2")) - e}, "nu1 masses");
  o.require(nps_simeq(nu1, nu2), "simeq");
  const auto c = nps_aeq(nu1, nu2);
  o.require(!c.equivalent() && c.witness.has_value(), "aeq verdict");
  if (c.witness)
    o.require(nps_expect_cmp(nu1, c.witness->first, c.witness->second) !=
                  nps_expect_cmp(nu2, c.witness->first, c.witness->second),
              "witness re-check");
  o.require(expect(nu1, RandomVariable{{1, -1}}) == 2 * e, "E(chi1 - chi2) = 2 eps");
  for (const char* alpha : {"2", "3/2", "101/100"}) {
    const auto v = expect(nu1, RandomVariable{{1, -q(alpha)}});
    o.require(v < NonstdNumber(0), std::string("E(chi1 - ") + alpha + " chi2) < 0");
  }
  o.cases = 7;
  return o;
}

Outcome approxindep() {
  Outcome o;
  const auto nu1 = fixtures::approxindep_nu(1), nu2 = fixtures::approxindep_nu(2);
  const Event u = Event::from_indices({1, 3}), v = Event::from_indices({2, 3}), v2 = Event::atom(3), w = Event::full(4);
  // Exact independence by the product rule, computed here directly.
  const auto prod = [&](const NonstdMeasure& nu) {
    return measure_event(nu, u & v) == measure_event(nu, u) * measure_event(nu, v);
  };
  o.require(prod(nu1) && indep_events(nu1, u, v, w, IndepMode::Exact), "exact under nu1");
  o.require(!prod(nu2) && !indep_events(nu2, u, v, w, IndepMode::Exact), "not exact under nu2");
  o.require(nps_aeq(nu1, nu2).equivalent(), "nu1 aeq nu2");
  o.require(indep_events(nu1, u, v2, w, IndepMode::Approx), "U approx indep of V'");
  o.require(!indep_events(nu1, v2, u, w, IndepMode::Approx), "V' not approx indep of U");
  o.cases = 5;
  return o;
}

Outcome needapproximate() {
  Outcome o;
  const auto na = fixtures::needapproximate();
  o.require(weak_indep(na.nu, na.x, na.y), "weak_indep");
  const auto r = approx_indep_set(na.nu, na.y, {na.x});
  o.require(!r.holds && r.failure.has_value(), "approx_indep_set fails");
  if (r.failure) {
    o.require(r.failure->conditioned == q("1/3"), "conditioned standard part 1/3");
    o.require(r.failure->unconditioned == q("1/2"), "unconditioned standard part 1/2");
  }
  o.cases = 2;
  return o;
}

Outcome popper_round_trip() {
  Outcome o;
  gen::Rng rng(0x5eed0004);
  for (int i = 0; i < 500; ++i) {
    const std::size_t n = static_cast<std::size_t>(gen::uniform(rng, 2, 5));
    const LPS source = gen::disjoint_lps(rng, n, static_cast<std::size_t>(gen::uniform(rng, 0, 3)));
    const PopperSpace p = gen::direct_table(source);
    o.require(validate_popper(p, PopperLevel::Popper).ok(), "generated space is a Popper space");
    const LPS s = popper_to_slps(p);
    o.require(slps_to_popper(s) == p, "slps_to_popper(popper_to_slps(P)) = P");
    o.require(classify_lps(s).is_lcps, "popper_to_slps(P) is an LCPS");
    ++o.cases;
  }
  return o;
}

Outcome lps_nps() {
  Outcome o;
  gen::Rng rng(0x5eed0005);
  for (int i = 0; i < 500; ++i) {
    const std::size_t n = static_cast<std::size_t>(gen::uniform(rng, 2, 5));
    const std::size_t len = static_cast<std::size_t>(gen::uniform(rng, 1, static_cast<int>(n)));
    const LPS lps = gen::any_lps(rng, n, len);
    g_generated.push_back(lps);
    o.require(verify_aeqchar(lps, gen::power_schedule(len)), "aeqchar with eps powers");
    o.require(verify_aeqchar(lps, gen::scaled_schedule(len)), "aeqchar with eps^2, 2 eps^3, ...");
    const auto nu = lps_to_nps(lps);
    const auto d = nps_to_lps(nu);
    o.require(recompose(d.lps, d.coefficients) == nu, "exact recomposition");
    o.require(lps_equiv(d.lps, lps).equivalent(), "decomposition aeq original");
    ++o.cases;
  }
  return o;
}

Outcome composition() {
  Outcome o;
  gen::Rng rng(0x5eed0006);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = static_cast<std::size_t>(gen::uniform(rng, 2, 5));
    const LPS s = gen::disjoint_lps(rng, n, static_cast<std::size_t>(gen::uniform(rng, 0, 3)));
    g_generated.push_back(s);
    const auto via_nps = nps_to_popper(lps_to_nps(s));
    o.require(via_nps == slps_to_popper(s), "N->P after S->N equals S->P");
    o.require(via_nps == gen::direct_table(s), "matches the direct conditional table");
    ++o.cases;
  }
  return o;
}

// mu'_i = (1 - t) mu_i + t mu_j for some j < i: a lower-triangular change of
// basis with positive diagonal, hence an equivalent LPS.
LPS triangular_mix(gen::Rng& rng, const LPS& lps) {
  auto ms = lps.measures;
  for (std::size_t i = 1; i < ms.size(); ++i) {
    const auto j = static_cast<std::size_t>(gen::uniform(rng, 0, static_cast<int>(i) - 1));
    const Rational t = gen::q(gen::uniform(rng, 0, 3), 4);
    for (std::size_t a = 0; a < ms[i].mass.size(); ++a) {
      ms[i].mass[a] = (1 - t) * lps[i].mass[a] + t * lps[j].mass[a];
      ms[i].mass[a].canonicalize();
    }
  }
  return LPS(std::move(ms));
}

Outcome implication_chain() {
  Outcome o;
  gen::Rng rng(0x5eed0007);
  for (int i = 0; i < 500; ++i) {
    const std::size_t n = static_cast<std::size_t>(gen::uniform(rng, 2, 5));
    const LPS lps = gen::any_lps(rng, n, static_cast<std::size_t>(gen::uniform(rng, 1, static_cast<int>(n))));
    const LPS other = triangular_mix(rng, lps);
    const auto a = recompose(lps, gen::power_schedule(lps.size()));
    const auto b = recompose(other, gen::random_schedule(rng, other.size()));
    o.require(nps_aeq(a, b).equivalent(), "constructed pair is aeq");
    o.require(nps_simeq(a, b), "aeq implies simeq");
    ++o.cases;
  }
  std::size_t inequivalent = 0;
  for (int i = 0; i < 500; ++i) {
    const std::size_t n = static_cast<std::size_t>(gen::uniform(rng, 2, 5));
    const auto a = gen::any_nps(rng, n), b = gen::any_nps(rng, n);
    const auto c = nps_aeq(a, b);
    ++o.cases;
    if (c.equivalent()) continue;
    ++inequivalent;
    o.require(c.witness.has_value(), "inequivalent verdict carries a witness");
    if (!c.witness) continue;
    const auto& [x, y] = *c.witness;
    o.require(lps_expect_cmp(LPS(c.reduced_a), x, y) != lps_expect_cmp(LPS(c.reduced_b), x, y),
              "witness re-verifies under lps_expect_cmp");
    o.require(nps_expect_cmp(a, x, y) != nps_expect_cmp(b, x, y), "witness separates the measures");
  }
  o.require(inequivalent >= 100, "enough inequivalent pairs generated");
  return o;
}

Outcome transport() {
  Outcome o;
  gen::Rng rng(0x5eed0008);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = static_cast<std::size_t>(gen::uniform(rng, 2, 4));
    const auto nu = gen::any_nps(rng, n);
    const auto p = nps_to_popper(nu);
    const auto events = all_events(n);
    for (Event u : events)
      for (Event v : events)
        for (Event g : events)
          if (indep_events(nu, u, v, g, IndepMode::Approx) != indep_events(p, u, v, g))
            o.require(false, "verdicts differ at " + to_string(u) + ", " + to_string(v) + " given " + to_string(g));
    ++o.cases;
  }
  return o;
}

Outcome reduction() {
  Outcome o;
  for (const auto& lps : g_generated) {
    const LPS r = reduce_lps(lps);
    o.require(r.size() <= lps.num_atoms(), "reduced length at most the number of atoms");
    o.require(lps_equiv(r, lps).equivalent(), "reduction is aeq-certified");
    ++o.cases;
  }
  o.require(o.cases >= 500, "instances from earlier criteria");
  return o;
}

Outcome countable() {
  Outcome o;
  const auto chains = fincof_chains(8);
  o.require(sampled_axiom_check(CpsFamily::Mu1, chains, false).ok(), "mu1 CP1-CP3 exhaustive");
  o.require(sampled_axiom_check(CpsFamily::Mu2, chains, false).ok(), "mu2 CP1-CP3 exhaustive");
  o.cases = 2 * chains.size();
  for (std::uint64_t n = 1; n <= 20; ++n)
    o.require(fincof_cond(CpsFamily::Mu1, FinCofEvent::finite({0}), FinCofEvent::finite({0, n})) == q("1/2"),
              "mu1({0}|{0,n}) = 1/2");
  gen::Rng rng(0x5eed0010);
  for (int i = 0; i < 200; ++i) {
    const auto& [v, x, u] = chains[std::uniform_int_distribution<std::size_t>(0, chains.size() - 1)(rng)];
    (void)x;
    const auto ratio = fincof_nps_value(NpsFamily::Nu1, v & u) / fincof_nps_value(NpsFamily::Nu1, u);
    o.require(standard_part(ratio) == fincof_cond(CpsFamily::Mu1, v, u),
              "st(nu1(V|U)) = mu1(V|U) at V = " + to_string(v) + ", U = " + to_string(u));
  }
  for (unsigned k = 1; k <= 6; ++k)
    o.require(nu4_bet_expectation(k) == NonstdNumber((1L << k) + 1) * e, "nu4 bet expectation");
  return o;
}

Outcome rigidity() {
  Outcome o;
  gen::Rng rng(0x5eed0011);
  std::size_t equal = 0;
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = static_cast<std::size_t>(gen::uniform(rng, 2, 5));
    const LPS a = gen::disjoint_lps(rng, n);
    LPS b = a;
    switch (gen::uniform(rng, 0, 2)) {
      case 0:
        break;
      case 1:
        b = gen::disjoint_lps(rng, n);
        break;
      default: {
        const auto k = static_cast<std::size_t>(gen::uniform(rng, 0, static_cast<int>(a.size()) - 1));
        b.measures[k] = gen::measure_on(rng, n, support(a[k]));
      }
    }
    g_generated.push_back(a);
    g_generated.push_back(b);
    const bool same = a == b;
    equal += same;
    o.require(lps_equiv(a, b).equivalent() == same, "equivalent iff componentwise equal");
    ++o.cases;
  }
  o.require(equal > 0 && equal < 200, "both outcomes exercised");
  return o;
}

Outcome treelike() {
  Outcome o;
  gen::Rng rng(0x5eed0012);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = static_cast<std::size_t>(gen::uniform(rng, 2, 6));
    const PopperSpace p = gen::treelike(rng, n);
    o.require(validate_popper(p, PopperLevel::Treelike).ok(), "generated space is treelike");
    const LPS lps = treelike_to_lps(p).lps;
    for (const auto& [u, m] : p.table) {
      const auto level = first_positive_level(lps, u);
      o.require(level.has_value(), "U in F' has positive probability at some level");
      if (!level) continue;
      const LPS c = lps_condition(lps, u);
      for (Event v : all_events(n))
        o.require(measure_event(c[0], v) == p.cond(v, u), "agrees on (" + to_string(v) + ", " + to_string(u) + ")");
    }
    ++o.cases;
  }
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double budget_s;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "McGee fixture", 1, mcgee},
      {2, "approximate-independence fixture", 1, approxindep},
      {3, "weak independence without set independence", 1, needapproximate},
      {4, "Popper round trip", 20, popper_round_trip},
      {5, "LPS to NPS and back", 20, lps_nps},
      {6, "composition of maps to Popper spaces", 10, composition},
      {7, "implication chain aeq => simeq and witnesses", 20, implication_chain},
      {8, "independence transport to Popper spaces", 10, transport},
      {9, "reduction bound", 5, reduction},
      {10, "countable fixtures", 5, countable},
      {11, "SLPS rigidity", 5, rigidity},
      {12, "treelike construction", 10, treelike},
  };
  bool all = true;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& ex) {
      o.pass = false;
      o.detail = std::string("exception: ") + ex.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (o.pass && secs > c.budget_s) {
      o.pass = false;
      o.detail = "over the time budget";
    }
    all = all && o.pass;
    std::printf("%s %2d %-46s cases=%-7zu %.3fs (budget %.0fs)%s%s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.cases,
                secs, c.budget_s, o.detail.empty() ? "" : "  ", o.detail.c_str());
  }
  return all ? 0 : 1;
}
