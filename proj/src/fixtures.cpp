#include "extprob/fixtures.hpp"

#include <algorithm>
#include <random>

#include "extprob/countable.hpp"
#include "extprob/independence.hpp"
#include "extprob/nps_bridge.hpp"

namespace extprob::fixtures {

namespace {

const NonstdNumber kEps = NonstdNumber::eps();

NonstdNumber q(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return NonstdNumber(r);
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string values(const RandomVariable& x) {
  std::string s = "(";
  for (std::size_t i = 0; i < x.value.size(); ++i) s += (i ? ", " : "") + to_string(x.value[i]);
  return s + ")";
}

std::string values(const std::vector<Rational>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
  return s + "}";
}

Event ev(std::initializer_list<std::size_t> idx) { return Event::from_indices(idx); }

Report mcgee() {
  Report r;
  const auto nu1 = mcgee_nu1();
  const auto nu2 = mcgee_nu2();
  const bool simeq = nps_simeq(nu1, nu2);
  r.lines.push_back({"simeq(nu1, nu2): " + yes_no(simeq), simeq});
  const auto cert = nps_aeq(nu1, nu2);
  std::string aeq = "aeq(nu1, nu2): " + std::string(cert.equivalent() ? "equivalent" : "inequivalent");
  if (cert.witness) aeq += " with witness X = " + values(cert.witness->first) + ", Y = " + values(cert.witness->second);
  r.lines.push_back({aeq, !cert.equivalent()});
  const RandomVariable diff{{Rational(1), Rational(-1)}};
  const NonstdNumber e = expect(nu1, diff);
  r.lines.push_back({"E_nu1(chi_w1 - chi_w2) = " + to_string(e), e == 2 * kEps});
  for (const Rational& alpha : {Rational(2), Rational(3, 2), Rational(101, 100)}) {
    const NonstdNumber bet = expect(nu1, RandomVariable{{Rational(1), Rational(-alpha)}});
    r.lines.push_back({"E_nu1(chi_w1 - " + to_string(alpha) + " chi_w2) = " + to_string(bet) + " < 0", bet < 0});
  }
  return r;
}

Report approxindep() {
  Report r;
  const auto nu1 = approxindep_nu(1);
  const auto nu2 = approxindep_nu(2);
  const Event w = Event::full(4);
  const Event u = ev({1, 3});
  const Event v = ev({2, 3});
  const Event vp = ev({3});
  const bool e1 = indep_events(nu1, u, v, w, IndepMode::Exact);
  const bool e2 = indep_events(nu2, u, v, w, IndepMode::Exact);
  r.lines.push_back({"exact(U, V) under nu1: " + yes_no(e1), e1});
  r.lines.push_back({"exact(U, V) under nu2: " + yes_no(e2), !e2});
  const bool aeq = nps_aeq(nu1, nu2).equivalent();
  r.lines.push_back({"aeq(nu1, nu2): " + std::string(aeq ? "equivalent" : "inequivalent"), aeq});
  const bool a1 = indep_events(nu1, u, vp, w, IndepMode::Approx);
  const bool a2 = indep_events(nu1, vp, u, w, IndepMode::Approx);
  r.lines.push_back({"approx(U, V') under nu1: " + yes_no(a1), a1});
  r.lines.push_back({"approx(V', U) under nu1: " + yes_no(a2), !a2});
  const auto pop = nps_to_popper(nu1);
  const bool p1 = indep_events(pop, u, vp, w);
  const bool p2 = indep_events(pop, vp, u, w);
  r.lines.push_back({"popper(U, V') on the image of nu1: " + yes_no(p1), p1});
  r.lines.push_back({"popper(V', U) on the image of nu1: " + yes_no(p2), !p2});
  return r;
}

Report need() {
  Report r;
  const auto f = needapproximate();
  const bool weak = weak_indep(f.nu, f.x, f.y);
  r.lines.push_back({"weak_indep: " + yes_no(weak), weak});
  const auto set = approx_indep_set(f.nu, f.y, {f.x});
  std::string text = "approx_indep_set(Y;[X]): " + yes_no(set.holds);
  bool expected = !set.holds;
  if (set.failure) {
    const auto& fl = *set.failure;
    text += " (" + to_string(fl.conditioned) + " vs " + to_string(fl.unconditioned) + ")";
    expected = expected && fl.conditioned == Rational(1, 3) && fl.unconditioned == Rational(1, 2);
    r.lines.push_back({text, expected});
    r.lines.push_back({"  at Y in " + values(fl.u_values) + ", X in " + values(fl.v_values[0]) + ", given X in " +
                           values(fl.given_values[0]),
                       true});
  } else {
    r.lines.push_back({text, expected});
  }
  return r;
}

Report nopopper_report() {
  Report r;
  const auto s = nopopper();
  const bool cps = validate_popper(s, PopperLevel::Cps).ok();
  const auto pop = validate_popper(s, PopperLevel::Popper);
  r.lines.push_back({"valid cps: " + yes_no(cps), cps});
  r.lines.push_back({"valid Popper space: " + yes_no(pop.ok()), !pop.ok()});
  if (!pop.ok()) r.lines.push_back({"  first violation: " + pop.issues.front(), true});
  return r;
}

Report counter1() {
  Report r;
  const auto chains = fincof_chains(8);
  const auto rep = sampled_axiom_check(CpsFamily::Mu1, chains, false);
  r.lines.push_back({"mu1 CP1-CP3 on " + std::to_string(chains.size()) + " chains over {0..7}: " +
                         (rep.ok() ? "pass" : rep.issues.front()),
                     rep.ok()});
  bool half = true;
  for (std::uint64_t n = 1; n <= 20; ++n)
    half = half && fincof_cond(CpsFamily::Mu1, FinCofEvent::finite({0}), FinCofEvent::finite({0, n})) == Rational(1, 2);
  r.lines.push_back({"mu1({0} | {0,n}) = 1/2 for n = 1..20: " + yes_no(half), half});
  const Rational fin_given_cof = fincof_cond(CpsFamily::Mu1, FinCofEvent::finite({0, 1, 2}), FinCofEvent::cofinite({}));
  r.lines.push_back({"mu1({0,1,2} | N) = " + to_string(fin_given_cof), fin_given_cof == 0});
  return r;
}

Report counter2() {
  Report r;
  const auto chains = fincof_chains(8);
  const auto rep = sampled_axiom_check(CpsFamily::Mu2, chains);
  r.lines.push_back({"mu2 CP1-CP3 on " + std::to_string(chains.size()) + " chains over {0..7}: " +
                         (rep.ok() ? "pass" : rep.issues.front()),
                     rep.ok()});
  const Rational v = fincof_cond(CpsFamily::Mu2, FinCofEvent::finite({1, 3}), FinCofEvent::finite({1, 2, 3}));
  r.lines.push_back({"mu2({1,3} | {1,2,3}) = " + to_string(v), v == 1});
  bool dominated = true;
  for (std::uint64_t n = 1; n <= 20; ++n)
    for (std::uint64_t m = 0; m < n; ++m)
      dominated = dominated && fincof_cond(CpsFamily::Mu2, FinCofEvent::finite({m}), FinCofEvent::finite({m, n})) == 0;
  r.lines.push_back({"mu2({m} | {m,n}) = 0 for m < n <= 20: " + yes_no(dominated), dominated});
  return r;
}

FinCofEvent random_event(std::mt19937_64& rng, bool nonempty) {
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<std::uint64_t> point(0, 30);
  std::uniform_int_distribution<int> len(0, 6);
  while (true) {
    std::vector<std::uint64_t> s;
    for (int i = len(rng); i > 0; --i) s.push_back(point(rng));
    auto e = coin(rng) ? FinCofEvent::cofinite(s) : FinCofEvent::finite(s);
    if (!nonempty || !e.empty()) return e;
  }
}

Report counter3() {
  Report r;
  std::mt19937_64 rng(20061);
  bool all = true;
  std::string first_bad;
  for (int i = 0; i < 200; ++i) {
    const auto v = random_event(rng, false);
    const auto u = random_event(rng, true);
    const NonstdNumber joint = fincof_nps_value(NpsFamily::Nu1, v & u);
    const Rational st = joint.is_zero() ? Rational(0) : standard_part(joint / fincof_nps_value(NpsFamily::Nu1, u));
    if (st != fincof_cond(CpsFamily::Mu1, v, u)) {
      if (all) first_bad = " first mismatch at V = " + to_string(v) + ", U = " + to_string(u);
      all = false;
    }
  }
  r.lines.push_back({"st(nu1(V|U)) = mu1(V|U) on 200 sampled pairs: " + yes_no(all) + first_bad, all});
  const auto val = fincof_nps_value(NpsFamily::Nu1, FinCofEvent::finite({3, 7}));
  r.lines.push_back({"nu1({3,7}) = " + to_string(val), val == 2 * kEps});
  return r;
}

Report counter4() {
  Report r;
  const std::vector<NonstdNumber> expected{q(1, 2) + kEps, q(1, 4) - kEps, q(1, 8) + kEps / 2, q(1, 16) - kEps / 2,
                                           q(1, 32) + kEps / 4};
  bool seq = true;
  for (std::uint64_t j = 1; j <= expected.size(); ++j)
    seq = seq && fincof_nps_value(NpsFamily::Nu4, FinCofEvent::finite({j})) == expected[j - 1];
  r.lines.push_back({"nu4(w_1..w_5) = 1/2 + eps, 1/4 - eps, 1/8 + eps/2, 1/16 - eps/2, 1/32 + eps/4: " + yes_no(seq),
                     seq});
  for (unsigned k = 1; k <= 6; ++k) {
    const NonstdNumber e = nu4_bet_expectation(k);
    const NonstdNumber want = NonstdNumber(Rational((1UL << k) + 1)) * kEps;
    r.lines.push_back({"E(chi_w1 - 2^" + std::to_string(2 * k - 1) + " chi_w" + std::to_string(2 * k) +
                           ") = " + to_string(e),
                       e == want});
  }
  bool telescopes = true;
  for (std::uint64_t m = 1; m <= 40; ++m) {
    std::vector<std::uint64_t> prefix;
    for (std::uint64_t j = 1; j <= 2 * m; ++j) prefix.push_back(j);
    telescopes = telescopes && nu4_b_sum(prefix) == 0;
    const auto s = FinCofEvent::finite(prefix);
    telescopes = telescopes &&
                 fincof_nps_value(NpsFamily::Nu4, s) + fincof_nps_value(NpsFamily::Nu4, s.complement()) == NonstdNumber(1);
  }
  r.lines.push_back({"b-coefficients telescope to 0 over w_1..w_2m and nu4(S) + nu4(N \\ S) = 1: " + yes_no(telescopes),
                     telescopes});
  return r;
}

}  // namespace

NonstdMeasure mcgee_nu1() { return NonstdMeasure{{q(1, 2) + kEps, q(1, 2) - kEps}}; }
NonstdMeasure mcgee_nu2() { return NonstdMeasure{{q(1, 2), q(1, 2)}}; }

NonstdMeasure approxindep_nu(int i) {
  if (i != 1 && i != 2) throw Error(ErrorKind::InvalidArgument, "approxindep has measures 1 and 2");
  const NonstdNumber ei = NonstdNumber::eps(i == 1 ? 2 : 3);
  return NonstdMeasure{{1 - 2 * kEps + ei, kEps - ei, kEps - ei, ei}};
}

NeedApproximate needapproximate() {
  const NonstdNumber e2 = NonstdNumber::eps(2);
  NeedApproximate f;
  f.nu = NonstdMeasure{{1 - 3 * kEps - 3 * e2, kEps, kEps, e2, kEps, 2 * e2}};
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 2; ++j) {
      f.x.value.emplace_back(i);
      f.y.value.emplace_back(j);
    }
  return f;
}

PopperSpace nopopper() {
  PopperSpace s;
  s.num_atoms = 4;
  auto put = [&](std::size_t a, std::size_t b, Rational pa) {
    StdMeasure m{std::vector<Rational>(4)};
    m.mass[a] = pa;
    m.mass[b] = 1 - pa;
    s.table.emplace(ev({a, b}), std::move(m));
  };
  put(0, 2, Rational(1, 3));  // mu(w1 | {w1,w3})
  put(3, 1, Rational(1, 3));  // mu(w4 | {w2,w4})
  put(0, 1, Rational(1, 2));  // mu(w1 | {w1,w2})
  put(3, 2, Rational(1, 2));  // mu(w4 | {w3,w4})
  put(0, 3, Rational(1, 2));
  put(1, 2, Rational(1, 2));
  return s;
}

bool Report::ok() const {
  return std::all_of(lines.begin(), lines.end(), [](const Line& l) { return l.pass; });
}

std::vector<std::string> names() {
  return {"mcgee", "approxindep", "needapproximate", "nopopper", "counter1", "counter2", "counter3", "counter4"};
}

Report run(std::string_view name) {
  if (name == "mcgee") return mcgee();
  if (name == "approxindep") return approxindep();
  if (name == "needapproximate") return need();
  if (name == "nopopper") return nopopper_report();
  if (name == "counter1") return counter1();
  if (name == "counter2") return counter2();
  if (name == "counter3") return counter3();
  if (name == "counter4") return counter4();
  throw Error(ErrorKind::InvalidArgument, "unknown fixture '" + std::string(name) + "'");
}

}  // namespace extprob::fixtures
