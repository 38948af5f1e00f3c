#include "extprob/countable.hpp"

#include <algorithm>
#include <iterator>
#include <sstream>

namespace extprob {

namespace {

std::vector<std::uint64_t> normalized(std::vector<std::uint64_t> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

using Set = std::vector<std::uint64_t>;

Set set_and(const Set& a, const Set& b) {
  Set out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}
Set set_or(const Set& a, const Set& b) {
  Set out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}
Set set_minus(const Set& a, const Set& b) {
  Set out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Rational pow2(long e) {
  Rational q = 1;
  if (e >= 0)
    mpz_mul_2exp(q.get_num_mpz_t(), q.get_num_mpz_t(), static_cast<mp_bitcnt_t>(e));
  else
    mpz_mul_2exp(q.get_den_mpz_t(), q.get_den_mpz_t(), static_cast<mp_bitcnt_t>(-e));
  return q;
}

Rational nu4_a(std::uint64_t j) { return pow2(-static_cast<long>(j)); }
Rational nu4_b(std::uint64_t j) {
  const long half = static_cast<long>((j + 1) / 2);  // j = 2h - 1 or j = 2h
  const Rational mag = pow2(-(half - 1));
  return j % 2 == 1 ? mag : Rational(-mag);
}

void require_worlds(const Set& s) {
  if (!s.empty() && s.front() == 0) throw Error(ErrorKind::InvalidArgument, "the worlds of nu4 are numbered from 1");
}

}  // namespace

FinCofEvent::FinCofEvent(bool cofinite, std::vector<std::uint64_t> support)
    : cofinite_(cofinite), support_(std::move(support)) {}

FinCofEvent FinCofEvent::finite(std::vector<std::uint64_t> members) { return {false, normalized(std::move(members))}; }
FinCofEvent FinCofEvent::cofinite(std::vector<std::uint64_t> excluded) { return {true, normalized(std::move(excluded))}; }

bool FinCofEvent::contains(std::uint64_t n) const {
  return std::binary_search(support_.begin(), support_.end(), n) != cofinite_;
}

bool FinCofEvent::subset_of(const FinCofEvent& o) const { return (*this - o).empty(); }

std::size_t FinCofEvent::size() const {
  if (cofinite_) throw Error(ErrorKind::InvalidArgument, "a cofinite event has no finite size");
  return support_.size();
}

std::uint64_t FinCofEvent::max() const {
  if (cofinite_ || support_.empty()) throw Error(ErrorKind::InvalidArgument, "max needs a nonempty finite event");
  return support_.back();
}

FinCofEvent FinCofEvent::complement() const { return {!cofinite_, support_}; }

FinCofEvent operator&(const FinCofEvent& a, const FinCofEvent& b) {
  if (!a.cofinite_ && !b.cofinite_) return {false, set_and(a.support_, b.support_)};
  if (!a.cofinite_) return {false, set_minus(a.support_, b.support_)};
  if (!b.cofinite_) return {false, set_minus(b.support_, a.support_)};
  return {true, set_or(a.support_, b.support_)};
}

FinCofEvent operator|(const FinCofEvent& a, const FinCofEvent& b) {
  return (a.complement() & b.complement()).complement();
}

FinCofEvent operator-(const FinCofEvent& a, const FinCofEvent& b) { return a & b.complement(); }

std::string to_string(const FinCofEvent& e) {
  std::ostringstream os;
  os << (e.is_cofinite() ? "N \\ {" : "{");
  for (std::size_t i = 0; i < e.support().size(); ++i) os << (i ? "," : "") << e.support()[i];
  os << "}";
  return os.str();
}

Rational fincof_cond(CpsFamily family, const FinCofEvent& v, const FinCofEvent& u) {
  if (u.empty()) throw Error(ErrorKind::EmptyConditioningEvent, "cannot condition on the empty set");
  if (u.is_cofinite()) return v.is_cofinite() ? 1 : 0;
  const FinCofEvent both = v & u;
  if (family == CpsFamily::Mu1) {
    Rational ratio(static_cast<unsigned long>(both.size()), static_cast<unsigned long>(u.size()));
    ratio.canonicalize();
    return ratio;
  }
  return !both.empty() && both.max() == u.max() ? 1 : 0;
}

Rational nu4_b_sum(const std::vector<std::uint64_t>& worlds) {
  require_worlds(worlds);
  Rational s = 0;
  for (auto j : worlds) s += nu4_b(j);
  return s;
}

NonstdNumber fincof_nps_value(NpsFamily family, const FinCofEvent& u) {
  const auto& s = u.support();
  if (family == NpsFamily::Nu1) {
    const NonstdNumber count(Rational(static_cast<unsigned long>(s.size())));
    return u.is_cofinite() ? NonstdNumber(1) - count * NonstdNumber::eps() : count * NonstdNumber::eps();
  }
  require_worlds(s);
  Rational a = 0;
  for (auto j : s) a += nu4_a(j);
  Rational b = nu4_b_sum(s);
  // Over all worlds the a-part sums to 1 and the b-part to 0.
  if (u.is_cofinite()) {
    a = 1 - a;
    b = -b;
  }
  return NonstdNumber(a) + NonstdNumber(b) * NonstdNumber::eps();
}

NonstdNumber nu4_bet_expectation(unsigned k) {
  if (k == 0) throw Error(ErrorKind::InvalidArgument, "k must be positive");
  const auto w1 = fincof_nps_value(NpsFamily::Nu4, FinCofEvent::finite({1}));
  const auto w2k = fincof_nps_value(NpsFamily::Nu4, FinCofEvent::finite({2ULL * k}));
  return w1 - NonstdNumber(pow2(2L * k - 1)) * w2k;
}

std::vector<FinCofTriple> fincof_chains(unsigned bound) {
  if (bound > 10) throw Error(ErrorKind::TooLarge, "chain enumeration is limited to bound 10");
  std::vector<FinCofTriple> out;
  std::size_t combos = 1;
  for (unsigned i = 0; i < bound; ++i) combos *= 4;
  // Each point takes one of four places; the meaning depends on the modes.
  for (int modes = 0; modes < 4; ++modes) {
    for (std::size_t code = 0; code < combos; ++code) {
      Set p[4];
      std::size_t c = code;
      for (unsigned i = 0; i < bound; ++i, c /= 4) p[c % 4].push_back(i);
      FinCofEvent v, x, u;
      switch (modes) {
        case 0:  // V, X, U finite: p0 = V, p1 = X - V, p2 = U - X
          v = FinCofEvent::finite(p[0]);
          x = FinCofEvent::finite(set_or(p[0], p[1]));
          u = FinCofEvent::finite(set_or(set_or(p[0], p[1]), p[2]));
          break;
        case 1:  // V, X finite, U cofinite: p2 = excluded from U
          v = FinCofEvent::finite(p[0]);
          x = FinCofEvent::finite(set_or(p[0], p[1]));
          u = FinCofEvent::cofinite(p[2]);
          break;
        case 2:  // V finite, X, U cofinite: p1 = excluded from X only, p2 = excluded from both
          v = FinCofEvent::finite(p[0]);
          x = FinCofEvent::cofinite(set_or(p[1], p[2]));
          u = FinCofEvent::cofinite(p[2]);
          break;
        default:  // all cofinite: p0 excluded from V only, p1 from V and X, p2 from all
          v = FinCofEvent::cofinite(set_or(set_or(p[0], p[1]), p[2]));
          x = FinCofEvent::cofinite(set_or(p[1], p[2]));
          u = FinCofEvent::cofinite(p[2]);
          break;
      }
      if (x.empty()) continue;
      out.emplace_back(std::move(v), std::move(x), std::move(u));
    }
  }
  return out;
}

ValidationReport sampled_axiom_check(CpsFamily family, const std::vector<FinCofTriple>& triples, bool check_nu1) {
  ValidationReport r;
  auto mu = [family](const FinCofEvent& v, const FinCofEvent& u) { return fincof_cond(family, v, u); };
  for (const auto& [v, x, u] : triples) {
    const auto at = [&] { return " at V = " + to_string(v) + ", X = " + to_string(x) + ", U = " + to_string(u); };
    if (!v.subset_of(x) || !x.subset_of(u) || x.empty()) {
      r.add("malformed triple" + at());
      continue;
    }
    for (const auto* c : {&u, &x})
      if (mu(*c, *c) != 1) r.add("CP1 fails for " + to_string(*c));
    for (const auto& q : {mu(v, u), mu(v, x), mu(x, u)})
      if (q < 0 || q > 1) r.add("value outside [0,1]" + at());
    if (mu(x, u) != mu(v, u) + mu(x - v, u)) r.add("CP2 fails" + at());
    if (mu(v, u) != mu(v, x) * mu(x, u)) r.add("CP3 fails" + at());
    if (family == CpsFamily::Mu1 && check_nu1) {
      for (const auto& [a, b] : {std::pair{v, u}, std::pair{v, x}, std::pair{x, u}}) {
        const NonstdNumber joint = fincof_nps_value(NpsFamily::Nu1, a & b);
        const NonstdNumber base = fincof_nps_value(NpsFamily::Nu1, b);
        const Rational st = joint.is_zero() ? Rational(0) : standard_part(joint / base);
        if (st != mu(a, b)) r.add("st(nu1(V|U)) != mu1(V|U) for V = " + to_string(a) + ", U = " + to_string(b));
      }
    }
  }
  return r;
}

}  // namespace extprob
