#include "extprob/independence.hpp"

#include <unordered_map>

#include "extprob/nps_bridge.hpp"

namespace extprob {

namespace {

void same_algebra(std::size_t n, Event e, const char* what) {
  if (e.span() > n) throw Error(ErrorKind::AlgebraMismatch, std::string(what) + ": event " + to_string(e) + " is outside the algebra");
}

void same_algebra(std::size_t n, const std::vector<RandomVariable>& xs, const char* what) {
  for (const auto& x : xs) require_same_algebra(n, x.num_atoms(), what);
}

class EventMeasures {
 public:
  explicit EventMeasures(const NonstdMeasure& nu) : nu_(nu) {}
  const NonstdNumber& operator()(Event e) {
    auto it = cache_.find(e.mask());
    if (it != cache_.end()) return it->second;
    return cache_.emplace(e.mask(), measure_event(nu_, e)).first->second;
  }

 private:
  const NonstdMeasure& nu_;
  std::unordered_map<std::uint64_t, NonstdNumber> cache_;
};

// st(nu(V | U n G)) and st(nu(V | G)); nullopt when nu(U n G) = 0.
std::optional<std::pair<Rational, Rational>> approx_sides(EventMeasures& m, Event u, Event v, Event g) {
  const NonstdNumber& ug = m(u & g);
  if (ug.is_zero()) return std::nullopt;
  const NonstdNumber& vug = m(v & u & g);
  const NonstdNumber& gm = m(g);
  const NonstdNumber& vg = m(v & g);
  const Rational lhs = vug.is_zero() ? Rational(0) : standard_part_of_ratio(vug, ug);
  const Rational rhs = vg.is_zero() ? Rational(0) : standard_part_of_ratio(vg, gm);
  return std::make_pair(lhs, rhs);
}

bool approx_holds(EventMeasures& m, Event u, Event v, Event g) {
  auto s = approx_sides(m, u, v, g);
  return !s || s->first == s->second;
}

// Nonempty level sets of x, paired with their values, in increasing value order.
std::vector<std::pair<Rational, Event>> level_sets(const RandomVariable& x) {
  std::vector<std::pair<Rational, Event>> out;
  for (const auto& v : value_range(x)) out.emplace_back(v, preimage(x, {v}));
  return out;
}

template <class T>
bool exact_indep_impl(const Measure<T>& m, const std::vector<RandomVariable>& xs) {
  same_algebra(m.num_atoms(), xs, "exact independence");
  std::vector<std::vector<std::pair<Rational, Event>>> levels;
  for (const auto& x : xs) levels.push_back(level_sets(x));
  std::vector<std::vector<T>> marginal(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (const auto& [v, e] : levels[i]) marginal[i].push_back(measure_event(m, e));

  std::vector<std::size_t> idx(xs.size(), 0);
  while (true) {
    Event joint = Event::full(m.num_atoms());
    T product(1);
    for (std::size_t i = 0; i < xs.size(); ++i) {
      joint = joint & levels[i][idx[i]].second;
      product *= marginal[i][idx[i]];
    }
    if (measure_event(m, joint) != product) return false;
    std::size_t i = 0;
    while (i < xs.size() && ++idx[i] == levels[i].size()) idx[i++] = 0;
    if (i == xs.size()) return true;
  }
}

std::vector<Rational> pick(const std::vector<Rational>& range, Event subset) {
  std::vector<Rational> out;
  for (std::size_t i : subset.indices()) out.push_back(range[i]);
  return out;
}

std::string indep_label(std::size_t count) { return std::to_string(count) + " variables"; }

}  // namespace

bool indep_events(const NonstdMeasure& nu, Event u, Event v, Event given, IndepMode mode) {
  const std::size_t n = nu.num_atoms();
  same_algebra(n, u, "independence");
  same_algebra(n, v, "independence");
  same_algebra(n, given, "independence");
  EventMeasures m(nu);
  if (mode == IndepMode::Approx) return approx_holds(m, u, v, given);
  const NonstdNumber& ug = m(u & given);
  if (ug.is_zero()) return true;
  return m(v & u & given) / ug == m(v & given) / m(given);
}

bool indep_events(const PopperSpace& space, Event u, Event v, Event given) {
  same_algebra(space.num_atoms, u, "independence");
  same_algebra(space.num_atoms, v, "independence");
  same_algebra(space.num_atoms, given, "independence");
  const Event ug = u & given;
  if (!space.conditionable(ug)) return true;
  if (!space.conditionable(given))
    throw Error(ErrorKind::InvalidArgument, "conditioning event " + to_string(given) + " is not in F'");
  return space.cond(v, ug) == space.cond(v, given);
}

bool weak_indep(const NonstdMeasure& nu, const RandomVariable& x, const RandomVariable& y, bool require_product_range) {
  require_same_algebra(nu.num_atoms(), x.num_atoms(), "weak independence");
  require_same_algebra(nu.num_atoms(), y.num_atoms(), "weak independence");
  EventMeasures m(nu);
  const Event w = Event::full(nu.num_atoms());
  for (const auto& [xv, xe] : level_sets(x))
    for (const auto& [yv, ye] : level_sets(y)) {
      if (require_product_range && (xe & ye).empty()) return false;
      if (!approx_holds(m, xe, ye, w) || !approx_holds(m, ye, xe, w)) return false;
    }
  return true;
}

SetIndepResult approx_indep_set(const NonstdMeasure& nu, const RandomVariable& x, const std::vector<RandomVariable>& ys) {
  const std::size_t n = nu.num_atoms();
  require_same_algebra(n, x.num_atoms(), "approximate independence");
  same_algebra(n, ys, "approximate independence");
  EventMeasures m(nu);

  const auto xrange = value_range(x);
  std::vector<std::vector<Rational>> yranges;
  std::vector<std::vector<Event>> ysubsets;  // subsets of each range, lexicographic
  std::vector<std::vector<Event>> ypre;      // preimage of each subset
  for (const auto& y : ys) {
    yranges.push_back(value_range(y));
    ysubsets.push_back(all_events(yranges.back().size()));
    std::vector<Event> pre;
    for (Event s : ysubsets.back()) pre.push_back(preimage(y, pick(yranges.back(), s)));
    ypre.push_back(std::move(pre));
  }
  const std::size_t k = ys.size();

  // Odometer over one subset index per Y_i; returns false after the last tuple.
  auto advance = [&](std::vector<std::size_t>& idx) {
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (++idx[i] < ysubsets[i].size()) return true;
      idx[i] = 0;
    }
    return false;
  };
  auto joint = [&](const std::vector<std::size_t>& idx) {
    Event e = Event::full(n);
    for (std::size_t i = 0; i < k; ++i) e = e & ypre[i][idx[i]];
    return e;
  };

  SetIndepResult result;
  for (Event us : all_events(xrange.size())) {
    const Event u = preimage(x, pick(xrange, us));
    std::vector<std::size_t> vi(k, 0);
    do {
      const Event v = joint(vi);
      std::vector<std::size_t> gi(k, 0);
      do {
        const Event g = joint(gi);
        auto sides = approx_sides(m, u, v, g);
        if (sides && sides->first != sides->second) {
          SetIndepFailure f;
          f.u_values = pick(xrange, us);
          for (std::size_t i = 0; i < k; ++i) {
            f.v_values.push_back(pick(yranges[i], ysubsets[i][vi[i]]));
            f.given_values.push_back(pick(yranges[i], ysubsets[i][gi[i]]));
          }
          f.conditioned = sides->first;
          f.unconditioned = sides->second;
          result.holds = false;
          result.failure = std::move(f);
          return result;
        }
      } while (advance(gi));
    } while (advance(vi));
  }
  return result;
}

bool approx_mutually_indep(const NonstdMeasure& nu, const std::vector<RandomVariable>& xs) {
  for (std::size_t i = 0; i < xs.size(); ++i) {
    std::vector<RandomVariable> rest;
    for (std::size_t j = 0; j < xs.size(); ++j)
      if (j != i) rest.push_back(xs[j]);
    if (!approx_indep_set(nu, xs[i], rest).holds) return false;
  }
  return true;
}

bool exact_indep(const StdMeasure& m, const std::vector<RandomVariable>& xs) { return exact_indep_impl(m, xs); }
bool exact_indep(const NonstdMeasure& nu, const std::vector<RandomVariable>& xs) { return exact_indep_impl(nu, xs); }

StdMeasure box_combine(const LPS& lps, const std::vector<Rational>& r) {
  if (r.size() + 1 != lps.size())
    throw Error(ErrorKind::LengthMismatch, "r has " + std::to_string(r.size()) + " entries for an LPS of length " +
                                               std::to_string(lps.size()));
  for (const auto& q : r)
    if (q <= 0 || q >= 1) throw Error(ErrorKind::InvalidArgument, "r entries must lie in (0,1), got " + to_string(q));
  StdMeasure acc = lps.measures.back();
  for (std::size_t i = r.size(); i-- > 0;)
    for (std::size_t a = 0; a < acc.num_atoms(); ++a) acc.mass[a] = (1 - r[i]) * lps[i].mass[a] + r[i] * acc.mass[a];
  return acc;
}

WitnessReport verify_bbd_r(const LPS& target, const std::vector<RandomVariable>& xs,
                           const std::vector<std::vector<Rational>>& rs) {
  same_algebra(target.num_atoms(), xs, "witness verification");
  if (rs.empty()) throw Error(ErrorKind::ShapeMismatch, "bbd-r witness needs at least one r vector");
  WitnessReport rep;
  for (std::size_t j = 0; j < rs.size(); ++j) {
    const StdMeasure mix = box_combine(target, rs[j]);
    if (exact_indep(mix, xs))
      rep.checked.push_back("r vector " + std::to_string(j) + ": " + indep_label(xs.size()) + " independent under the mixture");
    else
      rep.fail("r vector " + std::to_string(j) + ": variables are not independent under the mixture");
  }
  rep.notes.push_back("convergence of the r vectors to 0 is asserted by the caller, not verified");
  return rep;
}

WitnessReport verify_bbd_nps(const LPS& target, const std::vector<RandomVariable>& xs, const NonstdMeasure& witness) {
  same_algebra(target.num_atoms(), xs, "witness verification");
  require_same_algebra(target.num_atoms(), witness.num_atoms(), "witness verification");
  WitnessReport rep;
  const auto valid = validate_measure(witness, witness.num_atoms(), "witness");
  if (!valid.ok()) throw Error(ErrorKind::ShapeMismatch, valid.issues.front());
  if (lps_equiv(nps_to_lps(witness).lps, target).equivalent())
    rep.checked.push_back("witness is equivalent to the target LPS");
  else
    rep.fail("witness is not equivalent to the target LPS");
  if (exact_indep(witness, xs))
    rep.checked.push_back(indep_label(xs.size()) + " independent under the witness");
  else
    rep.fail("variables are not independent under the witness");
  rep.notes.push_back("elementarity of the witness field is not checked; Q(eps) is not an elementary extension of the reals");
  return rep;
}

WitnessReport verify_kr_nps(const PopperSpace& target, const std::vector<RandomVariable>& xs,
                            const NonstdMeasure& witness) {
  same_algebra(target.num_atoms, xs, "witness verification");
  require_same_algebra(target.num_atoms, witness.num_atoms(), "witness verification");
  WitnessReport rep;
  const auto valid = validate_measure(witness, witness.num_atoms(), "witness");
  if (!valid.ok()) throw Error(ErrorKind::ShapeMismatch, valid.issues.front());
  if (nps_to_popper(witness) == target)
    rep.checked.push_back("witness maps onto the target Popper space");
  else
    rep.fail("witness does not map onto the target Popper space");
  if (exact_indep(witness, xs))
    rep.checked.push_back(indep_label(xs.size()) + " independent under the witness");
  else
    rep.fail("variables are not independent under the witness");
  return rep;
}

WitnessReport verify_kr_seq(const PopperSpace& target, const std::vector<RandomVariable>& xs,
                            const std::vector<StdMeasure>& witness) {
  same_algebra(target.num_atoms, xs, "witness verification");
  if (witness.empty()) throw Error(ErrorKind::ShapeMismatch, "kr-seq witness needs at least one measure");
  WitnessReport rep;
  for (const auto& x : xs)
    for (const auto& [v, e] : level_sets(x))
      if (!target.conditionable(e)) rep.fail("level set " + to_string(e) + " of a variable is not in F'");
  for (std::size_t j = 0; j < witness.size(); ++j) {
    const auto& m = witness[j];
    require_same_algebra(target.num_atoms, m.num_atoms(), "witness verification");
    const auto valid = validate_measure(m, m.num_atoms(), "measure " + std::to_string(j));
    if (!valid.ok()) throw Error(ErrorKind::ShapeMismatch, valid.issues.front());
    const std::string tag = "measure " + std::to_string(j);
    bool positive = true;
    for (const auto& [u, cm] : target.table)
      if (measure_event(m, u) == 0) {
        rep.fail(tag + ": gives " + to_string(u) + " probability 0");
        positive = false;
        break;
      }
    if (positive) rep.checked.push_back(tag + ": positive on every conditioning event");
    if (exact_indep(m, xs))
      rep.checked.push_back(tag + ": " + indep_label(xs.size()) + " independent");
    else
      rep.fail(tag + ": variables are not independent");
  }
  rep.notes.push_back("convergence of the sequence to the target is asserted by the caller, not verified");
  return rep;
}

}  // namespace extprob
