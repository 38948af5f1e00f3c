#include "extprob/popper.hpp"

#include <algorithm>

namespace extprob {

std::vector<Event> PopperSpace::conditioning_events() const {
  std::vector<Event> out;
  out.reserve(table.size());
  for (const auto& [u, m] : table) out.push_back(u);
  return out;
}

Rational PopperSpace::cond(Event v, Event u) const {
  auto it = table.find(u);
  if (it == table.end()) throw Error(ErrorKind::InvalidArgument, "event " + to_string(u) + " is not in F'");
  return measure_event(it->second, v);
}

namespace {

bool laminar_issues(const PopperSpace& s, ValidationReport& r) {
  bool ok = true;
  const auto fs = s.conditioning_events();
  for (std::size_t i = 0; i < fs.size(); ++i)
    for (std::size_t j = i + 1; j < fs.size(); ++j) {
      const Event a = fs[i];
      const Event b = fs[j];
      if (a.disjoint(b) || a.subset_of(b) || b.subset_of(a)) continue;
      r.add("T2: " + to_string(a) + " and " + to_string(b) + " overlap without nesting");
      ok = false;
    }
  return ok;
}

}  // namespace

std::map<Event, std::optional<Event>> tree_shape(const PopperSpace& space) {
  ValidationReport r;
  if (!laminar_issues(space, r)) throw Error(ErrorKind::NotTreelike, r.issues.front());
  std::map<Event, std::optional<Event>> parent;
  for (const auto& [u, m] : space.table) {
    std::optional<Event> best;
    for (const auto& [p, pm] : space.table)
      if (p != u && u.subset_of(p) && (!best || p.size() < best->size())) best = p;
    parent[u] = best;
  }
  return parent;
}

ValidationReport validate_popper(const PopperSpace& space, PopperLevel level) {
  ValidationReport r;
  const std::size_t n = space.num_atoms;
  bool structural_ok = true;
  for (const auto& [u, m] : space.table) {
    const std::string where = "conditional given " + to_string(u);
    if (u.empty()) {
      r.add("empty set in F'");
      structural_ok = false;
    }
    if (u.span() > n) {
      r.add(to_string(u) + " is not an event of the algebra");
      structural_ok = false;
      continue;
    }
    auto sub = validate_measure(m, n, where);
    if (!sub.ok()) {
      structural_ok = false;
      r.issues.insert(r.issues.end(), sub.issues.begin(), sub.issues.end());
      continue;
    }
    if (measure_event(m, u) != 1) r.add("CP1: mu(U|U) = " + to_string(measure_event(m, u)) + " for U = " + to_string(u));
  }
  if (!structural_ok) return r;

  // CP3 at atom level; additivity extends it to every V contained in X.
  for (const auto& [u, mu] : space.table)
    for (const auto& [x, mx] : space.table) {
      if (x == u || !x.subset_of(u)) continue;
      const Rational x_given_u = measure_event(mu, x);
      for (std::size_t a : x.indices())
        if (mu.mass[a] != mx.mass[a] * x_given_u) {
          r.add("CP3: mu(V|U) != mu(V|X) * mu(X|U) for V = {" + std::to_string(a) + "}, X = " + to_string(x) +
                ", U = " + to_string(u));
          break;
        }
    }

  if (level == PopperLevel::Popper) {
    if (space.table.empty()) r.add("F' is empty");
    for (const auto& [u, m] : space.table) {
      for (std::size_t a = 0; a < n; ++a) {
        if (u.contains(a)) continue;
        const Event bigger = u | Event::atom(a);
        if (!space.conditionable(bigger)) {
          r.add("closure (b): " + to_string(u) + " is in F' but its superset " + to_string(bigger) + " is not");
          break;
        }
      }
      // With (b) in force, (c) reduces to singletons of the support.
      for (std::size_t a : support(m).indices()) {
        if (!space.conditionable(Event::atom(a))) {
          r.add("closure (c): mu({" + std::to_string(a) + "}|" + to_string(u) + ") > 0 but {" + std::to_string(a) +
                "} is not in F'");
          break;
        }
      }
    }
  } else if (level == PopperLevel::Treelike) {
    if (laminar_issues(space, r)) {
      const auto parent = tree_shape(space);
      std::map<Event, Event> covered;
      Event roots;
      for (const auto& [u, p] : parent) {
        if (p)
          covered[*p] = covered[*p] | u;
        else
          roots = roots | u;
      }
      for (const auto& [u, p] : parent) {
        auto it = covered.find(u);
        if (it != covered.end() && it->second != u)
          r.add("T2: children of " + to_string(u) + " cover only " + to_string(it->second));
      }
      if (roots != Event::full(n)) r.add("T3: roots cover only " + to_string(roots));
    }
  }
  return r;
}

PopperSpace slps_to_popper(const LPS& slps) {
  if (!classify_lps(slps).is_slps) throw Error(ErrorKind::NotAnSlps, "input LPS is not an SLPS");
  PopperSpace out;
  out.num_atoms = slps.num_atoms();
  for (Event u : all_events(out.num_atoms)) {
    auto level = first_positive_level(slps, u);
    if (level) out.table.emplace(u, condition(slps[*level], u));
  }
  return out;
}

LPS popper_to_slps(const PopperSpace& space) {
  const auto report = validate_popper(space, PopperLevel::Popper);
  if (!report.ok()) throw Error(ErrorKind::InvalidPopperSpace, report.issues.front());
  const Event w = Event::full(space.num_atoms);
  std::vector<StdMeasure> levels;
  Event covered;
  Event rest = w;
  while (!rest.empty() && space.conditionable(rest)) {
    const StdMeasure& m = space.table.at(rest);
    levels.push_back(m);
    covered = covered | support(m);
    rest = w - covered;
  }
  return LPS(std::move(levels));
}

TreelikeResult treelike_to_lps(const PopperSpace& space) {
  const auto report = validate_popper(space, PopperLevel::Treelike);
  if (!report.ok()) throw Error(ErrorKind::NotTreelike, report.issues.front());
  const auto fs = space.conditioning_events();
  std::map<Event, std::size_t> label;
  std::vector<StdMeasure> levels;
  for (std::size_t k = 0; label.size() < fs.size(); ++k) {
    std::vector<Event> fresh;
    for (Event u : fs) {
      if (label.count(u)) continue;
      const bool maximal = std::none_of(fs.begin(), fs.end(), [&](Event o) {
        return o != u && !label.count(o) && u.subset_of(o);
      });
      if (maximal) fresh.push_back(u);
    }
    for (Event u : fresh) label[u] = k;
    for (bool changed = true; changed;) {
      changed = false;
      for (Event v : fs) {
        if (label.count(v)) continue;
        for (const auto& [u, l] : label)
          if (l == k && space.cond(v, u) > 0) {
            label[v] = k;
            changed = true;
            break;
          }
      }
    }
    std::vector<Event> tops;
    for (const auto& [u, l] : label) {
      if (l != k) continue;
      const bool maximal = std::none_of(label.begin(), label.end(), [&](const auto& o) {
        return o.second == k && o.first != u && u.subset_of(o.first);
      });
      if (maximal) tops.push_back(u);
    }
    StdMeasure mix{std::vector<Rational>(space.num_atoms)};
    const Rational weight(1, static_cast<unsigned long>(tops.size()));
    for (Event u : tops) {
      const auto& m = space.table.at(u);
      for (std::size_t a = 0; a < space.num_atoms; ++a) mix.mass[a] += weight * m.mass[a];
    }
    levels.push_back(std::move(mix));
  }
  return TreelikeResult{LPS(std::move(levels)), std::move(label)};
}

}  // namespace extprob
