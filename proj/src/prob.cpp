#include "extprob/prob.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace extprob {

Event Event::from_indices(const std::vector<std::size_t>& indices) {
  std::uint64_t mask = 0;
  for (std::size_t i : indices) {
    if (i >= kMaxAtoms) throw Error(ErrorKind::TooLarge, "atom index " + std::to_string(i) + " exceeds 63");
    mask |= std::uint64_t{1} << i;
  }
  return Event(mask);
}

std::vector<std::size_t> Event::indices() const {
  std::vector<std::size_t> out;
  for (std::uint64_t m = mask_; m != 0; m &= m - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
  return out;
}

std::strong_ordering operator<=>(Event a, Event b) {
  if (a.mask_ == b.mask_) return std::strong_ordering::equal;
  // Below the lowest differing atom the index lists agree. Whichever event
  // holds that atom is smaller, unless the other has no larger atom at all
  // (then the other is a proper prefix and comes first).
  const std::uint64_t diff = a.mask_ ^ b.mask_;
  const std::uint64_t low = diff & (~diff + 1);
  const bool a_has = (a.mask_ & low) != 0;
  const std::uint64_t other = a_has ? b.mask_ : a.mask_;
  const bool other_continues = (other & ~(low | (low - 1))) != 0;
  const bool a_smaller = a_has ? other_continues : !other_continues;
  return a_smaller ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::string to_string(Event e) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (std::size_t i : e.indices()) {
    if (!first) os << ",";
    os << i;
    first = false;
  }
  os << "}";
  return os.str();
}

std::vector<Event> subsets_of(Event within) {
  std::vector<Event> out;
  const std::uint64_t m = within.mask();
  std::uint64_t s = 0;
  do {
    out.push_back(Event::from_mask(s));
    s = (s - m) & m;
  } while (s != 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Event> all_events(std::size_t num_atoms) {
  if (num_atoms > kMaxEnumerableAtoms)
    throw Error(ErrorKind::TooLarge, "event enumeration limited to " + std::to_string(kMaxEnumerableAtoms) + " atoms");
  return subsets_of(Event::full(num_atoms));
}

SpaceAlgebra::SpaceAlgebra(std::vector<std::string> worlds, std::vector<std::vector<std::size_t>> atoms)
    : worlds_(std::move(worlds)), atoms_(std::move(atoms)) {
  std::set<std::string> labels(worlds_.begin(), worlds_.end());
  if (labels.size() != worlds_.size()) throw Error(ErrorKind::InvalidArgument, "world labels must be distinct");
  if (atoms_.size() > kMaxAtoms) throw Error(ErrorKind::TooLarge, "at most 64 atoms are supported");
  std::vector<int> seen(worlds_.size(), 0);
  for (std::size_t a = 0; a < atoms_.size(); ++a) {
    if (atoms_[a].empty()) throw Error(ErrorKind::InvalidArgument, "atom " + std::to_string(a) + " is empty");
    for (std::size_t w : atoms_[a]) {
      if (w >= worlds_.size())
        throw Error(ErrorKind::InvalidArgument, "atom " + std::to_string(a) + " names an unknown world");
      if (seen[w]++ != 0)
        throw Error(ErrorKind::InvalidArgument, "world '" + worlds_[w] + "' belongs to more than one atom");
    }
  }
  for (std::size_t w = 0; w < worlds_.size(); ++w)
    if (seen[w] == 0) throw Error(ErrorKind::InvalidArgument, "world '" + worlds_[w] + "' is in no atom");
}

SpaceAlgebra SpaceAlgebra::discrete(std::vector<std::string> worlds) {
  std::vector<std::vector<std::size_t>> atoms;
  for (std::size_t w = 0; w < worlds.size(); ++w) atoms.push_back({w});
  return SpaceAlgebra(std::move(worlds), std::move(atoms));
}

Event SpaceAlgebra::event_from_worlds(const std::vector<std::string>& labels) const {
  std::set<std::size_t> chosen;
  for (const auto& l : labels) {
    auto it = std::find(worlds_.begin(), worlds_.end(), l);
    if (it == worlds_.end()) throw Error(ErrorKind::InvalidArgument, "unknown world '" + l + "'");
    chosen.insert(static_cast<std::size_t>(it - worlds_.begin()));
  }
  std::vector<std::size_t> idx;
  for (std::size_t a = 0; a < atoms_.size(); ++a) {
    std::size_t hit = 0;
    for (std::size_t w : atoms_[a]) hit += chosen.count(w);
    if (hit == 0) continue;
    if (hit != atoms_[a].size())
      throw Error(ErrorKind::InvalidArgument, "world set splits atom " + std::to_string(a) + "; events must be unions of atoms");
    idx.push_back(a);
  }
  return Event::from_indices(idx);
}

RandomVariable RandomVariable::indicator(Event e, std::size_t num_atoms) {
  RandomVariable x{std::vector<Rational>(num_atoms)};
  for (std::size_t a = 0; a < num_atoms; ++a)
    if (e.contains(a)) x.value[a] = 1;
  return x;
}

std::vector<Rational> value_range(const RandomVariable& x) {
  std::vector<Rational> v = x.value;
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

Event preimage(const RandomVariable& x, const std::vector<Rational>& values) {
  std::uint64_t mask = 0;
  for (std::size_t a = 0; a < x.num_atoms(); ++a)
    if (std::find(values.begin(), values.end(), x.value[a]) != values.end()) mask |= std::uint64_t{1} << a;
  return Event::from_mask(mask);
}

void require_same_algebra(std::size_t a, std::size_t b, const char* what) {
  if (a != b)
    throw Error(ErrorKind::AlgebraMismatch, std::string(what) + ": operands live on algebras with " + std::to_string(a) +
                                                " and " + std::to_string(b) + " atoms");
}

namespace {

template <class T>
ValidationReport validate_impl(const Measure<T>& m, std::size_t num_atoms, const std::string& where) {
  ValidationReport r;
  if (m.num_atoms() != num_atoms) {
    r.add(where + ": has " + std::to_string(m.num_atoms()) + " masses for " + std::to_string(num_atoms) + " atoms");
    return r;
  }
  T total{};
  for (std::size_t a = 0; a < num_atoms; ++a) {
    if (m.mass[a] < T(0)) r.add(where + ", atom " + std::to_string(a) + ": negative mass " + to_string(m.mass[a]));
    total += m.mass[a];
  }
  if (total != T(1)) r.add(where + ": sum of masses is " + to_string(total) + " (sum != 1)");
  if constexpr (std::is_same_v<T, NonstdNumber>) {
    for (std::size_t a = 0; a < num_atoms; ++a)
      if (classify(m.mass[a]).magnitude == Magnitude::Unlimited)
        r.add(where + ", atom " + std::to_string(a) + ": unlimited mass " + to_string(m.mass[a]));
  }
  return r;
}

template <class T>
ValidationReport validate_space_impl(const SpaceAlgebra& algebra, const std::vector<Measure<T>>& measures) {
  ValidationReport r;
  for (std::size_t i = 0; i < measures.size(); ++i) {
    auto sub = validate_impl(measures[i], algebra.num_atoms(), "measure " + std::to_string(i));
    r.issues.insert(r.issues.end(), sub.issues.begin(), sub.issues.end());
  }
  return r;
}

}  // namespace

ValidationReport validate_measure(const StdMeasure& m, std::size_t num_atoms, const std::string& where) {
  return validate_impl(m, num_atoms, where);
}
ValidationReport validate_measure(const NonstdMeasure& m, std::size_t num_atoms, const std::string& where) {
  return validate_impl(m, num_atoms, where);
}
ValidationReport validate_space(const SpaceAlgebra& algebra, const std::vector<StdMeasure>& measures) {
  return validate_space_impl(algebra, measures);
}
ValidationReport validate_space(const SpaceAlgebra& algebra, const std::vector<NonstdMeasure>& measures) {
  return validate_space_impl(algebra, measures);
}

NonstdMeasure to_nonstd(const StdMeasure& m) {
  NonstdMeasure out;
  out.mass.reserve(m.num_atoms());
  for (const auto& q : m.mass) out.mass.emplace_back(q);
  return out;
}

}  // namespace extprob
