#pragma once

// Finite algebras given by atom partitions, events as atom sets, and standard
// or nonstandard finitely additive measures over the atoms.

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "extprob/error.hpp"
#include "extprob/nonstd.hpp"

namespace extprob {

inline constexpr std::size_t kMaxAtoms = 64;
/// Bound for operations that enumerate every event of the algebra.
inline constexpr std::size_t kMaxEnumerableAtoms = 16;

/// A set of atoms of a finite algebra. Ordering is lexicographic on the
/// sorted index list, which is the order used by every report.
class Event {
 public:
  constexpr Event() = default;
  static constexpr Event from_mask(std::uint64_t mask) { return Event(mask); }
  static Event from_indices(const std::vector<std::size_t>& indices);
  static constexpr Event atom(std::size_t index) { return Event(std::uint64_t{1} << index); }
  static constexpr Event full(std::size_t num_atoms) {
    return Event(num_atoms >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << num_atoms) - 1);
  }

  constexpr std::uint64_t mask() const { return mask_; }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(mask_)); }
  constexpr bool contains(std::size_t atom) const { return (mask_ >> atom) & 1U; }
  constexpr bool subset_of(Event o) const { return (mask_ & ~o.mask_) == 0; }
  constexpr bool disjoint(Event o) const { return (mask_ & o.mask_) == 0; }
  std::vector<std::size_t> indices() const;
  /// Highest atom index + 1; 0 for the empty event.
  constexpr std::size_t span() const { return mask_ == 0 ? 0 : 64 - static_cast<std::size_t>(std::countl_zero(mask_)); }

  constexpr Event complement(std::size_t num_atoms) const { return Event(~mask_ & full(num_atoms).mask_); }
  friend constexpr Event operator|(Event a, Event b) { return Event(a.mask_ | b.mask_); }
  friend constexpr Event operator&(Event a, Event b) { return Event(a.mask_ & b.mask_); }
  friend constexpr Event operator-(Event a, Event b) { return Event(a.mask_ & ~b.mask_); }
  friend constexpr bool operator==(Event, Event) = default;
  friend std::strong_ordering operator<=>(Event a, Event b);

 private:
  constexpr explicit Event(std::uint64_t mask) : mask_(mask) {}
  std::uint64_t mask_ = 0;
};

std::string to_string(Event e);  // "{0,2,3}"

/// All events over num_atoms atoms in lexicographic order (empty first).
std::vector<Event> all_events(std::size_t num_atoms);
/// All subsets of `within`, in lexicographic order.
std::vector<Event> subsets_of(Event within);

/// Worlds with labels, partitioned into atoms (the basic sets of the algebra).
class SpaceAlgebra {
 public:
  /// Throws Error(InvalidArgument) unless atoms partition the worlds.
  SpaceAlgebra(std::vector<std::string> worlds, std::vector<std::vector<std::size_t>> atoms);
  /// Discrete algebra: one atom per world.
  static SpaceAlgebra discrete(std::vector<std::string> worlds);

  const std::vector<std::string>& worlds() const { return worlds_; }
  const std::vector<std::vector<std::size_t>>& atoms() const { return atoms_; }
  std::size_t num_atoms() const { return atoms_.size(); }
  Event full() const { return Event::full(atoms_.size()); }
  /// Event made of the given worlds; throws Error(InvalidArgument) when the
  /// set is not a union of atoms.
  Event event_from_worlds(const std::vector<std::string>& labels) const;

  friend bool operator==(const SpaceAlgebra&, const SpaceAlgebra&) = default;

 private:
  std::vector<std::string> worlds_;
  std::vector<std::vector<std::size_t>> atoms_;
};

template <class T>
struct Measure {
  std::vector<T> mass;  // indexed by atom

  std::size_t num_atoms() const { return mass.size(); }
  friend bool operator==(const Measure&, const Measure&) = default;
};

using StdMeasure = Measure<Rational>;
using NonstdMeasure = Measure<NonstdNumber>;

struct RandomVariable {
  std::vector<Rational> value;  // indexed by atom

  std::size_t num_atoms() const { return value.size(); }
  static RandomVariable indicator(Event e, std::size_t num_atoms);
  friend bool operator==(const RandomVariable&, const RandomVariable&) = default;
};

/// Distinct values of X in increasing order.
std::vector<Rational> value_range(const RandomVariable& x);
/// Atoms where X takes a value in `values`.
Event preimage(const RandomVariable& x, const std::vector<Rational>& values);

struct ValidationReport {
  std::vector<std::string> issues;

  bool ok() const { return issues.empty(); }
  void add(std::string issue) { issues.push_back(std::move(issue)); }
};

ValidationReport validate_measure(const StdMeasure& m, std::size_t num_atoms, const std::string& where = "measure");
ValidationReport validate_measure(const NonstdMeasure& m, std::size_t num_atoms, const std::string& where = "measure");
/// Validates each measure against the algebra; empty report means valid.
ValidationReport validate_space(const SpaceAlgebra& algebra, const std::vector<StdMeasure>& measures);
ValidationReport validate_space(const SpaceAlgebra& algebra, const std::vector<NonstdMeasure>& measures);

void require_same_algebra(std::size_t a, std::size_t b, const char* what);

template <class T>
T measure_event(const Measure<T>& m, Event e) {
  if (e.span() > m.num_atoms())
    throw Error(ErrorKind::AlgebraMismatch, "event " + to_string(e) + " is not in the measure's algebra");
  T total{};
  for (std::size_t a = 0; a < m.num_atoms(); ++a)
    if (e.contains(a) && m.mass[a] != 0) total += m.mass[a];
  return total;
}

template <class T>
T expect(const Measure<T>& m, const RandomVariable& x) {
  require_same_algebra(m.num_atoms(), x.num_atoms(), "expectation");
  T total{};
  for (std::size_t a = 0; a < m.num_atoms(); ++a)
    if (x.value[a] != 0 && m.mass[a] != 0) total += T(x.value[a]) * m.mass[a];
  return total;
}

/// m(. | u); throws Error(ZeroConditioningEvent) when m(u) = 0.
template <class T>
Measure<T> condition(const Measure<T>& m, Event u) {
  const T mu = measure_event(m, u);
  if (mu == 0) throw Error(ErrorKind::ZeroConditioningEvent, "conditioning event " + to_string(u) + " has measure 0");
  Measure<T> out{std::vector<T>(m.num_atoms())};
  for (std::size_t a = 0; a < m.num_atoms(); ++a)
    if (u.contains(a)) out.mass[a] = m.mass[a] / mu;
  return out;
}

/// Support as an event (atoms with nonzero mass).
template <class T>
Event support(const Measure<T>& m) {
  std::uint64_t mask = 0;
  for (std::size_t a = 0; a < m.num_atoms(); ++a)
    if (m.mass[a] != 0) mask |= std::uint64_t{1} << a;
  return Event::from_mask(mask);
}

/// Embeds a standard measure into Q(eps).
NonstdMeasure to_nonstd(const StdMeasure& m);

}  // namespace extprob
