#pragma once

// Conditional probability spaces on a finite algebra, stored as one
// conditional measure per conditioning event.

#include <map>
#include <optional>
#include <vector>

#include "extprob/lps.hpp"
#include "extprob/prob.hpp"

namespace extprob {

struct PopperSpace {
  std::size_t num_atoms = 0;
  /// F' (the keys, in lexicographic order) and mu(. | U) for each U in F'.
  std::map<Event, StdMeasure> table;

  bool conditionable(Event u) const { return table.count(u) != 0; }
  std::vector<Event> conditioning_events() const;
  /// mu(v | u); throws Error(InvalidArgument) when u is not in F'.
  Rational cond(Event v, Event u) const;

  friend bool operator==(const PopperSpace&, const PopperSpace&) = default;
};

enum class PopperLevel { Cps, Popper, Treelike };

/// Checks CP1-CP3 and, depending on the level, the Popper closure conditions
/// or the forest conditions. Each issue names the offending events.
ValidationReport validate_popper(const PopperSpace& space, PopperLevel level);

/// Parent of each conditioning event in the containment forest (nullopt for
/// roots), or Error(NotTreelike) when F' is not laminar.
std::map<Event, std::optional<Event>> tree_shape(const PopperSpace& space);

/// The image of an SLPS: F' = {U : mu(U) > 0}, conditionals taken at the
/// least positive level. Throws Error(NotAnSlps).
PopperSpace slps_to_popper(const LPS& slps);

/// Inverse of slps_to_popper on finite Popper spaces; the result is an LCPS.
/// Throws Error(InvalidPopperSpace) unless the input validates at level Popper.
LPS popper_to_slps(const PopperSpace& space);

struct TreelikeResult {
  LPS lps;
  /// Label of every conditioning event (least level giving it positive mass).
  std::map<Event, std::size_t> labels;
};

/// Builds an LCPS agreeing with a treelike cps on every pair (V, U) with U in
/// F'. Mixing weights are uniform over the maximal sets of each label.
/// Throws Error(NotTreelike) unless the input validates at level Treelike.
TreelikeResult treelike_to_lps(const PopperSpace& space);

}  // namespace extprob
