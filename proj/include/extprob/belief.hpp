#pragma once

#include <optional>
#include <string_view>

#include "extprob/lps.hpp"
#include "extprob/popper.hpp"
#include "extprob/prob.hpp"

namespace extprob {

enum class BeliefKind { Certain, Weak, Assumed, PopperStrong, PopperWeak, NpsCertain, NpsWeak };

std::string_view to_string(BeliefKind kind);
/// Accepts the CLI spellings ("certain", "popper-strong", ...); throws Error(Parse).
BeliefKind parse_belief_kind(std::string_view text);

struct BeliefResult {
  bool holds = false;
  std::optional<std::size_t> level;  // the witnessing level for Assumed
};

/// Certain, Weak and Assumed; other kinds throw Error(KindMismatch).
BeliefResult believe(const LPS& lps, Event u, BeliefKind kind);
/// PopperStrong and PopperWeak; PopperWeak needs the whole space in F'.
BeliefResult believe(const PopperSpace& space, Event u, BeliefKind kind);
/// NpsCertain and NpsWeak.
BeliefResult believe(const NonstdMeasure& nu, Event u, BeliefKind kind);

}  // namespace extprob
