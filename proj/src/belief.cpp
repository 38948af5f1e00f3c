#include "extprob/belief.hpp"

#include <array>
#include <utility>

namespace extprob {

namespace {

constexpr std::array<std::pair<BeliefKind, std::string_view>, 7> kNames{{
    {BeliefKind::Certain, "certain"},
    {BeliefKind::Weak, "weak"},
    {BeliefKind::Assumed, "assumed"},
    {BeliefKind::PopperStrong, "popper-strong"},
    {BeliefKind::PopperWeak, "popper-weak"},
    {BeliefKind::NpsCertain, "nps-certain"},
    {BeliefKind::NpsWeak, "nps-weak"},
}};

[[noreturn]] void mismatch(BeliefKind kind, const char* model) {
  throw Error(ErrorKind::KindMismatch, "belief kind '" + std::string(to_string(kind)) + "' does not apply to " + model);
}

void check_event(std::size_t n, Event u) {
  if (u.span() > n) throw Error(ErrorKind::AlgebraMismatch, "event " + to_string(u) + " is outside the algebra");
}

}  // namespace

std::string_view to_string(BeliefKind kind) {
  for (const auto& [k, name] : kNames)
    if (k == kind) return name;
  return "?";
}

BeliefKind parse_belief_kind(std::string_view text) {
  for (const auto& [k, name] : kNames)
    if (name == text) return k;
  throw Error(ErrorKind::Parse, "unknown belief kind '" + std::string(text) + "'");
}

BeliefResult believe(const LPS& lps, Event u, BeliefKind kind) {
  check_event(lps.num_atoms(), u);
  const auto values = lps_measure_event(lps, u);
  switch (kind) {
    case BeliefKind::Certain: {
      for (const auto& v : values)
        if (v != 1) return {};
      return {true, std::nullopt};
    }
    case BeliefKind::Weak:
      return {values.front() == 1, std::nullopt};
    case BeliefKind::Assumed: {
      Event covered;
      for (std::size_t b = 0; b < lps.size(); ++b) {
        if (values[b] != 1) return {};  // (a) fails here and for every later level
        covered = covered | support(lps[b]);
        bool rest_null = true;
        for (std::size_t c = b + 1; c < lps.size(); ++c)
          if (values[c] != 0) rest_null = false;
        if (rest_null) {
          if (u.subset_of(covered)) return {true, b};
          return {};  // no other level can satisfy (a) and (b)
        }
      }
      return {};
    }
    default:
      mismatch(kind, "an LPS");
  }
}

BeliefResult believe(const PopperSpace& space, Event u, BeliefKind kind) {
  check_event(space.num_atoms, u);
  if (kind != BeliefKind::PopperStrong && kind != BeliefKind::PopperWeak) mismatch(kind, "a Popper space");
  const Event w = Event::full(space.num_atoms);
  if (kind == BeliefKind::PopperWeak && !space.conditionable(w))
    throw Error(ErrorKind::InvalidArgument, "weak belief needs the whole space in F'");
  for (const auto& [v, m] : space.table) {
    if (kind == BeliefKind::PopperWeak && space.cond(v, w) == 0) continue;
    if (measure_event(m, u) != 1) return {};
  }
  return {true, std::nullopt};
}

BeliefResult believe(const NonstdMeasure& nu, Event u, BeliefKind kind) {
  check_event(nu.num_atoms(), u);
  const NonstdNumber m = measure_event(nu, u);
  switch (kind) {
    case BeliefKind::NpsCertain:
      return {m == NonstdNumber(1), std::nullopt};
    case BeliefKind::NpsWeak:
      return {standard_part(m) == 1, std::nullopt};
    default:
      mismatch(kind, "a nonstandard measure");
  }
}

}  // namespace extprob
