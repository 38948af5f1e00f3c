#pragma once

// Worked examples with known answers, runnable as self-checking reports.

#include <string>
#include <string_view>
#include <vector>

#include "extprob/popper.hpp"
#include "extprob/prob.hpp"

namespace extprob::fixtures {

/// (1/2 + eps, 1/2 - eps) and the uniform measure on two worlds.
NonstdMeasure mcgee_nu1();
NonstdMeasure mcgee_nu2();

/// Four worlds with masses (1 - 2eps + e_i, eps - e_i, eps - e_i, e_i), where
/// e_1 = eps^2 and e_2 = eps^3.
NonstdMeasure approxindep_nu(int i);

struct NeedApproximate {
  NonstdMeasure nu;  // worlds (1,1),(1,2),(2,1),(2,2),(3,1),(3,2)
  RandomVariable x;  // first coordinate
  RandomVariable y;  // second coordinate
};
NeedApproximate needapproximate();

/// Four worlds, F' = all two-element sets: a cps that is not a Popper space.
PopperSpace nopopper();

struct Line {
  std::string text;
  bool pass;
};

struct Report {
  std::vector<Line> lines;
  bool ok() const;
};

std::vector<std::string> names();
/// Throws Error(InvalidArgument) for an unknown name.
Report run(std::string_view name);

}  // namespace extprob::fixtures
