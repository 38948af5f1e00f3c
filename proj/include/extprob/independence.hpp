#pragma once

// Independence of events and random variables for nonstandard measures,
// Popper spaces and LPSs, plus verification of strong-independence witnesses.

#include <optional>
#include <string>
#include <vector>

#include "extprob/lps.hpp"
#include "extprob/popper.hpp"
#include "extprob/prob.hpp"

namespace extprob {

enum class IndepMode { Exact, Approx };

/// U independent of V given `given`: nu(V | U n given) against nu(V | given),
/// compared exactly or by standard parts. Vacuously true when
/// nu(U n given) = 0.
bool indep_events(const NonstdMeasure& nu, Event u, Event v, Event given, IndepMode mode);

/// Same notion for a Popper space; vacuously true when U n given is not in F'.
bool indep_events(const PopperSpace& space, Event u, Event v, Event given);

/// X = x approximately independent of Y = y and conversely, for all values.
/// With require_product_range, every pair (x, y) must also occur on some atom.
bool weak_indep(const NonstdMeasure& nu, const RandomVariable& x, const RandomVariable& y,
                bool require_product_range = false);

struct SetIndepFailure {
  std::vector<Rational> u_values;                 // U_1, a subset of V(X)
  std::vector<std::vector<Rational>> v_values;    // V_i for each Y_i
  std::vector<std::vector<Rational>> given_values;  // V_i' for each Y_i
  Rational conditioned;    // st(nu(V | U n V'))
  Rational unconditioned;  // st(nu(V | V'))
};

struct SetIndepResult {
  bool holds = true;
  std::optional<SetIndepFailure> failure;  // first failing instance in enumeration order
};

/// X approximately independent of {Y_1, ..., Y_n}. Enumerates every U_1 and
/// every V_i, V_i', so the cost is exponential in the range sizes.
SetIndepResult approx_indep_set(const NonstdMeasure& nu, const RandomVariable& x, const std::vector<RandomVariable>& ys);

/// Each X_i approximately independent of the others.
bool approx_mutually_indep(const NonstdMeasure& nu, const std::vector<RandomVariable>& xs);

/// Product rule over every tuple of values.
bool exact_indep(const StdMeasure& m, const std::vector<RandomVariable>& xs);
bool exact_indep(const NonstdMeasure& nu, const std::vector<RandomVariable>& xs);

/// (1 - r0) mu0 + r0 [(1 - r1) mu1 + r1 [ ... ]]. Throws Error(LengthMismatch)
/// unless |r| = |lps| - 1 and Error(InvalidArgument) for entries outside (0,1).
StdMeasure box_combine(const LPS& lps, const std::vector<Rational>& r);

struct WitnessReport {
  bool accepted = true;
  std::vector<std::string> checked;   // obligations discharged
  std::vector<std::string> failures;  // obligations refuted
  std::vector<std::string> notes;     // obligations outside what is checked

  void fail(std::string what) {
    accepted = false;
    failures.push_back(std::move(what));
  }
};

/// Every mixture lps [] r^j makes xs independent.
WitnessReport verify_bbd_r(const LPS& target, const std::vector<RandomVariable>& xs,
                           const std::vector<std::vector<Rational>>& rs);
/// witness ~ target and xs independent under witness.
WitnessReport verify_bbd_nps(const LPS& target, const std::vector<RandomVariable>& xs, const NonstdMeasure& witness);
/// nps_to_popper(witness) = target and xs independent under witness.
WitnessReport verify_kr_nps(const PopperSpace& target, const std::vector<RandomVariable>& xs,
                            const NonstdMeasure& witness);
/// Each listed measure is positive on F' and makes xs independent.
WitnessReport verify_kr_seq(const PopperSpace& target, const std::vector<RandomVariable>& xs,
                            const std::vector<StdMeasure>& witness);

}  // namespace extprob
