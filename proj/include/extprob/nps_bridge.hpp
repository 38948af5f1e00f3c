#pragma once

// Maps between nonstandard probability measures, LPSs and Popper spaces, and
// the two equivalences on nonstandard measures.

#include <vector>

#include "extprob/lps.hpp"
#include "extprob/popper.hpp"
#include "extprob/prob.hpp"

namespace extprob {

struct Decomposition {
  LPS lps;
  std::vector<NonstdNumber> coefficients;
};

/// (1 - eps - ... - eps^k) mu_0 + eps mu_1 + ... + eps^k mu_k.
NonstdMeasure lps_to_nps(const LPS& lps);

/// sum_i coefficients[i] * lps[i]; throws Error(LengthMismatch).
NonstdMeasure recompose(const LPS& lps, const std::vector<NonstdNumber>& coefficients);

/// Writes nu as sum_i eps_i mu_i with positive eps_i summing to 1 and
/// st(eps_{i+1}/eps_i) = 0. Throws Error(InvalidArgument) on invalid input.
Decomposition nps_to_lps(const NonstdMeasure& nu);

/// F' = {U : nu(U) != 0}, mu(V|U) = st(nu(V n U) / nu(U)).
PopperSpace nps_to_popper(const NonstdMeasure& nu);

/// Decides nu_a ~ nu_b via decomposition; the certificate refers to the
/// decomposed LPSs and is checked against both measures before returning.
EquivCertificate nps_aeq(const NonstdMeasure& a, const NonstdMeasure& b);

/// Agreement of zero-sets and standard parts of every conditional.
bool nps_simeq(const NonstdMeasure& a, const NonstdMeasure& b);

/// Lexicographic comparison of E(X) and E(Y) in Q(eps).
std::strong_ordering nps_expect_cmp(const NonstdMeasure& nu, const RandomVariable& x, const RandomVariable& y);

/// True iff coefficients are positive, sum to 1, have infinitesimal
/// consecutive ratios, and sum_i eps_i mu_i ~ lps. Throws Error(LengthMismatch).
bool verify_aeqchar(const LPS& lps, const std::vector<NonstdNumber>& coefficients);

}  // namespace extprob
