#pragma once

// Lexicographic probability systems of finite length.

#include <compare>
#include <optional>
#include <utility>
#include <vector>

#include "extprob/prob.hpp"

namespace extprob {

using RationalMatrix = std::vector<std::vector<Rational>>;

struct LPS {
  std::vector<StdMeasure> measures;

  /// Throws Error(InvalidArgument) for an empty sequence and
  /// Error(AlgebraMismatch) when lengths differ.
  explicit LPS(std::vector<StdMeasure> ms);

  std::size_t size() const { return measures.size(); }
  std::size_t num_atoms() const { return measures.front().num_atoms(); }
  const StdMeasure& operator[](std::size_t i) const { return measures[i]; }

  friend bool operator==(const LPS&, const LPS&) = default;
};

ValidationReport validate_lps(const LPS& lps);

/// Vector of measures of an event, one entry per level.
std::vector<Rational> lps_measure_event(const LPS& lps, Event e);
/// Least level giving e positive probability; nullopt when mu(e) = 0.
std::optional<std::size_t> first_positive_level(const LPS& lps, Event e);

/// Subsequence of conditionals on U; throws Error(ZeroConditioningEvent)
/// when every level gives U probability 0.
LPS lps_condition(const LPS& lps, Event u);

std::vector<Rational> lps_expect(const LPS& lps, const RandomVariable& x);
std::strong_ordering lps_expect_cmp(const LPS& lps, const RandomVariable& x, const RandomVariable& y);

struct LpsClassification {
  bool is_slps = false;
  bool is_mslps = false;
  bool is_lcps = false;
  /// Supp(mu_i) for each level; these are the sets U_i used by all three tests.
  std::vector<Event> support_witnesses;
};

LpsClassification classify_lps(const LPS& lps);

/// Keeps each measure outside the rational span of those kept before it.
LPS reduce_lps(const LPS& lps);

enum class Verdict { Equivalent, Inequivalent };

struct EquivCertificate {
  Verdict verdict = Verdict::Inequivalent;
  /// Reduced sequences the matrices refer to.
  std::vector<StdMeasure> reduced_a;
  std::vector<StdMeasure> reduced_b;
  /// reduced_b[j] = sum_i forward[j][i] * reduced_a[i]; backward maps b to a.
  RationalMatrix forward;
  RationalMatrix backward;
  /// X and Y ordered differently by the two sides.
  std::optional<std::pair<RandomVariable, RandomVariable>> witness;

  bool equivalent() const { return verdict == Verdict::Equivalent; }
};

/// Decides a ~ b and self-checks the certificate before returning. Throws
/// Error(AlgebraMismatch) when the algebras differ.
EquivCertificate lps_equiv(const LPS& a, const LPS& b);

/// Independent re-check of a certificate against the original inputs.
bool check_certificate(const LPS& a, const LPS& b, const EquivCertificate& cert);

}  // namespace extprob
