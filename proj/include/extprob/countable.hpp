#pragma once

// Closed-form set functions on the finite/cofinite algebra of the naturals.

#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

#include "extprob/nonstd.hpp"
#include "extprob/prob.hpp"

namespace extprob {

/// A finite set of naturals, or the complement of one.
class FinCofEvent {
 public:
  FinCofEvent() = default;
  static FinCofEvent finite(std::vector<std::uint64_t> members);
  static FinCofEvent cofinite(std::vector<std::uint64_t> excluded);

  bool is_cofinite() const { return cofinite_; }
  /// The members (finite) or the excluded points (cofinite), sorted.
  const std::vector<std::uint64_t>& support() const { return support_; }
  bool empty() const { return !cofinite_ && support_.empty(); }
  bool contains(std::uint64_t n) const;
  bool subset_of(const FinCofEvent& o) const;
  /// Cardinality of a finite event.
  std::size_t size() const;
  /// Largest member of a nonempty finite event.
  std::uint64_t max() const;

  FinCofEvent complement() const;
  friend FinCofEvent operator&(const FinCofEvent& a, const FinCofEvent& b);
  friend FinCofEvent operator|(const FinCofEvent& a, const FinCofEvent& b);
  friend FinCofEvent operator-(const FinCofEvent& a, const FinCofEvent& b);
  friend bool operator==(const FinCofEvent&, const FinCofEvent&) = default;

 private:
  FinCofEvent(bool cofinite, std::vector<std::uint64_t> support);
  bool cofinite_ = false;
  std::vector<std::uint64_t> support_;
};

std::string to_string(const FinCofEvent& e);

enum class CpsFamily { Mu1, Mu2 };
enum class NpsFamily { Nu1, Nu4 };

/// mu(V | U); throws Error(EmptyConditioningEvent) for empty U.
Rational fincof_cond(CpsFamily family, const FinCofEvent& v, const FinCofEvent& u);

/// nu(U). For Nu4 the worlds are 1, 2, 3, ...; 0 is rejected with
/// Error(InvalidArgument).
NonstdNumber fincof_nps_value(NpsFamily family, const FinCofEvent& u);

/// sum of the b-coefficients of Nu4 over a finite set of worlds.
Rational nu4_b_sum(const std::vector<std::uint64_t>& worlds);

/// E(chi_{w1} - 2^{2k-1} chi_{w_{2k}}) under Nu4.
NonstdNumber nu4_bet_expectation(unsigned k);

using FinCofTriple = std::tuple<FinCofEvent, FinCofEvent, FinCofEvent>;  // (V, X, U)

/// Every chain V within X within U (X nonempty) whose events are finite
/// subsets of {0..bound-1} or complements of such subsets.
std::vector<FinCofTriple> fincof_chains(unsigned bound);

/// CP1 on U and X, CP2 on the split V, X - V of X, CP3 on the triple, and
/// range checks. For Mu1 with check_nu1 also st(nu1(V|U)) = mu1(V|U) on the
/// pairs (V, U), (V, X) and (X, U). Triples must satisfy V within X within U.
ValidationReport sampled_axiom_check(CpsFamily family, const std::vector<FinCofTriple>& triples,
                                     bool check_nu1 = true);

}  // namespace extprob
