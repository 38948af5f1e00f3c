#pragma once

// Dense linear algebra over Q for the small systems used by the LPS and NPS
// procedures.

#include <optional>
#include <vector>

#include "extprob/nonstd.hpp"

namespace extprob::detail {

using Vec = std::vector<Rational>;
using Mat = std::vector<Vec>;

/// Some x with A x = b (free variables set to 0), or nullopt if inconsistent.
/// A is rows x cols; b has one entry per row.
std::optional<Vec> solve(const Mat& a, const Vec& b, std::size_t cols);

/// Coefficients c with sum_i c_i * basis[i] = v, or nullopt when v is outside
/// the span. Basis vectors need not be independent.
std::optional<Vec> span_coefficients(const std::vector<Vec>& basis, const Vec& v);

inline bool in_span(const std::vector<Vec>& basis, const Vec& v) { return span_coefficients(basis, v).has_value(); }

Rational dot(const Vec& a, const Vec& b);

/// Scales v by a positive rational so its entries are coprime integers.
Vec primitive_integer(const Vec& v);

}  // namespace extprob::detail
