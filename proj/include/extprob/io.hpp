#pragma once

// JSON documents for every core type. All numbers are exact: rationals are
// "a/b" strings and elements of Q(eps) are {"num": [[exp, "a/b"], ...],
// "den": [...]}. Every document carries "format_version", "kind" and "space".

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "extprob/independence.hpp"
#include "extprob/lps.hpp"
#include "extprob/nps_bridge.hpp"
#include "extprob/popper.hpp"
#include "extprob/prob.hpp"

namespace extprob::io {

using Json = nlohmann::ordered_json;

inline constexpr int kFormatVersion = 1;

Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);
Json to_json(const NonstdNumber& x);
/// Also accepts a plain rational string for a standard element.
NonstdNumber nonstd_from_json(const Json& j);
Json to_json(Event e);
Event event_from_json(const Json& j, std::size_t num_atoms);
Json to_json(const SpaceAlgebra& space);
SpaceAlgebra space_from_json(const Json& j);

struct NamedVariable {
  std::string name;
  RandomVariable rv;
};

struct WitnessDoc {
  std::string witness_kind;  // bbd-r, bbd-nps, kr-nps or kr-seq
  std::vector<std::vector<Rational>> rs;
  NonstdMeasure measure;
  std::vector<StdMeasure> measures;
};

/// A parsed document: its kind, its space and the raw body.
struct Document {
  std::string kind;
  SpaceAlgebra space;
  Json body;
};

/// Throws Error(Parse) for malformed JSON, an unsupported version or a
/// missing field.
Document parse_document(const std::string& text);
Document read_document(const std::string& path);

Json document(const std::string& kind, const SpaceAlgebra& space);

Json write(const SpaceAlgebra& space, const LPS& lps);
Json write(const SpaceAlgebra& space, const StdMeasure& m);
Json write(const SpaceAlgebra& space, const NonstdMeasure& nu);
Json write(const SpaceAlgebra& space, const PopperSpace& p);
Json write(const SpaceAlgebra& space, const Decomposition& d);
Json write(const SpaceAlgebra& space, const std::vector<NamedVariable>& vars);
Json write(const SpaceAlgebra& space, const WitnessDoc& w);
Json write(const SpaceAlgebra& space, const EquivCertificate& cert);

/// Readers check the document kind and throw Error(Parse) on a mismatch.
LPS read_lps(const Document& d);
StdMeasure read_measure(const Document& d);
NonstdMeasure read_nps(const Document& d);
PopperSpace read_popper(const Document& d);
Decomposition read_decomposition(const Document& d);
std::vector<NamedVariable> read_variables(const Document& d);
WitnessDoc read_witness(const Document& d);
EquivCertificate read_certificate(const Document& d);

/// Deterministic rendering with two-space indentation and a final newline.
std::string dump(const Json& j);

}  // namespace extprob::io
