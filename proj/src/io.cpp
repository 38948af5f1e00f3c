#include "extprob/io.hpp"

#include <fstream>
#include <sstream>

namespace extprob::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::Parse, what); }

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) bad(std::string("missing field '") + name + "'");
  return j.at(name);
}

const Json& array_field(const Json& j, const char* name) {
  const Json& a = field(j, name);
  if (!a.is_array()) bad(std::string("field '") + name + "' must be an array");
  return a;
}

void expect_kind(const Document& d, const char* kind) {
  if (d.kind != kind) bad("expected a '" + std::string(kind) + "' document, found '" + d.kind + "'");
}

Json poly_json(const EpsPolynomial& p) {
  Json out = Json::array();
  for (const auto& t : p.terms()) out.push_back(Json::array({t.exponent, to_json(t.coefficient)}));
  return out;
}

EpsPolynomial poly_from_json(const Json& j) {
  if (!j.is_array()) bad("polynomial must be an array of [exponent, coefficient] pairs");
  std::vector<EpsPolynomial::Term> terms;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 2 || !t[0].is_number_unsigned()) bad("polynomial term must be [exponent, \"a/b\"]");
    const auto e = t[0].get<std::uint64_t>();
    if (e > 4096) bad("exponent too large");
    terms.push_back({static_cast<std::uint32_t>(e), rational_from_json(t[1])});
  }
  try {
    return EpsPolynomial::from_terms(terms);
  } catch (const Error& e) {
    bad(e.what());
  }
}

Json rationals(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(to_json(q));
  return out;
}

std::vector<Rational> rationals_from(const Json& j, std::size_t expected, const std::string& what) {
  if (!j.is_array()) bad(what + " must be an array");
  if (expected != 0 && j.size() != expected)
    bad(what + " has " + std::to_string(j.size()) + " entries, expected " + std::to_string(expected));
  std::vector<Rational> out;
  for (const auto& x : j) out.push_back(rational_from_json(x));
  return out;
}

std::vector<StdMeasure> measures_from(const Json& j, std::size_t n, const std::string& what) {
  if (!j.is_array()) bad(what + " must be an array of measures");
  std::vector<StdMeasure> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(StdMeasure{rationals_from(j[i], n, what + "[" + std::to_string(i) + "]")});
  return out;
}

Json measures_json(const std::vector<StdMeasure>& ms) {
  Json out = Json::array();
  for (const auto& m : ms) out.push_back(rationals(m.mass));
  return out;
}

Json nonstd_masses(const std::vector<NonstdNumber>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

std::vector<NonstdNumber> nonstd_from(const Json& j, std::size_t expected, const std::string& what) {
  if (!j.is_array()) bad(what + " must be an array");
  if (expected != 0 && j.size() != expected)
    bad(what + " has " + std::to_string(j.size()) + " entries, expected " + std::to_string(expected));
  std::vector<NonstdNumber> out;
  for (const auto& x : j) out.push_back(nonstd_from_json(x));
  return out;
}

Json matrix_json(const RationalMatrix& m) {
  Json out = Json::array();
  for (const auto& row : m) out.push_back(rationals(row));
  return out;
}

RationalMatrix matrix_from(const Json& j) {
  if (!j.is_array()) bad("matrix must be an array of rows");
  RationalMatrix out;
  for (const auto& row : j) out.push_back(rationals_from(row, 0, "matrix row"));
  return out;
}

}  // namespace

Json to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.dump());
  bad("rational must be a string \"a/b\" or an integer, got " + j.dump());
}

Json to_json(const NonstdNumber& x) {
  Json out = Json::object();
  out["num"] = poly_json(x.num());
  out["den"] = poly_json(x.den());
  return out;
}

NonstdNumber nonstd_from_json(const Json& j) {
  if (j.is_string() || j.is_number_integer()) return NonstdNumber(rational_from_json(j));
  try {
    return NonstdNumber::from_parts(poly_from_json(field(j, "num")), poly_from_json(field(j, "den")));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::DivisionByZero) bad("nonstandard number has a zero denominator");
    throw;
  }
}

Json to_json(Event e) {
  Json out = Json::array();
  for (std::size_t i : e.indices()) out.push_back(i);
  return out;
}

Event event_from_json(const Json& j, std::size_t num_atoms) {
  if (!j.is_array()) bad("event must be an array of atom indices");
  std::vector<std::size_t> idx;
  for (const auto& x : j) {
    if (!x.is_number_unsigned()) bad("atom index must be a nonnegative integer");
    const auto i = x.get<std::uint64_t>();
    if (i >= num_atoms) bad("atom index " + std::to_string(i) + " out of range");
    idx.push_back(static_cast<std::size_t>(i));
  }
  return Event::from_indices(idx);
}

Json to_json(const SpaceAlgebra& space) {
  Json out = Json::object();
  out["worlds"] = space.worlds();
  out["atoms"] = space.atoms();
  return out;
}

SpaceAlgebra space_from_json(const Json& j) {
  const Json& w = array_field(j, "worlds");
  std::vector<std::string> worlds;
  for (const auto& x : w) {
    if (!x.is_string()) bad("world labels must be strings");
    worlds.push_back(x.get<std::string>());
  }
  try {
    if (!j.contains("atoms")) return SpaceAlgebra::discrete(std::move(worlds));
    std::vector<std::vector<std::size_t>> atoms;
    for (const auto& a : array_field(j, "atoms")) {
      if (!a.is_array()) bad("each atom must be an array of world indices");
      std::vector<std::size_t> block;
      for (const auto& x : a) {
        if (!x.is_number_unsigned()) bad("world index must be a nonnegative integer");
        block.push_back(x.get<std::size_t>());
      }
      atoms.push_back(std::move(block));
    }
    return SpaceAlgebra(std::move(worlds), std::move(atoms));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::InvalidArgument) bad(e.what());
    throw;
  }
}

Document parse_document(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    bad(std::string("malformed JSON: ") + e.what());
  }
  const Json& version = field(j, "format_version");
  if (!version.is_number_integer() || version.get<int>() != kFormatVersion)
    bad("unsupported format_version " + version.dump());
  const Json& kind = field(j, "kind");
  if (!kind.is_string()) bad("'kind' must be a string");
  return Document{kind.get<std::string>(), space_from_json(field(j, "space")), j};
}

Document read_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return parse_document(os.str());
}

Json document(const std::string& kind, const SpaceAlgebra& space) {
  Json out = Json::object();
  out["format_version"] = kFormatVersion;
  out["kind"] = kind;
  out["space"] = to_json(space);
  return out;
}

Json write(const SpaceAlgebra& space, const LPS& lps) {
  Json out = document("lps", space);
  out["measures"] = measures_json(lps.measures);
  return out;
}

Json write(const SpaceAlgebra& space, const StdMeasure& m) {
  Json out = document("measure", space);
  out["mass"] = rationals(m.mass);
  return out;
}

Json write(const SpaceAlgebra& space, const NonstdMeasure& nu) {
  Json out = document("nps", space);
  out["mass"] = nonstd_masses(nu.mass);
  return out;
}

Json write(const SpaceAlgebra& space, const PopperSpace& p) {
  Json out = document("popper", space);
  Json conds = Json::array();
  for (const auto& [u, m] : p.table) {
    Json c = Json::object();
    c["given"] = to_json(u);
    c["mass"] = rationals(m.mass);
    conds.push_back(std::move(c));
  }
  out["conditionals"] = std::move(conds);
  return out;
}

Json write(const SpaceAlgebra& space, const Decomposition& d) {
  Json out = document("decomposition", space);
  out["measures"] = measures_json(d.lps.measures);
  out["coefficients"] = nonstd_masses(d.coefficients);
  return out;
}

Json write(const SpaceAlgebra& space, const std::vector<NamedVariable>& vars) {
  Json out = document("random_variables", space);
  Json list = Json::array();
  for (const auto& v : vars) {
    Json e = Json::object();
    e["name"] = v.name;
    e["values"] = rationals(v.rv.value);
    list.push_back(std::move(e));
  }
  out["variables"] = std::move(list);
  return out;
}

Json write(const SpaceAlgebra& space, const WitnessDoc& w) {
  Json out = document("witness", space);
  out["witness_kind"] = w.witness_kind;
  if (w.witness_kind == "bbd-r") {
    Json rs = Json::array();
    for (const auto& r : w.rs) rs.push_back(rationals(r));
    out["r"] = std::move(rs);
  } else if (w.witness_kind == "bbd-nps" || w.witness_kind == "kr-nps") {
    out["mass"] = nonstd_masses(w.measure.mass);
  } else {
    out["measures"] = measures_json(w.measures);
  }
  return out;
}

Json write(const SpaceAlgebra& space, const EquivCertificate& cert) {
  Json out = document("certificate", space);
  out["verdict"] = cert.equivalent() ? "equivalent" : "inequivalent";
  out["reduced_a"] = measures_json(cert.reduced_a);
  out["reduced_b"] = measures_json(cert.reduced_b);
  if (cert.equivalent()) {
    out["forward"] = matrix_json(cert.forward);
    out["backward"] = matrix_json(cert.backward);
  }
  if (cert.witness) {
    Json w = Json::object();
    w["x"] = rationals(cert.witness->first.value);
    w["y"] = rationals(cert.witness->second.value);
    out["witness"] = std::move(w);
  }
  return out;
}

LPS read_lps(const Document& d) {
  expect_kind(d, "lps");
  auto ms = measures_from(array_field(d.body, "measures"), d.space.num_atoms(), "measures");
  if (ms.empty()) bad("an LPS needs at least one measure");
  return LPS(std::move(ms));
}

StdMeasure read_measure(const Document& d) {
  expect_kind(d, "measure");
  return StdMeasure{rationals_from(array_field(d.body, "mass"), d.space.num_atoms(), "mass")};
}

NonstdMeasure read_nps(const Document& d) {
  expect_kind(d, "nps");
  return NonstdMeasure{nonstd_from(array_field(d.body, "mass"), d.space.num_atoms(), "mass")};
}

PopperSpace read_popper(const Document& d) {
  expect_kind(d, "popper");
  PopperSpace p;
  p.num_atoms = d.space.num_atoms();
  for (const auto& c : array_field(d.body, "conditionals")) {
    const Event u = event_from_json(field(c, "given"), p.num_atoms);
    StdMeasure m{rationals_from(field(c, "mass"), p.num_atoms, "conditional mass")};
    if (!p.table.emplace(u, std::move(m)).second) bad("conditioning event " + to_string(u) + " listed twice");
  }
  return p;
}

Decomposition read_decomposition(const Document& d) {
  expect_kind(d, "decomposition");
  auto ms = measures_from(array_field(d.body, "measures"), d.space.num_atoms(), "measures");
  if (ms.empty()) bad("a decomposition needs at least one measure");
  auto cs = nonstd_from(array_field(d.body, "coefficients"), ms.size(), "coefficients");
  return Decomposition{LPS(std::move(ms)), std::move(cs)};
}

std::vector<NamedVariable> read_variables(const Document& d) {
  expect_kind(d, "random_variables");
  std::vector<NamedVariable> out;
  for (const auto& v : array_field(d.body, "variables")) {
    const Json& name = field(v, "name");
    if (!name.is_string()) bad("variable name must be a string");
    out.push_back({name.get<std::string>(),
                   RandomVariable{rationals_from(field(v, "values"), d.space.num_atoms(), "variable values")}});
  }
  return out;
}

WitnessDoc read_witness(const Document& d) {
  expect_kind(d, "witness");
  WitnessDoc w;
  const Json& k = field(d.body, "witness_kind");
  if (!k.is_string()) bad("'witness_kind' must be a string");
  w.witness_kind = k.get<std::string>();
  const std::size_t n = d.space.num_atoms();
  if (w.witness_kind == "bbd-r") {
    for (const auto& r : array_field(d.body, "r")) w.rs.push_back(rationals_from(r, 0, "r vector"));
  } else if (w.witness_kind == "bbd-nps" || w.witness_kind == "kr-nps") {
    w.measure = NonstdMeasure{nonstd_from(array_field(d.body, "mass"), n, "mass")};
  } else if (w.witness_kind == "kr-seq") {
    w.measures = measures_from(array_field(d.body, "measures"), n, "measures");
  } else {
    bad("unknown witness kind '" + w.witness_kind + "'");
  }
  return w;
}

EquivCertificate read_certificate(const Document& d) {
  expect_kind(d, "certificate");
  EquivCertificate c;
  const Json& v = field(d.body, "verdict");
  if (v == "equivalent")
    c.verdict = Verdict::Equivalent;
  else if (v == "inequivalent")
    c.verdict = Verdict::Inequivalent;
  else
    bad("verdict must be 'equivalent' or 'inequivalent'");
  const std::size_t n = d.space.num_atoms();
  c.reduced_a = measures_from(array_field(d.body, "reduced_a"), n, "reduced_a");
  c.reduced_b = measures_from(array_field(d.body, "reduced_b"), n, "reduced_b");
  if (d.body.contains("forward")) c.forward = matrix_from(d.body.at("forward"));
  if (d.body.contains("backward")) c.backward = matrix_from(d.body.at("backward"));
  if (d.body.contains("witness")) {
    const Json& w = d.body.at("witness");
    c.witness = std::make_pair(RandomVariable{rationals_from(field(w, "x"), n, "witness x")},
                               RandomVariable{rationals_from(field(w, "y"), n, "witness y")});
  }
  return c;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace extprob::io
