#include "extprob/cli.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "extprob/belief.hpp"
#include "extprob/fixtures.hpp"
#include "extprob/independence.hpp"
#include "extprob/io.hpp"
#include "extprob/lps.hpp"
#include "extprob/nps_bridge.hpp"
#include "extprob/popper.hpp"

namespace extprob::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string tuple(const std::vector<Rational>& v) {
  std::vector<std::string> parts;
  for (const auto& q : v) parts.push_back(to_string(q));
  return "(" + join(parts, ", ") + ")";
}

std::string value_set(const std::vector<Rational>& v) {
  std::vector<std::string> parts;
  for (const auto& q : v) parts.push_back(to_string(q));
  return "{" + join(parts, ",") + "}";
}

std::string yes(bool b) { return b ? "true" : "false"; }

std::string trim(std::string s) {
  const auto keep = [](unsigned char c) { return !std::isspace(c) && c != '{' && c != '}'; };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), keep));
  s.erase(std::find_if(s.rbegin(), s.rend(), keep).base(), s.end());
  return s;
}

// "all", "none", world labels or atom indices, comma separated.
Event parse_event(const std::string& text, const SpaceAlgebra& space) {
  const std::string t = trim(text);
  if (t == "all") return space.full();
  if (t.empty() || t == "none") return Event{};
  std::vector<std::string> tokens;
  std::stringstream ss(t);
  for (std::string tok; std::getline(ss, tok, ',');) tokens.push_back(trim(tok));
  const auto& worlds = space.worlds();
  const bool labels = std::all_of(tokens.begin(), tokens.end(), [&](const std::string& tok) {
    return std::find(worlds.begin(), worlds.end(), tok) != worlds.end();
  });
  if (labels) return space.event_from_worlds(tokens);
  std::vector<std::size_t> idx;
  for (const auto& tok : tokens) {
    const bool digits = !tok.empty() && std::all_of(tok.begin(), tok.end(), [](unsigned char c) { return std::isdigit(c); });
    if (!digits || tok.size() > 6 || std::stoul(tok) >= space.num_atoms())
      throw Error(ErrorKind::InvalidArgument, "event '" + text + "': '" + tok + "' is neither a world nor an atom index");
    idx.push_back(std::stoul(tok));
  }
  return Event::from_indices(idx);
}

void require_valid(const ValidationReport& r, const std::string& what) {
  if (!r.ok()) throw Error(ErrorKind::InvalidArgument, what + ": " + r.issues.front());
}

LPS load_lps(const io::Document& d) {
  LPS lps = d.kind == "measure" ? LPS({io::read_measure(d)}) : io::read_lps(d);
  require_valid(validate_lps(lps), d.kind);
  return lps;
}

NonstdMeasure load_nps(const io::Document& d) {
  if (d.kind == "lps" || d.kind == "measure") return lps_to_nps(load_lps(d));
  NonstdMeasure nu;
  if (d.kind == "nps") {
    nu = io::read_nps(d);
  } else if (d.kind == "decomposition") {
    const auto dec = io::read_decomposition(d);
    require_valid(validate_lps(dec.lps), "decomposition");
    nu = recompose(dec.lps, dec.coefficients);
  } else {
    throw Error(ErrorKind::Parse, "expected an nps, lps or measure document, found '" + d.kind + "'");
  }
  require_valid(validate_measure(nu, d.space.num_atoms()), "nps");
  return nu;
}

bool is_lps_kind(const io::Document& d) { return d.kind == "lps" || d.kind == "measure"; }

void same_space(const io::Document& a, const io::Document& b) {
  if (!(a.space == b.space)) throw Error(ErrorKind::AlgebraMismatch, "the two documents describe different spaces");
}

std::vector<io::NamedVariable> load_vars(const std::string& path, const io::Document& model) {
  const auto d = io::read_document(path);
  same_space(model, d);
  return io::read_variables(d);
}

RandomVariable find_var(const std::vector<io::NamedVariable>& vars, const std::string& name) {
  for (const auto& v : vars)
    if (v.name == name) return v.rv;
  throw Error(ErrorKind::InvalidArgument, "no random variable named '" + name + "'");
}

int cmd_validate(const std::string& in, const std::string& level, std::ostream& os) {
  const auto d = io::read_document(in);
  ValidationReport report;
  os << "kind: " << d.kind << "\n";
  if (d.kind == "popper") {
    const PopperLevel lv = level == "cps" ? PopperLevel::Cps : level == "treelike" ? PopperLevel::Treelike : PopperLevel::Popper;
    os << "level: " << level << "\n";
    report = validate_popper(io::read_popper(d), lv);
  } else if (is_lps_kind(d)) {
    const LPS lps = d.kind == "measure" ? LPS({io::read_measure(d)}) : io::read_lps(d);
    report = validate_lps(lps);
    if (report.ok()) {
      const auto c = classify_lps(lps);
      os << "slps: " << yes(c.is_slps) << "\nmslps: " << yes(c.is_mslps) << "\nlcps: " << yes(c.is_lcps) << "\n";
    }
  } else if (d.kind == "nps") {
    report = validate_measure(io::read_nps(d), d.space.num_atoms());
  } else if (d.kind == "decomposition") {
    report = validate_lps(io::read_decomposition(d).lps);
  } else if (d.kind == "random_variables") {
    io::read_variables(d);
  } else if (d.kind == "witness") {
    io::read_witness(d);
  } else if (d.kind == "certificate") {
    io::read_certificate(d);
  } else {
    throw Error(ErrorKind::Parse, "unknown document kind '" + d.kind + "'");
  }
  os << "valid: " << yes(report.ok()) << "\n";
  for (const auto& issue : report.issues) os << "issue: " << issue << "\n";
  return report.ok() ? kOk : kNegative;
}

int cmd_convert(const std::string& from, const std::string& to, const std::string& in, std::ostream& os) {
  const auto d = io::read_document(in);
  const std::string expected = from == "treelike" ? "popper" : from;
  if (d.kind != expected && !(from == "lps" && d.kind == "measure"))
    throw Error(ErrorKind::Parse, "--from " + from + " needs a '" + expected + "' document, found '" + d.kind + "'");
  io::Json result;
  if (from == "lps" && to == "popper") {
    result = io::write(d.space, slps_to_popper(load_lps(d)));
  } else if (from == "lps" && to == "nps") {
    result = io::write(d.space, lps_to_nps(load_lps(d)));
  } else if (from == "nps" && to == "lps") {
    result = io::write(d.space, nps_to_lps(load_nps(d)));
  } else if (from == "nps" && to == "popper") {
    result = io::write(d.space, nps_to_popper(load_nps(d)));
  } else if (from == "popper" && to == "lps") {
    result = io::write(d.space, popper_to_slps(io::read_popper(d)));
  } else if (from == "treelike" && to == "lps") {
    result = io::write(d.space, treelike_to_lps(io::read_popper(d)).lps);
  } else {
    throw UsageError("unsupported conversion from " + from + " to " + to);
  }
  os << io::dump(result);
  return kOk;
}

int cmd_compare(const std::string& relation, const std::string& pa, const std::string& pb, bool json, std::ostream& os) {
  const auto a = io::read_document(pa);
  const auto b = io::read_document(pb);
  same_space(a, b);
  bool equivalent = false;
  if (relation == "simeq") {
    equivalent = nps_simeq(load_nps(a), load_nps(b));
    if (json) throw UsageError("--json is only available for --relation aeq");
    os << "relation: simeq\nverdict: " << (equivalent ? "equivalent" : "inequivalent") << "\n";
    return equivalent ? kOk : kNegative;
  }
  const EquivCertificate cert =
      is_lps_kind(a) && is_lps_kind(b) ? lps_equiv(load_lps(a), load_lps(b)) : nps_aeq(load_nps(a), load_nps(b));
  equivalent = cert.equivalent();
  if (json) {
    os << io::dump(io::write(a.space, cert));
  } else {
    os << "relation: aeq\nverdict: " << (equivalent ? "equivalent" : "inequivalent") << "\n";
    os << "reduced lengths: " << cert.reduced_a.size() << ", " << cert.reduced_b.size() << "\n";
    if (cert.witness)
      os << "witness: X = " << tuple(cert.witness->first.value) << ", Y = " << tuple(cert.witness->second.value) << "\n";
  }
  return equivalent ? kOk : kNegative;
}

int cmd_expect(const std::string& in, const std::string& vars_path, std::vector<std::string> names,
               const std::string& given_text, std::ostream& os) {
  const auto d = io::read_document(in);
  const auto vars = load_vars(vars_path, d);
  if (names.empty())
    for (const auto& v : vars) names.push_back(v.name);
  const Event given = given_text.empty() ? d.space.full() : parse_event(given_text, d.space);
  for (const auto& name : names) {
    const RandomVariable x = find_var(vars, name);
    std::string value;
    if (is_lps_kind(d)) {
      value = tuple(lps_expect(lps_condition(load_lps(d), given), x));
    } else if (d.kind == "popper") {
      const auto p = io::read_popper(d);
      require_valid(validate_popper(p, PopperLevel::Cps), "popper");
      if (!p.conditionable(given)) throw Error(ErrorKind::ZeroConditioningEvent, to_string(given) + " is not in F'");
      value = to_string(expect(p.table.at(given), x));
    } else {
      value = to_string(expect(condition(load_nps(d), given), x));
    }
    os << "E[" << name << "] = " << value << "\n";
  }
  return kOk;
}

struct IndepArgs {
  std::string in, vars, u, v, given, x, mode = "approx";
  std::vector<std::string> ys;
};

int cmd_indep(const IndepArgs& a, std::ostream& os) {
  const auto d = io::read_document(a.in);
  if (is_lps_kind(d) && d.kind == "lps")
    throw Error(ErrorKind::Parse, "indep needs an nps, measure or popper document");
  bool holds = false;
  if (!a.u.empty() || !a.v.empty()) {
    if (a.u.empty() || a.v.empty()) throw UsageError("event independence needs both --u and --v");
    const Event u = parse_event(a.u, d.space), v = parse_event(a.v, d.space);
    const Event given = a.given.empty() ? d.space.full() : parse_event(a.given, d.space);
    if (d.kind == "popper") {
      const auto p = io::read_popper(d);
      require_valid(validate_popper(p, PopperLevel::Cps), "popper");
      holds = indep_events(p, u, v, given);
    } else {
      if (a.mode != "exact" && a.mode != "approx") throw UsageError("event independence takes --mode exact or approx");
      holds = indep_events(load_nps(d), u, v, given, a.mode == "exact" ? IndepMode::Exact : IndepMode::Approx);
    }
    os << "independent: " << yes(holds) << "\n";
    return holds ? kOk : kNegative;
  }
  if (a.vars.empty() || a.x.empty() || a.ys.empty())
    throw UsageError("variable independence needs --vars, --x and --y");
  if (d.kind == "popper") throw Error(ErrorKind::Parse, "variable independence needs an nps or measure document");
  const auto vars = load_vars(a.vars, d);
  const RandomVariable x = find_var(vars, a.x);
  std::vector<RandomVariable> ys;
  for (const auto& n : a.ys) ys.push_back(find_var(vars, n));
  const NonstdMeasure nu = load_nps(d);
  if (a.mode == "exact") {
    std::vector<RandomVariable> all{x};
    all.insert(all.end(), ys.begin(), ys.end());
    holds = exact_indep(nu, all);
    os << "independent: " << yes(holds) << "\n";
  } else if (a.mode == "weak") {
    if (ys.size() != 1) throw UsageError("--mode weak takes exactly one --y");
    holds = weak_indep(nu, x, ys.front());
    os << "independent: " << yes(holds) << "\n";
  } else {
    const auto r = approx_indep_set(nu, x, ys);
    holds = r.holds;
    os << "independent: " << yes(holds) << "\n";
    if (r.failure) {
      const auto& f = *r.failure;
      os << "failure: " << a.x << " in " << value_set(f.u_values);
      for (std::size_t i = 0; i < ys.size(); ++i) os << ", " << a.ys[i] << " in " << value_set(f.v_values[i]);
      os << " given";
      for (std::size_t i = 0; i < ys.size(); ++i)
        os << (i ? ", " : " ") << a.ys[i] << " in " << value_set(f.given_values[i]);
      os << ": " << to_string(f.conditioned) << " vs " << to_string(f.unconditioned) << "\n";
    }
  }
  return holds ? kOk : kNegative;
}

int cmd_verify_witness(const std::string& target_path, const std::string& vars_path, std::vector<std::string> names,
                       const std::string& witness_path, std::ostream& os) {
  const auto target = io::read_document(target_path);
  const auto wd = io::read_document(witness_path);
  same_space(target, wd);
  const auto w = io::read_witness(wd);
  const auto vars = load_vars(vars_path, target);
  if (names.empty())
    for (const auto& v : vars) names.push_back(v.name);
  std::vector<RandomVariable> xs;
  for (const auto& n : names) xs.push_back(find_var(vars, n));
  WitnessReport report;
  if (w.witness_kind == "bbd-r" || w.witness_kind == "bbd-nps") {
    if (!is_lps_kind(target)) throw Error(ErrorKind::Parse, w.witness_kind + " witnesses need an lps target");
    const LPS lps = load_lps(target);
    report = w.witness_kind == "bbd-r" ? verify_bbd_r(lps, xs, w.rs) : verify_bbd_nps(lps, xs, w.measure);
  } else {
    if (target.kind != "popper") throw Error(ErrorKind::Parse, w.witness_kind + " witnesses need a popper target");
    const auto p = io::read_popper(target);
    report = w.witness_kind == "kr-nps" ? verify_kr_nps(p, xs, w.measure) : verify_kr_seq(p, xs, w.measures);
  }
  os << "witness: " << w.witness_kind << "\naccepted: " << yes(report.accepted) << "\n";
  for (const auto& s : report.checked) os << "checked: " << s << "\n";
  for (const auto& s : report.failures) os << "failed: " << s << "\n";
  for (const auto& s : report.notes) os << "note: " << s << "\n";
  return report.accepted ? kOk : kNegative;
}

int cmd_believe(const std::string& in, const std::string& event, const std::string& kind_text, std::ostream& os) {
  const auto d = io::read_document(in);
  const BeliefKind kind = parse_belief_kind(kind_text);
  const Event u = parse_event(event, d.space);
  BeliefResult r;
  if (is_lps_kind(d)) {
    r = believe(load_lps(d), u, kind);
  } else if (d.kind == "popper") {
    const auto p = io::read_popper(d);
    require_valid(validate_popper(p, PopperLevel::Cps), "popper");
    r = believe(p, u, kind);
  } else {
    r = believe(load_nps(d), u, kind);
  }
  os << "belief: " << to_string(kind) << "\nevent: " << to_string(u) << "\nholds: " << yes(r.holds) << "\n";
  if (r.level) os << "level: " << *r.level << "\n";
  return r.holds ? kOk : kNegative;
}

int cmd_reduce(const std::string& in, std::ostream& os) {
  const auto d = io::read_document(in);
  os << io::dump(io::write(d.space, reduce_lps(load_lps(d))));
  return kOk;
}

int cmd_fixtures_run(const std::string& name, std::ostream& os) {
  const auto all = fixtures::names();
  if (std::find(all.begin(), all.end(), name) == all.end()) throw UsageError("unknown fixture '" + name + "'");
  const auto report = fixtures::run(name);
  for (const auto& line : report.lines) os << (line.pass ? "[pass] " : "[FAIL] ") << line.text << "\n";
  os << "result: " << (report.ok() ? "pass" : "fail") << "\n";
  return report.ok() ? kOk : kNegative;
}

}  // namespace

int run(const std::vector<std::string>& args, std::string& out, std::string& err) {
  out.clear();
  err.clear();
  CLI::App app{"Exact extended probability: Popper spaces, LPSs and nonstandard measures", "extprob"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "extprob 1.0");

  const std::vector<std::string> relations{"aeq", "simeq"};
  const std::vector<std::string> levels{"cps", "popper", "treelike"};
  const std::vector<std::string> forms{"lps", "nps", "popper", "treelike"};
  const std::vector<std::string> modes{"exact", "approx", "weak", "set"};
  const std::vector<std::string> kinds{"certain", "weak", "assumed", "popper-strong", "popper-weak", "nps-certain", "nps-weak"};

  std::string in, level = "popper", from, to, relation, pa, pb, vars, given, event, kind, target, witness, fixture;
  std::vector<std::string> names;
  bool json = false;
  IndepArgs ia;

  auto* validate = app.add_subcommand("validate", "Check a document and report every violated condition");
  validate->add_option("--in", in, "Input document")->required();
  validate->add_option("--level", level, "Popper-space level to check")->check(CLI::IsMember(levels));

  auto* convert = app.add_subcommand("convert", "Translate between representations");
  convert->add_option("--from", from)->required()->check(CLI::IsMember(forms));
  convert->add_option("--to", to)->required()->check(CLI::IsMember(forms));
  convert->add_option("--in", in)->required();

  auto* compare = app.add_subcommand("compare", "Decide aeq or simeq between two documents");
  compare->add_option("--relation", relation)->required()->check(CLI::IsMember(relations));
  compare->add_option("--a", pa)->required();
  compare->add_option("--b", pb)->required();
  compare->add_flag("--json", json, "Print the certificate as a JSON document");

  auto* expect_cmd = app.add_subcommand("expect", "Expectations of random variables");
  expect_cmd->add_option("--in", in)->required();
  expect_cmd->add_option("--vars", vars)->required();
  expect_cmd->add_option("--var", names, "Variables to evaluate (default: all)")->delimiter(',');
  expect_cmd->add_option("--given", given, "Conditioning event");

  auto* indep = app.add_subcommand("indep", "Independence of events or random variables");
  indep->add_option("--in", ia.in)->required();
  indep->add_option("--vars", ia.vars);
  indep->add_option("--u", ia.u);
  indep->add_option("--v", ia.v);
  indep->add_option("--given", ia.given);
  indep->add_option("--x", ia.x);
  indep->add_option("--y", ia.ys)->delimiter(',');
  indep->add_option("--mode", ia.mode)->check(CLI::IsMember(modes));

  auto* verify = app.add_subcommand("verify-witness", "Check a supplied strong-independence witness");
  verify->add_option("--target", target)->required();
  verify->add_option("--vars", vars)->required();
  verify->add_option("--names", names, "Variables that must be independent (default: all)")->delimiter(',');
  verify->add_option("--witness", witness)->required();

  auto* believe_cmd = app.add_subcommand("believe", "Belief operators");
  believe_cmd->add_option("--in", in)->required();
  believe_cmd->add_option("--event", event)->required();
  believe_cmd->add_option("--kind", kind)->required()->check(CLI::IsMember(kinds));

  auto* reduce = app.add_subcommand("reduce", "Drop measures in the span of earlier ones");
  reduce->add_option("--in", in)->required();

  auto* fixtures_cmd = app.add_subcommand("fixtures", "Worked examples with known answers");
  fixtures_cmd->require_subcommand(1);
  auto* fixtures_list = fixtures_cmd->add_subcommand("list", "List fixture names");
  auto* fixtures_run = fixtures_cmd->add_subcommand("run", "Run one fixture");
  fixtures_run->add_option("name", fixture)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    const CLI::App* shown = &app;
    for (const CLI::App* s = &app; s != nullptr;) {
      const auto subs = s->get_subcommands();
      s = subs.empty() ? nullptr : subs.front();
      if (s) shown = s;
    }
    out = shown->help();
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out = "extprob 1.0\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    err = std::string(e.what()) + "\nRun with --help for usage.\n";
    return kUsage;
  }

  std::ostringstream os;
  int code = kOk;
  try {
    if (validate->parsed()) {
      code = cmd_validate(in, level, os);
    } else if (convert->parsed()) {
      code = cmd_convert(from, to, in, os);
    } else if (compare->parsed()) {
      code = cmd_compare(relation, pa, pb, json, os);
    } else if (expect_cmd->parsed()) {
      code = cmd_expect(in, vars, names, given, os);
    } else if (indep->parsed()) {
      code = cmd_indep(ia, os);
    } else if (verify->parsed()) {
      code = cmd_verify_witness(target, vars, names, witness, os);
    } else if (believe_cmd->parsed()) {
      code = cmd_believe(in, event, kind, os);
    } else if (reduce->parsed()) {
      code = cmd_reduce(in, os);
    } else if (fixtures_list->parsed()) {
      for (const auto& n : fixtures::names()) os << n << "\n";
    } else if (fixtures_run->parsed()) {
      code = cmd_fixtures_run(fixture, os);
    }
  } catch (const UsageError& e) {
    err = std::string("usage error: ") + e.what() + "\n";
    return kUsage;
  } catch (const Error& e) {
    err = std::string("error (") + std::string(to_string(e.kind())) + "): " + e.what() + "\n";
    return kInputError;
  }
  out = os.str();
  return code;
}

}  // namespace extprob::cli
