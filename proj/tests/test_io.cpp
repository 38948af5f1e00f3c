#include <doctest.h>

#include "extprob/fixtures.hpp"
#include "extprob/io.hpp"
#include "support/gen.hpp"

using namespace extprob;

namespace {
const SpaceAlgebra two = SpaceAlgebra::discrete({"w1", "w2"});
const NonstdNumber e = NonstdNumber::eps();

io::Document reparse(const io::Json& j) { return io::parse_document(io::dump(j)); }
}  // namespace

TEST_CASE("scalars") {
  CHECK(io::rational_from_json(io::to_json(parse_rational("-7/3"))) == parse_rational("-7/3"));
  CHECK(io::rational_from_json(io::Json(4)) == 4);
  CHECK_THROWS_AS(io::rational_from_json(io::Json(0.5)), Error);
  for (const auto& x : {e, 1 / (1 - e), NonstdNumber(parse_rational("1/2")) - 3 * e * e, NonstdNumber(0)})
    CHECK(io::nonstd_from_json(io::to_json(x)) == x);
  CHECK(io::nonstd_from_json(io::Json("1/3")) == NonstdNumber(parse_rational("1/3")));
  CHECK(io::to_json(e).dump() == R"({"num":[[1,"1"]],"den":[[0,"1"]]})");
  CHECK_THROWS_AS(io::nonstd_from_json(io::Json::parse(R"({"num":[[1,"1"]],"den":[]})")), Error);
  CHECK_THROWS_AS(io::nonstd_from_json(io::Json::parse(R"({"num":[[2,"1"],[1,"1"]],"den":[[0,"1"]]})")), Error);
  CHECK(io::event_from_json(io::to_json(Event::from_indices({0, 3})), 4) == Event::from_indices({0, 3}));
  CHECK_THROWS_AS(io::event_from_json(io::Json::parse("[5]"), 4), Error);
}

TEST_CASE("spaces") {
  const SpaceAlgebra coarse({"a", "b", "c"}, {{0, 2}, {1}});
  CHECK(io::space_from_json(io::to_json(coarse)) == coarse);
  CHECK(io::space_from_json(io::Json::parse(R"({"worlds":["x","y"]})")) == SpaceAlgebra::discrete({"x", "y"}));
  CHECK_THROWS_AS(io::space_from_json(io::Json::parse(R"({"worlds":["x","y"],"atoms":[[0]]})")), Error);
}

TEST_CASE("documents round-trip") {
  gen::Rng rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = static_cast<std::size_t>(gen::uniform(rng, 2, 4));
    std::vector<std::string> worlds;
    for (std::size_t i = 0; i < n; ++i) worlds.push_back("w" + std::to_string(i));
    const auto space = SpaceAlgebra::discrete(worlds);
    const LPS lps = gen::any_lps(rng, n, 2);
    CHECK(io::read_lps(reparse(io::write(space, lps))) == lps);
    CHECK(io::read_measure(reparse(io::write(space, lps[0]))) == lps[0]);
    const auto nu = gen::any_nps(rng, n);
    CHECK(io::read_nps(reparse(io::write(space, nu))) == nu);
    const auto p = nps_to_popper(nu);
    CHECK(io::read_popper(reparse(io::write(space, p))) == p);
    const auto d = nps_to_lps(nu);
    const auto d2 = io::read_decomposition(reparse(io::write(space, d)));
    CHECK(d2.lps == d.lps);
    CHECK(d2.coefficients == d.coefficients);
    const auto cert = lps_equiv(lps, gen::any_lps(rng, n, 1));
    const auto c2 = io::read_certificate(reparse(io::write(space, cert)));
    CHECK(c2.verdict == cert.verdict);
    CHECK(c2.reduced_a == cert.reduced_a);
    CHECK(c2.reduced_b == cert.reduced_b);
    CHECK(c2.forward == cert.forward);
    CHECK(c2.witness == cert.witness);
  }
}

TEST_CASE("variables and witnesses round-trip") {
  const std::vector<io::NamedVariable> vars{{"X", RandomVariable{{1, 0}}}, {"Y", RandomVariable{{parse_rational("1/2"), 3}}}};
  const auto back = io::read_variables(reparse(io::write(two, vars)));
  REQUIRE(back.size() == 2);
  CHECK(back[1].name == "Y");
  CHECK(back[1].rv == vars[1].rv);

  io::WitnessDoc w;
  w.witness_kind = "bbd-r";
  w.rs = {{parse_rational("1/2")}, {parse_rational("1/3")}};
  CHECK(io::read_witness(reparse(io::write(two, w))).rs == w.rs);
  w.witness_kind = "kr-nps";
  w.measure = fixtures::mcgee_nu1();
  CHECK(io::read_witness(reparse(io::write(two, w))).measure == w.measure);
  w.witness_kind = "kr-seq";
  w.measures = {StdMeasure{{1, 0}}};
  CHECK(io::read_witness(reparse(io::write(two, w))).measures == w.measures);
}

TEST_CASE("serialization is deterministic") {
  const auto j = io::write(two, fixtures::mcgee_nu1());
  CHECK(io::dump(j) == io::dump(io::write(two, fixtures::mcgee_nu1())));
  CHECK(io::dump(reparse(j).body) == io::dump(j));
}

TEST_CASE("malformed documents") {
  CHECK_THROWS_AS(io::parse_document("{"), Error);
  CHECK_THROWS_AS(io::parse_document(R"({"format_version":2,"kind":"lps","space":{"worlds":["a"]}})"), Error);
  CHECK_THROWS_AS(io::parse_document(R"({"format_version":1,"space":{"worlds":["a"]}})"), Error);
  const auto d = io::parse_document(R"({"format_version":1,"kind":"lps","space":{"worlds":["a","b"]},"measures":[["1"]]})");
  CHECK_THROWS_AS(io::read_lps(d), Error);
  CHECK_THROWS_AS(io::read_nps(d), Error);
  const auto p = io::parse_document(
      R"({"format_version":1,"kind":"popper","space":{"worlds":["a"]},"conditionals":[{"given":[0],"mass":["1"]},{"given":[0],"mass":["1"]}]})");
  CHECK_THROWS_AS(io::read_popper(p), Error);
  CHECK_THROWS_AS(io::read_document("/nonexistent/file.json"), Error);
}
