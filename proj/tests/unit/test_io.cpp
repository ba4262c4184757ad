#include <doctest.h>

#include <string>

#include "onepmac/errors.hpp"
#include "onepmac/io.hpp"
#include "onepmac/vertices.hpp"

using namespace onepmac;

namespace {

const std::string kData = ONEPMAC_TEST_DATA;

bool error_mentions(const std::string& text, const std::string& needle) {
  try {
    parse_json_text(text, "doc");
  } catch (const ParseError& e) {
    return std::string(e.what()).find(needle) != std::string::npos;
  }
  return false;
}

}  // namespace

TEST_CASE("MAC documents") {
  const Mac m = mac_from_json(read_json_file(kData + "/fingerprint_mac.json"));
  CHECK(m.parties() == 2);
  CHECK(m(0, 0) == 1.0);
  CHECK(m(1, 1) == 1.0);

  const Mac back = mac_from_json(to_json(m));
  CHECK(back.probs() == m.probs());

  const auto exact = rational_probs_from_json(read_json_file(kData + "/separable_mac.json"));
  CHECK(exact[1] == Rational(1, 4));

  CHECK_THROWS_AS(mac_from_json(json::parse(R"({"inputs": [2], "output": 2, "probs": [0.5, 0.5, 0.5]})")),
                  Error);
  CHECK_THROWS_AS(mac_from_json(json::parse(R"({"inputs": [2], "output": 2, "probs": [0.7, 0.5, 0.5, 0.5]})")),
                  NotStochastic);
  CHECK_THROWS_AS(mac_from_json(json::parse(R"({"output": 2, "probs": []})")), ParseError);
}

TEST_CASE("malformed JSON reports line and column") {
  CHECK_THROWS_AS(read_json_file(kData + "/malformed.json"), ParseError);
  try {
    read_json_file(kData + "/malformed.json");
  } catch (const ParseError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("malformed.json:4:") != std::string::npos);
  }
  CHECK(error_mentions("{\n  \"a\": [1,\n", "doc:"));
  CHECK_THROWS_AS(read_json_file(kData + "/does_not_exist.json"), ParseError);
}

TEST_CASE("states round-trip") {
  const OneParticleState s = state_from_json(read_json_file(kData + "/psi3.json"));
  CHECK((s.matrix() - equal_superposition(3).matrix()).cwiseAbs().maxCoeff() < 1e-15);

  CMatrix rho(2, 2);
  rho << 0.5, cplx(0.1, 0.2), cplx(0.1, -0.2), 0.5;
  const OneParticleState t(rho);
  CHECK((state_from_json(to_json(t)).matrix() - rho).cwiseAbs().maxCoeff() == 0.0);

  CHECK_THROWS_AS(state_from_json(json::parse(R"({"dim": 3, "re": [[1, 0], [0, 0]]})")), Error);
}

TEST_CASE("inequalities and polytopes round-trip exactly") {
  const auto ineq = fingerprint_inequality(3, 2);
  const auto back = inequality_from_json(to_json(ineq));
  CHECK(back.coeffs == ineq.coeffs);
  CHECK(back.bound == ineq.bound);

  const CensusReport r = facet_census(AlphabetSpec::binary(2), 1);
  const RationalPolytope p = polytope_from_json(to_json(r.polytope));
  CHECK(p.dim == r.polytope.dim);
  CHECK(p.vertices == r.polytope.vertices);
  REQUIRE(p.facets);
  REQUIRE(p.facets->size() == r.polytope.facets->size());
  for (std::size_t k = 0; k < p.facets->size(); ++k) {
    CHECK((*p.facets)[k].normal == (*r.polytope.facets)[k].normal);
    CHECK((*p.facets)[k].offset == (*r.polytope.facets)[k].offset);
  }
}

TEST_CASE("encoders") {
  const Encoder phases = encoder_from_json(json::parse(R"({"type": "phases", "phases": [[0, 3.14], [0, 1.5]]})"));
  CHECK(encoder_input_sizes(phases) == std::vector<int>{2, 2});
  const Encoder again = encoder_from_json(to_json(phases));
  const auto s = equal_superposition(2);
  const std::vector<int> in{1, 1};
  CHECK((encode(s, phases, in) - encode(s, again, in)).cwiseAbs().maxCoeff() < 1e-15);

  const Encoder product = encoder_from_json(json::parse(R"({"type": "product", "channels": [
      [{"branches": [{"w": 1, "y": [1, 0], "z": [0, 0]}]}, {"branches": [{"w": 1, "y": [0, 0], "z": [1, 0]}]}],
      [{"branches": [{"w": 1, "y": [1, 0], "z": [0, 0]}]}, {"branches": [{"w": 1, "y": [0, 1], "z": [0, 0]}]}]]})"));
  const CMatrix blocked = encode(s, product, std::vector<int>{1, 0});
  CHECK(blocked(0, 0).real() == doctest::Approx(0.5));

  const Encoder kraus = encoder_from_json(json::parse(R"({"type": "kraus", "inputs": [2, 2], "groups": [
      {"parties": [1, 2], "channels": [
        {"kraus": [{"re": [[1,0,0],[0,1,0],[0,0,1]]}]},
        {"kraus": [{"re": [[1,0,0],[0,0,1],[0,1,0]]}]},
        {"kraus": [{"re": [[1,0,0],[0,1,0],[0,0,1]]}]},
        {"kraus": [{"re": [[1,0,0],[0,0,1],[0,1,0]]}]}]}]})"));
  const CMatrix swapped = encode(OneParticleState::diagonal({1.0, 0.0}), kraus, std::vector<int>{0, 1});
  CHECK(swapped(2, 2).real() == doctest::Approx(1.0));
  const Encoder kraus_again = encoder_from_json(to_json(kraus));
  CHECK((encode(s, kraus, in) - encode(s, kraus_again, in)).cwiseAbs().maxCoeff() < 1e-15);

  CHECK_THROWS_AS(encoder_from_json(json::parse(R"({"type": "teleport"})")), ParseError);
}

TEST_CASE("reports serialize") {
  const json v = to_json(violation_report(3));
  CHECK(v["N"] == 3);
  CHECK(v["delta"].get<double>() == doctest::Approx(2.0 / 3.0));
  const json c = to_json(facet_census(AlphabetSpec::binary(3), 2));
  CHECK(c["facets"] == 96);
  CHECK(c["nontrivial_classes"] == 3);
}
