#include <doctest.h>

#include "dstar/error.hpp"
#include "dstar/io.hpp"
#include "support/fixtures.hpp"

using namespace dstar;
using testsupport::P;
using testsupport::ring;

namespace {

ErrorKind kind_of(const std::string& text) {
  try {
    validate_algebra(parse_algebra_json(text));
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::SchemaError;
}

}  // namespace

TEST_CASE("algebra files") {
  AlgebraSpec s = parse_algebra_json(R"({"blocks":[{"basis":["1","e","e2"],"table":{"e*e":[["e2","1"]]}}]})");
  DAlgebra d = validate_algebra(s);
  CHECK(d.nu(0, 2) == 2);
  CHECK(validate_algebra(parse_algebra_json(R"({"blocks":[{"basis":["1","e"]}]})")) == load_algebra("dual"));

  CHECK(kind_of(R"({"blocks":[{"basis":["1","e2","e"],"table":{"e*e":[["e2","1"]]}}]})") ==
        ErrorKind::RankedBasisViolation);
  CHECK(kind_of(R"({"blocks":[{"basis":["1"]}],"extra":1})") == ErrorKind::SchemaError);
  CHECK(kind_of(R"({"blocks":[{"basis":["1","e"],"table":{"e*e":[["e","2/4"]]}}]})") == ErrorKind::SchemaError);
  CHECK(kind_of(R"({"blocks":[{"basis":["1","e"],"table":{"e*e":[["e",1]]}}]})") == ErrorKind::SchemaError);
  CHECK(kind_of(R"({"blocks":[]})") == ErrorKind::SchemaError);
  try {
    parse_algebra_json("{\n  \"blocks\": [,]\n}");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
}

TEST_CASE("max_indeterminate") {
  CHECK(max_indeterminate("x1 + x12[0,1] * x3") == 12);
  CHECK(max_indeterminate("3 + 4") == 0);
}

TEST_CASE("generator files") {
  auto R = ring("dual", 2);
  auto gens = parse_generators(R, "# header\nx1\n\n  x2^2 - 1  # trailing\n");
  REQUIRE(gens.size() == 2);
  CHECK(gens[1] == P(R, "x2^2 - 1"));
  try {
    parse_generators(R, "x1\nx1 + \n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 6);
  }
}

TEST_CASE("certificate round trip") {
  auto R = ring("dual");
  std::vector<DPolynomial> A{P(R, "x1[0,1]^2 - 4*x1")};
  DPolynomial g = P(R, "x1[0,2]^2 + x1[1,0]");
  auto cert = reduce(g, A);
  std::string text = certificate_to_json(cert);
  auto back = certificate_from_json(R, text);
  CHECK(back.H == cert.H);
  CHECK(back.remainder == cert.remainder);
  CHECK(back.steps.size() == cert.steps.size());
  CHECK(verify_certificate(g, A, back));
  CHECK(certificate_to_json(back) == text);
  CHECK_THROWS_AS(certificate_from_json(R, R"({"H":"1","remainder":"0","H_factors":[],"cofactors":[],"bogus":1})"),
                  Error);
}

TEST_CASE("witness files") {
  auto R = ring("dual");
  auto w = witness_from_json(
      R, R"({"a":"x1","taus":[[0,0],[1,0]],"exponents":[1,1],"combination":[{"c":"1","theta":[0,0],"member":0}]})");
  CHECK(w.taus.size() == 2);
  CHECK(w.combination[0].member == 0);
  CHECK_THROWS_AS(witness_from_json(R, R"({"a":"x1","taus":[[0]],"exponents":[1],"combination":[]})"), Error);
}
