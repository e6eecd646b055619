#include <doctest.h>

#include "dstar/charset.hpp"
#include "dstar/error.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "support/random.hpp"

using namespace dstar;
using testsupport::P;
using testsupport::ring;

namespace {

ErrorKind error_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::SchemaError;
}

}  // namespace

TEST_CASE("validate_autoreduced") {
  auto R = ring("dual", 2);
  auto A = validate_autoreduced({P(R, "x2"), P(R, "x1")});
  CHECK(A[0] == P(R, "x1"));
  CHECK(error_of([&] { validate_autoreduced({P(R, "x1"), P(R, "x1[0,1]")}); }) == ErrorKind::NotAutoreduced);
  CHECK(error_of([&] { validate_autoreduced({P(R, "x1[0,1]^2 - 4*x1"), P(R, "x1[1,0]*x1[0,2]")}); }) ==
        ErrorKind::NotAutoreduced);
}

TEST_CASE("compare_autoreduced") {
  auto R = ring("dual", 2);
  auto set = [&](std::vector<DPolynomial> v) { return validate_autoreduced(std::move(v)); };
  CHECK(compare_autoreduced(set({P(R, "x1")}), set({P(R, "x1[0,1]")})) == AutoreducedOrder::ALessB);
  CHECK(compare_autoreduced(set({P(R, "x1"), P(R, "x2")}), set({P(R, "x1")})) == AutoreducedOrder::ALessB);
  CHECK(compare_autoreduced(set({P(R, "x1")}), set({P(R, "x1 + 1")})) == AutoreducedOrder::Equivalent);
  CHECK(compare_autoreduced(set({P(R, "x1[0,1]")}), set({P(R, "x1")})) == AutoreducedOrder::BLessA);
}

TEST_CASE("compare_autoreduced matches the definition on random pairs") {
  testsupport::Random rnd(77);
  testsupport::Shape s{1, 2, 2, 3};
  auto R = ring("dual", 2);
  auto random_set = [&] {
    std::vector<DPolynomial> members;
    for (int tries = 0; tries < 6; ++tries) {
      DPolynomial p = rnd.nonconstant(R, s);
      auto with = members;
      with.push_back(p);
      try {
        validate_autoreduced(with);
        members = with;
      } catch (const Error&) {
      }
    }
    return validate_autoreduced(members);
  };
  for (int k = 0; k < 100; ++k) {
    auto a = random_set(), b = random_set();
    int expect = testsupport::oracle_autoreduced_order(a.members(), b.members(), Ranking::sequential());
    auto got = compare_autoreduced(a, b);
    CHECK((expect < 0) == (got == AutoreducedOrder::ALessB));
    CHECK((expect > 0) == (got == AutoreducedOrder::BLessA));
  }
}

TEST_CASE("charset_complete") {
  auto R = ring("dual");
  auto single = charset_complete({P(R, "x1[0,1]^2 - 4*x1")});
  CHECK(single.charset.members() == std::vector<DPolynomial>{P(R, "x1[0,1]^2 - 4*x1")});
  CHECK(single.trace.size() == 1);

  auto res = charset_complete({P(R, "x1"), P(R, "x1[0,1]")});
  CHECK(res.charset.members() == std::vector<DPolynomial>{P(R, "x1")});
  REQUIRE(res.certificates.size() == 2);
  for (const auto& c : res.certificates) CHECK(c.remainder.is_zero());
  CHECK(res.certificates[1].H == P(R, "1"));
  CHECK(verify_certificate(P(R, "x1[0,1]"), res.charset.members(), res.certificates[1]));

  CHECK(error_of([&] { charset_complete({P(R, "x1"), P(R, "x1 + 1")}); }) == ErrorKind::InconsistentSystem);
  CHECK(error_of([&] { charset_complete({P(R, "2")}); }) == ErrorKind::InconsistentSystem);
  CHECK(charset_complete({P(R, "x1"), P(R, "0")}).charset.size() == 1);
}

TEST_CASE("charset rounds shrink the autoreduced set") {
  auto R = ring("dual", 2);
  auto res = charset_complete({P(R, "x1[0,1]*x2 - x1"), P(R, "x2^2 - 1"), P(R, "x1[0,2] + x2")});
  for (std::size_t k = 1; k < res.trace.size(); ++k)
    CHECK(compare_autoreduced(validate_autoreduced(res.trace[k].selected),
                              validate_autoreduced(res.trace[k - 1].selected)) == AutoreducedOrder::ALessB);
  for (std::size_t k = 0; k < res.certificates.size(); ++k) CHECK(res.certificates[k].remainder.is_zero());
}

TEST_CASE("d_ideal_generators") {
  auto R = ring("dual");
  auto g1 = d_ideal_generators({P(R, "x1")}, 1);
  CHECK(g1.size() == 3);
  CHECK(std::find(g1.begin(), g1.end(), P(R, "x1[1,0]")) != g1.end());
  CHECK(std::find(g1.begin(), g1.end(), P(R, "x1[0,1]")) != g1.end());
  CHECK(d_ideal_generators({P(R, "x1")}, 0) == std::vector<DPolynomial>{P(R, "x1")});
  CHECK(d_ideal_generators({P(R, "x1")}, 2).size() == 6);
  CHECK(d_ideal_generators({P(R, "3")}, 2).size() == 1);
}

TEST_CASE("closure_step_witness") {
  auto R = ring("dual");
  std::vector<DPolynomial> gens{P(R, "x1 * x1[1,0]"), P(R, "x1^2")};
  ClosureWitness w{P(R, "x1"), {MultiIndex{0, 0}, MultiIndex{1, 0}}, {1, 1}, {{P(R, "1"), MultiIndex{0, 0}, 0}}};
  auto o = closure_step_witness(gens, w);
  CHECK(o.accepted);
  CHECK(*o.element == P(R, "x1"));

  ClosureWitness radical{P(R, "x1"), {MultiIndex{0, 0}}, {2}, {{P(R, "1"), MultiIndex{0, 0}, 1}}};
  CHECK(closure_step_witness(gens, radical).accepted);

  ClosureWitness wrong{P(R, "x1"), {MultiIndex{0, 0}}, {2}, {{P(R, "1"), MultiIndex{0, 0}, 0}}};
  auto bad = closure_step_witness(gens, wrong);
  CHECK(!bad.accepted);
  REQUIRE(bad.difference);
  CHECK(*bad.difference == P(R, "x1^2 - x1*x1[1,0]"));
  CHECK(bad.reason.rfind("BadWitness", 0) == 0);

  ClosureWitness delta{P(R, "x1"), {MultiIndex{0, 1}}, {1}, {}};
  CHECK(!closure_step_witness(gens, delta).accepted);
}

TEST_CASE("presentation") {
  auto R = ring("dual", 2);
  CHECK(presentation(validate_autoreduced({P(R, "x1[0,1]^2 - 4*x1")})).H == P(R, "2*x1[0,1]"));
  CHECK(presentation(validate_autoreduced({P(R, "x1")})).H == P(R, "1"));
  auto p = presentation(validate_autoreduced({P(R, "x1^2"), P(R, "x2")}));
  CHECK(p.H == P(R, "2*x1"));
  CHECK(p.base_gens.empty());
}
