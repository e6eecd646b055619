#include <doctest.h>

#include "dstar/classical.hpp"
#include "dstar/error.hpp"
#include "dstar/operators.hpp"
#include "dstar/reduction.hpp"
#include "support/fixtures.hpp"
#include "support/random.hpp"

using namespace dstar;
using classical::DiffPolynomial;
using testsupport::P;
using testsupport::ring;

namespace {

DiffPolynomial x(unsigned order, unsigned var = 0) { return DiffPolynomial::var(var, order); }

}  // namespace

TEST_CASE("projection") {
  auto R = ring("dual");
  CHECK(classical::project_to_differential(P(R, "x1[3,2]")) == x(2));
  CHECK(classical::project_to_differential(P(R, "x1[0,0]")) == x(0));
  CHECK(classical::project_to_differential(P(R, "2*x1[1,1]*x1[0,2]")) == DiffPolynomial(2) * x(1) * x(2));
  CHECK(classical::format(classical::project_to_differential(P(R, "2*x1[1,1]*x1[0,2]"))) == "2 * x1' * x1''");
  CHECK_THROWS_AS(classical::project_to_differential(P(ring("hs:2"), "x1")), Error);
  CHECK(classical::lift(x(2) * x(0), R) == P(R, "x1[0,2]*x1"));
}

TEST_CASE("derivation") {
  DiffPolynomial f = x(1).pow(2) - DiffPolynomial(4) * x(0);
  CHECK(classical::derive(f) == DiffPolynomial(2) * x(1) * x(2) - DiffPolynomial(4) * x(1));
  CHECK(classical::separant(f) == DiffPolynomial(2) * x(1));
}

TEST_CASE("ritt_reduce") {
  std::vector<DiffPolynomial> A{x(1).pow(2) - DiffPolynomial(4) * x(0)};
  auto r = classical::ritt_reduce(x(2), A);
  CHECK(r.H == DiffPolynomial(2) * x(1));
  CHECK(r.remainder == DiffPolynomial(4) * x(1));

  auto same = classical::ritt_reduce(x(0), A);
  CHECK(same.H == DiffPolynomial(1));
  CHECK(same.remainder == x(0));

  CHECK(classical::ritt_reduce(x(1), {x(0)}).remainder.is_zero());
  CHECK_THROWS_AS(classical::ritt_reduce(x(0), {x(1), x(1) + x(0)}), Error);
}

TEST_CASE("projection commutes with the derivation") {
  testsupport::Random rnd(31);
  auto R = ring("dual", 2);
  for (int k = 0; k < 100; ++k) {
    DPolynomial f = rnd.polynomial(R);
    CHECK(classical::project_to_differential(apply({0, 1}, f)) ==
          classical::derive(classical::project_to_differential(f)));
  }
}

TEST_CASE("classical certificates from projected D* reduction") {
  testsupport::Random rnd(37);
  testsupport::Shape s{3, 3, 3, 4};
  auto R = ring("dual", 1);
  for (int k = 0; k < 50; ++k) {
    DiffPolynomial a = rnd.diff_polynomial(1, s);
    if (a.is_constant()) continue;
    DiffPolynomial g = rnd.diff_polynomial(1, s);
    std::vector<DPolynomial> A{classical::lift(a, R)};
    auto cert = reduce(classical::lift(g, R), A);
    // the projected identity is a classical one: H g = g0 + sum c delta^i(a)
    DiffPolynomial rhs = classical::project_to_differential(cert.remainder);
    for (const auto& c : cert.cofactors)
      rhs += classical::project_to_differential(c.c) * classical::derive(a, c.theta[1]);
    CHECK(classical::project_to_differential(cert.H) * g == rhs);

    auto oracle = classical::ritt_reduce(g, {a});
    DiffPolynomial check = oracle.remainder;
    for (const auto& c : oracle.cofactors) check += c.c * classical::derive(a, c.order);
    CHECK(oracle.H * g == check);
    CHECK(classical::is_ritt_reduced(oracle.remainder, {a}));
  }
}

TEST_CASE("difference specialisation") {
  auto R = ring("fields:2", 2);
  const DAlgebra& d = *R->algebra;
  CHECK(classical::difference_specialize(d) == 2);
  CHECK_THROWS_AS(classical::difference_specialize(load_algebra("dual")), Error);
  CHECK(apply({0, 0}, P(R, "x1*x2")) == P(R, "x1[1,0]*x2[1,0]"));
  auto cert = reduce(P(R, "x1[1,0]*x1"), {P(R, "x1")});
  CHECK(cert.remainder.is_zero());
  for (const auto& s : cert.steps) CHECK(s.kind == StepCase::Sigma);
  for (const auto& theta : multi_indices_up_to(d.slot_count(), 3)) CHECK(ord_delta(d, theta) == 0);
}
