#include <doctest.h>

#include "dstar/error.hpp"
#include "dstar/poly.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "support/random.hpp"

using namespace dstar;
using testsupport::P;
using testsupport::ring;
using testsupport::V;

TEST_CASE("ring arithmetic") {
  auto R = ring("dual");
  DPolynomial f = P(R, "x1^2 + 3*x1[0,1]");
  CHECK((f + (-f)).is_zero());
  CHECK((P(R, "x1 + 1") * P(R, "x1 - 1")) == P(R, "x1^2 - 1"));
  testsupport::Random rnd(3);
  for (int k = 0; k < 50; ++k) {
    auto a = rnd.polynomial(R), b = rnd.polynomial(R), c = rnd.polynomial(R);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
  CHECK_THROWS_AS(P(R, "x1") + P(ring("hs:2"), "x1"), Error);
}

TEST_CASE("leader, initial, separant") {
  auto R = ring("dual");
  DPolynomial f = P(R, "3*x1[0,2]^2 + x1[1,0]");
  CHECK(leader(f) == V(R, "x1[0,2]"));
  CHECK(initial(f) == P(R, "3"));
  CHECK(separant(f) == P(R, "6*x1[0,2]"));

  DPolynomial g = P(R, "x1[0,1]^2 - 4*x1");
  CHECK(leader(g) == V(R, "x1[0,1]"));
  CHECK(initial(g) == P(R, "1"));
  CHECK(separant(g) == P(R, "2*x1[0,1]"));
  CHECK(separant(g) == testsupport::oracle_partial(g, leader(g)));

  CHECK(degree_in(P(R, "x1^2 + 1"), V(R, "x1[0,1]")) == 0);
  CHECK_THROWS_AS(leader(P(R, "5")), Error);
}

TEST_CASE("rank_compare") {
  auto R = ring("dual");
  CHECK(rank_compare(P(R, "x1"), P(R, "x1[0,1]")) < 0);
  CHECK(rank_compare(P(R, "x1[0,1]^2"), P(R, "x1[0,1]^2 + x1")) == 0);
  CHECK(rank_compare(P(R, "5"), P(R, "x1")) < 0);
  CHECK(rank_compare(P(R, "5"), P(R, "0")) == 0);
}

TEST_CASE("structural properties on random polynomials") {
  testsupport::Random rnd(17);
  for (const char* name : testsupport::kBuiltins) {
    auto R = ring(name, 2);
    for (int k = 0; k < 100; ++k) {
      DPolynomial f = rnd.nonconstant(R);
      CHECK(rank_compare(initial(f), f) < 0);
      CHECK(rank_compare(separant(f), f) < 0);
      CHECK(separant(f) == testsupport::oracle_partial(f, leader(f)));

      DVariable u = leader(f);
      auto g = coefficients_in(f, u);
      DPolynomial back(R);
      for (std::size_t n = 0; n < g.size(); ++n) back += g[n] * DPolynomial::variable(R, u).pow(static_cast<unsigned>(n));
      CHECK(back == f);

      DPolynomial h = rnd.nonconstant(R);
      DVariable top = Ranking::sequential().less(leader(f), leader(h)) ? leader(h) : leader(f);
      CHECK(leader(f * h) == top);
      DPolynomial s = f + h;
      if (!s.is_constant()) CHECK(!Ranking::sequential().less(top, leader(s)));
    }
  }
}
