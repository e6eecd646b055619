#include <doctest.h>

#include "dstar/error.hpp"
#include "dstar/operators.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "support/random.hpp"

using namespace dstar;
using testsupport::P;
using testsupport::ring;
using testsupport::V;

namespace {

bool below(const DPolynomial& h, const DVariable& v) {
  return h.is_constant() || Ranking::sequential().less(leader(h), v);
}

}  // namespace

TEST_CASE("block images") {
  auto R = ring("dual");
  BlockImage img = block_image(P(R, "x1^2"), 0);
  REQUIRE(img.coords.size() == 2);
  CHECK(img.coords[0] == P(R, "x1[1,0]^2"));
  CHECK(img.coords[1] == P(R, "2*x1[1,0]*x1[0,1]"));

  auto H = ring("hs:2");
  CHECK(block_image(P(H, "x1^2"), 0).coords[2] == P(H, "2*x1[1,0,0]*x1[0,0,1] + x1[0,1,0]^2"));

  BlockImage c = block_image(P(H, "7"), 0);
  CHECK(c.coords[0] == P(H, "7"));
  CHECK(c.coords[1].is_zero());
  CHECK(c.coords[2].is_zero());
  CHECK_THROWS_AS(block_image(P(H, "7"), 1), Error);
}

TEST_CASE("apply") {
  auto R = ring("dual");
  CHECK(apply({0, 1}, P(R, "x1[0,1]^2")) == P(R, "2*x1[1,1]*x1[0,2]"));
  CHECK(apply({0, 0}, P(R, "x1 + 3")) == P(R, "x1[1,0] + 3"));
  CHECK(apply({0, 1}, P(R, "5")).is_zero());
  CHECK_THROWS_AS(apply({0, 2}, P(R, "x1")), Error);
}

TEST_CASE("apply_composition") {
  auto R = ring("dual");
  CHECK(apply_composition(MultiIndex{2, 1}, P(R, "x1[1,1]")) == P(R, "x1[3,2]"));
  DPolynomial f = P(R, "x1^2 + x1[0,1]");
  CHECK(apply_composition(MultiIndex{0, 0}, f) == f);
  DPolynomial x2 = P(R, "x1^2");
  CHECK(apply_composition(MultiIndex{1, 1}, x2) == apply({0, 0}, apply({0, 1}, x2)));
  CHECK(apply_composition(MultiIndex{1, 1}, x2) == apply({0, 1}, apply({0, 0}, x2)));
  CHECK(apply_composition(MultiIndex{1, 1}, x2) == P(R, "2*x1[2,0]*x1[1,1]"));
}

TEST_CASE("rho") {
  DAlgebra d = load_algebra("dual");
  CHECK(rho(d, MultiIndex{2, 1}) == MultiIndex{3, 0});
  CHECK(rho(d, MultiIndex{0, 0}) == MultiIndex{0, 0});
  DAlgebra dd = load_algebra("dd:1,1");
  CHECK(rho(dd, MultiIndex{1, 2, 0}) == MultiIndex{3, 0, 0});
  CHECK(rho(dd, MultiIndex{0, 1, 4}) == MultiIndex{1, 0, 4});
}

TEST_CASE("evaluate") {
  auto R = ring("dual", 2);
  DPolynomial f = P(R, "x1[0,1] * x2");
  DPolynomial e = evaluate(f, {P(R, "x2^2"), P(R, "3")});
  CHECK(e == P(R, "6 * x2[1,0] * x2[0,1]"));
  CHECK(evaluate(f, {P(R, "x1"), P(R, "x2")}) == f);
}

TEST_CASE("homomorphism, commutation and rank drops on random polynomials") {
  testsupport::Random rnd(101);
  for (const char* name : testsupport::kBuiltins) {
    auto R = ring(name, 2);
    const DAlgebra& d = *R->algebra;
    AlgebraSpec spec = *builtin_from_string(name);
    for (int k = 0; k < 40; ++k) {
      DPolynomial f = rnd.polynomial(R), g = rnd.polynomial(R);
      for (std::size_t b = 0; b < d.block_count(); ++b) {
        BlockImage fg = block_image(f * g, b);
        BlockImage prod = block_product(d, b, block_image(f, b), block_image(g, b));
        CHECK(fg.coords == prod.coords);
        CHECK(fg.coords == testsupport::oracle_block_product(spec.blocks[b], block_image(f, b), block_image(g, b)).coords);
      }
      for (const auto& s : d.slots())
        for (const auto& t : d.slots()) CHECK(apply(s, apply(t, f)) == apply(t, apply(s, f)));

      if (f.is_constant()) continue;
      DVariable u = leader(f);
      DPolynomial sf = separant(f);
      for (const auto& s : d.slots()) {
        if (s.is_sigma()) continue;
        DPolynomial du = DPolynomial::variable(R, apply_slot(d, u, s));
        DPolynomial h = apply(s, f) - apply({s.block, 0}, sf) * du;
        CHECK(below(h, apply_slot(d, u, s)));
      }
      MultiIndex theta = rnd.multi_index(d.slot_count(), 3);
      DVariable tu{u.var, u.theta + theta};
      DPolynomial tf = apply_composition(theta, f);
      if (is_sigma_only(d, theta)) {
        unsigned deg = degree_in(f, u);
        DPolynomial h = tf - apply_composition(theta, initial(f)) * DPolynomial::variable(R, tu).pow(deg);
        CHECK(rank_compare(rank(h), PolyRank{tu, deg}) < 0);
      } else {
        DPolynomial h = tf - apply_composition(rho(d, theta), sf) * DPolynomial::variable(R, tu);
        CHECK(below(h, tu));
      }
    }
  }
}

TEST_CASE("closed-form product rules") {
  testsupport::Random rnd(7);
  auto R = ring("dual", 2);
  auto H = ring("hs:2", 2);
  for (int k = 0; k < 40; ++k) {
    DPolynomial f = rnd.polynomial(R), g = rnd.polynomial(R);
    CHECK(apply({0, 1}, f * g) == apply({0, 0}, f) * apply({0, 1}, g) + apply({0, 1}, f) * apply({0, 0}, g));
    CHECK(apply({0, 0}, f * g) == apply({0, 0}, f) * apply({0, 0}, g));

    DPolynomial a = rnd.polynomial(H), b = rnd.polynomial(H);
    for (std::size_t i = 0; i <= 2; ++i) {
      DPolynomial sum(H);
      for (std::size_t j = 0; j <= i; ++j) sum += apply({0, j}, a) * apply({0, i - j}, b);
      CHECK(apply({0, i}, a * b) == sum);
    }
  }
}
