#include "dstar/operators.hpp"

#include "dstar/error.hpp"

namespace dstar {

namespace {

// Coordinates 0..upto of pr_i; coordinate j of a product only needs coordinates <= j of the factors,
// since e_p e_q has no component along e_j unless p, q <= j.
BlockImage truncated_product(const DAlgebra& alg, std::size_t block, const BlockImage& a, const BlockImage& b,
                             std::size_t upto) {
  BlockImage out;
  out.coords.assign(upto + 1, DPolynomial(a.coords[0].ring()));
  for (const auto& t : alg.structure_terms(block)) {
    if (t.j > upto || t.p > upto || t.q > upto) continue;
    if (a.coords[t.p].is_zero() || b.coords[t.q].is_zero()) continue;
    out.coords[t.j] += (a.coords[t.p] * b.coords[t.q]) * t.coeff;
  }
  return out;
}

BlockImage truncated_image(const DPolynomial& f, std::size_t block, std::size_t upto) {
  const DAlgebra& alg = f.algebra();
  if (block >= alg.block_count()) throw Error(ErrorKind::IndexOutOfRange, "block " + std::to_string(block + 1));
  const RingPtr& ring = f.ring();

  auto constant = [&](const Rational& c) {
    BlockImage b;
    b.coords.assign(upto + 1, DPolynomial(ring));
    b.coords[0] = DPolynomial(ring, c);
    return b;
  };
  auto var_image = [&](const DVariable& v) {
    BlockImage b;
    b.coords.reserve(upto + 1);
    for (std::size_t p = 0; p <= upto; ++p) b.coords.push_back(DPolynomial::variable(ring, apply_slot(alg, v, {block, p})));
    return b;
  };

  BlockImage total = constant(0);
  for (const auto& [m, c] : f.terms()) {
    BlockImage acc = constant(c);
    for (const auto& [v, e] : m.factors()) {
      BlockImage img = var_image(v);
      for (unsigned k = 0; k < e; ++k) acc = truncated_product(alg, block, acc, img, upto);
    }
    for (std::size_t j = 0; j <= upto; ++j) total.coords[j] += acc.coords[j];
  }
  return total;
}

}  // namespace

BlockImage block_product(const DAlgebra& alg, std::size_t block, const BlockImage& a, const BlockImage& b) {
  const std::size_t d = alg.nilpotent_count(block) + 1;
  if (a.coords.size() != d || b.coords.size() != d)
    throw Error(ErrorKind::AlgebraMismatch, "block image has the wrong number of coordinates");
  return truncated_product(alg, block, a, b, d - 1);
}

BlockImage block_image(const DPolynomial& f, std::size_t block) {
  return truncated_image(f, block, f.algebra().nilpotent_count(block));
}

DPolynomial apply(Slot s, const DPolynomial& f) {
  const DAlgebra& alg = f.algebra();
  if (s.block >= alg.block_count() || s.index > alg.nilpotent_count(s.block))
    throw Error(ErrorKind::IndexOutOfRange, "no operator at block " + std::to_string(s.block + 1) + ", index " +
                                                std::to_string(s.index));
  return truncated_image(f, s.block, s.index).coords[s.index];
}

DPolynomial apply_composition(const MultiIndex& theta, const DPolynomial& f) {
  const DAlgebra& alg = f.algebra();
  if (theta.size() != alg.slot_count())
    throw Error(ErrorKind::AlgebraMismatch, "operator has " + std::to_string(theta.size()) + " entries, algebra has " +
                                                std::to_string(alg.slot_count()) + " slots");
  DPolynomial g = f;
  for (std::size_t k = 0; k < theta.size(); ++k)
    for (unsigned n = 0; n < theta[k]; ++n) g = apply(alg.slot_at(k), g);
  return g;
}

MultiIndex rho(const DAlgebra& alg, const MultiIndex& theta) {
  if (theta.size() != alg.slot_count()) throw Error(ErrorKind::AlgebraMismatch, "operator has the wrong length");
  MultiIndex out(theta.size());
  for (std::size_t b = 0; b < alg.block_count(); ++b) {
    std::size_t s = alg.slot_index(b, 0);
    out[s] = theta[s] + ord_block(alg, theta, b);
  }
  return out;
}

DPolynomial evaluate(const DPolynomial& f, const std::vector<DPolynomial>& images) {
  if (images.size() < f.ring()->n_vars)
    throw Error(ErrorKind::IndexOutOfRange, "evaluation needs an image for every indeterminate");
  for (const auto& a : images) check_same_ring(f, a);
  RingPtr target = images.empty() ? f.ring() : images.front().ring();
  DPolynomial out(target);
  for (const auto& [m, c] : f.terms()) {
    DPolynomial t(target, c);
    for (const auto& [v, e] : m.factors()) t *= apply_composition(v.theta, images[v.var]).pow(e);
    out += t;
  }
  return out;
}

}  // namespace dstar
