#pragma once

#include <cstddef>
#include <vector>

#include "dstar/ordering.hpp"
#include "dstar/poly.hpp"

namespace dstar {

/// Coordinates of pr_i(e(f)) in the basis e_{i,0}, ..., e_{i,m_i} of block i.
struct BlockImage {
  std::vector<DPolynomial> coords;
};

/// Product in D_i(R) through the structure constants of block i.
BlockImage block_product(const DAlgebra& alg, std::size_t block, const BlockImage& a, const BlockImage& b);

/// The multiplicative extension of d^theta x -> sum_p d^{theta + 1_{ip}} x (x) e_{i,p}.
/// Constants map to (c, 0, ..., 0).
BlockImage block_image(const DPolynomial& f, std::size_t block);

/// sigma_i or delta_{i,p} applied to f.
DPolynomial apply(Slot s, const DPolynomial& f);

/// Applies theta slot by slot in ascending global slot order.
DPolynomial apply_composition(const MultiIndex& theta, const DPolynomial& f);

/// The sigma-only operator whose block-i sigma entry is theta's sigma entry plus ord_i(theta).
MultiIndex rho(const DAlgebra& alg, const MultiIndex& theta);

/// The D*-homomorphism of the ring into itself sending x_j to images[j]:
/// d^theta x_j goes to apply_composition(theta, images[j]).
DPolynomial evaluate(const DPolynomial& f, const std::vector<DPolynomial>& images);

}  // namespace dstar
