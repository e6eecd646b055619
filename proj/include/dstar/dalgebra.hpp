#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dstar/rational.hpp"

namespace dstar {

// One local factor of the operator algebra, as supplied by the user.
// basis[0] is the block unit. Table keys are unordered pairs of basis names;
// products with the unit may be omitted and products absent from the table are zero.
struct BlockSpec {
  std::vector<std::string> basis;
  std::map<std::pair<std::string, std::string>, std::vector<std::pair<std::string, Rational>>> table;
};

struct AlgebraSpec {
  std::vector<BlockSpec> blocks;
};

// Position of an operator: block index (0-based) and basis index within the block.
// index 0 is the endomorphism sigma, indices 1..m are the twisted derivations.
struct Slot {
  std::size_t block = 0;
  std::size_t index = 0;

  bool is_sigma() const { return index == 0; }
  friend auto operator<=>(const Slot&, const Slot&) = default;
};

// Nonzero structure constant: e_p * e_q has coefficient `coeff` on e_j.
struct StructureTerm {
  std::size_t p;
  std::size_t q;
  std::size_t j;
  Rational coeff;
};

/// A validated finite-dimensional Q-algebra D = D_1 x ... x D_t in a ranked basis.
///
/// Slots are laid out block by block; within a block the sigma slot comes first,
/// followed by the derivation slots in ranked order. The value is immutable.
class DAlgebra {
 public:
  std::size_t block_count() const { return blocks_.size(); }
  std::size_t nilpotent_count(std::size_t block) const;
  std::size_t slot_count() const { return slots_.size(); }

  std::size_t slot_index(std::size_t block, std::size_t index) const;
  std::size_t slot_index(Slot s) const { return slot_index(s.block, s.index); }
  Slot slot_at(std::size_t global) const;
  const std::vector<Slot>& slots() const { return slots_; }

  /// Nilpotency depth nu_i(j); nu_i(0) = 0 for the unit.
  unsigned nu(std::size_t block, std::size_t j) const;
  const std::vector<std::pair<std::size_t, std::size_t>>& gamma(std::size_t block, std::size_t j) const;

  /// Coefficient of e_j in e_p * e_q, all indices 0..m_i (unit included).
  const Rational& structure(std::size_t block, std::size_t j, std::size_t p, std::size_t q) const;
  const std::vector<StructureTerm>& structure_terms(std::size_t block) const;

  const std::vector<std::string>& basis_names(std::size_t block) const;
  const std::string& op_name(std::size_t global_slot) const { return op_names_.at(global_slot); }
  const std::vector<std::string>& op_names() const { return op_names_; }

  const std::string& label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  friend bool operator==(const DAlgebra& a, const DAlgebra& b);

 private:
  friend DAlgebra validate_algebra(const AlgebraSpec& spec);

  struct Block {
    std::vector<std::string> names;
    std::vector<unsigned> nu;  // size m+1, nu[0] = 0
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> gamma;  // size m+1
    std::vector<Rational> table;  // (m+1)^3, index (j*(d) + p)*d + q
    std::vector<StructureTerm> terms;
  };

  std::vector<Block> blocks_;
  std::vector<std::size_t> offsets_;
  std::vector<Slot> slots_;
  std::vector<std::string> op_names_;
  std::string label_;
};

/// Checks associativity, unitality, locality and the ranked-basis condition, then
/// computes nu, gamma and the structure constants. Throws dstar::Error.
DAlgebra validate_algebra(const AlgebraSpec& spec);

/// alpha_{i,j}^{p,q}: the e_j coefficient of e_p * e_q for nilpotent indices 1..m_i.
Rational alpha(const DAlgebra& d, std::size_t block, std::size_t j, std::size_t p, std::size_t q);

/// The standard algebras: "dual", "fields" (m), "diff_difference" (n, m), "truncated_hs" (n).
/// Short aliases "hs" and "dd" are accepted.
AlgebraSpec builtin(std::string_view name, const std::vector<unsigned>& params);

/// Parses the compact form used on the command line: dual, fields:m, hs:n, dd:n,m.
/// Returns nullopt when `text` is not a builtin name at all.
std::optional<AlgebraSpec> builtin_from_string(std::string_view text);

}  // namespace dstar
