#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dstar/dalgebra.hpp"

namespace dstar {

/// Exponent vector theta in N^M over the operator slots of an algebra.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::size_t slots) : e_(slots, 0) {}
  explicit MultiIndex(std::vector<unsigned> entries) : e_(std::move(entries)) {}
  MultiIndex(std::initializer_list<unsigned> entries) : e_(entries) {}

  static MultiIndex unit(std::size_t slots, std::size_t slot);

  std::size_t size() const { return e_.size(); }
  unsigned operator[](std::size_t k) const { return e_[k]; }
  unsigned& operator[](std::size_t k) { return e_[k]; }
  const std::vector<unsigned>& entries() const { return e_; }

  /// Sum of all entries (the T of the sequential ranking).
  unsigned total() const;
  bool is_zero() const { return total() == 0; }

  /// Componentwise <=.
  bool divides(const MultiIndex& other) const;

  MultiIndex& operator+=(const MultiIndex& other);
  friend MultiIndex operator+(MultiIndex a, const MultiIndex& b) { return a += b; }

  /// this - other, or nullopt when some entry would go negative.
  std::optional<MultiIndex> minus(const MultiIndex& other) const;

  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;

 private:
  std::vector<unsigned> e_;
};

/// The indeterminate d^theta x_var. `var` is 0-based; printed as x<var+1>.
struct DVariable {
  unsigned var = 0;
  MultiIndex theta;

  friend auto operator<=>(const DVariable&, const DVariable&) = default;
};

DVariable apply_slot(const DAlgebra& alg, const DVariable& v, Slot s);

/// Sum of the derivation entries of block `block` (sigma slot excluded).
unsigned ord_block(const DAlgebra& alg, const MultiIndex& theta, std::size_t block);
unsigned ord_delta(const DAlgebra& alg, const MultiIndex& theta);
bool is_sigma_only(const DAlgebra& alg, const MultiIndex& theta);

enum class TransformKind { Sigma, Delta };

struct Transform {
  MultiIndex theta;
  TransformKind kind;
};

/// theta with v = theta(u), classified by its derivation order. The identity is a sigma-transform.
std::optional<Transform> transform_of(const DAlgebra& alg, const DVariable& v, const DVariable& u);

/// A total order on the variables of one D*-polynomial ring.
class Ranking {
 public:
  enum class Kind { Sequential, Custom };
  using Comparator = std::function<std::strong_ordering(const DVariable&, const DVariable&)>;

  /// Lexicographic on (T, var, theta_{M-1}, ..., theta_0) with T the total of theta.
  static const Ranking& sequential();

  /// A user-supplied order. It is checked against the three ranking axioms on every
  /// variable with total order <= `check_depth` over `n_vars` indeterminates; throws
  /// InvalidRanking with the witness on failure.
  static Ranking custom(std::string name, Comparator cmp, const DAlgebra& alg, unsigned n_vars,
                        unsigned check_depth = 2);

  std::strong_ordering compare(const DVariable& a, const DVariable& b) const;
  bool less(const DVariable& a, const DVariable& b) const { return compare(a, b) < 0; }

  Kind kind() const { return kind_; }
  const std::string& name() const { return name_; }

 private:
  Ranking(Kind kind, std::string name, Comparator cmp)
      : kind_(kind), name_(std::move(name)), cmp_(std::move(cmp)) {}

  Kind kind_;
  std::string name_;
  Comparator cmp_;
};

std::strong_ordering sequential_compare(const DVariable& a, const DVariable& b);

/// Number of variables strictly below v in the sequential ranking over n_vars indeterminates.
std::uint64_t sequential_position(const DVariable& v, unsigned n_vars);

/// The three ranking axioms on the given variables; returns a description of the first
/// violation, or nullopt.
std::optional<std::string> check_ranking_axioms(const Ranking& r, const DAlgebra& alg,
                                                std::span<const DVariable> vars);

/// Elements of `s` minimal under the componentwise order, deduplicated and sorted.
std::vector<MultiIndex> dickson_minimal(std::vector<MultiIndex> s);

/// Every multi-index in N^slots with total <= bound, ordered by total then lexicographically.
std::vector<MultiIndex> multi_indices_up_to(std::size_t slots, unsigned bound);

}  // namespace dstar
