#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dstar/poly.hpp"
#include "dstar/reduction.hpp"

namespace dstar {

/// Pairwise reduced, distinct leaders, rank ascending.
class AutoreducedSet {
 public:
  AutoreducedSet() = default;

  const std::vector<DPolynomial>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  const DPolynomial& operator[](std::size_t i) const { return members_[i]; }

 private:
  friend AutoreducedSet validate_autoreduced(std::vector<DPolynomial> members, const Ranking& r);
  std::vector<DPolynomial> members_;
};

/// Throws NotAutoreduced naming the offending pair.
AutoreducedSet validate_autoreduced(std::vector<DPolynomial> members, const Ranking& r = Ranking::sequential());

enum class AutoreducedOrder { ALessB, BLessA, Equivalent };

AutoreducedOrder compare_autoreduced(const AutoreducedSet& a, const AutoreducedSet& b,
                                     const Ranking& r = Ranking::sequential());

struct CompletionRound {
  unsigned round;
  std::vector<DPolynomial> selected;
  std::vector<DPolynomial> added;
};

struct CharSetResult {
  AutoreducedSet charset;
  std::vector<CompletionRound> trace;
  /// One per input generator, in input order, each with remainder zero.
  std::vector<ReductionCertificate> certificates;
};

CharSetResult charset_complete(const std::vector<DPolynomial>& F, const Ranking& r = Ranking::sequential(),
                               unsigned max_rounds = 200);

/// Nonzero theta(s) for s in S and |theta| <= bound, without repeats.
std::vector<DPolynomial> d_ideal_generators(const std::vector<DPolynomial>& S, unsigned bound);

struct ClosureWitness {
  DPolynomial a;
  std::vector<MultiIndex> taus;
  std::vector<unsigned> exponents;
  std::vector<Cofactor> combination;
};

struct ClosureOutcome {
  bool accepted = false;
  std::optional<DPolynomial> element;
  std::optional<DPolynomial> difference;
  std::string reason;
};

/// Accepts a when prod tau_j(a)^{n_j} equals the combination over gens exactly.
ClosureOutcome closure_step_witness(const std::vector<DPolynomial>& gens, const ClosureWitness& w);

struct PrimePresentation {
  AutoreducedSet charset;
  std::vector<DPolynomial> base_gens;
  DPolynomial H;
};

PrimePresentation presentation(const AutoreducedSet& C, const Ranking& r = Ranking::sequential());

}  // namespace dstar
