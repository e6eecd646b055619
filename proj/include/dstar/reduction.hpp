#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "dstar/ordering.hpp"
#include "dstar/poly.hpp"

namespace dstar {

enum class FactorSource { Initial, Separant };
enum class StepCase { Sigma, Delta };

/// One multiplier of H: theta applied to the initial or separant of A[member]; theta is sigma-only.
struct HFactor {
  MultiIndex theta;
  FactorSource source;
  std::size_t member;
};

/// c * theta(A[member]).
struct Cofactor {
  DPolynomial c;
  MultiIndex theta;
  std::size_t member;
};

struct ReductionStep {
  DVariable variable;
  StepCase kind;
  unsigned degree;
  std::size_t member;
  MultiIndex theta;
};

/// H * g = remainder + sum c_k * theta_k(A[member_k]).
struct ReductionCertificate {
  std::vector<HFactor> H_factors;
  DPolynomial H;
  DPolynomial remainder;
  std::vector<Cofactor> cofactors;
  std::vector<ReductionStep> steps;
};

/// Highest-ranked variable of g that blocks reducedness.
struct ALeader {
  DVariable variable;
  unsigned degree;
  std::size_t member;
  MultiIndex theta;
  StepCase kind;
};

bool is_reduced(const DPolynomial& g, const DPolynomial& f, const Ranking& r = Ranking::sequential());
bool is_reduced_wrt_set(const DPolynomial& g, const std::vector<DPolynomial>& A,
                        const Ranking& r = Ranking::sequential());

std::optional<ALeader> a_leader(const DPolynomial& g, const std::vector<DPolynomial>& A,
                                const Ranking& r = Ranking::sequential());

/// Throws ConstantDivisor or DuplicateLeaders when A is not a family of non-constants with distinct leaders.
void check_divisor_set(const std::vector<DPolynomial>& A, const Ranking& r);

ReductionCertificate reduce(const DPolynomial& g, const std::vector<DPolynomial>& A,
                            const Ranking& r = Ranking::sequential());

/// Product of the H factors, recomputed from A.
DPolynomial multiplier(const std::vector<HFactor>& factors, const std::vector<DPolynomial>& A, const RingPtr& ring,
                       const Ranking& r = Ranking::sequential());

/// sum c_k * theta_k(A[member_k]).
DPolynomial combination(const std::vector<Cofactor>& cofactors, const std::vector<DPolynomial>& A,
                        const RingPtr& ring);

bool verify_certificate(const DPolynomial& g, const std::vector<DPolynomial>& A, const ReductionCertificate& cert,
                        const Ranking& r = Ranking::sequential());

}  // namespace dstar
