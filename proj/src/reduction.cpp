#include "dstar/reduction.hpp"

#include <algorithm>
#include <stdexcept>

#include "dstar/error.hpp"
#include "dstar/operators.hpp"

namespace dstar {

bool is_reduced(const DPolynomial& g, const DPolynomial& f, const Ranking& r) {
  if (f.is_constant()) throw Error(ErrorKind::ConstantDivisor, "cannot reduce with respect to a constant");
  check_same_ring(g, f);
  const DAlgebra& alg = f.algebra();
  const DVariable u = leader(f, r);
  const unsigned d = degree_in(f, u);
  for (const auto& v : g.variables()) {
    auto t = transform_of(alg, v, u);
    if (!t) continue;
    if (t->kind == TransformKind::Delta) return false;
    if (degree_in(g, v) >= d) return false;
  }
  return true;
}

bool is_reduced_wrt_set(const DPolynomial& g, const std::vector<DPolynomial>& A, const Ranking& r) {
  return std::all_of(A.begin(), A.end(), [&](const DPolynomial& f) { return is_reduced(g, f, r); });
}

void check_divisor_set(const std::vector<DPolynomial>& A, const Ranking& r) {
  for (std::size_t i = 0; i < A.size(); ++i)
    if (A[i].is_constant()) throw Error(ErrorKind::ConstantDivisor, "member " + std::to_string(i) + " is constant");
  for (std::size_t i = 0; i < A.size(); ++i)
    for (std::size_t j = i + 1; j < A.size(); ++j)
      if (leader(A[i], r) == leader(A[j], r))
        throw Error(ErrorKind::DuplicateLeaders,
                    "members " + std::to_string(i) + " and " + std::to_string(j) + " share a leader");
}

namespace {

struct Member {
  DVariable u;
  unsigned d;
};

std::vector<Member> members_of(const std::vector<DPolynomial>& A, const Ranking& r) {
  std::vector<Member> ms;
  ms.reserve(A.size());
  for (const auto& a : A) {
    DVariable u = leader(a, r);
    ms.push_back({u, degree_in(a, u)});
  }
  return ms;
}

std::optional<ALeader> find_a_leader(const DPolynomial& g, const std::vector<Member>& ms, const Ranking& r) {
  if (ms.empty()) return std::nullopt;
  const DAlgebra& alg = g.algebra();
  auto vars = g.variables();
  std::sort(vars.begin(), vars.end(), [&](const DVariable& a, const DVariable& b) { return r.less(b, a); });
  for (const auto& v : vars) {
    const unsigned k = degree_in(g, v);
    std::optional<ALeader> best;
    for (std::size_t i = 0; i < ms.size(); ++i) {
      auto t = transform_of(alg, v, ms[i].u);
      if (!t) continue;
      if (t->kind == TransformKind::Sigma && k < ms[i].d) continue;
      if (best && !r.less(ms[best->member].u, ms[i].u)) continue;
      StepCase kind = t->kind == TransformKind::Delta ? StepCase::Delta : StepCase::Sigma;
      best = ALeader{v, k, i, t->theta, kind};
    }
    if (best) return best;
  }
  return std::nullopt;
}

void add_cofactor(std::vector<Cofactor>& cofs, DPolynomial c, const MultiIndex& theta, std::size_t member) {
  for (auto& existing : cofs)
    if (existing.member == member && existing.theta == theta) {
      existing.c += c;
      return;
    }
  cofs.push_back({std::move(c), theta, member});
}

}  // namespace

std::optional<ALeader> a_leader(const DPolynomial& g, const std::vector<DPolynomial>& A, const Ranking& r) {
  for (const auto& a : A) check_same_ring(g, a);
  return find_a_leader(g, members_of(A, r), r);
}

ReductionCertificate reduce(const DPolynomial& g, const std::vector<DPolynomial>& A, const Ranking& r) {
  for (const auto& a : A) check_same_ring(g, a);
  check_divisor_set(A, r);
  const auto ms = members_of(A, r);
  const RingPtr& ring = g.ring();
  const DAlgebra& alg = g.algebra();

  ReductionCertificate cert{{}, DPolynomial(ring, 1), g, {}, {}};
  DPolynomial& cur = cert.remainder;
  std::optional<PolyRank> previous;

  while (auto al = find_a_leader(cur, ms, r)) {
    PolyRank measure{al->variable, al->degree};
    if (previous && rank_compare(measure, *previous, r) >= 0)
      throw std::logic_error("reduction measure failed to decrease at " + std::to_string(cert.steps.size()));
    previous = measure;

    const DPolynomial& a = A[al->member];
    const DVariable& v = al->variable;
    const unsigned k = al->degree;
    DPolynomial g1 = coefficients_in(cur, v)[k];
    DPolynomial theta_a = apply_composition(al->theta, a);

    HFactor factor{{}, FactorSource::Initial, al->member};
    DPolynomial m(ring);
    DPolynomial sub(ring);
    if (al->kind == StepCase::Delta) {
      factor.theta = rho(alg, al->theta);
      factor.source = FactorSource::Separant;
      m = apply_composition(factor.theta, separant(a, r));
      sub = g1 * DPolynomial::variable(ring, v).pow(k - 1);
    } else {
      factor.theta = al->theta;
      m = apply_composition(factor.theta, initial(a, r));
      sub = g1 * DPolynomial::variable(ring, v).pow(k - ms[al->member].d);
    }

    cur = m * cur - sub * theta_a;
    for (auto& c : cert.cofactors) c.c = m * c.c;
    add_cofactor(cert.cofactors, std::move(sub), al->theta, al->member);
    cert.cofactors.erase(std::remove_if(cert.cofactors.begin(), cert.cofactors.end(),
                                        [](const Cofactor& c) { return c.c.is_zero(); }),
                         cert.cofactors.end());
    cert.H = m * cert.H;
    cert.H_factors.push_back(std::move(factor));
    cert.steps.push_back({v, al->kind, k, al->member, al->theta});
  }
  return cert;
}

DPolynomial multiplier(const std::vector<HFactor>& factors, const std::vector<DPolynomial>& A, const RingPtr& ring,
                       const Ranking& r) {
  DPolynomial H(ring, 1);
  for (const auto& f : factors) {
    if (f.member >= A.size()) throw Error(ErrorKind::IndexOutOfRange, "H factor names member " + std::to_string(f.member));
    if (!is_sigma_only(A[f.member].algebra(), f.theta))
      throw Error(ErrorKind::BadWitness, "H factor applies an operator of positive derivation order");
    const DPolynomial& a = A[f.member];
    H *= apply_composition(f.theta, f.source == FactorSource::Initial ? initial(a, r) : separant(a, r));
  }
  return H;
}

DPolynomial combination(const std::vector<Cofactor>& cofactors, const std::vector<DPolynomial>& A,
                        const RingPtr& ring) {
  DPolynomial sum(ring);
  for (const auto& c : cofactors) {
    if (c.member >= A.size()) throw Error(ErrorKind::IndexOutOfRange, "cofactor names member " + std::to_string(c.member));
    sum += c.c * apply_composition(c.theta, A[c.member]);
  }
  return sum;
}

bool verify_certificate(const DPolynomial& g, const std::vector<DPolynomial>& A, const ReductionCertificate& cert,
                        const Ranking& r) {
  try {
    DPolynomial H = multiplier(cert.H_factors, A, g.ring(), r);
    if (!(H == cert.H)) return false;
    if (!(H * g == cert.remainder + combination(cert.cofactors, A, g.ring()))) return false;
    if (!is_reduced_wrt_set(cert.remainder, A, r)) return false;
    return rank_compare(rank(cert.remainder, r), rank(g, r), r) <= 0;
  } catch (const Error&) {
    return false;
  }
}

}  // namespace dstar
