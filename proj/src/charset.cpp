#include "dstar/charset.hpp"

#include <algorithm>
#include <stdexcept>

#include "dstar/error.hpp"
#include "dstar/expr.hpp"
#include "dstar/operators.hpp"

namespace dstar {

AutoreducedSet validate_autoreduced(std::vector<DPolynomial> members, const Ranking& r) {
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (members[i].is_constant())
      throw Error(ErrorKind::NotAutoreduced, "member " + std::to_string(i) + " is constant");
    if (i) check_same_ring(members[0], members[i]);
  }
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = 0; j < members.size(); ++j) {
      if (i == j) continue;
      if (i < j && leader(members[i], r) == leader(members[j], r))
        throw Error(ErrorKind::NotAutoreduced, format(members[i], r) + " and " + format(members[j], r) +
                                                   " share a leader");
      if (!is_reduced(members[i], members[j], r))
        throw Error(ErrorKind::NotAutoreduced,
                    format(members[i], r) + " is not reduced with respect to " + format(members[j], r));
    }
  std::stable_sort(members.begin(), members.end(),
                   [&](const DPolynomial& a, const DPolynomial& b) { return rank_compare(a, b, r) < 0; });
  AutoreducedSet s;
  s.members_ = std::move(members);
  return s;
}

AutoreducedOrder compare_autoreduced(const AutoreducedSet& a, const AutoreducedSet& b, const Ranking& r) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    auto c = rank_compare(a[i], b[i], r);
    if (c < 0) return AutoreducedOrder::ALessB;
    if (c > 0) return AutoreducedOrder::BLessA;
  }
  if (a.size() > b.size()) return AutoreducedOrder::ALessB;
  if (b.size() > a.size()) return AutoreducedOrder::BLessA;
  return AutoreducedOrder::Equivalent;
}

namespace {

bool pool_less(const DPolynomial& a, const DPolynomial& b, const Ranking& r) {
  if (auto c = rank_compare(a, b, r); c != 0) return c < 0;
  return canonical_compare(a, b, r) < 0;
}

void insert_sorted(std::vector<DPolynomial>& pool, DPolynomial p, const Ranking& r) {
  auto it = std::lower_bound(pool.begin(), pool.end(), p,
                             [&](const DPolynomial& a, const DPolynomial& b) { return pool_less(a, b, r); });
  if (it != pool.end() && *it == p) return;
  pool.insert(it, std::move(p));
}

}  // namespace

CharSetResult charset_complete(const std::vector<DPolynomial>& F, const Ranking& r, unsigned max_rounds) {
  for (std::size_t i = 1; i < F.size(); ++i) check_same_ring(F[0], F[i]);
  std::vector<DPolynomial> pool;
  for (const auto& f : F) {
    if (f.is_zero()) continue;
    if (f.is_constant()) throw Error(ErrorKind::InconsistentSystem, "generator " + format(f, r) + " is a nonzero constant");
    insert_sorted(pool, normalize_leading(f, r), r);
  }

  CharSetResult result;
  std::optional<AutoreducedSet> previous;
  for (unsigned round = 1;; ++round) {
    if (round > max_rounds)
      throw Error(ErrorKind::RoundLimit, "no fixpoint after " + std::to_string(max_rounds) + " rounds");

    std::vector<DPolynomial> chosen;
    std::vector<bool> in_chosen(pool.size(), false);
    for (std::size_t k = 0; k < pool.size(); ++k)
      if (is_reduced_wrt_set(pool[k], chosen, r)) {
        chosen.push_back(pool[k]);
        in_chosen[k] = true;
      }
    AutoreducedSet selected = validate_autoreduced(chosen, r);

    if (previous && compare_autoreduced(selected, *previous, r) != AutoreducedOrder::ALessB)
      throw std::logic_error("autoreduced set did not decrease in round " + std::to_string(round));

    for (const auto& c : selected.members()) {
      DPolynomial s = separant(c, r);
      if (reduce(s, selected.members(), r).remainder.is_zero())
        throw Error(ErrorKind::SeparantDegenerate, "separant of " + format(c, r) + " reduces to zero");
    }

    CompletionRound trace{round, selected.members(), {}};
    for (std::size_t k = 0; k < pool.size(); ++k) {
      if (in_chosen[k]) continue;
      DPolynomial rem = reduce(pool[k], selected.members(), r).remainder;
      if (rem.is_zero()) continue;
      if (rem.is_constant())
        throw Error(ErrorKind::InconsistentSystem, format(pool[k], r) + " reduces to the constant " + format(rem, r));
      rem = normalize_leading(rem, r);
      if (std::find(trace.added.begin(), trace.added.end(), rem) == trace.added.end()) trace.added.push_back(rem);
    }
    std::sort(trace.added.begin(), trace.added.end(),
              [&](const DPolynomial& a, const DPolynomial& b) { return pool_less(a, b, r); });
    bool done = trace.added.empty();
    for (const auto& p : trace.added) insert_sorted(pool, p, r);
    result.trace.push_back(std::move(trace));
    previous = std::move(selected);
    if (done) break;
  }

  result.charset = std::move(*previous);
  for (const auto& f : F) {
    result.certificates.push_back(reduce(f, result.charset.members(), r));
    if (!result.certificates.back().remainder.is_zero())
      throw std::logic_error("generator " + format(f, r) + " does not reduce to zero");
  }
  return result;
}

std::vector<DPolynomial> d_ideal_generators(const std::vector<DPolynomial>& S, unsigned bound) {
  std::vector<DPolynomial> out;
  for (const auto& s : S)
    for (const auto& theta : multi_indices_up_to(s.algebra().slot_count(), bound)) {
      DPolynomial p = apply_composition(theta, s);
      if (!p.is_zero() && std::find(out.begin(), out.end(), p) == out.end()) out.push_back(std::move(p));
    }
  return out;
}

ClosureOutcome closure_step_witness(const std::vector<DPolynomial>& gens, const ClosureWitness& w) {
  const DAlgebra& alg = w.a.algebra();
  auto reject = [](std::string reason) {
    ClosureOutcome o;
    o.reason = "BadWitness: " + std::move(reason);
    return o;
  };
  if (w.taus.empty()) return reject("no operators given");
  if (w.taus.size() != w.exponents.size()) return reject("taus and exponents differ in length");
  for (const auto& g : gens) check_same_ring(w.a, g);

  DPolynomial lhs(w.a.ring(), 1);
  for (std::size_t j = 0; j < w.taus.size(); ++j) {
    if (w.taus[j].size() != alg.slot_count()) return reject("tau " + std::to_string(j) + " has the wrong length");
    if (!is_sigma_only(alg, w.taus[j])) return reject("tau " + std::to_string(j) + " is not a sigma-transform");
    if (w.exponents[j] == 0) return reject("exponent " + std::to_string(j) + " is zero");
    lhs *= apply_composition(w.taus[j], w.a).pow(w.exponents[j]);
  }
  for (const auto& c : w.combination) {
    if (c.member >= gens.size()) return reject("combination names generator " + std::to_string(c.member));
    if (c.theta.size() != alg.slot_count()) return reject("combination operator has the wrong length");
  }
  DPolynomial rhs = combination(w.combination, gens, w.a.ring());
  DPolynomial diff = lhs - rhs;
  if (!diff.is_zero()) {
    ClosureOutcome o = reject("product minus combination is " + format(diff, Ranking::sequential()));
    o.difference = std::move(diff);
    return o;
  }
  ClosureOutcome o;
  o.accepted = true;
  o.element = w.a;
  return o;
}

PrimePresentation presentation(const AutoreducedSet& C, const Ranking& r) {
  if (C.empty()) throw Error(ErrorKind::NotAutoreduced, "presentation of an empty set");
  DPolynomial H(C[0].ring(), 1);
  for (const auto& c : C.members()) H *= initial(c, r) * separant(c, r);
  return {C, {}, H};
}

}  // namespace dstar
