#include "dstar/ordering.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "dstar/error.hpp"

namespace dstar {

MultiIndex MultiIndex::unit(std::size_t slots, std::size_t slot) {
  MultiIndex m(slots);
  m.e_.at(slot) = 1;
  return m;
}

unsigned MultiIndex::total() const { return std::accumulate(e_.begin(), e_.end(), 0u); }

bool MultiIndex::divides(const MultiIndex& other) const {
  if (e_.size() != other.e_.size()) return false;
  for (std::size_t k = 0; k < e_.size(); ++k)
    if (e_[k] > other.e_[k]) return false;
  return true;
}

MultiIndex& MultiIndex::operator+=(const MultiIndex& other) {
  if (e_.size() != other.e_.size()) throw Error(ErrorKind::AlgebraMismatch, "multi-index lengths differ");
  for (std::size_t k = 0; k < e_.size(); ++k) e_[k] += other.e_[k];
  return *this;
}

std::optional<MultiIndex> MultiIndex::minus(const MultiIndex& other) const {
  if (!other.divides(*this)) return std::nullopt;
  MultiIndex r = *this;
  for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] -= other.e_[k];
  return r;
}

DVariable apply_slot(const DAlgebra& alg, const DVariable& v, Slot s) {
  std::size_t g = alg.slot_index(s);
  if (v.theta.size() != alg.slot_count()) throw Error(ErrorKind::AlgebraMismatch, "variable has wrong slot count");
  DVariable out = v;
  out.theta[g] += 1;
  return out;
}

unsigned ord_block(const DAlgebra& alg, const MultiIndex& theta, std::size_t block) {
  std::size_t base = alg.slot_index(block, 0);
  unsigned sum = 0;
  for (std::size_t p = 1; p <= alg.nilpotent_count(block); ++p) sum += theta[base + p];
  return sum;
}

unsigned ord_delta(const DAlgebra& alg, const MultiIndex& theta) {
  unsigned sum = 0;
  for (std::size_t b = 0; b < alg.block_count(); ++b) sum += ord_block(alg, theta, b);
  return sum;
}

bool is_sigma_only(const DAlgebra& alg, const MultiIndex& theta) { return ord_delta(alg, theta) == 0; }

std::optional<Transform> transform_of(const DAlgebra& alg, const DVariable& v, const DVariable& u) {
  if (v.var != u.var) return std::nullopt;
  auto diff = v.theta.minus(u.theta);
  if (!diff) return std::nullopt;
  TransformKind kind = ord_delta(alg, *diff) > 0 ? TransformKind::Delta : TransformKind::Sigma;
  return Transform{std::move(*diff), kind};
}

std::strong_ordering sequential_compare(const DVariable& a, const DVariable& b) {
  if (a.theta.size() != b.theta.size()) throw Error(ErrorKind::AlgebraMismatch, "variables over different algebras");
  if (auto c = a.theta.total() <=> b.theta.total(); c != 0) return c;
  if (auto c = a.var <=> b.var; c != 0) return c;
  for (std::size_t k = a.theta.size(); k-- > 0;)
    if (auto c = a.theta[k] <=> b.theta[k]; c != 0) return c;
  return std::strong_ordering::equal;
}

const Ranking& Ranking::sequential() {
  static const Ranking r(Kind::Sequential, "sequential", Comparator{});
  return r;
}

std::strong_ordering Ranking::compare(const DVariable& a, const DVariable& b) const {
  if (kind_ == Kind::Sequential) return sequential_compare(a, b);
  if (a.theta.size() != b.theta.size()) throw Error(ErrorKind::AlgebraMismatch, "variables over different algebras");
  return cmp_(a, b);
}

namespace {

std::string describe(const DVariable& v) {
  std::string s = "x" + std::to_string(v.var + 1) + "[";
  for (std::size_t k = 0; k < v.theta.size(); ++k) s += (k ? "," : "") + std::to_string(v.theta[k]);
  return s + "]";
}

}  // namespace

std::optional<std::string> check_ranking_axioms(const Ranking& r, const DAlgebra& alg,
                                                std::span<const DVariable> vars) {
  const auto& slots = alg.slots();
  for (const auto& v : vars) {
    if (r.compare(v, v) != 0) return "not reflexive at " + describe(v);
    for (const auto& s : slots) {
      DVariable w = apply_slot(alg, v, s);
      if (!r.less(v, w)) return "axiom 1 fails: " + describe(v) + " is not below " + describe(w);
    }
    for (std::size_t b = 0; b < alg.block_count(); ++b)
      for (std::size_t j = 0; j <= alg.nilpotent_count(b); ++j)
        for (std::size_t k = 0; k <= alg.nilpotent_count(b); ++k) {
          if (alg.nu(b, j) >= alg.nu(b, k)) continue;
          DVariable vj = apply_slot(alg, v, {b, j});
          DVariable vk = apply_slot(alg, v, {b, k});
          if (!r.less(vj, vk)) return "axiom 3 fails: " + describe(vj) + " is not below " + describe(vk);
        }
  }
  for (const auto& v : vars)
    for (const auto& w : vars) {
      auto c = r.compare(v, w);
      if (c != (0 <=> r.compare(w, v))) return "not antisymmetric on " + describe(v) + ", " + describe(w);
      if ((c == 0) != (v == w)) return "distinct variables compare equal: " + describe(v) + ", " + describe(w);
      if (c >= 0) continue;
      for (const auto& s : slots) {
        DVariable v2 = apply_slot(alg, v, s);
        DVariable w2 = apply_slot(alg, w, s);
        if (!r.less(v2, w2)) return "axiom 2 fails: " + describe(v) + " < " + describe(w) + " but not after slot";
      }
    }
  return std::nullopt;
}

Ranking Ranking::custom(std::string name, Comparator cmp, const DAlgebra& alg, unsigned n_vars,
                        unsigned check_depth) {
  Ranking r(Kind::Custom, std::move(name), std::move(cmp));
  std::vector<DVariable> vars;
  for (unsigned j = 0; j < n_vars; ++j)
    for (auto& theta : multi_indices_up_to(alg.slot_count(), check_depth)) vars.push_back({j, theta});
  if (auto bad = check_ranking_axioms(r, alg, vars)) throw Error(ErrorKind::InvalidRanking, r.name_ + ": " + *bad);
  return r;
}

namespace {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Multi-indices in N^slots with entries summing to exactly `sum`.
std::uint64_t compositions(std::uint64_t sum, std::uint64_t slots) {
  if (slots == 0) return sum == 0 ? 1 : 0;
  return binomial(sum + slots - 1, slots - 1);
}

}  // namespace

std::uint64_t sequential_position(const DVariable& v, unsigned n_vars) {
  const std::uint64_t m = v.theta.size();
  const std::uint64_t t = v.theta.total();
  std::uint64_t below = 0;
  // all totals < t: number of theta with sum <= t-1 is C(t-1+m, m)
  if (t > 0) below += std::uint64_t(n_vars) * binomial(t - 1 + m, m);
  below += std::uint64_t(v.var) * compositions(t, m);
  std::uint64_t remaining = t;
  for (std::uint64_t k = m; k-- > 1;) {
    for (std::uint64_t a = 0; a < v.theta[k]; ++a) below += compositions(remaining - a, k);
    remaining -= v.theta[k];
  }
  return below;
}

std::vector<MultiIndex> dickson_minimal(std::vector<MultiIndex> s) {
  std::sort(s.begin(), s.end(), [](const MultiIndex& a, const MultiIndex& b) {
    auto ta = a.total(), tb = b.total();
    return ta != tb ? ta < tb : a < b;
  });
  s.erase(std::unique(s.begin(), s.end()), s.end());
  std::vector<MultiIndex> minimal;
  for (auto& x : s)
    if (std::none_of(minimal.begin(), minimal.end(), [&](const MultiIndex& m) { return m.divides(x); }))
      minimal.push_back(std::move(x));
  std::sort(minimal.begin(), minimal.end());
  return minimal;
}

std::vector<MultiIndex> multi_indices_up_to(std::size_t slots, unsigned bound) {
  std::vector<MultiIndex> out;
  MultiIndex cur(slots);
  // depth-first fill of each total in turn keeps the output ordered
  std::function<void(std::size_t, unsigned)> fill = [&](std::size_t k, unsigned left) {
    if (k + 1 == slots) {
      cur[k] = left;
      out.push_back(cur);
      return;
    }
    for (unsigned a = left + 1; a-- > 0;) {
      cur[k] = a;
      fill(k + 1, left - a);
    }
  };
  if (slots == 0) return {MultiIndex()};
  for (unsigned t = 0; t <= bound; ++t) {
    std::size_t start = out.size();
    fill(0, t);
    std::sort(out.begin() + static_cast<std::ptrdiff_t>(start), out.end());
  }
  return out;
}

}  // namespace dstar
