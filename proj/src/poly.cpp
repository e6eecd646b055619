#include "dstar/poly.hpp"

#include <algorithm>
#include <stdexcept>

#include "dstar/error.hpp"

namespace dstar {

RingPtr make_ring(DAlgebra algebra, unsigned n_vars) {
  return make_ring(std::make_shared<const DAlgebra>(std::move(algebra)), n_vars);
}

RingPtr make_ring(std::shared_ptr<const DAlgebra> algebra, unsigned n_vars) {
  if (n_vars == 0) throw Error(ErrorKind::IndexOutOfRange, "a ring needs at least one indeterminate");
  return std::make_shared<const Ring>(Ring{std::move(algebra), n_vars});
}

// ---- Monomial ----

Monomial Monomial::of(const DVariable& v, unsigned exponent) {
  Monomial m;
  if (exponent > 0) m.factors_.emplace_back(v, exponent);
  return m;
}

unsigned Monomial::degree_in(const DVariable& v) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                             [](const Factor& f, const DVariable& x) { return f.first < x; });
  return it != factors_.end() && it->first == v ? it->second : 0;
}

unsigned Monomial::total_degree() const {
  unsigned d = 0;
  for (const auto& f : factors_) d += f.second;
  return d;
}

Monomial Monomial::without(const DVariable& v) const {
  Monomial m;
  for (const auto& f : factors_)
    if (f.first != v) m.factors_.push_back(f);
  return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  m.factors_.reserve(a.factors_.size() + b.factors_.size());
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  while (i != a.factors_.end() && j != b.factors_.end()) {
    if (i->first < j->first) {
      m.factors_.push_back(*i++);
    } else if (j->first < i->first) {
      m.factors_.push_back(*j++);
    } else {
      m.factors_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  m.factors_.insert(m.factors_.end(), i, a.factors_.end());
  m.factors_.insert(m.factors_.end(), j, b.factors_.end());
  return m;
}

// ---- DPolynomial ----

DPolynomial::DPolynomial(RingPtr ring) : ring_(std::move(ring)) {
  if (!ring_) throw std::invalid_argument("DPolynomial needs a ring");
}

DPolynomial::DPolynomial(RingPtr ring, const Rational& c) : DPolynomial(std::move(ring)) {
  add_term(Monomial(), c);
}

DPolynomial DPolynomial::variable(RingPtr ring, const DVariable& v) {
  if (v.var >= ring->n_vars)
    throw Error(ErrorKind::IndexOutOfRange, "indeterminate x" + std::to_string(v.var + 1) + " outside a ring with " +
                                                std::to_string(ring->n_vars) + " indeterminates");
  if (v.theta.size() != ring->algebra->slot_count())
    throw Error(ErrorKind::AlgebraMismatch, "multi-index has " + std::to_string(v.theta.size()) +
                                                " entries, algebra has " +
                                                std::to_string(ring->algebra->slot_count()) + " slots");
  DPolynomial p(std::move(ring));
  p.terms_.emplace(Monomial::of(v), Rational(1));
  return p;
}

DPolynomial DPolynomial::x(RingPtr ring, unsigned var) {
  std::size_t m = ring->algebra->slot_count();
  return variable(std::move(ring), DVariable{var, MultiIndex(m)});
}

bool DPolynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational DPolynomial::constant_value() const {
  if (!is_constant()) throw std::logic_error("constant_value of a non-constant polynomial");
  return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

std::vector<DVariable> DPolynomial::variables() const {
  std::vector<DVariable> vars;
  for (const auto& [m, c] : terms_)
    for (const auto& f : m.factors()) vars.push_back(f.first);
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

void DPolynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

bool same_ring(const Ring& a, const Ring& b) {
  return &a == &b || a.algebra == b.algebra || *a.algebra == *b.algebra;
}

void check_same_ring(const DPolynomial& a, const DPolynomial& b) {
  if (!same_ring(*a.ring(), *b.ring()))
    throw Error(ErrorKind::AlgebraMismatch, "polynomials over different algebras (" + a.algebra().label() + " vs " +
                                                b.algebra().label() + ")");
}

namespace {

// Polynomials over the same algebra with different indeterminate counts combine in the larger ring.
const RingPtr& wider(const RingPtr& a, const RingPtr& b) { return b->n_vars > a->n_vars ? b : a; }

}  // namespace

DPolynomial& DPolynomial::operator+=(const DPolynomial& o) {
  check_same_ring(*this, o);
  ring_ = wider(ring_, o.ring_);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

DPolynomial& DPolynomial::operator-=(const DPolynomial& o) {
  check_same_ring(*this, o);
  ring_ = wider(ring_, o.ring_);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

DPolynomial operator*(const DPolynomial& a, const DPolynomial& b) {
  check_same_ring(a, b);
  DPolynomial r(wider(a.ring_, b.ring_));
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

DPolynomial& DPolynomial::operator*=(const DPolynomial& o) { return *this = *this * o; }

DPolynomial& DPolynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

DPolynomial operator-(DPolynomial a) {
  for (auto& [m, c] : a.terms_) c = -c;
  return a;
}

DPolynomial DPolynomial::pow(unsigned k) const {
  DPolynomial result(ring_, Rational(1));
  DPolynomial base = *this;
  while (k > 0) {
    if (k & 1u) result *= base;
    k >>= 1u;
    if (k) base *= base;
  }
  return result;
}

bool operator==(const DPolynomial& a, const DPolynomial& b) {
  return same_ring(*a.ring_, *b.ring_) && a.terms_ == b.terms_;
}

// ---- leader / initial / separant ----

unsigned degree_in(const DPolynomial& f, const DVariable& u) {
  unsigned d = 0;
  for (const auto& [m, c] : f.terms()) d = std::max(d, m.degree_in(u));
  return d;
}

std::vector<DPolynomial> coefficients_in(const DPolynomial& f, const DVariable& u) {
  std::vector<DPolynomial> g(degree_in(f, u) + 1, DPolynomial(f.ring()));
  for (const auto& [m, c] : f.terms()) g[m.degree_in(u)].add_term(m.without(u), c);
  return g;
}

DVariable leader(const DPolynomial& f, const Ranking& r) {
  std::optional<DVariable> best;
  for (const auto& [m, c] : f.terms())
    for (const auto& fac : m.factors())
      if (!best || r.less(*best, fac.first)) best = fac.first;
  if (!best) throw Error(ErrorKind::ConstantPolynomial, "constant polynomial has no leader");
  return *best;
}

DPolynomial initial(const DPolynomial& f, const Ranking& r) {
  auto g = coefficients_in(f, leader(f, r));
  return g.back();
}

DPolynomial separant(const DPolynomial& f, const Ranking& r) {
  DVariable u = leader(f, r);
  DPolynomial s(f.ring());
  for (const auto& [m, c] : f.terms()) {
    unsigned k = m.degree_in(u);
    if (k == 0) continue;
    s.add_term(m.without(u) * Monomial::of(u, k - 1), c * k);
  }
  return s;
}

PolyRank rank(const DPolynomial& f, const Ranking& r) {
  if (f.is_constant()) return {};
  DVariable u = leader(f, r);
  return {u, degree_in(f, u)};
}

std::strong_ordering rank_compare(const PolyRank& a, const PolyRank& b, const Ranking& r) {
  if (!a.leader || !b.leader) return a.leader.has_value() <=> b.leader.has_value();
  if (auto c = r.compare(*a.leader, *b.leader); c != 0) return c;
  return a.degree <=> b.degree;
}

std::strong_ordering rank_compare(const DPolynomial& f, const DPolynomial& g, const Ranking& r) {
  check_same_ring(f, g);
  return rank_compare(rank(f, r), rank(g, r), r);
}

// ---- canonical order ----

namespace {

std::vector<Monomial::Factor> descending(const Monomial& m, const Ranking& r) {
  auto fs = m.factors();
  std::sort(fs.begin(), fs.end(), [&](const auto& a, const auto& b) { return r.less(b.first, a.first); });
  return fs;
}

std::strong_ordering compare_sorted(const std::vector<Monomial::Factor>& a, const std::vector<Monomial::Factor>& b,
                                    const Ranking& r) {
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t k = 0; k < n; ++k) {
    if (auto c = r.compare(a[k].first, b[k].first); c != 0) return c;
    if (auto c = a[k].second <=> b[k].second; c != 0) return c;
  }
  return a.size() <=> b.size();
}

}  // namespace

std::strong_ordering monomial_compare(const Monomial& a, const Monomial& b, const Ranking& r) {
  return compare_sorted(descending(a, r), descending(b, r), r);
}

std::vector<std::pair<Monomial, Rational>> canonical_terms(const DPolynomial& f, const Ranking& r) {
  struct Keyed {
    std::vector<Monomial::Factor> key;
    const Monomial* m;
    const Rational* c;
  };
  std::vector<Keyed> ks;
  ks.reserve(f.size());
  for (const auto& [m, c] : f.terms()) ks.push_back({descending(m, r), &m, &c});
  std::sort(ks.begin(), ks.end(), [&](const Keyed& a, const Keyed& b) { return compare_sorted(a.key, b.key, r) > 0; });
  std::vector<std::pair<Monomial, Rational>> out;
  out.reserve(ks.size());
  for (const auto& k : ks) out.emplace_back(*k.m, *k.c);
  return out;
}

std::strong_ordering canonical_compare(const DPolynomial& f, const DPolynomial& g, const Ranking& r) {
  auto a = canonical_terms(f, r);
  auto b = canonical_terms(g, r);
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t k = 0; k < n; ++k) {
    if (auto c = monomial_compare(a[k].first, b[k].first, r); c != 0) return c;
    if (a[k].second != b[k].second) return a[k].second < b[k].second ? std::strong_ordering::less
                                                                      : std::strong_ordering::greater;
  }
  return a.size() <=> b.size();
}

DPolynomial normalize_leading(const DPolynomial& f, const Ranking& r) {
  if (f.is_zero()) return f;
  auto terms = canonical_terms(f, r);
  Rational lead = terms.front().second;
  return f * Rational(1 / lead);
}

}  // namespace dstar
