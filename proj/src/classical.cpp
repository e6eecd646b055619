#include "dstar/classical.hpp"

#include <algorithm>

#include "dstar/error.hpp"

namespace dstar::classical {

std::strong_ordering orderly_compare(const DiffVar& a, const DiffVar& b) {
  if (auto c = a.order <=> b.order; c != 0) return c;
  return a.var <=> b.var;
}

namespace {

bool orderly_less(const DiffVar& a, const DiffVar& b) { return orderly_compare(a, b) < 0; }

DiffPolynomial::Monomial times(DiffPolynomial::Monomial a, const DiffPolynomial::Monomial& b) {
  for (const auto& [v, e] : b) a[v] += e;
  return a;
}

}  // namespace

DiffPolynomial::DiffPolynomial(const Rational& c) { add_term({}, c); }

DiffPolynomial DiffPolynomial::var(unsigned j, unsigned order) {
  DiffPolynomial p;
  p.add_term({{DiffVar{j, order}, 1}}, 1);
  return p;
}

bool DiffPolynomial::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }

void DiffPolynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  Rational& slot = terms_[m];
  slot += c;
  if (slot == 0) terms_.erase(m);
}

DiffPolynomial& DiffPolynomial::operator+=(const DiffPolynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

DiffPolynomial& DiffPolynomial::operator-=(const DiffPolynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

DiffPolynomial operator*(const DiffPolynomial& a, const DiffPolynomial& b) {
  DiffPolynomial r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(times(ma, mb), ca * cb);
  return r;
}

DiffPolynomial DiffPolynomial::pow(unsigned k) const {
  DiffPolynomial r(1);
  for (unsigned i = 0; i < k; ++i) r = r * *this;
  return r;
}

DiffPolynomial derive(const DiffPolynomial& f, unsigned n) {
  DiffPolynomial cur = f;
  for (unsigned step = 0; step < n; ++step) {
    DiffPolynomial next;
    for (const auto& [m, c] : cur.terms())
      for (const auto& [v, e] : m) {
        DiffPolynomial::Monomial dm = m;
        if (--dm[v] == 0) dm.erase(v);
        dm[DiffVar{v.var, v.order + 1}] += 1;
        next.add_term(dm, c * e);
      }
    cur = std::move(next);
  }
  return cur;
}

std::optional<DiffVar> leader(const DiffPolynomial& f) {
  std::optional<DiffVar> best;
  for (const auto& [m, c] : f.terms())
    for (const auto& [v, e] : m)
      if (!best || orderly_less(*best, v)) best = v;
  return best;
}

unsigned degree_in(const DiffPolynomial& f, const DiffVar& v) {
  unsigned d = 0;
  for (const auto& [m, c] : f.terms()) {
    auto it = m.find(v);
    if (it != m.end()) d = std::max(d, it->second);
  }
  return d;
}

namespace {

// f = sum_k g_k v^k; returns g_k.
DiffPolynomial coefficient(const DiffPolynomial& f, const DiffVar& v, unsigned k) {
  DiffPolynomial g;
  for (const auto& [m, c] : f.terms()) {
    auto it = m.find(v);
    unsigned e = it == m.end() ? 0 : it->second;
    if (e != k) continue;
    DiffPolynomial::Monomial rest = m;
    rest.erase(v);
    g.add_term(rest, c);
  }
  return g;
}

}  // namespace

DiffPolynomial initial(const DiffPolynomial& f) {
  auto u = leader(f);
  if (!u) throw Error(ErrorKind::ConstantPolynomial, "constant polynomial has no leader");
  return coefficient(f, *u, degree_in(f, *u));
}

DiffPolynomial separant(const DiffPolynomial& f) {
  auto u = leader(f);
  if (!u) throw Error(ErrorKind::ConstantPolynomial, "constant polynomial has no leader");
  DiffPolynomial s;
  for (const auto& [m, c] : f.terms()) {
    auto it = m.find(*u);
    if (it == m.end()) continue;
    DiffPolynomial::Monomial dm = m;
    unsigned e = it->second;
    if (--dm[*u] == 0) dm.erase(*u);
    s.add_term(dm, c * e);
  }
  return s;
}

std::string format(const DiffPolynomial& f) {
  if (f.is_zero()) return "0";
  using Factors = std::vector<std::pair<DiffVar, unsigned>>;
  std::vector<std::pair<Factors, Rational>> rows;
  for (const auto& [m, c] : f.terms()) {
    Factors fs(m.begin(), m.end());
    std::sort(fs.begin(), fs.end(), [](const auto& a, const auto& b) { return orderly_less(b.first, a.first); });
    rows.emplace_back(std::move(fs), c);
  }
  auto key_less = [](const Factors& a, const Factors& b) {
    for (std::size_t k = 0; k < std::min(a.size(), b.size()); ++k) {
      if (auto c = orderly_compare(a[k].first, b[k].first); c != 0) return c < 0;
      if (a[k].second != b[k].second) return a[k].second < b[k].second;
    }
    return a.size() < b.size();
  };
  std::sort(rows.begin(), rows.end(), [&](const auto& a, const auto& b) { return key_less(b.first, a.first); });

  std::string out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& [fs, c] = rows[i];
    Rational mag = abs(c);
    out += i == 0 ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
    bool sep = false;
    if (mag != 1 || fs.empty()) {
      out += mag.get_str();
      sep = true;
    }
    for (auto it = fs.rbegin(); it != fs.rend(); ++it) {
      if (sep) out += " * ";
      out += "x" + std::to_string(it->first.var + 1) + std::string(it->first.order, '\'');
      if (it->second > 1) out += "^" + std::to_string(it->second);
      sep = true;
    }
  }
  return out;
}

bool is_ritt_reduced(const DiffPolynomial& g, const std::vector<DiffPolynomial>& A) {
  for (const auto& a : A) {
    auto u = leader(a);
    if (!u) throw Error(ErrorKind::ConstantDivisor, "constant divisor");
    unsigned d = degree_in(a, *u);
    for (const auto& [m, c] : g.terms())
      for (const auto& [v, e] : m) {
        if (v.var != u->var || v.order < u->order) continue;
        if (v.order > u->order || e >= d) return false;
      }
  }
  return true;
}

RittResult ritt_reduce(const DiffPolynomial& g, const std::vector<DiffPolynomial>& A) {
  std::vector<DiffVar> us;
  std::vector<unsigned> ds;
  for (std::size_t i = 0; i < A.size(); ++i) {
    auto u = leader(A[i]);
    if (!u) throw Error(ErrorKind::ConstantDivisor, "member " + std::to_string(i) + " is constant");
    if (std::find(us.begin(), us.end(), *u) != us.end())
      throw Error(ErrorKind::DuplicateLeaders, "member " + std::to_string(i) + " repeats a leader");
    us.push_back(*u);
    ds.push_back(degree_in(A[i], *u));
  }

  RittResult res{DiffPolynomial(1), g, {}};
  while (true) {
    // highest offending variable, then highest member leader
    std::optional<DiffVar> v;
    std::size_t member = 0;
    unsigned k = 0;
    for (const auto& [m, c] : res.remainder.terms())
      for (const auto& [w, e] : m) {
        if (v && !orderly_less(*v, w)) continue;
        unsigned deg = degree_in(res.remainder, w);
        std::optional<std::size_t> pick;
        for (std::size_t i = 0; i < A.size(); ++i) {
          if (w.var != us[i].var || w.order < us[i].order) continue;
          if (w.order == us[i].order && deg < ds[i]) continue;
          if (!pick || orderly_less(us[*pick], us[i])) pick = i;
        }
        if (pick) {
          v = w;
          member = *pick;
          k = deg;
        }
      }
    if (!v) break;

    const unsigned e = v->order - us[member].order;
    DiffPolynomial g1 = coefficient(res.remainder, *v, k);
    DiffPolynomial mult;
    DiffPolynomial sub;
    if (e > 0) {
      mult = separant(A[member]);
      sub = g1 * DiffPolynomial::var(v->var, v->order).pow(k - 1);
    } else {
      mult = initial(A[member]);
      sub = g1 * DiffPolynomial::var(v->var, v->order).pow(k - ds[member]);
    }
    res.remainder = mult * res.remainder - sub * derive(A[member], e);
    for (auto& c : res.cofactors) c.c = mult * c.c;
    res.cofactors.push_back({sub, e, member});
    res.H = mult * res.H;
  }
  return res;
}

bool is_dual(const DAlgebra& alg) {
  return alg.block_count() == 1 && alg.nilpotent_count(0) == 1 && alg.structure(0, 1, 1, 1) == 0 &&
         alg.structure(0, 0, 1, 1) == 0;
}

DiffPolynomial project_to_differential(const DPolynomial& f) {
  if (!is_dual(f.algebra()))
    throw Error(ErrorKind::WrongAlgebra, "projection needs the dual numbers, got " + f.algebra().label());
  DiffPolynomial out;
  for (const auto& [m, c] : f.terms()) {
    DiffPolynomial::Monomial dm;
    for (const auto& [v, e] : m.factors()) dm[DiffVar{v.var, v.theta[1]}] += e;
    out.add_term(dm, c);
  }
  return out;
}

DPolynomial lift(const DiffPolynomial& f, const RingPtr& ring) {
  if (!is_dual(*ring->algebra))
    throw Error(ErrorKind::WrongAlgebra, "lift needs the dual numbers, got " + ring->algebra->label());
  DPolynomial out(ring);
  for (const auto& [m, c] : f.terms()) {
    Monomial mono;
    for (const auto& [v, e] : m) mono = mono * Monomial::of(DVariable{v.var, MultiIndex(std::vector<unsigned>{0, v.order})}, e);
    out.add_term(mono, c);
  }
  return out;
}

unsigned difference_specialize(const DAlgebra& alg) {
  for (std::size_t b = 0; b < alg.block_count(); ++b)
    if (alg.nilpotent_count(b) != 0)
      throw Error(ErrorKind::WrongAlgebra, "block " + std::to_string(b + 1) + " carries derivations");
  return static_cast<unsigned>(alg.block_count());
}

}  // namespace dstar::classical
