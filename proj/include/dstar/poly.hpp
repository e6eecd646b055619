#pragma once

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "dstar/dalgebra.hpp"
#include "dstar/ordering.hpp"
#include "dstar/rational.hpp"

namespace dstar {

/// The D*-polynomial ring Q{x_1..x_n} over a validated algebra.
struct Ring {
  std::shared_ptr<const DAlgebra> algebra;
  unsigned n_vars = 1;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(DAlgebra algebra, unsigned n_vars);
RingPtr make_ring(std::shared_ptr<const DAlgebra> algebra, unsigned n_vars);

/// Power product of variables; factors kept sorted by the structural order of DVariable.
class Monomial {
 public:
  using Factor = std::pair<DVariable, unsigned>;

  Monomial() = default;
  static Monomial of(const DVariable& v, unsigned exponent = 1);

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  unsigned degree_in(const DVariable& v) const;
  unsigned total_degree() const;

  /// Same monomial with v removed.
  Monomial without(const DVariable& v) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Factor> factors_;
};

/// Sparse polynomial with exact rational coefficients; zero coefficients are never stored.
class DPolynomial {
 public:
  using Terms = std::map<Monomial, Rational>;

  explicit DPolynomial(RingPtr ring);
  DPolynomial(RingPtr ring, const Rational& c);

  static DPolynomial variable(RingPtr ring, const DVariable& v);
  /// d^0 x_var, 0-based.
  static DPolynomial x(RingPtr ring, unsigned var);

  const RingPtr& ring() const { return ring_; }
  const DAlgebra& algebra() const { return *ring_->algebra; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Value of a constant polynomial; std::logic_error otherwise.
  Rational constant_value() const;

  /// Distinct variables occurring, in structural order.
  std::vector<DVariable> variables() const;

  void add_term(const Monomial& m, const Rational& c);

  DPolynomial& operator+=(const DPolynomial& o);
  DPolynomial& operator-=(const DPolynomial& o);
  DPolynomial& operator*=(const DPolynomial& o);
  DPolynomial& operator*=(const Rational& c);

  friend DPolynomial operator+(DPolynomial a, const DPolynomial& b) { return a += b; }
  friend DPolynomial operator-(DPolynomial a, const DPolynomial& b) { return a -= b; }
  friend DPolynomial operator*(const DPolynomial& a, const DPolynomial& b);
  friend DPolynomial operator*(DPolynomial a, const Rational& c) { return a *= c; }
  friend DPolynomial operator*(const Rational& c, DPolynomial a) { return a *= c; }
  friend DPolynomial operator-(DPolynomial a);

  DPolynomial pow(unsigned k) const;

  friend bool operator==(const DPolynomial& a, const DPolynomial& b);

 private:
  RingPtr ring_;
  Terms terms_;
};

bool same_ring(const Ring& a, const Ring& b);
/// Throws AlgebraMismatch unless both polynomials live in the same ring.
void check_same_ring(const DPolynomial& a, const DPolynomial& b);

/// (leader, degree); constants have no leader and rank below everything else.
struct PolyRank {
  std::optional<DVariable> leader;
  unsigned degree = 0;

  friend bool operator==(const PolyRank&, const PolyRank&) = default;
};

unsigned degree_in(const DPolynomial& f, const DVariable& u);

/// f = sum_k g_k u^k; returns g_0..g_d with d = degree_in(f, u).
std::vector<DPolynomial> coefficients_in(const DPolynomial& f, const DVariable& u);

DVariable leader(const DPolynomial& f, const Ranking& r = Ranking::sequential());
DPolynomial initial(const DPolynomial& f, const Ranking& r = Ranking::sequential());
DPolynomial separant(const DPolynomial& f, const Ranking& r = Ranking::sequential());
PolyRank rank(const DPolynomial& f, const Ranking& r = Ranking::sequential());

std::strong_ordering rank_compare(const PolyRank& a, const PolyRank& b, const Ranking& r = Ranking::sequential());
std::strong_ordering rank_compare(const DPolynomial& f, const DPolynomial& g,
                                  const Ranking& r = Ranking::sequential());

/// Highest variable of m under r first, then by exponent, descending through the factors.
std::strong_ordering monomial_compare(const Monomial& a, const Monomial& b, const Ranking& r);

/// Terms in print order: monomials descending under monomial_compare.
std::vector<std::pair<Monomial, Rational>> canonical_terms(const DPolynomial& f, const Ranking& r);

/// A total order on polynomials (term by term in print order, then coefficient).
std::strong_ordering canonical_compare(const DPolynomial& f, const DPolynomial& g, const Ranking& r);

/// Divides by the coefficient of the leading term in print order; zero stays zero.
DPolynomial normalize_leading(const DPolynomial& f, const Ranking& r);

}  // namespace dstar
