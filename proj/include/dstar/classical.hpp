#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dstar/poly.hpp"
#include "dstar/rational.hpp"

namespace dstar::classical {

/// delta^order x_{var+1}.
struct DiffVar {
  unsigned var = 0;
  unsigned order = 0;

  friend auto operator<=>(const DiffVar&, const DiffVar&) = default;
};

/// Orderly ranking: order first, then indeterminate.
std::strong_ordering orderly_compare(const DiffVar& a, const DiffVar& b);

/// Ordinary differential polynomial over Q; separate from DPolynomial on purpose.
class DiffPolynomial {
 public:
  using Monomial = std::map<DiffVar, unsigned>;
  using Terms = std::map<Monomial, Rational>;

  DiffPolynomial() = default;
  explicit DiffPolynomial(const Rational& c);
  static DiffPolynomial var(unsigned j, unsigned order = 0);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;

  void add_term(const Monomial& m, const Rational& c);

  DiffPolynomial& operator+=(const DiffPolynomial& o);
  DiffPolynomial& operator-=(const DiffPolynomial& o);
  friend DiffPolynomial operator+(DiffPolynomial a, const DiffPolynomial& b) { return a += b; }
  friend DiffPolynomial operator-(DiffPolynomial a, const DiffPolynomial& b) { return a -= b; }
  friend DiffPolynomial operator*(const DiffPolynomial& a, const DiffPolynomial& b);
  DiffPolynomial pow(unsigned k) const;

  friend bool operator==(const DiffPolynomial&, const DiffPolynomial&) = default;

 private:
  Terms terms_;
};

/// The derivation: delta(x^(i)) = x^(i+1), extended by Leibniz.
DiffPolynomial derive(const DiffPolynomial& f, unsigned times = 1);

std::optional<DiffVar> leader(const DiffPolynomial& f);
unsigned degree_in(const DiffPolynomial& f, const DiffVar& v);
DiffPolynomial initial(const DiffPolynomial& f);
DiffPolynomial separant(const DiffPolynomial& f);

/// Terms leading first; variables printed as x1, x1', x1'', ...
std::string format(const DiffPolynomial& f);

struct RittCofactor {
  DiffPolynomial c;
  unsigned order;
  std::size_t member;
};

struct RittResult {
  DiffPolynomial H;
  DiffPolynomial remainder;
  std::vector<RittCofactor> cofactors;
};

/// Classical Ritt reduction under the orderly ranking. Throws DuplicateLeaders or ConstantDivisor.
RittResult ritt_reduce(const DiffPolynomial& g, const std::vector<DiffPolynomial>& A);

bool is_ritt_reduced(const DiffPolynomial& g, const std::vector<DiffPolynomial>& A);

/// True when the algebra is the dual numbers {1, e}, e*e = 0.
bool is_dual(const DAlgebra& alg);

/// d^{(a,b)} x_j -> delta^b x_j. Throws WrongAlgebra off the dual numbers.
DiffPolynomial project_to_differential(const DPolynomial& f);

/// delta^i x_j -> d^{(0,i)} x_j.
DPolynomial lift(const DiffPolynomial& f, const RingPtr& ring);

/// Number of endomorphisms when every block is one-dimensional; WrongAlgebra otherwise.
unsigned difference_specialize(const DAlgebra& alg);

}  // namespace dstar::classical
