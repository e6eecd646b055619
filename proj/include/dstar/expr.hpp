#pragma once

#include <string>
#include <string_view>

#include "dstar/ordering.hpp"
#include "dstar/poly.hpp"

namespace dstar {

/// "[t0,t1,...]"
std::string format(const MultiIndex& theta);
/// "x<j>[t0,...,t(M-1)]" with j 1-based.
std::string format(const DVariable& v);
/// Canonical text: terms leading-first, factors within a term ascending by rank,
/// " * " between factors, "^k" for powers. Reparses to the identical polynomial.
std::string format(const DPolynomial& f, const Ranking& r = Ranking::sequential());

/// Operator composition in CLI syntax, e.g. "s1^2 d1.1"; "id" for the zero multi-index.
std::string format_operator(const DAlgebra& alg, const MultiIndex& theta);

/// Grammar (whitespace insignificant):
///   expr     := ['-'] term (('+'|'-') term)*
///   term     := factor ('*' factor)*
///   factor   := primary ('^' natural)*
///   primary  := rational | variable | '(' expr ')'
///   rational := integer | integer '/' positive-integer
///   variable := 'x' index ['[' natural (',' natural)* ']']
/// A bare x<j> means d^0 x<j>. Throws ParseError with `line` and a 1-based column.
DPolynomial parse_polynomial(const RingPtr& ring, std::string_view text, std::size_t line = 1);
DVariable parse_variable(const Ring& ring, std::string_view text, std::size_t line = 1);

/// "s<i>[^k]" and "d<i>.<j>[^k]" tokens separated by spaces (a composition, order irrelevant),
/// "id", or a raw "theta=[..]".
MultiIndex parse_operator(const DAlgebra& alg, std::string_view text);

}  // namespace dstar
