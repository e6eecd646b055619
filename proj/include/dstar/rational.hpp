#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace dstar {

/// Exact arbitrary-precision rational; all coefficient arithmetic goes through this.
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" with q > 0. Returns false on anything else,
/// including non-reduced fractions when `require_reduced` is set.
bool parse_rational(std::string_view text, Rational& out, bool require_reduced = false);

std::string to_string(const Rational& q);

}  // namespace dstar
