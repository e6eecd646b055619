#pragma once

#include <string>

#include "dstar/expr.hpp"
#include "dstar/io.hpp"
#include "dstar/poly.hpp"

namespace testsupport {

inline dstar::RingPtr ring(const std::string& algebra, unsigned n_vars = 1) {
  return dstar::make_ring(dstar::load_algebra(algebra), n_vars);
}

inline dstar::DPolynomial P(const dstar::RingPtr& r, const std::string& text) {
  return dstar::parse_polynomial(r, text);
}

inline dstar::DVariable V(const dstar::RingPtr& r, const std::string& text) {
  return dstar::parse_variable(*r, text);
}

inline const char* const kBuiltins[] = {"dual", "fields:2", "dd:1,1", "hs:2"};

}  // namespace testsupport
