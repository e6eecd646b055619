#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "dstar/charset.hpp"
#include "dstar/dalgebra.hpp"
#include "dstar/poly.hpp"
#include "dstar/reduction.hpp"

namespace dstar {

/// {"blocks": [{"basis": [...], "table": {"a*b": [["c", "p/q"], ...]}}]}; unknown keys are rejected.
AlgebraSpec parse_algebra_json(std::string_view text);

/// A builtin name (dual, fields:m, hs:n, dd:n,m) or the path of an algebra file.
DAlgebra load_algebra(const std::string& name_or_path);

std::string read_file(const std::string& path);

/// Largest j with x<j> occurring in the text; 0 when none does.
unsigned max_indeterminate(std::string_view text);

/// One expression per non-blank line; '#' starts a comment.
std::vector<DPolynomial> parse_generators(const RingPtr& ring, std::string_view text);

std::string certificate_to_json(const ReductionCertificate& cert, const Ranking& r = Ranking::sequential());
ReductionCertificate certificate_from_json(const RingPtr& ring, std::string_view text);

/// {"a": expr, "taus": [[..]], "exponents": [..], "combination": [{"c": expr, "theta": [..], "member": k}]}
ClosureWitness witness_from_json(const RingPtr& ring, std::string_view text);

}  // namespace dstar
