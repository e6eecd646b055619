#include "dstar/rational.hpp"

#include <cctype>

namespace dstar {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

bool parse_rational(std::string_view text, Rational& out, bool require_reduced) {
  std::string_view num = text;
  std::string_view den;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
    if (!all_digits(den)) return false;
  }
  std::string_view digits = num;
  if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
  if (!all_digits(digits)) return false;

  mpz_class n(std::string(num), 10);
  mpz_class d(1);
  if (!den.empty()) {
    d = mpz_class(std::string(den), 10);
    if (d == 0) return false;
  }
  if (require_reduced) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    if (n != 0 && g != 1) return false;
    if (n == 0 && d != 1) return false;
  }
  out = Rational(n, d);
  out.canonicalize();
  return true;
}

std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace dstar
