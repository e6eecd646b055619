#include "dstar/expr.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "dstar/error.hpp"

namespace dstar {

std::string format(const MultiIndex& theta) {
  std::string s = "[";
  for (std::size_t k = 0; k < theta.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(theta[k]);
  }
  return s + "]";
}

std::string format(const DVariable& v) { return "x" + std::to_string(v.var + 1) + format(v.theta); }

std::string format(const DPolynomial& f, const Ranking& r) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : canonical_terms(f, r)) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;

    auto factors = m.factors();
    std::sort(factors.begin(), factors.end(), [&](const auto& a, const auto& b) { return r.less(a.first, b.first); });
    bool need_sep = false;
    if (mag != 1 || factors.empty()) {
      out += to_string(mag);
      need_sep = true;
    }
    for (const auto& [v, e] : factors) {
      if (need_sep) out += " * ";
      out += format(v);
      if (e > 1) out += "^" + std::to_string(e);
      need_sep = true;
    }
  }
  return out;
}

std::string format_operator(const DAlgebra& alg, const MultiIndex& theta) {
  std::string out;
  for (std::size_t g = 0; g < theta.size(); ++g) {
    if (theta[g] == 0) continue;
    if (!out.empty()) out += " ";
    out += alg.op_name(g);
    if (theta[g] > 1) out += "^" + std::to_string(theta[g]);
  }
  return out.empty() ? "id" : out;
}

namespace {

class Parser {
 public:
  Parser(const RingPtr& ring, std::string_view text, std::size_t line) : ring_(ring), s_(text), line_(line) {}

  DPolynomial parse_all() {
    DPolynomial p = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

  DVariable variable_only() {
    skip_ws();
    DVariable v = variable();
    skip_ws();
    if (pos_ != s_.size()) fail("trailing characters after variable");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_, pos_ + 1, msg); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool at_digit() const { return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])); }

  std::string digits() {
    if (!at_digit()) fail("expected a number");
    std::size_t start = pos_;
    while (at_digit()) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  unsigned natural() {
    std::size_t start = pos_;
    std::string d = digits();
    if (d.size() > 9) {
      pos_ = start;
      fail("number too large");
    }
    return static_cast<unsigned>(std::stoul(d));
  }

  DPolynomial expr() {
    bool negate = eat('-');
    DPolynomial acc = term();
    if (negate) acc = -acc;
    while (true) {
      if (eat('+')) {
        acc += term();
      } else if (eat('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  DPolynomial term() {
    DPolynomial acc = factor();
    while (eat('*')) acc *= factor();
    return acc;
  }

  DPolynomial factor() {
    DPolynomial base = primary();
    while (eat('^')) {
      skip_ws();
      base = base.pow(natural());
    }
    return base;
  }

  DPolynomial primary() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      DPolynomial inner = expr();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    if (c == 'x') return DPolynomial::variable(ring_, variable());
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = digits();
      std::string den = "1";
      std::size_t save = pos_;
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        skip_ws();
        std::size_t den_pos = pos_;
        den = digits();
        if (mpz_class(den) == 0) {
          pos_ = den_pos;
          fail("zero denominator");
        }
      } else {
        pos_ = save;
      }
      Rational q{mpz_class(num), mpz_class(den)};
      q.canonicalize();
      return DPolynomial(ring_, q);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  DVariable variable() {
    std::size_t start = pos_;
    if (pos_ >= s_.size() || s_[pos_] != 'x') fail("expected a variable x<j>[...]");
    ++pos_;
    unsigned j = natural();
    const std::size_t slots = ring_->algebra->slot_count();
    if (j < 1 || j > ring_->n_vars) {
      pos_ = start;
      fail("indeterminate x" + std::to_string(j) + " outside x1..x" + std::to_string(ring_->n_vars));
    }
    MultiIndex theta(slots);
    std::size_t after_index = pos_;
    skip_ws();
    if (pos_ >= s_.size() || s_[pos_] != '[') pos_ = after_index;
    if (pos_ < s_.size() && s_[pos_] == '[') {
      ++pos_;
      std::vector<unsigned> entries;
      skip_ws();
      entries.push_back(natural());
      while (eat(',')) {
        skip_ws();
        entries.push_back(natural());
      }
      if (!eat(']')) fail("expected ']'");
      if (entries.size() != slots) {
        pos_ = start;
        fail("multi-index has " + std::to_string(entries.size()) + " entries, the algebra has " +
             std::to_string(slots) + " slots");
      }
      theta = MultiIndex(std::move(entries));
    }
    return DVariable{j - 1, std::move(theta)};
  }

  const RingPtr& ring_;
  std::string_view s_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

}  // namespace

DPolynomial parse_polynomial(const RingPtr& ring, std::string_view text, std::size_t line) {
  return Parser(ring, text, line).parse_all();
}

DVariable parse_variable(const Ring& ring, std::string_view text, std::size_t line) {
  RingPtr view(std::shared_ptr<const Ring>(), &ring);
  return Parser(view, text, line).variable_only();
}

MultiIndex parse_operator(const DAlgebra& alg, std::string_view text) {
  const std::size_t slots = alg.slot_count();
  std::size_t pos = 0;
  auto fail = [&](const std::string& msg) { throw ParseError(1, pos + 1, msg); };
  auto ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto number = [&]() -> unsigned {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) fail("expected a number");
    if (pos - start > 9) fail("number too large");
    return static_cast<unsigned>(std::stoul(std::string(text.substr(start, pos - start))));
  };

  ws();
  if (text.substr(pos, 6) == "theta=") {
    pos += 6;
    ws();
    if (pos >= text.size() || text[pos] != '[') fail("expected '['");
    ++pos;
    std::vector<unsigned> entries;
    while (true) {
      ws();
      entries.push_back(number());
      ws();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < text.size() && text[pos] == ']') {
        ++pos;
        break;
      }
      fail("expected ',' or ']'");
    }
    ws();
    if (pos != text.size()) fail("trailing characters");
    if (entries.size() != slots)
      fail("theta has " + std::to_string(entries.size()) + " entries, the algebra has " + std::to_string(slots) +
           " slots");
    return MultiIndex(std::move(entries));
  }

  MultiIndex theta(slots);
  bool any = false;
  while (true) {
    ws();
    if (pos >= text.size()) break;
    any = true;
    if (text.substr(pos, 2) == "id" && (pos + 2 == text.size() || std::isspace(static_cast<unsigned char>(text[pos + 2])))) {
      pos += 2;
      continue;
    }
    std::size_t start = pos;
    char kind = text[pos];
    if (kind != 's' && kind != 'd') fail("expected s<i>, d<i>.<j> or id");
    ++pos;
    unsigned block = number();
    unsigned index = 0;
    if (kind == 'd') {
      if (pos >= text.size() || text[pos] != '.') fail("expected '.' in d<i>.<j>");
      ++pos;
      index = number();
      if (index == 0) {
        pos = start;
        fail("derivation index starts at 1 (use s<i> for the endomorphism)");
      }
    }
    unsigned power = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      power = number();
    }
    if (block < 1 || block > alg.block_count() || index > alg.nilpotent_count(block - 1)) {
      pos = start;
      fail("no operator " + std::string(text.substr(start, 1)) + std::to_string(block) +
           (kind == 'd' ? "." + std::to_string(index) : "") + " in this algebra");
    }
    theta[alg.slot_index(block - 1, index)] += power;
    if (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) fail("expected whitespace");
  }
  if (!any) fail("empty operator");
  return theta;
}

}  // namespace dstar
