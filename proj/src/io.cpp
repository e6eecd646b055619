#include "dstar/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "dstar/error.hpp"
#include "dstar/expr.hpp"

namespace dstar {

using nlohmann::json;

namespace {

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t k = 0; k + 1 < e.byte && k < text.size(); ++k) {
      if (text[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string msg = e.what();
    if (auto p = msg.find("syntax error"); p != std::string::npos) msg = msg.substr(p);
    throw ParseError(line, col, msg);
  }
}

[[noreturn]] void schema(const std::string& msg) { throw Error(ErrorKind::SchemaError, msg); }

void only_keys(const json& obj, std::initializer_list<const char*> allowed, const std::string& where) {
  if (!obj.is_object()) schema(where + " must be an object");
  for (const auto& [k, v] : obj.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || k == a;
    if (!ok) schema("unknown key '" + k + "' in " + where);
  }
}

const json& required(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) schema(where + " lacks '" + key + "'");
  return *it;
}

std::string as_string(const json& j, const std::string& where) {
  if (!j.is_string()) schema(where + " must be a string");
  return j.get<std::string>();
}

unsigned as_natural(const json& j, const std::string& where) {
  if (!j.is_number_unsigned()) schema(where + " must be a non-negative integer");
  return j.get<unsigned>();
}

MultiIndex as_multi_index(const json& j, std::size_t slots, const std::string& where) {
  if (!j.is_array()) schema(where + " must be an array");
  std::vector<unsigned> e;
  for (const auto& x : j) e.push_back(as_natural(x, where + " entry"));
  if (e.size() != slots)
    schema(where + " has " + std::to_string(e.size()) + " entries, the algebra has " + std::to_string(slots));
  return MultiIndex(std::move(e));
}

json multi_index_json(const MultiIndex& m) { return json(m.entries()); }

DPolynomial as_poly(const RingPtr& ring, const json& j, const std::string& where) {
  return parse_polynomial(ring, as_string(j, where));
}

}  // namespace

AlgebraSpec parse_algebra_json(std::string_view text) {
  json doc = parse_json(text);
  only_keys(doc, {"blocks"}, "algebra");
  const json& blocks = required(doc, "blocks", "algebra");
  if (!blocks.is_array() || blocks.empty()) schema("'blocks' must be a nonempty array");

  AlgebraSpec spec;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const std::string where = "block " + std::to_string(b + 1);
    only_keys(blocks[b], {"basis", "table"}, where);
    BlockSpec block;
    const json& basis = required(blocks[b], "basis", where);
    if (!basis.is_array() || basis.empty()) schema(where + ": 'basis' must be a nonempty array");
    for (const auto& n : basis) {
      std::string name = as_string(n, where + " basis name");
      if (name.empty() || name.find('*') != std::string::npos) schema(where + ": bad basis name '" + name + "'");
      block.basis.push_back(std::move(name));
    }
    if (auto t = blocks[b].find("table"); t != blocks[b].end()) {
      if (!t->is_object()) schema(where + ": 'table' must be an object");
      for (const auto& [key, value] : t->items()) {
        auto star = key.find('*');
        if (star == std::string::npos || key.find('*', star + 1) != std::string::npos)
          schema(where + ": table key '" + key + "' is not of the form a*b");
        std::pair<std::string, std::string> pq{key.substr(0, star), key.substr(star + 1)};
        if (!value.is_array()) schema(where + ": entry '" + key + "' must be an array");
        std::vector<std::pair<std::string, Rational>> terms;
        for (const auto& term : value) {
          if (!term.is_array() || term.size() != 2)
            schema(where + ": entry '" + key + "' must hold [name, coefficient] pairs");
          std::string name = as_string(term[0], where + " product name");
          std::string coeff = as_string(term[1], where + " coefficient");
          Rational q;
          if (!parse_rational(coeff, q, true))
            schema(where + ": coefficient '" + coeff + "' in '" + key + "' is not a reduced rational");
          terms.emplace_back(std::move(name), q);
        }
        block.table[pq] = std::move(terms);
      }
    }
    spec.blocks.push_back(std::move(block));
  }
  return spec;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::SchemaError, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

DAlgebra load_algebra(const std::string& name_or_path) {
  if (auto spec = builtin_from_string(name_or_path)) {
    DAlgebra alg = validate_algebra(*spec);
    alg.set_label(name_or_path);
    return alg;
  }
  DAlgebra alg = validate_algebra(parse_algebra_json(read_file(name_or_path)));
  alg.set_label(name_or_path);
  return alg;
}

unsigned max_indeterminate(std::string_view text) {
  unsigned best = 0;
  for (std::size_t k = 0; k < text.size(); ++k) {
    if (text[k] != 'x') continue;
    std::size_t e = k + 1;
    unsigned long v = 0;
    while (e < text.size() && std::isdigit(static_cast<unsigned char>(text[e])) && e - k < 10)
      v = v * 10 + static_cast<unsigned>(text[e++] - '0');
    if (e > k + 1) best = std::max<unsigned>(best, static_cast<unsigned>(v));
  }
  return best;
}

std::vector<DPolynomial> parse_generators(const RingPtr& ring, std::string_view text) {
  std::vector<DPolynomial> out;
  std::size_t line = 0;
  while (!text.empty()) {
    ++line;
    auto nl = text.find('\n');
    std::string_view row = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view() : text.substr(nl + 1);
    if (auto hash = row.find('#'); hash != std::string_view::npos) row = row.substr(0, hash);
    if (row.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    if (!row.empty() && row.back() == '\r') row.remove_suffix(1);
    out.push_back(parse_polynomial(ring, row, line));
  }
  return out;
}

std::string certificate_to_json(const ReductionCertificate& cert, const Ranking& r) {
  json doc;
  doc["H"] = format(cert.H, r);
  doc["remainder"] = format(cert.remainder, r);
  json hf = json::array();
  for (const auto& f : cert.H_factors)
    hf.push_back({{"theta", multi_index_json(f.theta)},
                  {"source", f.source == FactorSource::Initial ? "initial" : "separant"},
                  {"member", f.member}});
  doc["H_factors"] = std::move(hf);
  json cf = json::array();
  for (const auto& c : cert.cofactors)
    cf.push_back({{"c", format(c.c, r)}, {"theta", multi_index_json(c.theta)}, {"member", c.member}});
  doc["cofactors"] = std::move(cf);
  json st = json::array();
  for (const auto& s : cert.steps)
    st.push_back({{"variable", format(s.variable)},
                  {"case", s.kind == StepCase::Delta ? "delta" : "sigma"},
                  {"degree", s.degree},
                  {"member", s.member},
                  {"theta", multi_index_json(s.theta)}});
  doc["steps"] = std::move(st);
  return doc.dump(2) + "\n";
}

ReductionCertificate certificate_from_json(const RingPtr& ring, std::string_view text) {
  json doc = parse_json(text);
  only_keys(doc, {"H", "remainder", "H_factors", "cofactors", "steps"}, "certificate");
  const std::size_t slots = ring->algebra->slot_count();
  ReductionCertificate cert{{}, as_poly(ring, required(doc, "H", "certificate"), "H"),
                            as_poly(ring, required(doc, "remainder", "certificate"), "remainder"), {}, {}};
  for (const auto& f : required(doc, "H_factors", "certificate")) {
    only_keys(f, {"theta", "source", "member"}, "H factor");
    std::string src = as_string(required(f, "source", "H factor"), "source");
    if (src != "initial" && src != "separant") schema("H factor source must be initial or separant");
    cert.H_factors.push_back({as_multi_index(required(f, "theta", "H factor"), slots, "theta"),
                              src == "initial" ? FactorSource::Initial : FactorSource::Separant,
                              as_natural(required(f, "member", "H factor"), "member")});
  }
  for (const auto& c : required(doc, "cofactors", "certificate")) {
    only_keys(c, {"c", "theta", "member"}, "cofactor");
    cert.cofactors.push_back({as_poly(ring, required(c, "c", "cofactor"), "c"),
                              as_multi_index(required(c, "theta", "cofactor"), slots, "theta"),
                              as_natural(required(c, "member", "cofactor"), "member")});
  }
  if (auto it = doc.find("steps"); it != doc.end())
    for (const auto& s : *it) {
      only_keys(s, {"variable", "case", "degree", "member", "theta"}, "step");
      std::string kind = as_string(required(s, "case", "step"), "case");
      if (kind != "delta" && kind != "sigma") schema("step case must be delta or sigma");
      cert.steps.push_back({parse_variable(*ring, as_string(required(s, "variable", "step"), "variable")),
                            kind == "delta" ? StepCase::Delta : StepCase::Sigma,
                            as_natural(required(s, "degree", "step"), "degree"),
                            as_natural(required(s, "member", "step"), "member"),
                            as_multi_index(required(s, "theta", "step"), slots, "theta")});
    }
  return cert;
}

ClosureWitness witness_from_json(const RingPtr& ring, std::string_view text) {
  json doc = parse_json(text);
  only_keys(doc, {"a", "taus", "exponents", "combination"}, "witness");
  const std::size_t slots = ring->algebra->slot_count();
  ClosureWitness w{as_poly(ring, required(doc, "a", "witness"), "a"), {}, {}, {}};
  const json& taus = required(doc, "taus", "witness");
  if (!taus.is_array()) schema("'taus' must be an array");
  for (const auto& t : taus) w.taus.push_back(as_multi_index(t, slots, "tau"));
  const json& exps = required(doc, "exponents", "witness");
  if (!exps.is_array()) schema("'exponents' must be an array");
  for (const auto& e : exps) w.exponents.push_back(as_natural(e, "exponent"));
  const json& comb = required(doc, "combination", "witness");
  if (!comb.is_array()) schema("'combination' must be an array");
  for (const auto& c : comb) {
    only_keys(c, {"c", "theta", "member"}, "combination entry");
    w.combination.push_back({as_poly(ring, required(c, "c", "combination entry"), "c"),
                             as_multi_index(required(c, "theta", "combination entry"), slots, "theta"),
                             as_natural(required(c, "member", "combination entry"), "member")});
  }
  return w;
}

}  // namespace dstar
