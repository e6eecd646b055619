#include "dstar/dalgebra.hpp"

#include <algorithm>
#include <charconv>
#include <set>

#include "dstar/error.hpp"

namespace dstar {

namespace {

using Vec = std::vector<Rational>;

// Row-reduced basis of a subspace of Q^n.
class Subspace {
 public:
  explicit Subspace(std::size_t n) : n_(n) {}

  // Returns true when v was independent of the current span.
  bool insert(Vec v) {
    reduce(v);
    auto piv = std::find_if(v.begin(), v.end(), [](const Rational& x) { return x != 0; });
    if (piv == v.end()) return false;
    std::size_t col = static_cast<std::size_t>(piv - v.begin());
    Rational lead = v[col];
    for (auto& x : v) x /= lead;
    for (auto& row : rows_) {
      if (row.second[col] == 0) continue;
      Rational f = row.second[col];
      for (std::size_t k = 0; k < n_; ++k) row.second[k] -= f * v[k];
    }
    rows_.emplace_back(col, std::move(v));
    return true;
  }

  bool contains(Vec v) const {
    reduce(v);
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
  }

  std::size_t dim() const { return rows_.size(); }
  std::vector<Vec> basis() const {
    std::vector<Vec> out;
    for (const auto& r : rows_) out.push_back(r.second);
    return out;
  }

 private:
  void reduce(Vec& v) const {
    for (const auto& [col, row] : rows_) {
      if (v[col] == 0) continue;
      Rational f = v[col];
      for (std::size_t k = 0; k < n_; ++k) v[k] -= f * row[k];
    }
  }

  std::size_t n_;
  std::vector<std::pair<std::size_t, Vec>> rows_;
};

std::string vec_to_string(const Vec& v, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] == 0) continue;
    if (!out.empty()) out += " + ";
    out += to_string(v[k]) + "*" + names[k];
  }
  return out.empty() ? "0" : out;
}

}  // namespace

std::size_t DAlgebra::nilpotent_count(std::size_t block) const {
  if (block >= blocks_.size()) throw Error(ErrorKind::IndexOutOfRange, "block " + std::to_string(block + 1));
  return blocks_[block].names.size() - 1;
}

std::size_t DAlgebra::slot_index(std::size_t block, std::size_t index) const {
  if (block >= blocks_.size() || index > nilpotent_count(block))
    throw Error(ErrorKind::IndexOutOfRange,
                "slot (" + std::to_string(block + 1) + "," + std::to_string(index) + ")");
  return offsets_[block] + index;
}

Slot DAlgebra::slot_at(std::size_t global) const {
  if (global >= slots_.size()) throw Error(ErrorKind::IndexOutOfRange, "slot " + std::to_string(global));
  return slots_[global];
}

unsigned DAlgebra::nu(std::size_t block, std::size_t j) const {
  if (j > nilpotent_count(block)) throw Error(ErrorKind::IndexOutOfRange, "nu index " + std::to_string(j));
  return blocks_[block].nu[j];
}

const std::vector<std::pair<std::size_t, std::size_t>>& DAlgebra::gamma(std::size_t block, std::size_t j) const {
  if (j == 0 || j > nilpotent_count(block))
    throw Error(ErrorKind::IndexOutOfRange, "gamma index " + std::to_string(j));
  return blocks_[block].gamma[j];
}

const Rational& DAlgebra::structure(std::size_t block, std::size_t j, std::size_t p, std::size_t q) const {
  std::size_t d = nilpotent_count(block) + 1;
  if (j >= d || p >= d || q >= d) throw Error(ErrorKind::IndexOutOfRange, "structure constant index");
  return blocks_[block].table[(j * d + p) * d + q];
}

const std::vector<StructureTerm>& DAlgebra::structure_terms(std::size_t block) const {
  nilpotent_count(block);
  return blocks_[block].terms;
}

const std::vector<std::string>& DAlgebra::basis_names(std::size_t block) const {
  nilpotent_count(block);
  return blocks_[block].names;
}

bool operator==(const DAlgebra& a, const DAlgebra& b) {
  if (&a == &b) return true;
  if (a.blocks_.size() != b.blocks_.size()) return false;
  for (std::size_t i = 0; i < a.blocks_.size(); ++i)
    if (a.blocks_[i].names.size() != b.blocks_[i].names.size() || a.blocks_[i].table != b.blocks_[i].table)
      return false;
  return true;
}

DAlgebra validate_algebra(const AlgebraSpec& spec) {
  if (spec.blocks.empty()) throw Error(ErrorKind::SchemaError, "algebra has no blocks");

  DAlgebra out;
  std::set<std::string> seen;
  for (std::size_t b = 0; b < spec.blocks.size(); ++b) {
    const BlockSpec& bs = spec.blocks[b];
    const std::string where = "block " + std::to_string(b + 1);
    if (bs.basis.empty()) throw Error(ErrorKind::SchemaError, where + " is empty");
    const std::size_t d = bs.basis.size();

    std::map<std::string, std::size_t> index;
    for (std::size_t k = 0; k < d; ++k) {
      if (!seen.insert(bs.basis[k]).second)
        throw Error(ErrorKind::SchemaError, "duplicate basis name '" + bs.basis[k] + "'");
      index[bs.basis[k]] = k;
    }
    auto lookup = [&](const std::string& name) {
      auto it = index.find(name);
      if (it == index.end())
        throw Error(ErrorKind::SchemaError, where + ": '" + name + "' is not a basis element of this block");
      return it->second;
    };

    // prod[p][q] = coordinates of e_p * e_q
    std::vector<std::vector<Vec>> prod(d, std::vector<Vec>(d, Vec(d)));
    std::vector<std::vector<bool>> given(d, std::vector<bool>(d, false));
    for (const auto& [key, terms] : bs.table) {
      std::size_t p = lookup(key.first);
      std::size_t q = lookup(key.second);
      if (given[p][q])
        throw Error(ErrorKind::SchemaError, where + ": product " + key.first + "*" + key.second + " given twice");
      given[p][q] = given[q][p] = true;
      Vec v(d);
      std::set<std::size_t> named;
      for (const auto& [name, c] : terms) {
        std::size_t k = lookup(name);
        if (!named.insert(k).second)
          throw Error(ErrorKind::SchemaError, where + ": '" + name + "' repeated in product " + key.first + "*" +
                                                  key.second);
        v[k] = c;
      }
      prod[p][q] = v;
      prod[q][p] = v;
    }

    // Unit products are implied when absent and checked when present.
    for (std::size_t q = 0; q < d; ++q) {
      Vec expect(d);
      expect[q] = 1;
      if (given[0][q] && prod[0][q] != expect)
        throw Error(ErrorKind::NotUnital, where + ": " + bs.basis[0] + "*" + bs.basis[q] + " = " +
                                              vec_to_string(prod[0][q], bs.basis) + ", expected " + bs.basis[q]);
      prod[0][q] = expect;
      prod[q][0] = expect;
    }

    auto mul = [&](const Vec& x, const Vec& y) {
      Vec r(d);
      for (std::size_t p = 0; p < d; ++p) {
        if (x[p] == 0) continue;
        for (std::size_t q = 0; q < d; ++q) {
          if (y[q] == 0) continue;
          Rational c = x[p] * y[q];
          for (std::size_t k = 0; k < d; ++k)
            if (prod[p][q][k] != 0) r[k] += c * prod[p][q][k];
        }
      }
      return r;
    };
    auto unit_vec = [&](std::size_t k) {
      Vec v(d);
      v[k] = 1;
      return v;
    };

    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t bb = 0; bb < d; ++bb)
        for (std::size_t c = 0; c < d; ++c)
          if (mul(prod[a][bb], unit_vec(c)) != mul(unit_vec(a), prod[bb][c]))
            throw Error(ErrorKind::NotAssociative, where + ": (" + bs.basis[a] + "*" + bs.basis[bb] + ")*" +
                                                       bs.basis[c] + " != " + bs.basis[a] + "*(" + bs.basis[bb] +
                                                       "*" + bs.basis[c] + ")");

    // The nilpotent basis elements must span an ideal not containing the unit.
    for (std::size_t p = 1; p < d; ++p)
      for (std::size_t q = p; q < d; ++q)
        if (prod[p][q][0] != 0)
          throw Error(ErrorKind::NotLocalBlock, where + ": " + bs.basis[p] + "*" + bs.basis[q] + " = " +
                                                    vec_to_string(prod[p][q], bs.basis) +
                                                    " leaves the span of the nilpotent elements");

    // Powers m^r of the maximal ideal as Q-subspaces.
    std::vector<Subspace> powers;
    {
      Subspace m1(d);
      for (std::size_t k = 1; k < d; ++k) m1.insert(unit_vec(k));
      powers.push_back(std::move(m1));
    }
    while (powers.back().dim() > 0) {
      Subspace next(d);
      for (const auto& v : powers.back().basis())
        for (std::size_t p = 1; p < d; ++p) next.insert(mul(v, unit_vec(p)));
      if (next.dim() == powers.back().dim())
        throw Error(ErrorKind::NotLocalBlock, where + ": power " + std::to_string(powers.size() + 1) +
                                                  " of the nilpotent span has dimension " +
                                                  std::to_string(next.dim()) + ", not nilpotent");
      powers.push_back(std::move(next));
    }

    DAlgebra::Block blk;
    blk.names = bs.basis;
    blk.nu.assign(d, 0);
    for (std::size_t j = 1; j < d; ++j) {
      unsigned r = 0;
      while (r < powers.size() && powers[r].contains(unit_vec(j))) ++r;
      blk.nu[j] = r;  // powers[r-1] is m^r
    }
    for (std::size_t j = 1; j < d; ++j)
      for (std::size_t k = j + 1; k < d; ++k)
        if (blk.nu[j] > blk.nu[k])
          throw Error(ErrorKind::RankedBasisViolation,
                      where + ": nu(" + bs.basis[j] + ") = " + std::to_string(blk.nu[j]) + " > nu(" + bs.basis[k] +
                          ") = " + std::to_string(blk.nu[k]) + " with " + bs.basis[j] + " listed first");
    for (std::size_t p = 1; p < d; ++p)
      for (std::size_t q = 1; q < d; ++q)
        for (std::size_t j = 1; j < d; ++j)
          if (prod[p][q][j] != 0 && blk.nu[p] + blk.nu[q] > blk.nu[j])
            throw Error(ErrorKind::RankedBasisViolation,
                        where + ": " + bs.basis[p] + "*" + bs.basis[q] + " has a nonzero " + bs.basis[j] +
                            "-coordinate although nu(" + bs.basis[p] + ") + nu(" + bs.basis[q] + ") > nu(" +
                            bs.basis[j] + "); basis is not adapted to the powers of the maximal ideal");

    blk.gamma.assign(d, {});
    for (std::size_t j = 1; j < d; ++j)
      for (std::size_t p = 1; p < d; ++p)
        for (std::size_t q = 1; q < d; ++q)
          if (blk.nu[p] + blk.nu[q] <= blk.nu[j]) blk.gamma[j].emplace_back(p, q);

    blk.table.assign(d * d * d, Rational(0));
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t p = 0; p < d; ++p)
        for (std::size_t q = 0; q < d; ++q) {
          blk.table[(j * d + p) * d + q] = prod[p][q][j];
          if (prod[p][q][j] != 0) blk.terms.push_back({p, q, j, prod[p][q][j]});
        }

    out.offsets_.push_back(out.slots_.size());
    for (std::size_t k = 0; k < d; ++k) {
      out.slots_.push_back(Slot{b, k});
      out.op_names_.push_back(k == 0 ? "s" + std::to_string(b + 1)
                                     : "d" + std::to_string(b + 1) + "." + std::to_string(k));
    }
    out.blocks_.push_back(std::move(blk));
  }
  return out;
}

Rational alpha(const DAlgebra& d, std::size_t block, std::size_t j, std::size_t p, std::size_t q) {
  std::size_t m = d.nilpotent_count(block);
  if (j < 1 || p < 1 || q < 1 || j > m || p > m || q > m)
    throw Error(ErrorKind::IndexOutOfRange, "alpha indices must lie in 1.." + std::to_string(m));
  return d.structure(block, j, p, q);
}

AlgebraSpec builtin(std::string_view name, const std::vector<unsigned>& params) {
  auto need = [&](std::size_t count) {
    if (params.size() != count)
      throw Error(ErrorKind::UnknownBuiltin, std::string(name) + " expects " + std::to_string(count) + " parameter(s)");
  };
  AlgebraSpec spec;
  if (name == "dual") {
    need(0);
    spec.blocks.push_back({{"1", "e"}, {{{"e", "e"}, {}}}});
  } else if (name == "fields") {
    need(1);
    if (params[0] < 1) throw Error(ErrorKind::UnknownBuiltin, "fields needs m >= 1");
    for (unsigned i = 1; i <= params[0]; ++i) spec.blocks.push_back({{"u" + std::to_string(i)}, {}});
  } else if (name == "diff_difference" || name == "dd") {
    need(2);
    if (params[0] < 1) throw Error(ErrorKind::UnknownBuiltin, "diff_difference needs n >= 1");
    BlockSpec first;
    first.basis.push_back("1");
    for (unsigned k = 1; k <= params[0]; ++k) first.basis.push_back("v" + std::to_string(k));
    spec.blocks.push_back(std::move(first));
    for (unsigned i = 1; i <= params[1]; ++i) spec.blocks.push_back({{"u" + std::to_string(i)}, {}});
  } else if (name == "truncated_hs" || name == "hs") {
    need(1);
    if (params[0] < 1) throw Error(ErrorKind::UnknownBuiltin, "truncated_hs needs n >= 1");
    const unsigned n = params[0];
    auto power = [](unsigned k) { return k == 0 ? std::string("1") : k == 1 ? std::string("e") : "e" + std::to_string(k); };
    BlockSpec b;
    for (unsigned k = 0; k <= n; ++k) b.basis.push_back(power(k));
    for (unsigned a = 1; a <= n; ++a)
      for (unsigned c = a; c <= n; ++c) {
        std::vector<std::pair<std::string, Rational>> terms;
        if (a + c <= n) terms.emplace_back(power(a + c), Rational(1));
        b.table[{power(a), power(c)}] = terms;
      }
    spec.blocks.push_back(std::move(b));
  } else {
    throw Error(ErrorKind::UnknownBuiltin, "'" + std::string(name) + "'");
  }
  return spec;
}

std::optional<AlgebraSpec> builtin_from_string(std::string_view text) {
  if (text == "dual") return builtin("dual", {});
  auto colon = text.find(':');
  if (colon == std::string_view::npos) return std::nullopt;
  std::string_view head = text.substr(0, colon);
  if (head != "fields" && head != "hs" && head != "dd") return std::nullopt;

  std::vector<unsigned> params;
  std::string_view rest = text.substr(colon + 1);
  while (true) {
    auto comma = rest.find(',');
    std::string_view tok = rest.substr(0, comma);
    unsigned v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
      throw Error(ErrorKind::UnknownBuiltin, "bad parameter in '" + std::string(text) + "'");
    params.push_back(v);
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return builtin(head, params);
}

}  // namespace dstar
