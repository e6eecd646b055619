#include "dstar/cli.hpp"

#include <algorithm>
#include <fstream>
#include <memory>

#include <CLI11.hpp>

#include "dstar/charset.hpp"
#include "dstar/error.hpp"
#include "dstar/expr.hpp"
#include "dstar/io.hpp"
#include "dstar/operators.hpp"
#include "dstar/reduction.hpp"

namespace dstar::cli {

namespace {

RingPtr ring_for(const std::string& algebra, std::initializer_list<std::string_view> texts) {
  unsigned n = 1;
  for (auto t : texts) n = std::max(n, max_indeterminate(t));
  return make_ring(load_algebra(algebra), n);
}

void algebra_check(const std::string& path, std::ostream& out) {
  DAlgebra alg = load_algebra(path);
  out << "algebra " << alg.label() << "\n";
  out << "blocks " << alg.block_count() << "\n";
  out << "slots " << alg.slot_count() << ":";
  for (const auto& name : alg.op_names()) out << " " << name;
  out << "\n";
  for (std::size_t b = 0; b < alg.block_count(); ++b) {
    const auto& names = alg.basis_names(b);
    const std::size_t m = alg.nilpotent_count(b);
    out << "block " << b + 1 << "\n  basis";
    for (const auto& n : names) out << " " << n;
    out << "\n";
    for (std::size_t j = 1; j <= m; ++j) {
      auto g = alg.gamma(b, j);
      std::sort(g.begin(), g.end());
      out << "  nu(" << j << ")=" << alg.nu(b, j) << " gamma(" << j << ")={";
      for (std::size_t k = 0; k < g.size(); ++k) out << (k ? "," : "") << "(" << g[k].first << "," << g[k].second << ")";
      out << "}\n";
    }
    bool any = false;
    for (std::size_t j = 1; j <= m; ++j)
      for (std::size_t p = 1; p <= m; ++p)
        for (std::size_t q = 1; q <= m; ++q) {
          Rational a = alpha(alg, b, j, p, q);
          if (a == 0) continue;
          out << "  alpha(" << j << ";" << p << "," << q << ")=" << to_string(a) << "\n";
          any = true;
        }
    if (!any) out << "  alpha: all zero\n";
  }
}

void print_rounds(const CharSetResult& res, std::ostream& out) {
  for (const auto& round : res.trace) {
    out << "round " << round.round << "\n";
    for (const auto& p : round.selected) out << "  selected " << format(p) << "\n";
    for (const auto& p : round.added) out << "  added " << format(p) << "\n";
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Computations in D*-polynomial rings", "dstar"};
  app.require_subcommand(1);

  std::string algebra, path, v1, v2, op, expr, set_file, cert_file, gens_file, witness_file;
  bool trace = false;

  auto* check = app.add_subcommand("algebra-check", "Validate an algebra and print nu, gamma and alpha");
  check->add_option("FILE", path, "Algebra file or builtin name")->required();

  auto* rank_cmd = app.add_subcommand("rank", "Compare two variables under the sequential ranking");
  rank_cmd->add_option("--algebra", algebra)->required();
  rank_cmd->add_option("V1", v1)->required();
  rank_cmd->add_option("V2", v2)->required();

  auto* apply_cmd = app.add_subcommand("apply", "Apply an operator to an expression");
  apply_cmd->add_option("--algebra", algebra)->required();
  apply_cmd->add_option("--op", op, "e.g. \"s1^2 d1.1\" or theta=[2,1]")->required();
  apply_cmd->add_option("EXPR", expr)->required();

  auto* reduce_cmd = app.add_subcommand("reduce", "Reduce an expression by a set of polynomials");
  reduce_cmd->add_option("--algebra", algebra)->required();
  reduce_cmd->add_option("--set", set_file)->required();
  reduce_cmd->add_option("--cert", cert_file, "Write the certificate as JSON");
  reduce_cmd->add_option("EXPR", expr)->required();

  auto* charset_cmd = app.add_subcommand("charset", "Characteristic set of a finite family");
  charset_cmd->add_option("--algebra", algebra)->required();
  charset_cmd->add_option("--gens", gens_file)->required();
  charset_cmd->add_flag("--trace", trace);

  auto* closure_cmd = app.add_subcommand("closure-check", "Check one perfect-closure step");
  closure_cmd->add_option("--algebra", algebra)->required();
  closure_cmd->add_option("--gens", gens_file)->required();
  closure_cmd->add_option("--witness", witness_file)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (check->parsed()) {
      algebra_check(path, out);
    } else if (rank_cmd->parsed()) {
      RingPtr ring = ring_for(algebra, {v1, v2});
      auto c = Ranking::sequential().compare(parse_variable(*ring, v1), parse_variable(*ring, v2));
      out << (c < 0 ? "LESS" : c > 0 ? "GREATER" : "EQUAL") << "\n";
    } else if (apply_cmd->parsed()) {
      RingPtr ring = ring_for(algebra, {expr});
      MultiIndex theta = parse_operator(*ring->algebra, op);
      out << format(apply_composition(theta, parse_polynomial(ring, expr))) << "\n";
    } else if (reduce_cmd->parsed()) {
      std::string set_text = read_file(set_file);
      RingPtr ring = ring_for(algebra, {expr, set_text});
      auto A = parse_generators(ring, set_text);
      DPolynomial g = parse_polynomial(ring, expr);
      ReductionCertificate cert = reduce(g, A);
      out << "remainder " << format(cert.remainder) << "\n";
      out << "H " << format(cert.H) << "\n";
      if (!cert_file.empty()) {
        std::ofstream f(cert_file, std::ios::binary);
        if (!f) throw Error(ErrorKind::SchemaError, "cannot write '" + cert_file + "'");
        f << certificate_to_json(cert);
      }
    } else if (charset_cmd->parsed()) {
      std::string text = read_file(gens_file);
      RingPtr ring = ring_for(algebra, {text});
      CharSetResult res = charset_complete(parse_generators(ring, text));
      if (trace) print_rounds(res, out);
      out << "charset\n";
      for (const auto& c : res.charset.members()) out << "  " << format(c) << "\n";
    } else if (closure_cmd->parsed()) {
      std::string gtext = read_file(gens_file);
      std::string wtext = read_file(witness_file);
      RingPtr ring = ring_for(algebra, {gtext, wtext});
      auto gens = parse_generators(ring, gtext);
      ClosureOutcome o = closure_step_witness(gens, witness_from_json(ring, wtext));
      if (!o.accepted) {
        out << "Reject " << o.reason << "\n";
        return 1;
      }
      out << "Accept " << format(*o.element) << "\n";
    }
  } catch (const ParseError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace dstar::cli
