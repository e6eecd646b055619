#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli_cases.hpp"
#include "dstar/cli.hpp"
#include "dstar/io.hpp"

namespace fs = std::filesystem;

namespace {

const fs::path kGolden = DSTAR_GOLDEN_DIR;

struct Outcome {
  int code;
  std::string out;
  std::string err;
  std::string cert;
};

Outcome run_case(const CliCase& c, const fs::path& scratch) {
  std::vector<std::string> args;
  for (auto a : c.args) {
    if (a.rfind("@/", 0) == 0) a = (kGolden / a.substr(2)).string();
    if (a.rfind("%/", 0) == 0) a = (scratch / a.substr(2)).string();
    args.push_back(a);
  }
  std::ostringstream out, err;
  int code = dstar::cli::run(args, out, err);
  Outcome o{code, out.str(), err.str(), {}};
  if (fs::exists(scratch / "cert.json")) {
    o.cert = dstar::read_file((scratch / "cert.json").string());
    fs::remove(scratch / "cert.json");
  }
  // error messages name the golden directory; keep them location independent
  for (std::string* s : {&o.out, &o.err}) {
    const std::string dir = kGolden.string();
    for (auto p = s->find(dir); p != std::string::npos; p = s->find(dir)) s->replace(p, dir.size(), "@");
  }
  return o;
}

std::string render(const Outcome& o) {
  std::string s = "exit " + std::to_string(o.code) + "\n--- stdout\n" + o.out + "--- stderr\n" + o.err;
  if (!o.cert.empty()) s += "--- cert\n" + o.cert;
  return s;
}

}  // namespace

TEST_CASE("golden outputs, twice") {
  const fs::path scratch = fs::temp_directory_path() / "dstar_cli_golden";
  fs::create_directories(scratch);
  const bool update = std::getenv("DSTAR_UPDATE_GOLDEN") != nullptr;
  for (const auto& c : cli_cases()) {
    CAPTURE(c.name);
    std::string first = render(run_case(c, scratch));
    std::string second = render(run_case(c, scratch));
    CHECK(first == second);
    const fs::path expected = kGolden / (c.name + ".out");
    if (update) {
      std::ofstream(expected, std::ios::binary) << first;
      continue;
    }
    REQUIRE(fs::exists(expected));
    CHECK(first == dstar::read_file(expected.string()));
  }
}

TEST_CASE("exit codes") {
  const fs::path scratch = fs::temp_directory_path() / "dstar_cli_codes";
  fs::create_directories(scratch);
  auto code = [&](const std::string& name) {
    for (const auto& c : cli_cases())
      if (c.name == name) return run_case(c, scratch).code;
    return -1;
  };
  CHECK(code("apply_dual") == 0);
  CHECK(code("check_misordered") == 1);
  CHECK(code("check_broken") == 2);
  CHECK(code("charset_inconsistent") == 1);
  CHECK(code("charset_syntax") == 2);
  CHECK(code("closure_reject") == 1);
  CHECK(code("usage") == 2);
}
