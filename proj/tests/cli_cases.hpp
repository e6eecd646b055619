#pragma once

#include <string>
#include <vector>

// Every subcommand with its golden file. "@" expands to the golden directory.
struct CliCase {
  std::string name;
  std::vector<std::string> args;
};

inline const std::vector<CliCase>& cli_cases() {
  static const std::vector<CliCase> cases{
      {"check_dual", {"algebra-check", "dual"}},
      {"check_e4", {"algebra-check", "@/e4.json"}},
      {"check_mixed", {"algebra-check", "@/mixed.json"}},
      {"check_dd", {"algebra-check", "dd:2,1"}},
      {"check_misordered", {"algebra-check", "@/misordered.json"}},
      {"check_broken", {"algebra-check", "@/broken.json"}},
      {"check_unknown", {"algebra-check", "hs:0"}},
      {"rank_less", {"rank", "--algebra", "dual", "x1[1,0]", "x1[0,1]"}},
      {"rank_greater", {"rank", "--algebra", "dual", "x2[0,1]", "x1[0,1]"}},
      {"rank_equal", {"rank", "--algebra", "hs:2", "x1[1,1,0]", "x1[1,1,0]"}},
      {"rank_bad", {"rank", "--algebra", "dual", "x1[1]", "x1[0,1]"}},
      {"apply_dual", {"apply", "--algebra", "dual", "--op", "d1.1", "x1[0,0]^2"}},
      {"apply_hs", {"apply", "--algebra", "hs:2", "--op", "d1.2", "x1^2"}},
      {"apply_composite", {"apply", "--algebra", "dd:1,1", "--op", "s1 d1.1 s2^2", "x1*x2 + 1/2"}},
      {"apply_theta", {"apply", "--algebra", "@/e4.json", "--op", "theta=[0,1,0,1]", "x1^2"}},
      {"apply_bad_op", {"apply", "--algebra", "dual", "--op", "d1.2", "x1"}},
      {"reduce_ritt", {"reduce", "--algebra", "dual", "--set", "@/ritt_set.txt", "x1[0,2]"}},
      {"reduce_two", {"reduce", "--algebra", "dual", "--set", "@/two_var_set.txt", "x1[0,2]*x2 + x2[0,2]"}},
      {"reduce_cert", {"reduce", "--algebra", "dual", "--set", "@/ritt_set.txt", "--cert", "%/cert.json",
                       "x1[0,2]^2 + x1[1,0]"}},
      {"charset_x_dx", {"charset", "--algebra", "dual", "--gens", "@/gens_x_dx.txt", "--trace"}},
      {"charset_mixed", {"charset", "--algebra", "dual", "--gens", "@/gens_mixed.txt", "--trace"}},
      {"charset_inconsistent", {"charset", "--algebra", "dual", "--gens", "@/gens_inconsistent.txt"}},
      {"charset_syntax", {"charset", "--algebra", "dual", "--gens", "@/gens_bad_syntax.txt"}},
      {"closure_accept",
       {"closure-check", "--algebra", "dual", "--gens", "@/gens_closure.txt", "--witness", "@/witness_accept.json"}},
      {"closure_radical",
       {"closure-check", "--algebra", "dual", "--gens", "@/gens_closure.txt", "--witness", "@/witness_radical.json"}},
      {"closure_reject",
       {"closure-check", "--algebra", "dual", "--gens", "@/gens_closure.txt", "--witness", "@/witness_reject.json"}},
      {"usage", {"frobnicate"}},
  };
  return cases;
}
