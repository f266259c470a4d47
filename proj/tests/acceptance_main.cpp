#include "verify.hpp"

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace segalbar;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_command(const std::string& cmd) {
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, got);
  int status = pclose(pipe);
  if (WIFEXITED(status)) r.exit_code = WEXITSTATUS(status);
  return r;
}

std::string read_file(const std::string& path, bool& ok) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    ok = false;
    return "";
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  ok = true;
  return ss.str();
}

bool run_criterion_suites(const std::vector<std::string>& names, double budget_seconds,
                          std::string& detail) {
  auto start = std::chrono::steady_clock::now();
  auto results = run_suites(VerifyOptions{4}, names);
  double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  long long checks = 0;
  for (const auto& r : results) checks += r.checks;
  for (const auto& r : results)
    if (!r.pass) {
      detail = r.name + ": " + r.failure;
      return false;
    }
  std::ostringstream ss;
  ss.setf(std::ios::fixed);
  ss.precision(1);
  ss << checks << " checks in " << elapsed << "s";
  detail = ss.str();
  if (elapsed > budget_seconds) {
    detail += ", over the " + std::to_string(static_cast<int>(budget_seconds)) + "s budget";
    return false;
  }
  return true;
}

struct CliCase {
  std::string golden;
  std::string args;
  int expected_exit = 0;
};

bool run_cli_goldens(std::string& detail) {
  const std::string cli = SEGALBAR_CLI_PATH;
  const std::string data = SEGALBAR_DATA_DIR;
  const std::string golden_dir = SEGALBAR_GOLDEN_DIR;

  const std::vector<CliCase> cases = {
      {"hom_total_2_1.txt", "hom total 2 1", 0},
      {"hom_count.txt", "hom total 2 1 --count", 0},
      {"compose_total.txt", "compose total '3→2:[0,1,1]' '2→1:[0,0]'", 0},
      {"tensor_partial.txt", "tensor partial '1⇀0:[_]' '2→1:[0,0]'", 0},
      {"jmap.txt", "jmap '2→4:[1,2]'", 0},
      {"hmap.txt", "hmap '4→3:[0,1,1,2]'", 0},
      {"hjmap.txt", "hjmap '2→4:[1,2]'", 0},
      {"nerve_z2_3.txt", "nerve \"" + data + "/z2.json\" --N 3", 0},
      {"segal_strict_nerve.txt",
       "segal-check \"" + data + "/nerve_z2_3.json\" --mode strict", 0},
      {"segal_bijective_constant2.txt",
       "segal-check \"" + data + "/constant2.json\" --mode bijective", 1},
      {"reconstruct_z3.txt", "reconstruct \"" + data + "/nerve_z3_3.json\"", 0},
      {"bar_equal.txt",
       "bar-equal \"" + data + "/nerve_z3_3.json\" \"" + data + "/z3.json\"", 0},
      {"double_nerve_z2_2_2.txt", "double-nerve \"" + data + "/z2.json\" --N 2 --M 2", 0},
      {"bisegal_strict.txt",
       "bisegal-check \"" + data + "/dnerve_z2_2_2.json\" --mode strict", 0},
      {"eckmann_hilton.txt", "eckmann-hilton \"" + data + "/dnerve_z2_2_2.json\"", 0},
      {"render_mu.txt", "render '2→1:[0,0]'", 0},
      {"render_pi_dot.txt", "render '1⇀0:[_]' --style dot", 0},
      {"verify_monoid_object.txt", "verify --max-size 2 --only monoid-object", 0},
      {"compose_mismatch.txt", "compose total '2→1:[0,0]' '3→2:[0,1,1]'", 2},
  };

  for (const auto& c : cases) {
    bool ok = false;
    std::string expected = read_file(golden_dir + "/" + c.golden, ok);
    if (!ok) {
      detail = "missing golden file " + c.golden;
      return false;
    }
    std::string cmd =
        "env -u SEGALBAR_MAX_SIZE \"" + cli + "\" " + c.args + " 2>/dev/null";
    auto first = run_command(cmd);
    auto second = run_command(cmd);
    if (first.exit_code != c.expected_exit) {
      detail = c.golden + ": exit " + std::to_string(first.exit_code) + ", expected " +
               std::to_string(c.expected_exit);
      return false;
    }
    if (first.output != second.output || first.exit_code != second.exit_code) {
      detail = c.golden + ": two runs differ";
      return false;
    }
    if (first.output != expected) {
      detail = c.golden + ": output differs from the golden file (" +
               std::to_string(first.output.size()) + " vs " +
               std::to_string(expected.size()) + " bytes)";
      return false;
    }
  }
  detail = std::to_string(cases.size()) + " commands, two runs each, byte-identical";
  return true;
}

}  // namespace

int main() {
  struct Criterion {
    const char* label;
    bool pass;
    std::string detail;
  };
  std::vector<Criterion> table;

  auto suites = [&](const char* label, std::vector<std::string> names, double budget) {
    std::string detail;
    bool pass = run_criterion_suites(names, budget, detail);
    table.push_back({label, pass, detail});
  };

  suites("C1 functor laws and hom counts (sizes <= 4, h <= 6)",
         {"hom-counts", "compose-laws", "tensor-laws", "functor-j", "functor-h",
          "factorization"},
         60.0);
  suites("C2 monoid object equations in both categories", {"monoid-object"}, 10.0);
  suites("C3 nerves match the bar oracle and pass strict segal (order <= 3, depth 4)",
         {"nerve-oracle", "nerve-segal", "simplicial-identities"}, 60.0);
  suites("C4 reconstruction round trip with bar equality (order <= 3, depth 4)",
         {"reconstruction"}, 120.0);
  suites("C5 negative controls: constant object and single-entry mutations",
         {"negative-controls"}, 120.0);
  suites("C6 double nerves: bifunctoriality, double segal, naturality, eckmann-hilton",
         {"double-nerve"}, 120.0);
  suites("C7 products: level sizes, projections, generator commutation (depth 3)",
         {"product"}, 60.0);

  {
    std::string detail;
    bool pass = run_cli_goldens(detail);
    table.push_back({"C8 cli golden files and exit codes", pass, detail});
  }

  bool all = true;
  for (const auto& c : table) {
    std::cout << c.label << ": " << (c.pass ? "PASS" : "FAIL") << " (" << c.detail << ")\n";
    if (!c.pass) all = false;
  }
  std::cout << (all ? "acceptance: all 8 criteria pass\n"
                    : "acceptance: at least one criterion fails\n");
  return all ? 0 : 1;
}
