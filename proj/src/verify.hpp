#pragma once

#include <string>
#include <vector>

namespace segalbar {

struct VerifyOptions {
  int max_size = 4;
};

struct SuiteResult {
  std::string name;
  long long checks = 0;
  bool pass = true;
  std::string failure;
};

std::vector<std::string> suite_names();

// runs the named suites (all of them when `only` is empty) in registry order
std::vector<SuiteResult> run_suites(const VerifyOptions& options,
                                    const std::vector<std::string>& only);
std::vector<SuiteResult> run_verify(const VerifyOptions& options);

bool verify_passed(const std::vector<SuiteResult>& results);
std::string format_verify(const std::vector<SuiteResult>& results);

}  // namespace segalbar
