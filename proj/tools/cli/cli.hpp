#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace b3rep::cli {

enum ExitCode : int { kSmooth = 0, kOk = 0, kSingular = 1, kInputError = 2, kMismatch = 3 };

enum class Format { Json, Table };

struct CliConfig {
  std::string command;
  std::string spec_path;
  std::string suite;
  int n = 0;
  int max_n = 10;
  int trials = 1;
  std::uint64_t seed = 0;
  double tol = 1e-8;
  bool verify = false;
  Format format = Format::Json;
};

struct SuiteResult {
  std::string suite;
  long checks = 0;
  long passed = 0;
  long ambiguous_retries = 0;
  double worst_residual = 0.0;
  std::vector<std::string> failures;  // first few only

  [[nodiscard]] long failed() const noexcept { return checks - passed; }
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"ext", "tangent", "lemma", "gln", "symmetry"};
  return names;
}

/// Runs a verification suite. Throws std::invalid_argument on an unknown name.
[[nodiscard]] SuiteResult run_suite(const CliConfig& cfg);

nlohmann::json to_json(const SuiteResult& r, const CliConfig& cfg);

/// Entry point shared by the executable and the tests. args excludes argv[0].
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace b3rep::cli
