#pragma once

#include <string>
#include <vector>

#include "pbwlab/matrix.hpp"

namespace pbwlab {

/// Raised on bad configuration (unknown suite, singular index, bad ranges);
/// the CLI maps it to exit code 2.
class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what) : Error(what) {}
};

struct CheckRecord {
  std::string name;
  std::vector<std::pair<std::string, std::string>> params;
  std::string status;      // pass | fail | derived
  std::string expected;    // empty for purely derived records
  std::string actual;
  std::string provenance;  // fixed | derived
  double elapsed_ms = 0.0;

  static CheckRecord checked(std::string name,
                             std::vector<std::pair<std::string, std::string>> params,
                             std::string expected, std::string actual, bool ok);
  static CheckRecord derived(std::string name,
                             std::vector<std::pair<std::string, std::string>> params,
                             std::string actual, std::string reference = "");
};

struct SuiteConfig {
  std::string suite;
  int n = 2;
  int j = 1;
  int n_min = 1;
  int j_min = 1;
  int r_max = 2;
  int m_max = 4;
  int l_max = 2;
  Mat<Scalar> index;  // j x j; empty means identity
  bool symbolic_k = false;
  bool derive = false;

  void validate() const;
};

struct RunConfig {
  std::vector<SuiteConfig> suites;
  int jobs = 1;
  std::string out;  // base path for out.json / out.md, empty = stdout only
};

struct SuiteResult {
  SuiteConfig config;
  std::vector<CheckRecord> records;
};

struct RunResult {
  std::vector<SuiteResult> suites;
  int pass = 0, fail = 0, derived = 0;
};

const std::vector<std::string>& known_suites();

std::vector<CheckRecord> run_suite(const SuiteConfig& cfg);
RunResult run_all(const RunConfig& cfg);

/// Byte-stable across runs with the same config: no timestamps, no timing.
std::string render_json(const RunResult& result);
std::string render_markdown(const RunResult& result);
/// Sidecar with per-record elapsed times; excluded from stability claims.
std::string render_timing(const RunResult& result);
int exit_code(const RunResult& result);

/// Parses "a,b;c,d" (rows split by ';', rational entries by ',').
Mat<Scalar> parse_index_matrix(const std::string& text);
/// Parses the JSON config document (single suite object or {"suites": [...]}).
RunConfig parse_config_json(const std::string& text);

}  // namespace pbwlab
