#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "pk/oracle.hpp"

namespace pk {

struct PropertyResult {
  std::string name;
  std::size_t instances = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool ok() const { return failures == 0; }
};

struct SuiteResult {
  std::string name;
  std::vector<PropertyResult> properties;

  bool ok() const;
};

struct VerifyOptions {
  std::string suite = "all";
  int max_rank = 3;
  int trials = 100;
  std::uint64_t seed = 42;
  int oracle_bound = kDefaultOracleBound;
  unsigned threads = 0;  // 0: hardware concurrency
};

/// Names accepted by run_verification besides "all".
const std::vector<std::string>& suite_names();

/// Runs the requested suite(s). Deterministic for a given seed. Throws
/// std::invalid_argument for an unknown suite name.
std::vector<SuiteResult> run_verification(const VerifyOptions& opts);

nlohmann::json summary_json(const VerifyOptions& opts, const std::vector<SuiteResult>& results);

}  // namespace pk
