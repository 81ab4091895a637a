#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "altseq/distribution.hpp"

namespace altseq {

// kReported: an expansion check missed its tolerance while the fit
// windows still converge; the fitted values are in `observed`.
// kSkipped: the requested n range does not cover the check.
enum class CheckStatus { kPass, kFail, kReported, kSkipped };

std::string_view to_string(CheckStatus s);

struct CheckRecord {
  std::string id;
  std::string description;
  std::string reference;  // formula or invariant being checked
  std::string expected;
  std::string observed;
  CheckStatus status = CheckStatus::kPass;
  double runtime_seconds = 0.0;
};

struct CheckReport {
  std::vector<CheckRecord> records;

  // 0 when nothing failed, 1 otherwise.
  int exit_code() const;
  const CheckRecord& record(const std::string& id) const;
};

struct VerifyOptions {
  int n_max = 200;
  int digits = 64;
  int fit_terms = 3;
  std::uint64_t mc_samples = 200000;
  std::uint64_t mc_seed = 1;
  int threads = 1;
  // Wall-clock budgets in seconds.
  double budget_exact = 120.0;
  double budget_fit = 600.0;
  double budget_equivalence = 120.0;
  // Test hook: runs on the DP tables (index n - 1) before any check.
  std::function<void(std::vector<DistributionTable>&)> table_hook;
};

CheckReport run_verification(const VerifyOptions& options = {});

std::string render_text(const CheckReport& report);
nlohmann::json to_json(const CheckReport& report);

}  // namespace altseq
