#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "reflecta/report.hpp"

namespace reflecta {

struct RunConfig {
  std::string command;  // verify | irrep | tables
  Family family = Family::type_b;
  int n = 0;  // 0: inferred from the label where possible
  VerifyScope scope = VerifyScope::regular;
  std::vector<std::string> labels;
  ScalarMode mode = ScalarMode::exact_seminormal;
  std::optional<ReportFormat> format;  // default depends on the command
  std::string out_path;                // empty: stdout
  int threads = 0;                     // 0: REFLECTA_THREADS, then hardware
  std::optional<double> max_seconds;
  std::optional<Int> max_group_order;
};

inline constexpr int exit_pass = 0;
inline constexpr int exit_mismatch = 1;
inline constexpr int exit_usage = 2;
inline constexpr int exit_budget = 3;

// Runs one command, writes the report to cfg.out_path (or `out` when
// empty) and diagnostics to `err`.  Output bytes are deterministic for
// a fixed config, independent of the thread count.
int run_command(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace reflecta
