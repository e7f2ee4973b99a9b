#include "reflecta/cli_driver.hpp"

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "reflecta/lie_closure.hpp"

namespace reflecta {
namespace {

Int exact_group_order(int n, Family f) {
  Int order = 1;
  for (int k = 2; k <= n; ++k) order *= k;
  order <<= (f == Family::type_b ? n : n - 1);
  return order;
}

void apply_thread_config(int requested) {
  int threads = requested;
  if (threads <= 0) {
    if (const char* env = std::getenv("REFLECTA_THREADS")) {
      threads = std::atoi(env);
    }
  }
#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#else
  (void)threads;
#endif
}

int write_output(const RunConfig& cfg, const std::string& bytes, std::ostream& out,
                 std::ostream& err) {
  if (cfg.out_path.empty()) {
    out << bytes;
    return exit_pass;
  }
  std::ofstream file(cfg.out_path, std::ios::binary | std::ios::trunc);
  if (!file) {
    err << "cannot open output path: " << cfg.out_path << "\n";
    return exit_usage;
  }
  file << bytes;
  return file ? exit_pass : exit_usage;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.n < 2) {
    err << "verify needs --n >= 2\n";
    return exit_usage;
  }
  ReportFormat format = cfg.format.value_or(ReportFormat::text);
  if (cfg.max_group_order && cfg.scope == VerifyScope::regular &&
      exact_group_order(cfg.n, cfg.family) > *cfg.max_group_order) {
    // Partial report: the combinatorial prediction is cheap, only the
    // closure is skipped.
    PredictedStructure pred = predicted_structure(cfg.n, cfg.family);
    TheoremReport report;
    report.n = cfg.n;
    report.family = cfg.family;
    report.scope = cfg.scope;
    report.budget_exceeded = true;
    report.predicted_derived = pred.derived_dim;
    report.predicted_center = pred.center_dim;
    report.predicted_total = pred.total_dim;
    report.n2_label_coincidence = pred.n2_label_coincidence;
    int w = write_output(cfg, render_theorem_report(report, format), out, err);
    return w != exit_pass ? w : exit_budget;
  }
  TheoremReport report =
      verify_main_theorem(cfg.n, cfg.family, cfg.scope, cfg.labels, cfg.max_seconds);
  int w = write_output(cfg, render_theorem_report(report, format), out, err);
  if (w != exit_pass) return w;
  if (report.budget_exceeded) return exit_budget;
  return report.pass ? exit_pass : exit_mismatch;
}

int cmd_irrep(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.labels.size() != 1) {
    err << "irrep needs exactly one --label\n";
    return exit_usage;
  }
  if (cfg.format && *cfg.format != ReportFormat::json) {
    err << "irrep output is json only\n";
    return exit_usage;
  }
  RepMatrixSet rep;
  if (cfg.family == Family::type_b) {
    Bipartition shape = bipartition_from_string(cfg.labels[0]);
    if (cfg.n > 0 && shape.n() != cfg.n) {
      err << "label size " << shape.n() << " != --n " << cfg.n << "\n";
      return exit_usage;
    }
    if (cfg.max_group_order && exact_group_order(shape.n(), cfg.family) > *cfg.max_group_order) {
      err << "group order exceeds --max-group-order\n";
      return exit_budget;
    }
    rep = build_rep_b(shape, cfg.mode);
  } else {
    DLabel label = d_label_from_string(cfg.labels[0]);
    int n = label.sign == 0 ? partition_size(label.lambda) + partition_size(label.mu)
                            : 2 * partition_size(label.lambda);
    if (cfg.n > 0 && n != cfg.n) {
      err << "label size " << n << " != --n " << cfg.n << "\n";
      return exit_usage;
    }
    if (cfg.max_group_order && exact_group_order(n, cfg.family) > *cfg.max_group_order) {
      err << "group order exceeds --max-group-order\n";
      return exit_budget;
    }
    rep = build_rep_d(label, cfg.mode);
  }
  return write_output(cfg, render_rep_export(rep), out, err);
}

int cmd_tables(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.n < 2) {
    err << "tables needs --n >= 2\n";
    return exit_usage;
  }
  ReportFormat format = cfg.format.value_or(ReportFormat::csv);
  std::vector<TableRow> rows = label_table(cfg.n, cfg.family);
  return write_output(cfg, render_table(rows, cfg.n, cfg.family, format), out, err);
}

}  // namespace

int run_command(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  apply_thread_config(cfg.threads);
  try {
    if (cfg.command == "verify") return cmd_verify(cfg, out, err);
    if (cfg.command == "irrep") return cmd_irrep(cfg, out, err);
    if (cfg.command == "tables") return cmd_tables(cfg, out, err);
    err << "unknown command: " << cfg.command << "\n";
    return exit_usage;
  } catch (const ClosureBudgetExceeded& e) {
    err << e.what() << "\n";
    return exit_budget;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return std::string(e.what()).find("budget") != std::string::npos ? exit_budget
                                                                     : exit_mismatch;
  }
}

}  // namespace reflecta
