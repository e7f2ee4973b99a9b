#include <CLI11.hpp>
#include <iostream>
#include <string>
#include <vector>

#include "reflecta/cli_driver.hpp"

int main(int argc, char** argv) {
  CLI::App app{"exact computation in the reflection Lie algebras of signed permutation groups"};
  app.require_subcommand(1);

  std::string family = "B", scope = "regular", mode = "exact";
  std::string format, out_path, max_order;
  std::vector<std::string> labels;
  int n = 0, threads = 0;
  double max_seconds = -1;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--family", family, "group family")->check(CLI::IsMember({"B", "D"}));
    cmd->add_option("--n", n, "rank");
    cmd->add_option("--label", labels, "module label, repeatable: \"([2,1],[1])\", \"{[2,1],[1]}\", \"{[2,1],+}\"");
    cmd->add_option("--mode", mode, "scalar mode")->check(CLI::IsMember({"exact", "approx"}));
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    cmd->add_option("--out", out_path, "output path (default stdout)");
    cmd->add_option("--threads", threads, "worker threads (env REFLECTA_THREADS)");
    cmd->add_option("--max-seconds", max_seconds, "time budget for closures");
    cmd->add_option("--max-group-order", max_order, "skip groups larger than this order");
  };

  CLI::App* verify = app.add_subcommand("verify", "check the predicted Lie algebra structure");
  add_common(verify);
  verify->add_option("--scope", scope, "regular closure or per-label blocks")
      ->check(CLI::IsMember({"regular", "blocks"}));
  add_common(app.add_subcommand("irrep", "export one irreducible representation as json"));
  add_common(app.add_subcommand("tables", "tabulate labels, dimensions and classifications"));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return reflecta::exit_usage;
  }

  reflecta::RunConfig cfg;
  cfg.command = app.get_subcommands().front()->get_name();
  cfg.family = family == "B" ? reflecta::Family::type_b : reflecta::Family::type_d;
  cfg.n = n;
  cfg.scope = scope == "blocks" ? reflecta::VerifyScope::blocks : reflecta::VerifyScope::regular;
  cfg.labels = labels;
  cfg.mode = mode == "approx" ? reflecta::ScalarMode::approx_orthogonal
                              : reflecta::ScalarMode::exact_seminormal;
  if (format == "json") cfg.format = reflecta::ReportFormat::json;
  else if (format == "csv") cfg.format = reflecta::ReportFormat::csv;
  else if (format == "text") cfg.format = reflecta::ReportFormat::text;
  cfg.out_path = out_path;
  cfg.threads = threads;
  if (max_seconds > 0) cfg.max_seconds = max_seconds;
  if (!max_order.empty()) {
    try {
      cfg.max_group_order = reflecta::Int(max_order);
    } catch (const std::exception&) {
      std::cerr << "bad --max-group-order: " << max_order << "\n";
      return reflecta::exit_usage;
    }
  }
  return reflecta::run_command(cfg, std::cout, std::cerr);
}
