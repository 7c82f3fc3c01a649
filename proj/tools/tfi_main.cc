// Copyright 2026 The TFI Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: mining, TFI extraction, dataset enlargement and
// experiment evaluation.
//
// Exit codes: 0 success, 2 bad parameters or input, 3 infeasible
// parameters, 4 resource cap hit, 1 anything else.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "tfi/baselines.h"
#include "tfi/dataset.h"
#include "tfi/errors.h"
#include "tfi/fim.h"
#include "tfi/harness.h"
#include "tfi/json_io.h"
#include "tfi/tfi.h"

namespace {

constexpr int kExitOther = 1;
constexpr int kExitParameter = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitResourceCap = 4;

tfi::TransactionDataset ReadDataset(const std::string& path) {
  if (path == "-") return tfi::ParseFimi(std::cin);
  std::ifstream in(path);
  if (!in) throw tfi::ParameterError("cannot open " + path);
  return tfi::ParseFimi(in);
}

// Runs `write` against the named file, or stdout for "" and "-".
template <typename Fn>
void WithOutput(const std::string& path, Fn write) {
  if (path.empty() || path == "-") {
    write(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw tfi::ParameterError("cannot write " + path);
  write(out);
}

struct TfiArgs {
  std::string input;
  std::string method = "2";
  double theta = 0.0;
  double delta = 0.1;
  double split_fraction = 0.5;
  std::uint64_t seed = 1;
  std::optional<double> delta_1;
  std::size_t max_candidates = 0;
  std::uint64_t node_limit = 0;
  std::string report;
  std::string output;
};

void RunTfi(const TfiArgs& args) {
  const tfi::MethodKind method = tfi::ParseMethod(args.method);
  const tfi::TransactionDataset ds = ReadDataset(args.input);
  tfi::TfiConfig config;
  config.delta_1 = args.delta_1;
  config.max_candidates = args.max_candidates;
  config.sukp.node_limit = args.node_limit;

  std::optional<tfi::TfiReport> report;
  tfi::ItemsetCollection output;
  if (method == tfi::MethodKind::kMethod2) {
    report = tfi::Method2(ds, args.theta, args.delta, config);
    output = report->output;
  } else if (method == tfi::MethodKind::kBonferroni) {
    output = tfi::BonferroniMethod(ds, args.theta, args.delta);
  } else {
    const auto [ds_e, ds_v] =
        tfi::RandomSplit(ds, args.split_fraction, args.seed);
    if (method == tfi::MethodKind::kMethod1) {
      report = tfi::Method1(ds_e, ds_v, args.theta, args.delta, config);
      output = report->output;
    } else {
      output = tfi::HoldoutMethod(ds_e, ds_v, args.theta, args.delta);
    }
  }
  if (!args.report.empty()) {
    nlohmann::json j;
    if (report) {
      j = tfi::ToJson(*report);
    } else {
      j = {{"method", tfi::MethodName(method)},
           {"theta", args.theta},
           {"delta", args.delta},
           {"output", tfi::ToJson(output)}};
    }
    WithOutput(args.report,
               [&](std::ostream& out) { out << j.dump(2) << "\n"; });
  }
  WithOutput(args.output,
             [&](std::ostream& out) { tfi::WriteCollection(output, out); });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"True frequent itemset extraction"};
  app.require_subcommand(1);

  std::string mine_input;
  std::string mine_output;
  double mine_theta = 0.0;
  CLI::App* mine = app.add_subcommand("mine", "Frequent itemsets of a dataset");
  mine->add_option("input", mine_input, "FIMI dataset, '-' for stdin")
      ->required();
  mine->add_option("--theta", mine_theta, "Minimum frequency")->required();
  mine->add_option("-o,--output", mine_output, "Output file");

  TfiArgs tfi_args;
  CLI::App* tfi_cmd =
      app.add_subcommand("tfi", "True frequent itemsets with FWER control");
  tfi_cmd->add_option("input", tfi_args.input, "FIMI dataset, '-' for stdin")
      ->required();
  tfi_cmd->add_option("--method", tfi_args.method, "1, 2, bonferroni, holdout")
      ->capture_default_str();
  tfi_cmd->add_option("--theta", tfi_args.theta, "Frequency threshold")
      ->required();
  tfi_cmd->add_option("--delta", tfi_args.delta, "FWER bound")
      ->capture_default_str();
  tfi_cmd
      ->add_option("--split-fraction", tfi_args.split_fraction,
                   "Exploratory share for method 1 and holdout")
      ->capture_default_str();
  tfi_cmd->add_option("--seed", tfi_args.seed, "Split seed")
      ->capture_default_str();
  tfi_cmd->add_option("--delta-1", tfi_args.delta_1,
                      "First-stage confidence budget");
  tfi_cmd->add_option("--max-candidates", tfi_args.max_candidates,
                      "Cap on the collection bounded by SUKP, 0 for none");
  tfi_cmd->add_option("--node-limit", tfi_args.node_limit,
                      "SUKP branch-and-bound node cap, 0 for none");
  tfi_cmd->add_option("--report", tfi_args.report, "JSON report file");
  tfi_cmd->add_option("-o,--output", tfi_args.output, "Output file");

  std::string enlarge_input;
  std::string enlarge_output;
  std::size_t enlarge_n = 0;
  std::uint64_t enlarge_seed = 1;
  CLI::App* enlarge = app.add_subcommand(
      "enlarge", "Resample a dataset with replacement to a target size");
  enlarge->add_option("input", enlarge_input, "FIMI dataset, '-' for stdin")
      ->required();
  enlarge->add_option("--target-n", enlarge_n, "Transactions to draw")
      ->required();
  enlarge->add_option("--seed", enlarge_seed, "Sampling seed")
      ->capture_default_str();
  enlarge->add_option("-o,--output", enlarge_output, "Output file");

  std::string config_path;
  std::string eval_output;
  std::string summary_output;
  CLI::App* evaluate =
      app.add_subcommand("evaluate", "Run a repeated-trial experiment");
  evaluate->add_option("--config", config_path, "Experiment config JSON")
      ->required();
  evaluate->add_option("-o,--output", eval_output,
                       "Rows CSV; overrides the config's output");
  evaluate->add_option("--summary", summary_output, "Per-method summary CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitParameter;
  }

  try {
    if (*mine) {
      const tfi::TransactionDataset ds = ReadDataset(mine_input);
      const tfi::ItemsetCollection fis = tfi::MineFrequent(ds, mine_theta);
      WithOutput(mine_output,
                 [&](std::ostream& out) { tfi::WriteCollection(fis, out); });
    } else if (*tfi_cmd) {
      RunTfi(tfi_args);
    } else if (*enlarge) {
      const tfi::TransactionDataset ds = ReadDataset(enlarge_input);
      if (ds.empty()) throw tfi::ParameterError("cannot enlarge empty data");
      const tfi::TransactionDataset big =
          tfi::Enlarge(ds, enlarge_n, enlarge_seed);
      WithOutput(enlarge_output,
                 [&](std::ostream& out) { tfi::WriteFimi(big, out); });
    } else if (*evaluate) {
      const tfi::ExperimentConfig cfg = tfi::LoadExperimentConfig(config_path);
      const auto rows = tfi::RunExperiment(cfg);
      std::string path = eval_output;
      if (path.empty() && cfg.output_csv) path = *cfg.output_csv;
      WithOutput(path, [&](std::ostream& out) {
        tfi::WriteRowsCsv(rows, out, cfg.csv_runtime);
      });
      if (!summary_output.empty()) {
        WithOutput(summary_output, [&](std::ostream& out) {
          tfi::WriteSummaryCsv(tfi::Summarize(rows), out);
        });
      }
    }
  } catch (const tfi::InfeasibleError& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const tfi::ResourceCapError& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return kExitResourceCap;
  } catch (const tfi::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParameter;
  } catch (const tfi::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParameter;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitOther;
  }
  return 0;
}
