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

#include "tfi/harness.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <thread>
#include <tuple>
#include <utility>

#include "tfi/baselines.h"
#include "tfi/errors.h"
#include "tfi/json_io.h"

namespace tfi {
namespace {

using nlohmann::json;

std::string ResolvePath(const std::string& path, const std::string& base_dir) {
  if (base_dir.empty()) return path;
  std::filesystem::path p(path);
  if (p.is_absolute()) return path;
  return (std::filesystem::path(base_dir) / p).string();
}

std::string FormatDouble(const char* format, double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), format, value);
  return buf;
}

// Everything one trial needs, shared read-only by its method runs.
struct TrialData {
  TransactionDataset full;
  TransactionDataset part_e;
  TransactionDataset part_v;
};

struct RunOutcome {
  ItemsetCollection reported;
  std::optional<TfiReport> report;
};

RunOutcome RunMethod(MethodKind method, const TrialData& data, double theta,
                     const ExperimentConfig& cfg) {
  RunOutcome out;
  switch (method) {
    case MethodKind::kMethod1:
      out.report = Method1(data.part_e, data.part_v, theta, cfg.delta, cfg.tfi);
      out.reported = out.report->output;
      break;
    case MethodKind::kMethod2:
      out.report = Method2(data.full, theta, cfg.delta, cfg.tfi);
      out.reported = out.report->output;
      break;
    case MethodKind::kBonferroni:
      out.reported = BonferroniMethod(data.full, theta, cfg.delta);
      break;
    case MethodKind::kHoldout:
      out.reported = HoldoutMethod(data.part_e, data.part_v, theta, cfg.delta);
      break;
  }
  return out;
}

void WriteRunReport(const ExperimentConfig& cfg, const EvaluationRow& row,
                    const RunOutcome& outcome) {
  json j;
  if (outcome.report) {
    j = ToJson(*outcome.report);
  } else {
    j = {{"method", MethodName(row.method)},
         {"theta", row.theta},
         {"delta", cfg.delta},
         {"output", ToJson(outcome.reported)}};
  }
  j["trial"] = row.trial;
  j["trial_seed"] = row.trial_seed;
  j["num_tfis"] = row.num_tfis;
  j["false_positives"] = row.false_positives;
  const std::string name = MethodName(row.method) + "_theta" +
                           FormatDouble("%g", row.theta) + "_trial" +
                           std::to_string(row.trial) + ".json";
  std::ofstream f(std::filesystem::path(*cfg.report_dir) / name);
  f << j.dump(2) << "\n";
}

double Mean(const std::vector<double>& xs) {
  double s = 0.0;
  for (double x : xs) s += x;
  return xs.empty() ? 0.0 : s / static_cast<double>(xs.size());
}

}  // namespace

GroundTruthModel GroundTruthFromDataset(const TransactionDataset& ds) {
  if (ds.empty()) throw ParameterError("ground truth needs a nonempty dataset");
  std::vector<WeightedTransaction> support = ds.Distinct();
  const double n = static_cast<double>(ds.size());
  for (WeightedTransaction& wt : support) wt.weight /= n;
  return GroundTruthModel(std::move(support));
}

ItemsetCollection TrueFrequentItemsets(const GroundTruthModel& gt,
                                       double theta) {
  if (!(theta > 0.0 && theta <= 1.0)) {
    throw ParameterError("theta must lie in (0, 1]");
  }
  ItemsetCollection out;
  for (auto& [a, t] : MineWeighted(gt.support(), 1.0, theta)) {
    out.Insert(a, std::min(t, 1.0));
  }
  return out;
}

GroundTruthModel PlantedModel(const PlantedModelSpec& spec) {
  if (spec.num_items < 1 || spec.num_transactions < 1) {
    throw ParameterError("planted model needs items and transactions");
  }
  if (!(spec.head_probability > 0.0 && spec.head_probability <= 1.0) ||
      !(spec.decay > 0.0 && spec.decay <= 1.0)) {
    throw ParameterError("planted model probabilities must lie in (0, 1]");
  }
  std::mt19937_64 rng(spec.seed);
  std::set<Transaction> seen;
  std::vector<Transaction> planted;
  const int max_attempts = 1000 * spec.num_transactions;
  for (int attempt = 0;
       attempt < max_attempts &&
       static_cast<int>(planted.size()) < spec.num_transactions;
       ++attempt) {
    std::vector<ItemId> items;
    double p = spec.head_probability;
    for (int i = 0; i < spec.num_items; ++i, p *= spec.decay) {
      if (std::bernoulli_distribution(p)(rng)) {
        items.push_back(static_cast<ItemId>(i));
      }
    }
    Transaction t(items);
    if (t.empty() || !seen.insert(t).second) continue;
    planted.push_back(std::move(t));
  }
  if (static_cast<int>(planted.size()) < spec.num_transactions) {
    throw ModelError("could not draw enough distinct planted transactions");
  }
  std::exponential_distribution<double> draw(1.0);
  std::vector<double> weights;
  double total = 0.0;
  for (std::size_t i = 0; i < planted.size(); ++i) {
    weights.push_back(draw(rng));
    total += weights.back();
  }
  std::vector<WeightedTransaction> support;
  for (std::size_t i = 0; i < planted.size(); ++i) {
    support.push_back({planted[i], weights[i] / total});
  }
  return GroundTruthModel(std::move(support));
}

GroundTruthModel ModelFromJson(const json& j) {
  try {
    std::vector<WeightedTransaction> support;
    for (const json& e : j.at("transactions")) {
      support.push_back({Transaction(e.at("items").get<std::vector<ItemId>>()),
                         e.at("probability").get<double>()});
    }
    return GroundTruthModel(std::move(support));
  } catch (const json::exception& e) {
    throw ModelError(std::string("malformed model: ") + e.what());
  }
}

json ModelToJson(const GroundTruthModel& gt) {
  json transactions = json::array();
  for (const WeightedTransaction& wt : gt.support()) {
    transactions.push_back(
        {{"items", ToJson(wt.transaction)}, {"probability", wt.weight}});
  }
  return {{"transactions", transactions}};
}

std::string MethodName(MethodKind method) {
  switch (method) {
    case MethodKind::kMethod1:
      return "method1";
    case MethodKind::kMethod2:
      return "method2";
    case MethodKind::kBonferroni:
      return "bonferroni";
    case MethodKind::kHoldout:
      return "holdout";
  }
  return "unknown";
}

MethodKind ParseMethod(const std::string& name) {
  if (name == "1" || name == "method1") return MethodKind::kMethod1;
  if (name == "2" || name == "method2") return MethodKind::kMethod2;
  if (name == "bonferroni") return MethodKind::kBonferroni;
  if (name == "holdout") return MethodKind::kHoldout;
  throw ParameterError("unknown method '" + name + "'");
}

ExperimentConfig ExperimentConfigFromJson(const json& j,
                                          const std::string& base_dir) {
  ExperimentConfig cfg;
  try {
    int sources = 0;
    if (j.contains("dataset_path")) {
      cfg.dataset_path =
          ResolvePath(j["dataset_path"].get<std::string>(), base_dir);
      ++sources;
    }
    if (j.contains("model_path")) {
      cfg.model_path = ResolvePath(j["model_path"].get<std::string>(), base_dir);
      ++sources;
    }
    if (j.contains("planted")) {
      const json& p = j["planted"];
      PlantedModelSpec spec;
      spec.num_items = p.value("num_items", spec.num_items);
      spec.num_transactions = p.value("num_transactions", spec.num_transactions);
      spec.head_probability = p.value("head_probability", spec.head_probability);
      spec.decay = p.value("decay", spec.decay);
      spec.seed = p.value("seed", spec.seed);
      cfg.planted = spec;
      ++sources;
    }
    if (sources != 1) {
      throw ParameterError(
          "config needs exactly one of dataset_path, model_path, planted");
    }
    cfg.target_n = j.value("target_n", cfg.target_n);
    cfg.thetas = j.at("thetas").get<std::vector<double>>();
    cfg.delta = j.value("delta", cfg.delta);
    cfg.trials = j.value("trials", cfg.trials);
    cfg.seed = j.value("seed", cfg.seed);
    cfg.methods.clear();
    for (const std::string& m :
         j.value("methods", std::vector<std::string>{"method2", "bonferroni"})) {
      cfg.methods.push_back(ParseMethod(m));
    }
    cfg.split_fraction = j.value("split_fraction", cfg.split_fraction);
    cfg.tfi.c = j.value("vc_constant", cfg.tfi.c);
    if (j.contains("delta_1")) cfg.tfi.delta_1 = j["delta_1"].get<double>();
    cfg.tfi.max_candidates = j.value("max_candidates", cfg.tfi.max_candidates);
    cfg.tfi.sukp.node_limit =
        j.value("sukp_node_limit", cfg.tfi.sukp.node_limit);
    cfg.threads = j.value("threads", cfg.threads);
    cfg.csv_runtime = j.value("csv_runtime", cfg.csv_runtime);
    if (j.contains("report_dir")) {
      cfg.report_dir = ResolvePath(j["report_dir"].get<std::string>(), base_dir);
    }
    if (j.contains("output")) {
      cfg.output_csv = ResolvePath(j["output"].get<std::string>(), base_dir);
    }
  } catch (const json::exception& e) {
    throw ParameterError(std::string("malformed config: ") + e.what());
  }
  if (cfg.trials < 1) throw ParameterError("trials must be at least 1");
  if (cfg.target_n < 1) throw ParameterError("target_n must be at least 1");
  if (cfg.thetas.empty()) throw ParameterError("thetas must be nonempty");
  for (double theta : cfg.thetas) {
    if (!(theta > 0.0 && theta <= 1.0)) {
      throw ParameterError("theta values must lie in (0, 1]");
    }
  }
  if (!(cfg.delta > 0.0 && cfg.delta < 1.0)) {
    throw ParameterError("delta must lie in (0, 1)");
  }
  if (cfg.methods.empty()) throw ParameterError("methods must be nonempty");
  if (!(cfg.split_fraction > 0.0 && cfg.split_fraction < 1.0)) {
    throw ParameterError("split_fraction must lie in (0, 1)");
  }
  if (cfg.threads < 0) throw ParameterError("threads must be non-negative");
  return cfg;
}

ExperimentConfig LoadExperimentConfig(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParameterError("cannot open config " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError(std::string("config is not valid JSON: ") + e.what(), 0);
  }
  return ExperimentConfigFromJson(
      j, std::filesystem::path(path).parent_path().string());
}

GroundTruthModel LoadGroundTruth(const ExperimentConfig& cfg) {
  if (cfg.planted) return PlantedModel(*cfg.planted);
  if (cfg.model_path) {
    std::ifstream in(*cfg.model_path);
    if (!in) throw ParameterError("cannot open model " + *cfg.model_path);
    json j;
    try {
      in >> j;
    } catch (const json::exception& e) {
      throw ModelError(std::string("model is not valid JSON: ") + e.what());
    }
    return ModelFromJson(j);
  }
  if (cfg.dataset_path) {
    std::ifstream in(*cfg.dataset_path);
    if (!in) throw ParameterError("cannot open dataset " + *cfg.dataset_path);
    return GroundTruthFromDataset(ParseFimi(in));
  }
  throw ParameterError("config names no ground-truth source");
}

std::string StatusName(RunStatus status) {
  switch (status) {
    case RunStatus::kOk:
      return "ok";
    case RunStatus::kInfeasible:
      return "infeasible";
    case RunStatus::kResourceCap:
      return "resource_cap";
  }
  return "unknown";
}

void ScoreRow(const ItemsetCollection& reported, const ItemsetCollection& tfis,
              EvaluationRow& row) {
  row.num_tfis = tfis.size();
  row.num_reported = reported.size();
  row.true_positives = 0;
  for (const auto& entry : reported) {
    row.true_positives += tfis.Contains(entry.first);
  }
  row.false_positives = row.num_reported - row.true_positives;
  row.power = row.num_tfis == 0 ? 1.0
                                : static_cast<double>(row.true_positives) /
                                      static_cast<double>(row.num_tfis);
}

std::vector<EvaluationRow> RunExperiment(const ExperimentConfig& cfg,
                                         const GroundTruthModel& gt) {
  std::vector<ItemsetCollection> tfis;
  for (double theta : cfg.thetas) tfis.push_back(TrueFrequentItemsets(gt, theta));
  if (cfg.report_dir) std::filesystem::create_directories(*cfg.report_dir);

  const std::size_t per_trial = cfg.thetas.size() * cfg.methods.size();
  std::vector<EvaluationRow> rows(per_trial * static_cast<std::size_t>(cfg.trials));
  std::atomic<int> next_trial{0};
  auto worker = [&] {
    for (int trial = next_trial++; trial < cfg.trials; trial = next_trial++) {
      const std::uint64_t trial_seed =
          MixSeed(cfg.seed, static_cast<std::uint64_t>(trial));
      TrialData data;
      data.full = SampleFromModel(gt, cfg.target_n, MixSeed(trial_seed, 0));
      const bool needs_split =
          std::any_of(cfg.methods.begin(), cfg.methods.end(), [](MethodKind m) {
            return m == MethodKind::kMethod1 || m == MethodKind::kHoldout;
          });
      if (needs_split) {
        std::tie(data.part_e, data.part_v) =
            RandomSplit(data.full, cfg.split_fraction, MixSeed(trial_seed, 1));
      }
      std::size_t slot = per_trial * static_cast<std::size_t>(trial);
      for (std::size_t t = 0; t < cfg.thetas.size(); ++t) {
        for (MethodKind method : cfg.methods) {
          EvaluationRow& row = rows[slot++];
          row.method = method;
          row.theta = cfg.thetas[t];
          row.trial = trial;
          row.trial_seed = trial_seed;
          row.num_tfis = tfis[t].size();
          const auto start = std::chrono::steady_clock::now();
          RunOutcome outcome;
          try {
            outcome = RunMethod(method, data, row.theta, cfg);
            ScoreRow(outcome.reported, tfis[t], row);
          } catch (const InfeasibleError&) {
            row.status = RunStatus::kInfeasible;
          } catch (const ResourceCapError&) {
            row.status = RunStatus::kResourceCap;
          }
          row.runtime_seconds = std::chrono::duration<double>(
                                    std::chrono::steady_clock::now() - start)
                                    .count();
          if (cfg.report_dir && row.status == RunStatus::kOk) {
            WriteRunReport(cfg, row, outcome);
          }
        }
      }
    }
  };

  int threads = cfg.threads > 0
                    ? cfg.threads
                    : static_cast<int>(std::thread::hardware_concurrency());
  threads = std::clamp(threads, 1, cfg.trials);
  if (threads == 1) {
    worker();
  } else {
    // Exceptions other than the per-row ones above abort the experiment;
    // capture the first and rethrow after joining.
    std::exception_ptr failure;
    std::mutex failure_mu;
    {
      std::vector<std::jthread> pool;
      for (int i = 0; i < threads; ++i) {
        pool.emplace_back([&] {
          try {
            worker();
          } catch (...) {
            std::lock_guard<std::mutex> lock(failure_mu);
            if (!failure) failure = std::current_exception();
            next_trial = cfg.trials;
          }
        });
      }
    }
    if (failure) std::rethrow_exception(failure);
  }

  std::map<MethodKind, std::size_t> method_order;
  for (MethodKind m : cfg.methods) method_order.emplace(m, method_order.size());
  std::stable_sort(rows.begin(), rows.end(),
                   [&](const EvaluationRow& a, const EvaluationRow& b) {
                     return std::tuple(method_order[a.method], a.theta, a.trial) <
                            std::tuple(method_order[b.method], b.theta, b.trial);
                   });
  return rows;
}

std::vector<EvaluationRow> RunExperiment(const ExperimentConfig& cfg) {
  return RunExperiment(cfg, LoadGroundTruth(cfg));
}

void WriteRowsCsv(const std::vector<EvaluationRow>& rows, std::ostream& out,
                  bool include_runtime) {
  out << "method,theta,trial,trial_seed,status,num_tfis,num_reported,"
         "true_positives,false_positives,power";
  if (include_runtime) out << ",runtime_seconds";
  out << "\n";
  for (const EvaluationRow& row : rows) {
    out << MethodName(row.method) << "," << FormatDouble("%.6g", row.theta)
        << "," << row.trial << "," << row.trial_seed << ","
        << StatusName(row.status) << "," << row.num_tfis << ",";
    if (row.status == RunStatus::kOk) {
      out << row.num_reported << "," << row.true_positives << ","
          << row.false_positives << "," << FormatDouble("%.6f", row.power);
    } else {
      out << ",,,";
    }
    if (include_runtime) {
      out << "," << FormatDouble("%.6f", row.runtime_seconds);
    }
    out << "\n";
  }
}

std::vector<MethodSummary> Summarize(const std::vector<EvaluationRow>& rows) {
  std::vector<MethodSummary> out;
  std::vector<std::vector<double>> powers;
  std::vector<std::vector<double>> reported;
  for (const EvaluationRow& row : rows) {
    if (out.empty() || out.back().method != row.method ||
        out.back().theta != row.theta) {
      MethodSummary s;
      s.method = row.method;
      s.theta = row.theta;
      out.push_back(s);
      powers.emplace_back();
      reported.emplace_back();
    }
    MethodSummary& s = out.back();
    ++s.trials;
    if (row.status != RunStatus::kOk) {
      ++s.failed;
      continue;
    }
    s.trials_with_false_positives += row.false_positives > 0;
    powers.back().push_back(row.power);
    reported.back().push_back(static_cast<double>(row.num_reported));
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i].mean_power = Mean(powers[i]);
    out[i].mean_reported = Mean(reported[i]);
    double ss = 0.0;
    for (double p : powers[i]) {
      ss += (p - out[i].mean_power) * (p - out[i].mean_power);
    }
    out[i].stddev_power =
        powers[i].size() > 1
            ? std::sqrt(ss / static_cast<double>(powers[i].size() - 1))
            : 0.0;
  }
  return out;
}

void WriteSummaryCsv(const std::vector<MethodSummary>& summary,
                     std::ostream& out) {
  out << "method,theta,trials,failed,trials_with_false_positives,mean_power,"
         "stddev_power,mean_reported\n";
  for (const MethodSummary& s : summary) {
    out << MethodName(s.method) << "," << FormatDouble("%.6g", s.theta) << ","
        << s.trials << "," << s.failed << "," << s.trials_with_false_positives
        << "," << FormatDouble("%.6f", s.mean_power) << ","
        << FormatDouble("%.6f", s.stddev_power) << ","
        << FormatDouble("%.3f", s.mean_reported) << "\n";
  }
}

}  // namespace tfi
