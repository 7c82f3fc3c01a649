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

// Experiment runner: builds a ground-truth distribution, draws seeded
// datasets from it, runs the extraction methods and scores their output
// against the true frequent itemsets.

#ifndef TFI_HARNESS_H_
#define TFI_HARNESS_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "tfi/dataset.h"
#include "tfi/fim.h"
#include "tfi/tfi.h"

namespace tfi {

// Empirical distribution of ds: each distinct transaction with probability
// multiplicity / n.
GroundTruthModel GroundTruthFromDataset(const TransactionDataset& ds);

// { A nonempty : t_pi(A) >= theta }, with t_pi as the stored frequency.
ItemsetCollection TrueFrequentItemsets(const GroundTruthModel& gt,
                                       double theta);

// A random mixture of distinct transactions. Item i (0-based) enters each
// transaction independently with probability
// head_probability * decay^i, so low ids are common and high ids rare.
// Mixture weights are normalized exponential draws.
struct PlantedModelSpec {
  int num_items = 50;
  int num_transactions = 20;
  double head_probability = 0.8;
  double decay = 0.85;
  std::uint64_t seed = 1;
};
GroundTruthModel PlantedModel(const PlantedModelSpec& spec);

// {"transactions": [{"items": [1, 2], "probability": 0.6}, ...]}.
GroundTruthModel ModelFromJson(const nlohmann::json& j);
nlohmann::json ModelToJson(const GroundTruthModel& gt);

enum class MethodKind { kMethod1, kMethod2, kBonferroni, kHoldout };

// Canonical names: "method1", "method2", "bonferroni", "holdout". Parsing
// also accepts "1" and "2". Throws ParameterError otherwise.
std::string MethodName(MethodKind method);
MethodKind ParseMethod(const std::string& name);

struct ExperimentConfig {
  // Exactly one ground-truth source.
  std::optional<std::string> dataset_path;  // FIMI; empirical distribution
  std::optional<std::string> model_path;    // model JSON
  std::optional<PlantedModelSpec> planted;

  std::size_t target_n = 100000;
  std::vector<double> thetas;
  double delta = 0.1;
  int trials = 20;
  std::uint64_t seed = 1;
  std::vector<MethodKind> methods;
  double split_fraction = 0.5;  // exploratory share for method1/holdout
  TfiConfig tfi;
  int threads = 0;  // 0: hardware concurrency
  bool csv_runtime = false;
  std::optional<std::string> report_dir;
  std::optional<std::string> output_csv;
};

// Validates ranges; relative paths are resolved against base_dir.
ExperimentConfig ExperimentConfigFromJson(const nlohmann::json& j,
                                          const std::string& base_dir = "");
ExperimentConfig LoadExperimentConfig(const std::string& path);

GroundTruthModel LoadGroundTruth(const ExperimentConfig& cfg);

enum class RunStatus { kOk, kInfeasible, kResourceCap };
std::string StatusName(RunStatus status);

struct EvaluationRow {
  MethodKind method = MethodKind::kMethod2;
  double theta = 0.0;
  int trial = 0;
  std::uint64_t trial_seed = 0;
  RunStatus status = RunStatus::kOk;
  std::size_t num_tfis = 0;
  std::size_t num_reported = 0;
  std::size_t true_positives = 0;
  std::size_t false_positives = 0;
  // true_positives / num_tfis; 1 when there are no TFIs. Meaningless for
  // failed rows.
  double power = 0.0;
  double runtime_seconds = 0.0;
};

// Scores `reported` against `tfis` into the count fields of `row`.
void ScoreRow(const ItemsetCollection& reported, const ItemsetCollection& tfis,
              EvaluationRow& row);

// One row per (trial, theta, method), sorted by (method, theta, trial).
// Deterministic in cfg apart from runtime_seconds.
std::vector<EvaluationRow> RunExperiment(const ExperimentConfig& cfg,
                                         const GroundTruthModel& gt);
std::vector<EvaluationRow> RunExperiment(const ExperimentConfig& cfg);

// Columns: method,theta,trial,trial_seed,status,num_tfis,num_reported,
// true_positives,false_positives,power and optionally runtime_seconds.
// Failed rows leave the count and power fields empty.
void WriteRowsCsv(const std::vector<EvaluationRow>& rows, std::ostream& out,
                  bool include_runtime = false);

struct MethodSummary {
  MethodKind method = MethodKind::kMethod2;
  double theta = 0.0;
  int trials = 0;
  int failed = 0;
  int trials_with_false_positives = 0;
  double mean_power = 0.0;
  double stddev_power = 0.0;
  double mean_reported = 0.0;
};

// Per (method, theta) over the successful rows.
std::vector<MethodSummary> Summarize(const std::vector<EvaluationRow>& rows);
void WriteSummaryCsv(const std::vector<MethodSummary>& summary,
                     std::ostream& out);

}  // namespace tfi

#endif  // TFI_HARNESS_H_
