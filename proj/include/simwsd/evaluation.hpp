// Copyright 2026 The simwsd Authors.
//
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

#ifndef SIMWSD_EVALUATION_HPP_
#define SIMWSD_EVALUATION_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "simwsd/pipeline.hpp"

namespace simwsd {

struct LabeledContext {
  Context context;
  std::size_t gold = 0;  // sense index
};

struct PseudoWord {
  std::string w1;
  std::string w2;
  std::string merged;            // "w1+w2"
  std::vector<Sentence> corpus;  // with both words replaced by `merged`
  std::vector<LabeledContext> labeled;
  SenseInventory inventory;      // senses w1 and w2
};

// Merges stems w1 and w2 into one artificial ambiguous word. Contexts whose
// center sentence held both words are left out of the labeled set.
PseudoWord make_pseudo_word(std::span<const Sentence> corpus, std::string_view w1, std::string_view w2,
                            std::span<const std::string> definitions1, std::span<const std::string> definitions2,
                            ContextWindow window = ContextWindow::Sentence);

struct SenseReport {
  std::string sense;
  std::size_t sample_size = 0;
  std::size_t feedback_size = 0;
  double correct = 0.0;  // may be fractional when built from percentages
  double percent() const { return sample_size == 0 ? 0.0 : 100.0 * correct / static_cast<double>(sample_size); }
};

struct EvalReport {
  std::string word;
  std::vector<SenseReport> senses;
  std::size_t unclassifiable = 0;
  // Accuracy (percent) after each recorded iteration, when available.
  std::vector<double> per_iteration_total;

  std::size_t total_size() const;
  double total_percent() const;
  // Share of the largest sense, percent.
  double majority_baseline() const;

  // Rebuilds a report from published per-sense sizes and percentages.
  static EvalReport from_accuracies(std::string word, std::span<const std::string> senses,
                                    std::span<const std::size_t> sizes, std::span<const double> percents,
                                    std::span<const std::size_t> feedback_sizes = {});
};

double round_one_decimal(double value);

std::string format_table(const EvalReport& report);
std::string format_csv(const EvalReport& report);
// iteration,percent_correct
std::string format_iteration_csv(const EvalReport& report);

// Predicted sense per labeled context; nullopt when the context is unclassifiable.
std::vector<std::optional<std::size_t>> predict(const Model& model, std::span<const UsageCluster> clusters,
                                                std::span<const Sentence> corpus,
                                                std::span<const LabeledContext> labeled);

EvalReport make_report(const Model& model, std::span<const LabeledContext> labeled,
                       std::span<const std::optional<std::size_t>> predictions);

// Classifies every labeled context with a fixed model. Throws on an empty set.
EvalReport evaluate(const Model& model, std::span<const Sentence> corpus, std::span<const LabeledContext> labeled);

struct CrossValidation {
  // 0 means leave-one-out: one fold per sentence holding labeled contexts.
  std::size_t folds = 0;
  bool per_iteration = true;
};

// Trains once per fold with the fold's sentences removed from training and
// classifies the held-out contexts.
EvalReport cross_validate(const PseudoWord& pseudo, const PipelineConfig& config,
                          const CrossValidation& cv = {});

}  // namespace simwsd

#endif  // SIMWSD_EVALUATION_HPP_
