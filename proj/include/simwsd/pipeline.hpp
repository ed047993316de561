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

#ifndef SIMWSD_PIPELINE_HPP_
#define SIMWSD_PIPELINE_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "simwsd/feature_weights.hpp"
#include "simwsd/sense_inventory.hpp"
#include "simwsd/sense_tagger.hpp"
#include "simwsd/similarity_engine.hpp"
#include "simwsd/text_ingest.hpp"

namespace simwsd {

struct PipelineConfig {
  double epsilon = 0.01;
  std::size_t max_iterations = 10;
  ContextWindow window = ContextWindow::Sentence;
  std::size_t min_feature_count = 2;
  double weight_threshold = 0.01;
  double high_freq_cutoff = 0.5;
  double freq_damping_constant = 100.0;
  PosWeights pos_weights;
  // Uniform weights, no feature filters, no high-frequency cutoff and no
  // frequency damping: the plain recurrences on small hand-made corpora.
  bool toy_mode = false;
  InputMode input_mode = InputMode::Tagged;
  double prune_threshold = 1e-6;

  void validate() const;
  WeightScheme weight_scheme() const { return toy_mode ? WeightScheme::Uniform : WeightScheme::Factored; }
  EngineConfig engine_config() const;
};

struct TrainingSummary {
  std::size_t originals = 0;          // rows of the sentence matrices
  std::size_t dropped_originals = 0;  // contexts without usable features
  std::vector<std::size_t> feedback_sizes;
  std::size_t iterations = 0;
  bool converged = false;
};

struct Model {
  static constexpr int kVersion = 1;

  PipelineConfig config;
  SenseInventory inventory;
  FeatureSet features;
  WordSimMatrix<double> words;
  std::vector<UsageCluster> clusters;
  TrainingSummary summary;
};

struct TrainOptions {
  std::unordered_set<std::size_t> excluded_sentences;
  bool record_history = false;
};

// Everything produced by one training run; `model` is what gets persisted.
struct TrainingRun {
  Model model;
  FeedbackSets feedback;
  std::vector<Context> originals;  // kept originals, row order
  std::vector<FeatureList> original_features;
  std::vector<FeatureList> anchor_features;  // per feedback context id
  std::vector<std::size_t> anchor_sense;
  std::vector<std::optional<std::size_t>> member_anchor;
  SenseAssignment assignment;
  EngineResult<double> engine;

  // Clusters rebuilt from the matrices of one recorded iteration (1-based).
  std::vector<UsageCluster> clusters_at(std::size_t iteration) const;
};

TrainingRun train(std::span<const Sentence> corpus, const SenseInventory& inventory,
                  const PipelineConfig& config, const TrainOptions& options = {});

// Weights of a context under a model's features and weighting scheme.
std::vector<std::pair<std::size_t, double>> weigh_for_model(const Model& model, const ContextTokens& context);

Classification classify(const Model& model, const ContextTokens& context);
Classification classify_with(const Model& model, std::span<const UsageCluster> clusters,
                             const ContextTokens& context);

// Tokenizes one input line in the model's input mode and classifies the
// first occurrence of the target. Without an occurrence, every word is
// treated as adjacent to it.
Classification classify_line(const Model& model, std::string_view line);

// Iteration trace as CSV: iteration,item_kind,item_id,max_increase,frozen.
std::string trace_csv(const TrainingRun& run);

}  // namespace simwsd

#endif  // SIMWSD_PIPELINE_HPP_
