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

#ifndef SIMWSD_FEATURE_WEIGHTS_HPP_
#define SIMWSD_FEATURE_WEIGHTS_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "simwsd/text_ingest.hpp"

namespace simwsd {

// max{0, 1 - freq / max5}. Requires max5 > 0.
double global_frequency_factor(std::size_t freq, double max5);

// max{0, log(p_cond / p_global)} * min{1, training_count / 10}.
// Throws when p_global is not positive.
double log_likelihood_factor(double p_cond, double p_global, std::size_t training_count);

struct PosWeights {
  double noun = 1.0;
  double verb = 0.6;
  double adjective = 0.8;
  double other = 0.0;
};

double pos_factor(PartOfSpeech pos, const PosWeights& weights = {});

// 1 / (1 + token_distance / sentence_span), sentence_span >= 1.
double distance_factor(std::size_t token_distance, std::size_t sentence_span);

struct WeightFactors {
  double global_freq = 1.0;
  double log_likelihood = 1.0;
  double pos = 1.0;
  double distance = 1.0;

  double product() const { return global_freq * log_likelihood * pos * distance; }
};

// Uniform: every retained feature gets factor 1, so a context's weights are
// 1/|features|. Factored: the four-factor product.
enum class WeightScheme { Uniform, Factored };

// Context-independent statistics of one lexeme.
struct LexemeFactors {
  std::string stem;
  PartOfSpeech pos = PartOfSpeech::Noun;
  std::size_t corpus_freq = 0;
  std::size_t training_count = 0;
  double global_freq = 1.0;
  double log_likelihood = 1.0;
  double pos_weight = 1.0;

  // Unnormalized weight before the distance factor.
  double product() const { return global_freq * log_likelihood * pos_weight; }
};

// Factors for every stem seen in the training contexts, sorted by stem.
struct FactorTable {
  std::vector<LexemeFactors> lexemes;

  const LexemeFactors* find(std::string_view stem) const;
};

FactorTable compute_factors(std::span<const Sentence> corpus, const CorpusStats& stats,
                            std::span<const Context* const> training, const PosWeights& pos_weights);

enum class ExclusionReason { RareCount, LowWeight, StopList };

std::string_view to_string(ExclusionReason reason);

struct FeatureConfig {
  std::size_t min_count = 2;
  // Relative to the largest factor product in the table.
  double weight_threshold = 0.01;
  bool filters_enabled = true;
  std::vector<std::string> stop_stems;  // e.g. the target word itself
};

struct FeatureSet {
  std::vector<LexemeFactors> retained;  // sorted by stem; position is the feature index
  std::map<std::string, ExclusionReason> excluded;

  std::optional<std::size_t> index_of(std::string_view stem) const;
  std::size_t size() const { return retained.size(); }
};

// Throws Error("feature_weights", ...) when nothing is retained.
FeatureSet select_features(const FactorTable& factors, const FeatureConfig& config);

// Normalized weights of the retained features of one context, keyed by
// feature index and sorted by it. A feature occurring several times counts
// once, at its nearest occurrence. Throws when the context has no retained
// feature with a positive factor product.
std::vector<std::pair<std::size_t, double>> weigh_context(const ContextTokens& context,
                                                          const FeatureSet& features,
                                                          WeightScheme scheme);

// Same weights keyed by stem.
std::map<std::string, double> sentence_word_weights(const ContextTokens& context,
                                                    const FeatureSet& features, WeightScheme scheme);

}  // namespace simwsd

#endif  // SIMWSD_FEATURE_WEIGHTS_HPP_
