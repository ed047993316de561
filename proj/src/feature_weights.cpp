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

#include "simwsd/feature_weights.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <unordered_map>
#include <unordered_set>

#include "simwsd/error.hpp"

namespace simwsd {

double global_frequency_factor(std::size_t freq, double max5) {
  return std::max(0.0, 1.0 - static_cast<double>(freq) / max5);
}

double log_likelihood_factor(double p_cond, double p_global, std::size_t training_count) {
  if (!(p_global > 0.0)) {
    throw Error("feature_weights", "log-likelihood factor needs a positive global probability");
  }
  const double damping = std::min(1.0, static_cast<double>(training_count) / 10.0);
  if (p_cond <= 0.0) return 0.0;
  return std::max(0.0, std::log(p_cond / p_global)) * damping;
}

double pos_factor(PartOfSpeech pos, const PosWeights& weights) {
  switch (pos) {
    case PartOfSpeech::Noun: return weights.noun;
    case PartOfSpeech::Verb: return weights.verb;
    case PartOfSpeech::Adjective: return weights.adjective;
    case PartOfSpeech::Other: return weights.other;
  }
  return 0.0;
}

double distance_factor(std::size_t token_distance, std::size_t sentence_span) {
  return 1.0 / (1.0 + static_cast<double>(token_distance) / static_cast<double>(sentence_span));
}

const LexemeFactors* FactorTable::find(std::string_view stem) const {
  const auto it = std::lower_bound(lexemes.begin(), lexemes.end(), stem,
                                   [](const LexemeFactors& f, std::string_view s) { return f.stem < s; });
  return it != lexemes.end() && it->stem == stem ? &*it : nullptr;
}

FactorTable compute_factors(std::span<const Sentence> corpus, const CorpusStats& stats,
                            std::span<const Context* const> training, const PosWeights& pos_weights) {
  std::unordered_set<std::size_t> sentence_ids;
  for (const Context* ctx : training) sentence_ids.insert(ctx->sentences.begin(), ctx->sentences.end());

  struct Tally {
    std::size_t count = 0;
    std::size_t open_count = 0;
    std::array<std::size_t, 4> pos{};
  };
  std::unordered_map<std::string, Tally> tallies;
  std::size_t open_total = 0;
  for (std::size_t id : sentence_ids) {
    for (const Token& token : corpus[id].tokens) {
      Tally& t = tallies[token.stem];
      ++t.count;
      ++t.pos[static_cast<std::size_t>(token.pos)];
      if (token.pos != PartOfSpeech::Other) {
        ++t.open_count;
        ++open_total;
      }
    }
  }

  FactorTable table;
  table.lexemes.reserve(tallies.size());
  for (const auto& [stem, tally] : tallies) {
    LexemeFactors f;
    f.stem = stem;
    // Majority tag; ties resolve toward Noun, then Verb, then Adjective.
    const auto best = std::max_element(tally.pos.begin(), tally.pos.end());
    f.pos = static_cast<PartOfSpeech>(best - tally.pos.begin());
    f.corpus_freq = stats.frequency(stem);
    f.training_count = tally.count;
    f.global_freq = global_frequency_factor(f.corpus_freq, stats.max5);
    if (f.corpus_freq == 0 || open_total == 0) {
      f.log_likelihood = 0.0;
    } else {
      const double p_cond = static_cast<double>(tally.open_count) / static_cast<double>(open_total);
      const double p_global =
          static_cast<double>(f.corpus_freq) / static_cast<double>(stats.total_tokens);
      f.log_likelihood = log_likelihood_factor(p_cond, p_global, tally.count);
    }
    f.pos_weight = pos_factor(f.pos, pos_weights);
    table.lexemes.push_back(std::move(f));
  }
  std::sort(table.lexemes.begin(), table.lexemes.end(),
            [](const LexemeFactors& a, const LexemeFactors& b) { return a.stem < b.stem; });
  return table;
}

std::string_view to_string(ExclusionReason reason) {
  switch (reason) {
    case ExclusionReason::RareCount: return "rare-count";
    case ExclusionReason::LowWeight: return "low-weight";
    case ExclusionReason::StopList: return "stop-list";
  }
  return "unknown";
}

std::optional<std::size_t> FeatureSet::index_of(std::string_view stem) const {
  const auto it = std::lower_bound(retained.begin(), retained.end(), stem,
                                   [](const LexemeFactors& f, std::string_view s) { return f.stem < s; });
  if (it == retained.end() || it->stem != stem) return std::nullopt;
  return static_cast<std::size_t>(it - retained.begin());
}

FeatureSet select_features(const FactorTable& factors, const FeatureConfig& config) {
  const std::unordered_set<std::string> stop(config.stop_stems.begin(), config.stop_stems.end());
  double max_product = 0.0;
  for (const LexemeFactors& f : factors.lexemes) {
    if (!stop.contains(f.stem)) max_product = std::max(max_product, f.product());
  }
  const double threshold = config.weight_threshold * max_product;

  FeatureSet out;
  for (const LexemeFactors& f : factors.lexemes) {
    if (stop.contains(f.stem)) {
      out.excluded.emplace(f.stem, ExclusionReason::StopList);
    } else if (config.filters_enabled && f.training_count < config.min_count) {
      out.excluded.emplace(f.stem, ExclusionReason::RareCount);
    } else if (config.filters_enabled && (f.product() <= 0.0 || f.product() < threshold)) {
      out.excluded.emplace(f.stem, ExclusionReason::LowWeight);
    } else {
      out.retained.push_back(f);
    }
  }
  if (out.retained.empty()) throw Error("feature_weights", "no feature survived selection");
  return out;
}

std::vector<std::pair<std::size_t, double>> weigh_context(const ContextTokens& context,
                                                          const FeatureSet& features,
                                                          WeightScheme scheme) {
  std::map<std::size_t, std::size_t> nearest;  // feature -> token distance
  const bool anchored = context.target_offset < context.tokens.size();
  for (std::size_t i = 0; i < context.tokens.size(); ++i) {
    const auto index = features.index_of(context.tokens[i]->stem);
    if (!index) continue;
    const std::size_t distance =
        !anchored ? 0 : i > context.target_offset ? i - context.target_offset : context.target_offset - i;
    auto [it, inserted] = nearest.emplace(*index, distance);
    if (!inserted) it->second = std::min(it->second, distance);
  }

  std::vector<std::pair<std::size_t, double>> weights;
  weights.reserve(nearest.size());
  double total = 0.0;
  const std::size_t span = std::max<std::size_t>(1, context.tokens.size());
  for (const auto& [index, distance] : nearest) {
    const double fac = scheme == WeightScheme::Uniform
                           ? 1.0
                           : features.retained[index].product() * distance_factor(distance, span);
    if (fac <= 0.0) continue;
    weights.emplace_back(index, fac);
    total += fac;
  }
  if (weights.empty() || !(total > 0.0)) {
    throw Error("feature_weights", "context has no usable features");
  }
  for (auto& [index, w] : weights) w /= total;
  return weights;
}

std::map<std::string, double> sentence_word_weights(const ContextTokens& context,
                                                    const FeatureSet& features, WeightScheme scheme) {
  std::map<std::string, double> out;
  for (const auto& [index, w] : weigh_context(context, features, scheme)) {
    out.emplace(features.retained[index].stem, w);
  }
  return out;
}

}  // namespace simwsd
