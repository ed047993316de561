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

#include "simwsd/pipeline.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "simwsd/error.hpp"

namespace simwsd {

void PipelineConfig::validate() const {
  engine_config().validate();
  if (weight_threshold < 0.0) throw Error("cli", "weight_threshold must be >= 0");
  if (pos_weights.noun < 0.0 || pos_weights.verb < 0.0 || pos_weights.adjective < 0.0 ||
      pos_weights.other < 0.0) {
    throw Error("cli", "POS weights must be >= 0");
  }
}

EngineConfig PipelineConfig::engine_config() const {
  EngineConfig engine;
  engine.epsilon = epsilon;
  engine.max_iterations = max_iterations;
  engine.freq_damping_constant = toy_mode ? std::nullopt : std::optional<double>(freq_damping_constant);
  engine.prune_threshold = prune_threshold;
  return engine;
}

namespace {

std::vector<Context> restrict_windows(std::vector<Context> contexts,
                                      const std::unordered_set<std::size_t>& excluded) {
  if (excluded.empty()) return contexts;
  std::vector<Context> kept;
  for (Context& c : contexts) {
    if (excluded.contains(c.center())) continue;
    std::erase_if(c.sentences, [&](std::size_t s) { return excluded.contains(s); });
    c.id = kept.size();
    kept.push_back(std::move(c));
  }
  return kept;
}

FeatureList keys_of(const std::vector<std::pair<std::size_t, double>>& weighted) {
  FeatureList out;
  out.reserve(weighted.size());
  for (const auto& [index, w] : weighted) out.push_back(static_cast<Eigen::Index>(index));
  return out;
}

}  // namespace

TrainingRun train(std::span<const Sentence> corpus, const SenseInventory& inventory,
                  const PipelineConfig& config, const TrainOptions& options) {
  config.validate();
  validate_inventory(inventory);
  const CorpusStats stats = corpus_stats(corpus);

  TrainingRun run;
  std::vector<Context> originals =
      restrict_windows(extract_contexts(corpus, inventory.target, config.window), options.excluded_sentences);
  if (originals.empty()) {
    throw Error("cli", "target '" + inventory.target + "' does not occur in the training corpus");
  }

  FeedbackConfig fb_config;
  fb_config.high_freq_cutoff = config.toy_mode ? 0.0 : config.high_freq_cutoff;
  fb_config.window = config.window;
  fb_config.excluded_sentences = options.excluded_sentences;
  run.feedback = build_feedback_sets(corpus, inventory, stats, fb_config);

  std::vector<const Context*> training;
  for (const Context& c : originals) training.push_back(&c);
  for (const Context& c : run.feedback.contexts) training.push_back(&c);
  const FactorTable factors = compute_factors(corpus, stats, training, config.pos_weights);

  FeatureConfig feature_config;
  feature_config.min_count = config.min_feature_count;
  feature_config.weight_threshold = config.weight_threshold;
  feature_config.filters_enabled = !config.toy_mode;
  feature_config.stop_stems.push_back(inventory.target);
  for (const LexemeFactors& lex : factors.lexemes) {
    if (lex.pos == PartOfSpeech::Other) feature_config.stop_stems.push_back(lex.stem);
  }
  Model& model = run.model;
  model.config = config;
  model.inventory = inventory;
  model.features = select_features(factors, feature_config);
  const WeightScheme scheme = config.weight_scheme();

  SimilarityProblem<double> problem;
  problem.vocabulary_size = static_cast<Eigen::Index>(model.features.size());
  for (const LexemeFactors& lex : model.features.retained) {
    problem.frequencies.push_back(static_cast<double>(lex.corpus_freq));
  }

  for (Context& c : originals) {
    std::vector<std::pair<std::size_t, double>> weighted;
    try {
      weighted = weigh_context(materialize(c, corpus), model.features, scheme);
    } catch (const Error&) {
      ++model.summary.dropped_originals;
      continue;
    }
    WeightedContext<double> row;
    row.features = keys_of(weighted);
    for (const auto& [index, w] : weighted) row.weights.push_back(w);
    run.original_features.push_back(row.features);
    run.member_anchor.push_back(run.feedback.context_at(c.center()));
    problem.originals.push_back(std::move(row));
    run.originals.push_back(std::move(c));
  }
  if (run.originals.empty()) throw Error("cli", "no original context has a usable feature");

  // Feedback contexts keep their ids; one without usable features is an
  // empty column that attracts nothing.
  problem.feedback.resize(run.feedback.num_senses());
  for (std::size_t s = 0; s < run.feedback.num_senses(); ++s) {
    bool any = false;
    for (const Context& c : run.feedback.sense_contexts(s)) {
      FeatureList features;
      try {
        features = keys_of(weigh_context(materialize(c, corpus), model.features, scheme));
      } catch (const Error&) {
      }
      any = any || !features.empty();
      run.anchor_features.push_back(features);
      run.anchor_sense.push_back(s);
      problem.feedback[s].push_back(std::move(features));
    }
    if (!any) {
      throw Error("cli", "sense '" + inventory.senses[s].id + "' has no feedback context with usable features");
    }
  }

  EngineConfig engine_config = config.engine_config();
  engine_config.record_history = options.record_history;
  run.engine = run_iterations(engine_config, problem);
  run.assignment = tag_original_contexts(run.engine.sentences, run.member_anchor);
  model.clusters = build_usage_clusters(run.assignment, run.engine.words, run.anchor_features,
                                        run.anchor_sense, run.original_features);
  model.words = run.engine.words;

  model.summary.originals = run.originals.size();
  for (std::size_t s = 0; s < run.feedback.num_senses(); ++s) {
    model.summary.feedback_sizes.push_back(run.feedback.sense_size(s));
  }
  model.summary.iterations = run.engine.trace.iteration_count();
  model.summary.converged = run.engine.trace.converged;
  return run;
}

std::vector<UsageCluster> TrainingRun::clusters_at(std::size_t iteration) const {
  if (iteration == 0) throw Error("cli", "iterations are numbered from 1");
  if (iteration > engine.history.size()) {
    if (iteration <= engine.trace.iteration_count()) throw Error("cli", "iteration history was not recorded");
    return model.clusters;  // converged earlier; later iterations equal the last
  }
  const EngineSnapshot<double>& snap = engine.history[iteration - 1];
  const SenseAssignment tags = tag_original_contexts(snap.sentences, member_anchor);
  return build_usage_clusters(tags, snap.words, anchor_features, anchor_sense, original_features);
}

std::vector<std::pair<std::size_t, double>> weigh_for_model(const Model& model, const ContextTokens& context) {
  return weigh_context(context, model.features, model.config.weight_scheme());
}

Classification classify_with(const Model& model, std::span<const UsageCluster> clusters,
                             const ContextTokens& context) {
  std::vector<std::pair<std::size_t, double>> weighted;
  try {
    weighted = weigh_for_model(model, context);
  } catch (const Error&) {
    throw Error("sense_tagger", "unclassifiable context: no retained features");
  }
  return classify_context(weighted, clusters, model.inventory.senses.size());
}

Classification classify(const Model& model, const ContextTokens& context) {
  return classify_with(model, model.clusters, context);
}

Classification classify_line(const Model& model, std::string_view line) {
  const std::vector<Sentence> sentences = tokenize_and_stem(line, model.config.input_mode);
  ContextTokens tokens;
  tokens.target_offset = std::numeric_limits<std::size_t>::max();
  for (const Sentence& s : sentences) {
    for (const Token& t : s.tokens) {
      if (t.stem == model.inventory.target && tokens.target_offset == std::numeric_limits<std::size_t>::max()) {
        tokens.target_offset = tokens.tokens.size();
      }
      tokens.tokens.push_back(&t);
    }
  }
  return classify(model, tokens);
}

std::string trace_csv(const TrainingRun& run) {
  std::ostringstream out;
  out.precision(17);
  out << "iteration,item_kind,item_id,max_increase,frozen\n";
  for (const IterationRecord<double>& record : run.engine.trace.iterations) {
    for (const RowUpdate<double>& u : record.updates) {
      out << record.iteration << ',';
      if (u.kind == ItemKind::Word) {
        out << "word," << run.model.features.retained[static_cast<std::size_t>(u.item)].stem;
      } else {
        out << "sentence,o" << run.originals[static_cast<std::size_t>(u.item)].id;
      }
      out << ',' << u.max_increase << ',' << (u.frozen ? 1 : 0) << '\n';
    }
  }
  return out.str();
}

}  // namespace simwsd
