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

#ifndef SIMWSD_SENSE_TAGGER_HPP_
#define SIMWSD_SENSE_TAGGER_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "simwsd/similarity_engine.hpp"

namespace simwsd {

struct TaggedContext {
  std::size_t context = 0;            // original row
  std::size_t sense = 0;
  std::optional<std::size_t> anchor;  // feedback context id (flat, across senses)
  double score = 0.0;
  bool direct = false;       // the context itself belongs to a feedback set
  bool unattracted = false;  // zero similarity to every feedback context
  bool tied = false;         // another anchor reached the same score
};

struct SenseAssignment {
  std::vector<TaggedContext> contexts;  // one per original row, in row order
};

// Assigns each original the sense of its most similar feedback context.
// `member_anchor[r]` names the feedback context that original r itself is,
// when it belongs to a feedback set. Blocks 1.. of `sentences` are the senses.
SenseAssignment tag_original_contexts(const SentenceSimMatrices<double>& sentences,
                                      std::span<const std::optional<std::size_t>> member_anchor);

struct UsageCluster {
  std::size_t sense = 0;
  std::size_t anchor = 0;             // feedback context id
  std::vector<std::size_t> members;   // original rows, ascending
  Eigen::VectorXd affinity;           // per feature: max over cluster sentences and their words
};

// Groups attracted originals by anchor. `anchor_features[f]` and
// `original_features[r]` are the feature sets of feedback context f and
// original r; `anchor_sense[f]` its sense.
std::vector<UsageCluster> build_usage_clusters(const SenseAssignment& assignment,
                                               const WordSimMatrix<double>& words,
                                               std::span<const FeatureList> anchor_features,
                                               std::span<const std::size_t> anchor_sense,
                                               std::span<const FeatureList> original_features);

struct Classification {
  std::vector<double> sense_scores;    // per sense
  std::vector<double> cluster_scores;  // parallel to the cluster list
  std::size_t winner = 0;
};

// Scores a weighted context against every cluster; a sense scores the best of
// its clusters. Ties go to the lower sense index. Throws on an empty context.
Classification classify_context(std::span<const std::pair<std::size_t, double>> weighted,
                                std::span<const UsageCluster> clusters, std::size_t num_senses);

}  // namespace simwsd

#endif  // SIMWSD_SENSE_TAGGER_HPP_
