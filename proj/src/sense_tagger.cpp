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

#include "simwsd/sense_tagger.hpp"

#include <algorithm>
#include <map>

#include "simwsd/error.hpp"

namespace simwsd {

SenseAssignment tag_original_contexts(const SentenceSimMatrices<double>& sentences,
                                      std::span<const std::optional<std::size_t>> member_anchor) {
  const Eigen::Index n_orig = sentences.block_size(0);
  const std::size_t num_senses = sentences.num_blocks() - 1;
  if (static_cast<Eigen::Index>(member_anchor.size()) != n_orig) {
    throw Error("sense_tagger", "membership list does not match the original contexts");
  }
  const auto sense_of_column = [&](Eigen::Index column) {
    std::size_t s = 0;
    while (column >= sentences.block_begin(s + 2)) ++s;
    return s;
  };

  // Fallback for unattracted rows: the sense with the largest feedback set.
  std::size_t majority = 0;
  for (std::size_t s = 1; s < num_senses; ++s) {
    if (sentences.block_size(s + 1) > sentences.block_size(majority + 1)) majority = s;
  }

  SenseAssignment out;
  out.contexts.reserve(static_cast<std::size_t>(n_orig));
  for (Eigen::Index r = 0; r < n_orig; ++r) {
    TaggedContext tag;
    tag.context = static_cast<std::size_t>(r);
    if (const auto& anchor = member_anchor[r]) {
      const Eigen::Index column = n_orig + static_cast<Eigen::Index>(*anchor);
      tag.sense = sense_of_column(column);
      tag.anchor = *anchor;
      tag.score = sentences(r, column);
      tag.direct = true;
      out.contexts.push_back(tag);
      continue;
    }
    // Columns are ordered by sense then context id, so the first maximum is
    // the lowest sense and lowest anchor.
    double best = 0.0;
    std::optional<Eigen::Index> best_column;
    bool tied = false;
    for (SparseRowMatrix<double>::InnerIterator it(sentences.values, r); it; ++it) {
      if (it.col() < n_orig) continue;
      if (it.value() > best) {
        best = it.value();
        best_column = it.col();
        tied = false;
      } else if (best_column && it.value() == best) {
        tied = true;
      }
    }
    if (!best_column) {
      tag.sense = majority;
      tag.unattracted = true;
    } else {
      tag.sense = sense_of_column(*best_column);
      tag.anchor = static_cast<std::size_t>(*best_column - n_orig);
      tag.score = best;
      tag.tied = tied;
    }
    out.contexts.push_back(tag);
  }
  return out;
}

std::vector<UsageCluster> build_usage_clusters(const SenseAssignment& assignment,
                                               const WordSimMatrix<double>& words,
                                               std::span<const FeatureList> anchor_features,
                                               std::span<const std::size_t> anchor_sense,
                                               std::span<const FeatureList> original_features) {
  std::map<std::size_t, std::vector<std::size_t>> by_anchor;
  for (const TaggedContext& tag : assignment.contexts) {
    if (tag.anchor) by_anchor[*tag.anchor].push_back(tag.context);
  }

  const Eigen::SparseMatrix<double, Eigen::ColMajor, Eigen::Index> by_column = words.values;
  const Eigen::Index vocab = words.size();
  std::vector<UsageCluster> clusters;
  clusters.reserve(by_anchor.size());
  std::vector<char> in_cluster(static_cast<std::size_t>(vocab));
  for (auto& [anchor, members] : by_anchor) {
    if (anchor >= anchor_features.size()) throw Error("sense_tagger", "anchor id out of range");
    UsageCluster cluster;
    cluster.sense = anchor_sense[anchor];
    cluster.anchor = anchor;
    std::sort(members.begin(), members.end());
    cluster.members = members;

    std::fill(in_cluster.begin(), in_cluster.end(), 0);
    for (Eigen::Index w : anchor_features[anchor]) in_cluster[w] = 1;
    for (std::size_t r : members) {
      for (Eigen::Index w : original_features[r]) in_cluster[w] = 1;
    }
    cluster.affinity = Eigen::VectorXd::Zero(vocab);
    for (Eigen::Index wi = 0; wi < vocab; ++wi) {
      if (!in_cluster[wi]) continue;
      for (decltype(by_column)::InnerIterator it(by_column, wi); it; ++it) {
        cluster.affinity(it.row()) = std::max(cluster.affinity(it.row()), it.value());
      }
    }
    clusters.push_back(std::move(cluster));
  }
  return clusters;
}

Classification classify_context(std::span<const std::pair<std::size_t, double>> weighted,
                                std::span<const UsageCluster> clusters, std::size_t num_senses) {
  if (weighted.empty()) throw Error("sense_tagger", "unclassifiable context: no retained features");
  Classification out;
  out.sense_scores.assign(num_senses, 0.0);
  out.cluster_scores.reserve(clusters.size());
  for (const UsageCluster& cluster : clusters) {
    double score = 0.0;
    for (const auto& [feature, weight] : weighted) {
      if (static_cast<Eigen::Index>(feature) < cluster.affinity.size()) {
        score += weight * cluster.affinity(static_cast<Eigen::Index>(feature));
      }
    }
    out.cluster_scores.push_back(score);
    if (cluster.sense < num_senses) {
      out.sense_scores[cluster.sense] = std::max(out.sense_scores[cluster.sense], score);
    }
  }
  out.winner = static_cast<std::size_t>(
      std::max_element(out.sense_scores.begin(), out.sense_scores.end()) - out.sense_scores.begin());
  return out;
}

}  // namespace simwsd
