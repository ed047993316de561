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

#include "simwsd/thesaurus.hpp"

#include <algorithm>
#include <unordered_map>

#include "simwsd/error.hpp"

namespace simwsd {

RelatedWordSet expand_related_words(const WordSimMatrix<double>& words, std::span<const std::string> stems,
                                    std::span<const std::string> seeds, std::size_t k, std::size_t min_new) {
  if (k < 1) throw Error("thesaurus", "k must be at least 1");
  if (static_cast<Eigen::Index>(stems.size()) != words.size()) {
    throw Error("thesaurus", "stem list does not match the word matrix");
  }
  std::unordered_map<std::string, Eigen::Index> index;
  for (std::size_t i = 0; i < stems.size(); ++i) index.emplace(stems[i], static_cast<Eigen::Index>(i));

  RelatedWordSet out;
  std::vector<std::string> frontier;
  for (const std::string& s : seeds) {
    if (out.generation.emplace(s, 0).second) {
      out.words.push_back({s, 0, 1.0});
      frontier.push_back(s);
    }
  }
  std::sort(frontier.begin(), frontier.end());

  for (std::size_t depth = 1; !frontier.empty(); ++depth) {
    std::vector<RelatedWord> added;
    for (const std::string& w : frontier) {
      const auto it = index.find(w);
      if (it == index.end()) continue;  // no row: the word never became a feature
      std::vector<std::pair<double, const std::string*>> neighbours;
      for (SparseRowMatrix<double>::InnerIterator e(words.values, it->second); e; ++e) {
        if (e.col() == it->second || !(e.value() > 0.0)) continue;
        neighbours.emplace_back(e.value(), &stems[static_cast<std::size_t>(e.col())]);
      }
      std::sort(neighbours.begin(), neighbours.end(), [](const auto& a, const auto& b) {
        return a.first != b.first ? a.first > b.first : *a.second < *b.second;
      });
      if (neighbours.size() > k) neighbours.resize(k);
      for (const auto& [sim, stem] : neighbours) {
        if (out.generation.emplace(*stem, depth).second) added.push_back({*stem, depth, sim});
      }
    }
    out.added_per_round.push_back(added.size());
    std::sort(added.begin(), added.end(), [](const RelatedWord& a, const RelatedWord& b) {
      return a.similarity != b.similarity ? a.similarity > b.similarity : a.stem < b.stem;
    });
    frontier.clear();
    for (const RelatedWord& r : added) {
      frontier.push_back(r.stem);
      out.words.push_back(r);
    }
    std::sort(frontier.begin(), frontier.end());
    if (added.size() < min_new) break;
  }
  return out;
}

RelatedWordSet related_words(const Model& model, std::string_view sense_id, std::size_t k, std::size_t min_new) {
  const auto sense = model.inventory.index_of(sense_id);
  if (!sense) throw Error("thesaurus", "unknown sense '" + std::string(sense_id) + "'");
  std::vector<std::string> stems;
  for (const LexemeFactors& f : model.features.retained) stems.push_back(f.stem);
  RelatedWordSet out =
      expand_related_words(model.words, stems, model.inventory.senses[*sense].definition_nouns, k, min_new);
  out.sense = std::string(sense_id);
  return out;
}

std::string format_related_words(const RelatedWordSet& set) {
  std::string line = set.sense;
  for (const RelatedWord& w : set.words) line += "\t" + w.stem;
  return line + "\n";
}

}  // namespace simwsd
