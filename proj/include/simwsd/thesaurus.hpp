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

#ifndef SIMWSD_THESAURUS_HPP_
#define SIMWSD_THESAURUS_HPP_

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "simwsd/pipeline.hpp"

namespace simwsd {

struct RelatedWord {
  std::string stem;
  std::size_t depth = 0;
  double similarity = 1.0;  // to the word that brought it in; 1 for seeds
};

struct RelatedWordSet {
  std::string sense;
  std::vector<RelatedWord> words;            // ordered by depth, then similarity, then stem
  std::map<std::string, std::size_t> generation;
  std::vector<std::size_t> added_per_round;  // round 1 onwards

  bool contains(std::string_view stem) const { return generation.contains(std::string(stem)); }
};

// Grows R from `seeds` through the k nearest neighbours (by the word
// matrix, self excluded, ties by stem) of each word added in the previous
// round. Stops after the first round that adds fewer than `min_new` words.
RelatedWordSet expand_related_words(const WordSimMatrix<double>& words, std::span<const std::string> stems,
                                    std::span<const std::string> seeds, std::size_t k, std::size_t min_new = 1);

// Seeds are the definition nouns of `sense_id`. Throws on an unknown sense.
RelatedWordSet related_words(const Model& model, std::string_view sense_id, std::size_t k, std::size_t min_new = 1);

// sense<TAB>stem<TAB>stem...
std::string format_related_words(const RelatedWordSet& set);

}  // namespace simwsd

#endif  // SIMWSD_THESAURUS_HPP_
