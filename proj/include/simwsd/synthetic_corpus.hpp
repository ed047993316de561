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

#ifndef SIMWSD_SYNTHETIC_CORPUS_HPP_
#define SIMWSD_SYNTHETIC_CORPUS_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace simwsd {

// Two-topic tagged corpus for pseudo-word evaluation. Topic words are drawn
// with Zipf-like frequencies from two disjoint 30-word vocabularies, one per
// key word; background sentences come from two further topics; function words
// and a handful of general words are shared by all sentences.
struct SyntheticCorpusConfig {
  std::size_t contexts_per_topic = 60;           // sentences holding the key word
  std::size_t topic_sentences_per_topic = 60;    // topical sentences without it
  std::size_t background_sentences = 240;
  std::size_t topic_words_per_sentence = 4;
  std::size_t sentences_per_document = 5;
  std::uint64_t seed = 20260214;
};

struct SyntheticCorpus {
  std::string text;  // tagged corpus format
  std::string w1 = "banana";
  std::string w2 = "drug";
  std::vector<std::string> definitions1;  // surface words
  std::vector<std::string> definitions2;
  std::vector<std::string> topic1;        // topic vocabularies, surface words
  std::vector<std::string> topic2;
  std::string inventory_json;             // senses w1 and w2
};

SyntheticCorpus generate_two_topic_corpus(const SyntheticCorpusConfig& config = {});

// Uniform double in [0, 1) from the top 53 bits; independent of the standard
// library's distribution implementations.
double unit_uniform(std::uint64_t raw);

}  // namespace simwsd

#endif  // SIMWSD_SYNTHETIC_CORPUS_HPP_
