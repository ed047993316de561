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

#ifndef SIMWSD_SENSE_INVENTORY_HPP_
#define SIMWSD_SENSE_INVENTORY_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "simwsd/text_ingest.hpp"

namespace simwsd {

struct Sense {
  std::string id;
  std::string gloss;
  std::vector<std::string> definition_nouns;  // sorted, unique stems
};

struct SenseInventory {
  std::string target;  // stem
  std::vector<Sense> senses;

  std::optional<std::size_t> index_of(std::string_view sense_id) const;
};

// Parses the JSON inventory format
//   {"target": "suit", "senses": [{"id": "...", "gloss": "...",
//                                  "definition_words": ["court", ...]}]}
// Definition words are normalized and stemmed. A word may carry a `_P` tag;
// only nouns are kept, and untagged words are taken to be nouns.
SenseInventory parse_inventory(std::string_view json_text);

// Checks the structural invariants of an inventory (at least two senses,
// unique ids, non-empty definitions).
void validate_inventory(const SenseInventory& inventory);

struct FeedbackConfig {
  // A definition noun is dropped when freq > high_freq_cutoff * max5. A value
  // <= 0 disables the cutoff.
  double high_freq_cutoff = 0.5;
  ContextWindow window = ContextWindow::Sentence;
  // Sentences removed from training entirely (held-out evaluation folds).
  std::unordered_set<std::size_t> excluded_sentences;
};

enum class NounDropReason { HighFrequency, SharedAcrossSenses, IsTarget };

std::string_view to_string(NounDropReason reason);

struct FeedbackSets {
  // Feedback contexts of all senses, grouped by sense in inventory order.
  // contexts[i].id == i and contexts[i].sense is set.
  std::vector<Context> contexts;
  // contexts of sense s are [sense_offsets[s], sense_offsets[s + 1]).
  std::vector<std::size_t> sense_offsets;
  std::map<std::size_t, std::string> seed_word_map;  // feedback context id -> admitting noun
  std::vector<std::vector<std::string>> seed_nouns;  // surviving definition nouns per sense
  std::map<std::string, NounDropReason> dropped_nouns;
  std::size_t discarded_contexts = 0;  // sentences that fell into two senses

  std::size_t num_senses() const { return seed_nouns.size(); }
  std::span<const Context> sense_contexts(std::size_t sense) const;
  std::size_t sense_size(std::size_t sense) const;
  // Feedback context whose center is `sentence_id`, if any.
  std::optional<std::size_t> context_at(std::size_t sentence_id) const;

  std::unordered_map<std::size_t, std::size_t> by_center;
};

// Collects every context of every surviving definition noun of each sense.
// Throws Error("sense_inventory", ...) when a sense ends up empty.
FeedbackSets build_feedback_sets(std::span<const Sentence> corpus, const SenseInventory& inventory,
                                 const CorpusStats& stats, const FeedbackConfig& config);

}  // namespace simwsd

#endif  // SIMWSD_SENSE_INVENTORY_HPP_
