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

#include "simwsd/sense_inventory.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "json.hpp"
#include "simwsd/error.hpp"

namespace simwsd {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& message) { throw Error("sense_inventory", message); }

std::string required_string(const json& obj, const char* key, const std::string& where) {
  const auto it = obj.find(key);
  if (it == obj.end() || !it->is_string()) fail(where + ": missing string field '" + key + "'");
  return it->get<std::string>();
}

// Splits a definition entry into words and keeps the stems of its nouns.
void add_definition_words(std::string_view entry, std::set<std::string>& nouns) {
  std::size_t i = 0;
  while (i < entry.size()) {
    while (i < entry.size() && std::isspace(static_cast<unsigned char>(entry[i]))) ++i;
    const std::size_t start = i;
    while (i < entry.size() && !std::isspace(static_cast<unsigned char>(entry[i]))) ++i;
    if (i == start) continue;
    std::string_view word = entry.substr(start, i - start);
    const auto underscore = word.rfind('_');
    if (underscore != std::string_view::npos && underscore + 2 == word.size()) {
      const auto pos = parse_pos_tag(word.back());
      if (pos) {
        if (*pos != PartOfSpeech::Noun) continue;
        word = word.substr(0, underscore);
      }
    }
    const std::string normalized = normalize_surface(word);
    if (normalized.empty() || is_stopword(normalized)) continue;
    nouns.insert(stem_word(normalized));
  }
}

}  // namespace

std::optional<std::size_t> SenseInventory::index_of(std::string_view sense_id) const {
  for (std::size_t i = 0; i < senses.size(); ++i) {
    if (senses[i].id == sense_id) return i;
  }
  return std::nullopt;
}

void validate_inventory(const SenseInventory& inventory) {
  if (inventory.target.empty()) fail("inventory target is empty");
  if (inventory.senses.size() < 2) {
    fail("inventory for '" + inventory.target + "' has " + std::to_string(inventory.senses.size()) +
         " sense(s); at least 2 are required");
  }
  std::set<std::string> ids;
  for (const Sense& sense : inventory.senses) {
    if (sense.id.empty()) fail("sense with empty id");
    if (!ids.insert(sense.id).second) fail("duplicate sense id '" + sense.id + "'");
    if (sense.definition_nouns.empty()) {
      fail("sense '" + sense.id + "' has no definition nouns after filtering");
    }
  }
}

SenseInventory parse_inventory(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    fail(std::string("invalid inventory JSON: ") + e.what());
  }
  if (!doc.is_object()) fail("inventory must be a JSON object");

  SenseInventory inventory;
  const std::string target = required_string(doc, "target", "inventory");
  inventory.target = stem_word(normalize_surface(target));

  const auto senses = doc.find("senses");
  if (senses == doc.end() || !senses->is_array()) fail("inventory: missing array field 'senses'");
  for (std::size_t i = 0; i < senses->size(); ++i) {
    const json& entry = (*senses)[i];
    const std::string where = "senses[" + std::to_string(i) + "]";
    if (!entry.is_object()) fail(where + " must be an object");
    Sense sense;
    sense.id = required_string(entry, "id", where);
    if (const auto gloss = entry.find("gloss"); gloss != entry.end() && gloss->is_string()) {
      sense.gloss = gloss->get<std::string>();
    }
    const auto words = entry.find("definition_words");
    if (words == entry.end() || !words->is_array()) {
      fail(where + ": missing array field 'definition_words'");
    }
    std::set<std::string> nouns;
    for (const json& word : *words) {
      if (!word.is_string()) fail(where + ": definition_words must be strings");
      add_definition_words(word.get<std::string>(), nouns);
    }
    sense.definition_nouns.assign(nouns.begin(), nouns.end());
    inventory.senses.push_back(std::move(sense));
  }
  validate_inventory(inventory);
  return inventory;
}

std::string_view to_string(NounDropReason reason) {
  switch (reason) {
    case NounDropReason::HighFrequency: return "high-frequency";
    case NounDropReason::SharedAcrossSenses: return "shared-across-senses";
    case NounDropReason::IsTarget: return "is-target";
  }
  return "unknown";
}

std::span<const Context> FeedbackSets::sense_contexts(std::size_t sense) const {
  return std::span<const Context>(contexts).subspan(sense_offsets[sense],
                                                    sense_offsets[sense + 1] - sense_offsets[sense]);
}

std::size_t FeedbackSets::sense_size(std::size_t sense) const {
  return sense_offsets[sense + 1] - sense_offsets[sense];
}

std::optional<std::size_t> FeedbackSets::context_at(std::size_t sentence_id) const {
  const auto it = by_center.find(sentence_id);
  if (it == by_center.end()) return std::nullopt;
  return it->second;
}

FeedbackSets build_feedback_sets(std::span<const Sentence> corpus, const SenseInventory& inventory,
                                 const CorpusStats& stats, const FeedbackConfig& config) {
  const std::size_t k = inventory.senses.size();
  FeedbackSets out;
  out.seed_nouns.resize(k);

  std::map<std::string, std::set<std::size_t>> noun_senses;
  for (std::size_t s = 0; s < k; ++s) {
    for (const std::string& noun : inventory.senses[s].definition_nouns) noun_senses[noun].insert(s);
  }
  const double cutoff = config.high_freq_cutoff > 0 ? config.high_freq_cutoff * stats.max5 : -1.0;
  std::unordered_map<std::string, std::size_t> seed_sense;
  for (const auto& [noun, senses] : noun_senses) {
    if (senses.size() > 1) {
      out.dropped_nouns.emplace(noun, NounDropReason::SharedAcrossSenses);
    } else if (noun == inventory.target) {
      out.dropped_nouns.emplace(noun, NounDropReason::IsTarget);
    } else if (cutoff >= 0 && static_cast<double>(stats.frequency(noun)) > cutoff) {
      out.dropped_nouns.emplace(noun, NounDropReason::HighFrequency);
    } else {
      seed_sense.emplace(noun, *senses.begin());
      out.seed_nouns[*senses.begin()].push_back(noun);
    }
  }

  // First admitting occurrence per (sentence, sense).
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> hits(k);  // (sentence, token)
  for (const Sentence& sentence : corpus) {
    if (config.excluded_sentences.contains(sentence.id)) continue;
    std::vector<std::optional<std::size_t>> first(k);
    std::size_t senses_hit = 0;
    for (const Token& token : sentence.tokens) {
      const auto it = seed_sense.find(token.stem);
      if (it == seed_sense.end()) continue;
      auto& slot = first[it->second];
      if (!slot) {
        slot = token.position;
        ++senses_hit;
      }
    }
    if (senses_hit == 0) continue;
    if (senses_hit > 1) {
      ++out.discarded_contexts;
      continue;
    }
    for (std::size_t s = 0; s < k; ++s) {
      if (first[s]) hits[s].emplace_back(sentence.id, *first[s]);
    }
  }

  out.sense_offsets.push_back(0);
  for (std::size_t s = 0; s < k; ++s) {
    if (hits[s].empty()) {
      fail("feedback set for sense '" + inventory.senses[s].id + "' is empty after filtering");
    }
    for (const auto& [sentence_id, token_index] : hits[s]) {
      Context ctx;
      ctx.id = out.contexts.size();
      ctx.target = {sentence_id, token_index};
      ctx.origin = Origin::Feedback;
      ctx.sense = s;
      const Sentence& sentence = corpus[sentence_id];
      if (config.window == ContextWindow::Adjacent && sentence_id > 0 &&
          corpus[sentence_id - 1].doc_id == sentence.doc_id &&
          !config.excluded_sentences.contains(sentence_id - 1)) {
        ctx.sentences.push_back(sentence_id - 1);
      }
      ctx.sentences.push_back(sentence_id);
      if (config.window == ContextWindow::Adjacent && sentence_id + 1 < corpus.size() &&
          corpus[sentence_id + 1].doc_id == sentence.doc_id &&
          !config.excluded_sentences.contains(sentence_id + 1)) {
        ctx.sentences.push_back(sentence_id + 1);
      }
      out.seed_word_map.emplace(ctx.id, sentence.tokens[token_index].stem);
      out.by_center.emplace(sentence_id, ctx.id);
      out.contexts.push_back(std::move(ctx));
    }
    out.sense_offsets.push_back(out.contexts.size());
  }
  return out;
}

}  // namespace simwsd
