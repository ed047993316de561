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

#include "simwsd/synthetic_corpus.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "json.hpp"
#include "simwsd/error.hpp"

namespace simwsd {

namespace {

struct Word {
  const char* surface;
  char pos;
};

// Zipf rank order.
constexpr Word kFruit[] = {
    {"fruit", 'N'},     {"eat", 'V'},        {"ripe", 'A'},      {"peel", 'N'},     {"apple", 'N'},
    {"orchard", 'N'},   {"sweet", 'A'},      {"juice", 'N'},     {"taste", 'V'},    {"tree", 'N'},
    {"orange", 'N'},    {"harvest", 'N'},    {"basket", 'N'},    {"yellow", 'A'},   {"grocer", 'N'},
    {"smoothie", 'N'},  {"slice", 'V'},      {"sugar", 'N'},     {"vitamin", 'N'},  {"breakfast", 'N'},
    {"plantation", 'N'}, {"bunch", 'N'},     {"mango", 'N'},     {"dessert", 'N'},  {"blend", 'V'},
    {"ripen", 'V'},     {"potassium", 'N'},  {"snack", 'N'},     {"cherry", 'N'},   {"pineapple", 'N'}};

constexpr Word kMedicine[] = {
    {"patient", 'N'},     {"doctor", 'N'},   {"medical", 'A'},     {"dose", 'N'},       {"treat", 'V'},
    {"pill", 'N'},        {"clinical", 'A'}, {"prescription", 'N'}, {"hospital", 'N'},  {"therapy", 'N'},
    {"symptom", 'N'},     {"prescribe", 'V'}, {"nurse", 'N'},      {"tablet", 'N'},     {"chronic", 'A'},
    {"pharmacy", 'N'},    {"vaccine", 'N'},  {"cure", 'V'},        {"infection", 'N'},  {"surgeon", 'N'},
    {"insulin", 'N'},     {"dosage", 'N'},   {"inject", 'V'},      {"pharmacist", 'N'}, {"antibiotic", 'N'},
    {"ailment", 'N'},     {"heal", 'V'},     {"painkiller", 'N'},  {"remedy", 'N'},     {"sick", 'A'}};

constexpr Word kFinance[] = {
    {"market", 'N'},   {"stock", 'N'},     {"investor", 'N'}, {"price", 'N'},   {"bank", 'N'},
    {"trade", 'V'},    {"profit", 'N'},    {"share", 'N'},    {"bond", 'N'},    {"fund", 'N'},
    {"rise", 'V'},     {"quarter", 'N'},   {"earnings", 'N'}, {"dividend", 'N'}, {"economic", 'A'},
    {"loan", 'N'},     {"rate", 'N'},      {"fiscal", 'A'},   {"merger", 'N'},  {"broker", 'N'},
    {"sell", 'V'},     {"buy", 'V'},       {"revenue", 'N'},  {"debt", 'N'},    {"currency", 'N'},
    {"inflation", 'N'}, {"tax", 'N'},      {"asset", 'N'},    {"portfolio", 'N'}, {"equity", 'N'}};

constexpr Word kSports[] = {
    {"team", 'N'},     {"game", 'N'},    {"player", 'N'},   {"coach", 'N'},     {"season", 'N'},
    {"score", 'V'},    {"league", 'N'},  {"win", 'V'},      {"match", 'N'},     {"stadium", 'N'},
    {"goal", 'N'},     {"fan", 'N'},     {"championship", 'N'}, {"ball", 'N'},  {"referee", 'N'},
    {"defeat", 'V'},   {"tournament", 'N'}, {"athlete", 'N'}, {"injury", 'N'},  {"pitch", 'N'},
    {"victory", 'N'},  {"rival", 'A'},   {"inning", 'N'},   {"trophy", 'N'},    {"sprint", 'V'},
    {"olympic", 'A'},  {"captain", 'N'}, {"roster", 'N'},   {"playoff", 'N'},   {"kick", 'V'}};

constexpr Word kGeneral[] = {{"year", 'N'}, {"people", 'N'}, {"time", 'N'}, {"say", 'V'},
                             {"make", 'V'}, {"report", 'N'}, {"week", 'N'}, {"take", 'V'},
                             {"new", 'A'},  {"good", 'A'},   {"day", 'N'},  {"group", 'N'}};

constexpr const char* kFunction[] = {"the", "a", "of", "to", "and", "in", "on", "for", "with", "that", "is", "was"};

// Definition nouns sit in the middle of each topic's frequency ranking.
constexpr std::size_t kDefinitionRanks[] = {3, 5, 7};

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : gen_(seed) {}

  double uniform() { return unit_uniform(gen_()); }
  std::size_t below(std::size_t n) { return std::min(n - 1, static_cast<std::size_t>(uniform() * static_cast<double>(n))); }

  // Index drawn with probability proportional to 1 / (rank + 1).
  std::size_t zipf(std::size_t n) {
    double total = 0.0;
    for (std::size_t r = 0; r < n; ++r) total += 1.0 / static_cast<double>(r + 1);
    double u = uniform() * total;
    for (std::size_t r = 0; r < n; ++r) {
      u -= 1.0 / static_cast<double>(r + 1);
      if (u < 0.0) return r;
    }
    return n - 1;
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 gen_;
};

std::string tagged(const Word& w) { return std::string(w.surface) + "_" + w.pos; }

template <std::size_t N>
std::vector<std::string> topical_tokens(Sampler& rng, const Word (&topic)[N], std::size_t count) {
  std::vector<std::size_t> picked;
  while (picked.size() < std::min(count, N)) {
    const std::size_t r = rng.zipf(N);
    if (std::find(picked.begin(), picked.end(), r) == picked.end()) picked.push_back(r);
  }
  std::vector<std::string> tokens;
  for (std::size_t r : picked) tokens.push_back(tagged(topic[r]));
  return tokens;
}

std::string make_sentence(Sampler& rng, std::vector<std::string> tokens) {
  tokens.push_back(tagged(kGeneral[rng.zipf(std::size(kGeneral))]));
  for (int i = 0; i < 3; ++i) tokens.push_back(std::string(kFunction[rng.below(std::size(kFunction))]) + "_O");
  rng.shuffle(tokens);
  std::string line;
  for (const std::string& t : tokens) {
    if (!line.empty()) line += ' ';
    line += t;
  }
  return line;
}

template <std::size_t N>
std::vector<std::string> surfaces(const Word (&topic)[N]) {
  std::vector<std::string> out;
  for (const Word& w : topic) out.emplace_back(w.surface);
  return out;
}

}  // namespace

double unit_uniform(std::uint64_t raw) { return static_cast<double>(raw >> 11) * 0x1.0p-53; }

SyntheticCorpus generate_two_topic_corpus(const SyntheticCorpusConfig& config) {
  if (config.topic_words_per_sentence == 0) throw Error("evaluation", "topic_words_per_sentence must be positive");
  if (config.sentences_per_document == 0) throw Error("evaluation", "sentences_per_document must be positive");
  Sampler rng(config.seed);
  SyntheticCorpus out;
  out.topic1 = surfaces(kFruit);
  out.topic2 = surfaces(kMedicine);
  for (std::size_t r : kDefinitionRanks) {
    out.definitions1.emplace_back(kFruit[r].surface);
    out.definitions2.emplace_back(kMedicine[r].surface);
  }

  const std::size_t k = config.topic_words_per_sentence;
  std::vector<std::string> lines;
  for (std::size_t i = 0; i < config.contexts_per_topic; ++i) {
    auto a = topical_tokens(rng, kFruit, k);
    a.push_back(out.w1 + "_N");
    lines.push_back(make_sentence(rng, std::move(a)));
    auto b = topical_tokens(rng, kMedicine, k);
    b.push_back(out.w2 + "_N");
    lines.push_back(make_sentence(rng, std::move(b)));
  }
  for (std::size_t i = 0; i < config.topic_sentences_per_topic; ++i) {
    lines.push_back(make_sentence(rng, topical_tokens(rng, kFruit, k)));
    lines.push_back(make_sentence(rng, topical_tokens(rng, kMedicine, k)));
  }
  for (std::size_t i = 0; i < config.background_sentences; ++i) {
    lines.push_back(make_sentence(rng, i % 2 == 0 ? topical_tokens(rng, kFinance, k) : topical_tokens(rng, kSports, k)));
  }
  rng.shuffle(lines);

  std::ostringstream text;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (i > 0 && i % config.sentences_per_document == 0) text << '\n';
    text << lines[i] << '\n';
  }
  out.text = text.str();

  nlohmann::json inv;
  inv["target"] = out.w1 + "+" + out.w2;
  inv["senses"] = nlohmann::json::array(
      {{{"id", out.w1}, {"gloss", "tropical fruit"}, {"definition_words", out.definitions1}},
       {{"id", out.w2}, {"gloss", "medicine"}, {"definition_words", out.definitions2}}});
  out.inventory_json = inv.dump(2) + "\n";
  return out;
}

}  // namespace simwsd
