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

#ifndef SIMWSD_TEXT_INGEST_HPP_
#define SIMWSD_TEXT_INGEST_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace simwsd {

enum class PartOfSpeech { Noun, Verb, Adjective, Other };

// Single-letter tag used in the corpus format: N, V, A or O.
char pos_tag(PartOfSpeech pos);
std::optional<PartOfSpeech> parse_pos_tag(char tag);

struct Token {
  std::string surface;
  std::string stem;  // lowercase, non-empty
  PartOfSpeech pos = PartOfSpeech::Other;
  std::size_t position = 0;  // index within the sentence
};

struct Sentence {
  std::size_t id = 0;      // ordinal in the corpus; equals the index in the corpus vector
  std::size_t doc_id = 0;  // ordinal of the containing document
  std::vector<Token> tokens;
};

enum class InputMode { Tagged, Plain };

// Number of adjacent sentences attached on each side of a context.
enum class ContextWindow { Sentence = 0, Adjacent = 1 };

enum class Origin { Original, Feedback, Test };

struct TokenRef {
  std::size_t sentence = 0;
  std::size_t token = 0;

  friend bool operator==(const TokenRef&, const TokenRef&) = default;
};

// One occurrence of a word together with its surrounding sentences.
struct Context {
  std::size_t id = 0;
  std::vector<std::size_t> sentences;  // ascending sentence ids, center included
  TokenRef target;                     // the occurrence word
  Origin origin = Origin::Original;
  std::optional<std::size_t> sense;    // set for Feedback contexts

  std::size_t center() const { return target.sentence; }
};

struct CorpusStats {
  std::unordered_map<std::string, std::size_t> freq;  // open-class occurrences per stem
  double max5 = 0.0;
  std::size_t total_tokens = 0;  // open-class tokens; equals the sum of freq

  std::size_t frequency(std::string_view stem) const;
};

// Parses corpus text: one sentence per line, a blank line ends a document.
// Tagged tokens are written `surface_P`; the last underscore separates the
// tag. In Plain mode every non-stopword is a Noun and stopwords are Other.
// Throws Error("text_ingest", ...) naming the line of a malformed tag.
std::vector<Sentence> tokenize_and_stem(std::string_view raw, InputMode mode);

// Lowercases ASCII letters and strips leading/trailing punctuation; returns
// an empty string when nothing is left.
std::string normalize_surface(std::string_view surface);

// Stem used for both corpus tokens and definition words.
std::string stem_word(std::string_view normalized);

bool is_stopword(std::string_view normalized);

// One context per occurrence of `target`; Adjacent windows take at most one
// neighbour on each side from the same document.
std::vector<Context> extract_contexts(std::span<const Sentence> sentences, std::string_view target,
                                      ContextWindow window);

// Throws on an empty corpus (no open-class tokens).
CorpusStats corpus_stats(std::span<const Sentence> sentences);

// A context flattened into one token sequence. A target_offset past the last
// token means the target does not occur; every token is then at distance 0.
struct ContextTokens {
  std::vector<const Token*> tokens;
  std::size_t target_offset = 0;
};

ContextTokens materialize(const Context& context, std::span<const Sentence> sentences);

}  // namespace simwsd

#endif  // SIMWSD_TEXT_INGEST_HPP_
