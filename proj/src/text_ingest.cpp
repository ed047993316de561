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

#include "simwsd/text_ingest.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <unordered_set>

#include "simwsd/error.hpp"
#include "simwsd/porter_stemmer.hpp"

namespace simwsd {
namespace detail {
extern const std::string_view kStopwordData;
}  // namespace detail

namespace {

const std::unordered_set<std::string>& stopwords() {
  static const std::unordered_set<std::string> words = [] {
    std::unordered_set<std::string> out;
    std::string_view data = detail::kStopwordData;
    while (!data.empty()) {
      const auto eol = data.find('\n');
      std::string_view line = data.substr(0, eol);
      data = eol == std::string_view::npos ? std::string_view{} : data.substr(eol + 1);
      while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.remove_suffix(1);
      if (line.empty() || line.front() == '#') continue;
      out.emplace(line);
    }
    return out;
  }();
  return words;
}

bool is_punct(char c) {
  return std::ispunct(static_cast<unsigned char>(c)) != 0;
}

std::vector<std::string_view> split_whitespace(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

}  // namespace

char pos_tag(PartOfSpeech pos) {
  switch (pos) {
    case PartOfSpeech::Noun: return 'N';
    case PartOfSpeech::Verb: return 'V';
    case PartOfSpeech::Adjective: return 'A';
    case PartOfSpeech::Other: return 'O';
  }
  return 'O';
}

std::optional<PartOfSpeech> parse_pos_tag(char tag) {
  switch (tag) {
    case 'N': return PartOfSpeech::Noun;
    case 'V': return PartOfSpeech::Verb;
    case 'A': return PartOfSpeech::Adjective;
    case 'O': return PartOfSpeech::Other;
    default: return std::nullopt;
  }
}

std::size_t CorpusStats::frequency(std::string_view stem) const {
  const auto it = freq.find(std::string(stem));
  return it == freq.end() ? 0 : it->second;
}

std::string normalize_surface(std::string_view surface) {
  std::size_t begin = 0;
  std::size_t end = surface.size();
  while (begin < end && is_punct(surface[begin])) ++begin;
  while (end > begin && is_punct(surface[end - 1])) --end;
  std::string out(surface.substr(begin, end - begin));
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

std::string stem_word(std::string_view normalized) {
  return porter_stem(normalized);
}

bool is_stopword(std::string_view normalized) {
  return stopwords().contains(std::string(normalized));
}

std::vector<Sentence> tokenize_and_stem(std::string_view raw, InputMode mode) {
  std::vector<Sentence> sentences;
  std::size_t doc_id = 0;
  bool pending_break = false;
  std::size_t line_no = 0;

  while (!raw.empty()) {
    ++line_no;
    const auto eol = raw.find('\n');
    std::string_view line = raw.substr(0, eol);
    raw = eol == std::string_view::npos ? std::string_view{} : raw.substr(eol + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    const auto pieces = split_whitespace(line);
    if (pieces.empty()) {
      pending_break = true;
      continue;
    }
    if (pending_break && !sentences.empty()) ++doc_id;
    pending_break = false;

    Sentence sentence;
    sentence.id = sentences.size();
    sentence.doc_id = doc_id;
    for (std::string_view piece : pieces) {
      Token token;
      std::string_view surface = piece;
      if (mode == InputMode::Tagged) {
        const auto underscore = piece.rfind('_');
        const std::string_view tag =
            underscore == std::string_view::npos ? std::string_view{} : piece.substr(underscore + 1);
        const auto pos = tag.size() == 1 ? parse_pos_tag(tag.front()) : std::nullopt;
        if (!pos || underscore == 0) {
          throw Error("text_ingest", "line " + std::to_string(line_no) + ": malformed tagged token '" +
                                         std::string(piece) + "' (expected surface_P with P in N,V,A,O)");
        }
        surface = piece.substr(0, underscore);
        token.pos = *pos;
      }
      std::string normalized = normalize_surface(surface);
      if (normalized.empty()) continue;
      if (mode == InputMode::Plain) {
        token.pos = is_stopword(normalized) ? PartOfSpeech::Other : PartOfSpeech::Noun;
      }
      token.surface = std::string(surface);
      token.stem = stem_word(normalized);
      token.position = sentence.tokens.size();
      sentence.tokens.push_back(std::move(token));
    }
    sentences.push_back(std::move(sentence));
  }
  return sentences;
}

std::vector<Context> extract_contexts(std::span<const Sentence> sentences, std::string_view target,
                                      ContextWindow window) {
  std::vector<Context> contexts;
  for (const Sentence& sentence : sentences) {
    for (const Token& token : sentence.tokens) {
      if (token.stem != target) continue;
      Context ctx;
      ctx.id = contexts.size();
      ctx.target = {sentence.id, token.position};
      ctx.origin = Origin::Original;
      if (window == ContextWindow::Adjacent && sentence.id > 0 &&
          sentences[sentence.id - 1].doc_id == sentence.doc_id) {
        ctx.sentences.push_back(sentence.id - 1);
      }
      ctx.sentences.push_back(sentence.id);
      if (window == ContextWindow::Adjacent && sentence.id + 1 < sentences.size() &&
          sentences[sentence.id + 1].doc_id == sentence.doc_id) {
        ctx.sentences.push_back(sentence.id + 1);
      }
      contexts.push_back(std::move(ctx));
    }
  }
  return contexts;
}

CorpusStats corpus_stats(std::span<const Sentence> sentences) {
  CorpusStats stats;
  for (const Sentence& sentence : sentences) {
    for (const Token& token : sentence.tokens) {
      if (token.pos == PartOfSpeech::Other) continue;
      ++stats.freq[token.stem];
      ++stats.total_tokens;
    }
  }
  if (stats.total_tokens == 0) {
    throw Error("text_ingest", "corpus has no open-class tokens; statistics are undefined");
  }
  std::vector<std::size_t> counts;
  counts.reserve(stats.freq.size());
  for (const auto& [stem, count] : stats.freq) counts.push_back(count);
  const std::size_t top = std::min<std::size_t>(5, counts.size());
  std::partial_sort(counts.begin(), counts.begin() + static_cast<std::ptrdiff_t>(top), counts.end(),
                    std::greater<>());
  double sum = 0.0;
  for (std::size_t i = 0; i < top; ++i) sum += static_cast<double>(counts[i]);
  stats.max5 = sum / static_cast<double>(top);
  return stats;
}

ContextTokens materialize(const Context& context, std::span<const Sentence> sentences) {
  ContextTokens out;
  for (std::size_t id : context.sentences) {
    const Sentence& sentence = sentences[id];
    if (id == context.target.sentence) out.target_offset = out.tokens.size() + context.target.token;
    for (const Token& token : sentence.tokens) out.tokens.push_back(&token);
  }
  return out;
}

}  // namespace simwsd
