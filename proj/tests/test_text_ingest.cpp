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

#include <gtest/gtest.h>

#include <string>

#include "simwsd/error.hpp"
#include "simwsd/text_ingest.hpp"
#include "support/fixtures.hpp"

namespace simwsd {
namespace {

TEST(Tokenize, ParsesTaggedTokens) {
  const auto s = tokenize_and_stem("eat_V banana_N", InputMode::Tagged);
  ASSERT_EQ(s.size(), 1u);
  ASSERT_EQ(s[0].tokens.size(), 2u);
  EXPECT_EQ(s[0].tokens[0].stem, "eat");
  EXPECT_EQ(s[0].tokens[0].pos, PartOfSpeech::Verb);
  EXPECT_EQ(s[0].tokens[0].position, 0u);
  EXPECT_EQ(s[0].tokens[1].stem, "banana");
  EXPECT_EQ(s[0].tokens[1].pos, PartOfSpeech::Noun);
  EXPECT_EQ(s[0].tokens[1].position, 1u);
}

TEST(Tokenize, EmptyInputGivesNoSentences) {
  EXPECT_TRUE(tokenize_and_stem("", InputMode::Tagged).empty());
  EXPECT_TRUE(tokenize_and_stem("", InputMode::Plain).empty());
}

TEST(Tokenize, PlainModeSharesStemsAcrossInflections) {
  const auto s = tokenize_and_stem("Drugs drug", InputMode::Plain);
  ASSERT_EQ(s.size(), 1u);
  ASSERT_EQ(s[0].tokens.size(), 2u);
  EXPECT_EQ(s[0].tokens[0].stem, stem_word("drugs"));
  EXPECT_EQ(s[0].tokens[0].stem, s[0].tokens[1].stem);
  EXPECT_EQ(s[0].tokens[0].position, 0u);
  EXPECT_EQ(s[0].tokens[1].position, 1u);
}

TEST(Tokenize, PlainModeTagsStopwordsAsOther) {
  const auto s = tokenize_and_stem("The doctor gave the pill", InputMode::Plain);
  ASSERT_EQ(s[0].tokens.size(), 5u);
  EXPECT_EQ(s[0].tokens[0].pos, PartOfSpeech::Other);
  EXPECT_EQ(s[0].tokens[1].pos, PartOfSpeech::Noun);
  EXPECT_EQ(s[0].tokens[3].pos, PartOfSpeech::Other);
}

TEST(Tokenize, MalformedTagNamesTheLine) {
  try {
    tokenize_and_stem("eat_V banana_N\n\ntaste_X apple_N\n", InputMode::Tagged);
    FAIL() << "expected a parse error";
  } catch (const Error& e) {
    EXPECT_EQ(e.module(), "text_ingest");
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
  EXPECT_THROW(tokenize_and_stem("banana", InputMode::Tagged), Error);
  EXPECT_THROW(tokenize_and_stem("_N", InputMode::Tagged), Error);
}

TEST(Tokenize, LastUnderscoreSeparatesTheTag) {
  const auto s = tokenize_and_stem("new_york_N", InputMode::Tagged);
  ASSERT_EQ(s[0].tokens.size(), 1u);
  EXPECT_EQ(s[0].tokens[0].pos, PartOfSpeech::Noun);
  EXPECT_EQ(s[0].tokens[0].surface, "new_york");
}

TEST(Tokenize, BlankLinesSeparateDocuments) {
  const auto s = tokenize_and_stem("a_N\nb_N\n\n\nc_N\n\nd_N\n", InputMode::Tagged);
  ASSERT_EQ(s.size(), 4u);
  EXPECT_EQ(s[0].doc_id, 0u);
  EXPECT_EQ(s[1].doc_id, 0u);
  EXPECT_EQ(s[2].doc_id, 1u);
  EXPECT_EQ(s[3].doc_id, 2u);
  for (std::size_t i = 0; i < s.size(); ++i) EXPECT_EQ(s[i].id, i);
}

TEST(Tokenize, StemsAreLowercaseAndNonEmpty) {
  const auto s = tokenize_and_stem("Banana_N ,_O EATING_V \"Apples\"_N", InputMode::Tagged);
  for (const Token& t : s[0].tokens) {
    EXPECT_FALSE(t.stem.empty());
    for (char c : t.stem) EXPECT_FALSE(c >= 'A' && c <= 'Z');
  }
  EXPECT_EQ(s[0].tokens[0].stem, "banana");
}

TEST(Tokenize, IsDeterministic) {
  const std::string text = "Eat_V bananas_N\ntaste_V apples_N\n\nthe_O market_N";
  const auto a = tokenize_and_stem(text, InputMode::Tagged);
  const auto b = tokenize_and_stem(text, InputMode::Tagged);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    ASSERT_EQ(a[i].tokens.size(), b[i].tokens.size());
    for (std::size_t j = 0; j < a[i].tokens.size(); ++j) {
      EXPECT_EQ(a[i].tokens[j].stem, b[i].tokens[j].stem);
      EXPECT_EQ(a[i].tokens[j].pos, b[i].tokens[j].pos);
    }
  }
}

TEST(ExtractContexts, OneContextPerOccurrence) {
  const auto s = tokenize_and_stem("drug_N a_O\nthe_O drug_N\nx_N\ndrug_N y_N", InputMode::Tagged);
  const auto c = extract_contexts(s, "drug", ContextWindow::Sentence);
  ASSERT_EQ(c.size(), 3u);
  for (const Context& ctx : c) {
    EXPECT_EQ(ctx.sentences.size(), 1u);
    EXPECT_EQ(ctx.origin, Origin::Original);
    EXPECT_EQ(s[ctx.target.sentence].tokens[ctx.target.token].stem, "drug");
  }
}

TEST(ExtractContexts, WindowStopsAtDocumentEdges) {
  const auto s = tokenize_and_stem("drug_N\nb_N\nc_N\n\nd_N\ndrug_N\n", InputMode::Tagged);
  const auto c = extract_contexts(s, "drug", ContextWindow::Adjacent);
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c[0].sentences, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(c[1].sentences, (std::vector<std::size_t>{3, 4}));
}

TEST(ExtractContexts, WindowTakesBothNeighbours) {
  const auto s = tokenize_and_stem("a_N\ndrug_N\nc_N\n", InputMode::Tagged);
  const auto c = extract_contexts(s, "drug", ContextWindow::Adjacent);
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0].sentences, (std::vector<std::size_t>{0, 1, 2}));
}

TEST(ExtractContexts, TwoOccurrencesInOneSentence) {
  const auto s = tokenize_and_stem("drug_N and_O drug_N", InputMode::Tagged);
  const auto c = extract_contexts(s, "drug", ContextWindow::Sentence);
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c[0].sentences, c[1].sentences);
  EXPECT_NE(c[0].target, c[1].target);
  EXPECT_NE(c[0].id, c[1].id);
}

TEST(ExtractContexts, AbsentTargetGivesEmptyList) {
  const auto s = tokenize_and_stem("a_N b_N", InputMode::Tagged);
  EXPECT_TRUE(extract_contexts(s, "drug", ContextWindow::Adjacent).empty());
}

TEST(CorpusStats, MaxFiveIsTheMeanOfTheTopFive) {
  std::string text;
  const std::pair<const char*, int> counts[] = {{"a", 10}, {"b", 8}, {"c", 6}, {"d", 4}, {"e", 2}, {"f", 1}};
  for (const auto& [w, n] : counts) {
    for (int i = 0; i < n; ++i) text += std::string(w) + "x_N ";
    text += "\n";
  }
  const CorpusStats stats = corpus_stats(tokenize_and_stem(text, InputMode::Tagged));
  EXPECT_DOUBLE_EQ(stats.max5, 6.0);
  EXPECT_EQ(stats.frequency("ax"), 10u);
  EXPECT_EQ(stats.total_tokens, 31u);
}

TEST(CorpusStats, FewerThanFiveStems) {
  const CorpusStats stats = corpus_stats(tokenize_and_stem("a_N a_N a_N a_N\na_N a_N a_N", InputMode::Tagged));
  EXPECT_DOUBLE_EQ(stats.max5, 7.0);
}

TEST(CorpusStats, ToyCorpusFrequencies) {
  const CorpusStats stats = corpus_stats(tokenize_and_stem(testing::kToyCorpus, InputMode::Tagged));
  EXPECT_EQ(stats.frequency("banana"), 2u);
  EXPECT_EQ(stats.frequency("eat"), 2u);
  EXPECT_EQ(stats.frequency("tast"), 1u);
  EXPECT_EQ(stats.frequency("unknown"), 0u);
}

TEST(CorpusStats, FrequenciesSumToTheOpenClassTokenCount) {
  const auto s = tokenize_and_stem("the_O doctor_N prescribed_V a_O red_A pill_N\npill_N of_O", InputMode::Tagged);
  const CorpusStats stats = corpus_stats(s);
  std::size_t sum = 0;
  for (const auto& [stem, n] : stats.freq) {
    EXPECT_GE(n, 1u);
    sum += n;
  }
  EXPECT_EQ(sum, stats.total_tokens);
  EXPECT_EQ(sum, 5u);
}

TEST(CorpusStats, EmptyCorpusIsAnError) {
  EXPECT_THROW(corpus_stats({}), Error);
  EXPECT_THROW(corpus_stats(tokenize_and_stem("the_O of_O", InputMode::Tagged)), Error);
}

TEST(Materialize, FlattensWindowAndLocatesTarget) {
  const auto s = tokenize_and_stem("a_N b_N\nc_N drug_N\nd_N", InputMode::Tagged);
  const auto c = extract_contexts(s, "drug", ContextWindow::Adjacent);
  const ContextTokens t = materialize(c[0], s);
  ASSERT_EQ(t.tokens.size(), 5u);
  EXPECT_EQ(t.target_offset, 3u);
  EXPECT_EQ(t.tokens[t.target_offset]->stem, "drug");
}

}  // namespace
}  // namespace simwsd
