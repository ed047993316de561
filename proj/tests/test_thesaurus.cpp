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

#include <random>

#include "simwsd/error.hpp"
#include "simwsd/thesaurus.hpp"
#include "support/dense_oracle.hpp"
#include "support/fixtures.hpp"
#include "support/random_problems.hpp"

namespace simwsd {
namespace {

using namespace simwsd::testing;

WordSimMatrix<double> matrix(std::size_t n, std::vector<std::tuple<int, int, double>> entries) {
  std::vector<Eigen::Triplet<double, Eigen::Index>> t;
  for (std::size_t i = 0; i < n; ++i) t.emplace_back(i, i, 1.0);
  for (const auto& [i, j, v] : entries) t.emplace_back(i, j, v);
  WordSimMatrix<double> m;
  m.values.resize(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  m.values.setFromTriplets(t.begin(), t.end());
  return m;
}

std::vector<std::string> stems_of(const RelatedWordSet& r) {
  std::vector<std::string> out;
  for (const auto& w : r.words) out.push_back(w.stem);
  return out;
}

TEST(Thesaurus, IdentityMatrixAddsNothing) {
  const std::vector<std::string> stems = {"a", "b", "c"};
  const std::vector<std::string> seeds = {"a"};
  const auto r = expand_related_words(matrix(3, {}), stems, seeds, 2);
  EXPECT_EQ(stems_of(r), (std::vector<std::string>{"a"}));
  EXPECT_EQ(r.generation.at("a"), 0u);
  EXPECT_EQ(r.added_per_round, (std::vector<std::size_t>{0}));
}

TEST(Thesaurus, ChainsThroughGenerations) {
  const std::vector<std::string> stems = {"a", "b", "c", "d", "e"};
  const std::vector<std::string> seeds = {"a"};
  // a -> b (0.9), c (0.4); b -> d (0.7); d -> e (0.2); e has no neighbours.
  const auto m = matrix(5, {{0, 1, 0.9}, {0, 2, 0.4}, {1, 3, 0.7}, {3, 4, 0.2}});
  const auto r = expand_related_words(m, stems, seeds, 1);
  EXPECT_EQ(stems_of(r), (std::vector<std::string>{"a", "b", "d", "e"}));
  EXPECT_EQ(r.generation.at("b"), 1u);
  EXPECT_EQ(r.generation.at("d"), 2u);
  EXPECT_EQ(r.generation.at("e"), 3u);
  EXPECT_EQ(r.added_per_round, (std::vector<std::size_t>{1, 1, 1, 0}));
  const auto wide = expand_related_words(m, stems, seeds, 2);
  EXPECT_EQ(stems_of(wide), (std::vector<std::string>{"a", "b", "c", "d", "e"}));
}

TEST(Thesaurus, TiesBreakByStem) {
  const std::vector<std::string> stems = {"a", "zeta", "beta", "gamma"};
  const std::vector<std::string> seeds = {"a"};
  const auto m = matrix(4, {{0, 1, 0.5}, {0, 2, 0.5}, {0, 3, 0.5}});
  const auto r = expand_related_words(m, stems, seeds, 2, 5);
  EXPECT_EQ(stems_of(r), (std::vector<std::string>{"a", "beta", "gamma"}));
}

TEST(Thesaurus, MinNewStopsEarly) {
  const std::vector<std::string> stems = {"a", "b", "c", "d"};
  const std::vector<std::string> seeds = {"a"};
  const auto m = matrix(4, {{0, 1, 0.9}, {1, 2, 0.8}, {2, 3, 0.7}});
  const auto r = expand_related_words(m, stems, seeds, 1, 2);
  EXPECT_EQ(stems_of(r), (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(r.added_per_round.size(), 1u);
}

TEST(Thesaurus, OrderedByDepthThenSimilarity) {
  const std::vector<std::string> stems = {"s1", "s2", "x", "y", "z"};
  const std::vector<std::string> seeds = {"s1", "s2"};
  const auto m = matrix(5, {{0, 2, 0.3}, {1, 3, 0.6}, {2, 4, 0.9}});
  const auto r = expand_related_words(m, stems, seeds, 1);
  EXPECT_EQ(stems_of(r), (std::vector<std::string>{"s1", "s2", "y", "x", "z"}));
  EXPECT_EQ(format_related_words(r), "\ts1\ts2\ty\tx\tz\n");
}

TEST(Thesaurus, RejectsBadArguments) {
  const std::vector<std::string> stems = {"a", "b"};
  const std::vector<std::string> seeds = {"a"};
  EXPECT_THROW(expand_related_words(matrix(2, {}), stems, seeds, 0), Error);
  const std::vector<std::string> short_list = {"a"};
  EXPECT_THROW(expand_related_words(matrix(2, {}), short_list, seeds, 1), Error);
}

// The neighbour chosen on the toy corpus is the oracle's top-ranked
// non-self entry of the seed row.
TEST(Thesaurus, ToyCorpusFollowsTheOracleRanking) {
  const auto p = toy_problem();
  const auto r = run_iterations(toy_engine_config(), p);
  DenseOracle oracle(p, 0.01, std::nullopt);
  while (!oracle.all_frozen()) oracle.step();
  const auto stems = toy_stems();
  const auto& row = oracle.state().words[kEat];
  std::size_t best = kEat == 0 ? 1 : 0;
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (j == static_cast<std::size_t>(kEat)) continue;
    if (row[j] > row[best] || (row[j] == row[best] && stems[j] < stems[best])) best = j;
  }
  const std::vector<std::string> seeds = {"eat"};
  const auto set = expand_related_words(r.words, stems, seeds, 1);
  ASSERT_GE(set.words.size(), 2u);
  EXPECT_EQ(set.words[1].stem, stems[best]);
  EXPECT_EQ(set.added_per_round.back(), 0u);
}

TEST(ThesaurusProperty, MonotoneAndReachable) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 30; ++trial) {
    const auto p = random_problem(rng, {});
    const auto r = run_iterations(toy_engine_config(), p);
    std::vector<std::string> stems;
    for (Eigen::Index i = 0; i < p.vocabulary_size; ++i) stems.push_back("w" + std::to_string(100 + i));
    const std::vector<std::string> seeds = {stems[0]};
    const std::size_t k = 1 + static_cast<std::size_t>(trial % 3);
    const auto set = expand_related_words(r.words, stems, seeds, k);
    EXPECT_LE(set.added_per_round.size(), stems.size());
    std::size_t total = seeds.size();
    for (std::size_t n : set.added_per_round) total += n;
    EXPECT_EQ(total, set.words.size());
    for (std::size_t i = 1; i < set.words.size(); ++i) EXPECT_LE(set.words[i - 1].depth, set.words[i].depth);
    // Each deeper word is among the k nearest neighbours of a word one level up.
    for (const RelatedWord& w : set.words) {
      if (w.depth == 0) continue;
      bool found = false;
      for (const RelatedWord& parent : set.words) {
        if (parent.depth + 1 != w.depth) continue;
        const Eigen::Index pi = std::stoi(parent.stem.substr(1)) - 100;
        std::vector<std::pair<double, std::string>> nb;
        for (SparseRowMatrix<double>::InnerIterator it(r.words.values, pi); it; ++it) {
          if (it.col() != pi && it.value() > 0) nb.emplace_back(-it.value(), stems[it.col()]);
        }
        std::sort(nb.begin(), nb.end());
        for (std::size_t j = 0; j < std::min(k, nb.size()); ++j) found = found || nb[j].second == w.stem;
      }
      EXPECT_TRUE(found) << w.stem;
    }
  }
}

TEST(Thesaurus, UnknownSenseIsAnError) {
  Model m;
  m.inventory.target = "t";
  m.inventory.senses = {{"a", "", {"x"}}, {"b", "", {"y"}}};
  m.features.retained.resize(2);
  m.features.retained[0].stem = "x";
  m.features.retained[1].stem = "y";
  m.words = matrix(2, {{0, 1, 0.5}});
  EXPECT_THROW(related_words(m, "nope", 1), Error);
  const auto r = related_words(m, "a", 1);
  EXPECT_EQ(r.sense, "a");
  EXPECT_EQ(stems_of(r), (std::vector<std::string>{"x", "y"}));
}

}  // namespace
}  // namespace simwsd
