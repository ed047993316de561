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

#include <cmath>
#include <random>

#include "simwsd/error.hpp"
#include "simwsd/similarity_engine.hpp"
#include "support/dense_oracle.hpp"
#include "support/fixtures.hpp"
#include "support/random_problems.hpp"

namespace simwsd {
namespace {

using namespace simwsd::testing;

constexpr Eigen::Index kS1 = 0, kS2 = 1, kS3 = 2;

Eigen::MatrixXd dense(const SparseRowMatrix<double>& m) { return Eigen::MatrixXd(m); }

double max_diff(const Eigen::MatrixXd& engine, const Dense& oracle) {
  double d = 0.0;
  for (Eigen::Index i = 0; i < engine.rows(); ++i) {
    for (Eigen::Index j = 0; j < engine.cols(); ++j) {
      d = std::max(d, std::abs(engine(i, j) - oracle[i][j]));
    }
  }
  return d;
}

class ToyTrace : public ::testing::Test {
 protected:
  void SetUp() override {
    problem = toy_problem();
    result = run_iterations(toy_engine_config(), problem);
    ASSERT_GE(result.history.size(), 2u);
  }
  const EngineSnapshot<double>& at(std::size_t n) const { return result.history.at(n - 1); }

  SimilarityProblem<double> problem;
  EngineResult<double> result;
};

TEST_F(ToyTrace, FirstIterationSentenceSimilarities) {
  EXPECT_DOUBLE_EQ(at(1).sentences(kS1, kS3), 0.5);
  EXPECT_DOUBLE_EQ(at(1).sentences(kS1, kS2), 0.5);
  EXPECT_DOUBLE_EQ(at(1).sentences(kS2, kS3), 0.0);
}

TEST_F(ToyTrace, FirstIterationWordSimilarities) {
  EXPECT_DOUBLE_EQ(at(1).words(kTaste, kApple), 0.0);
  EXPECT_NEAR(at(1).words(kBanana, kApple), 0.25, 1e-9);
  EXPECT_NEAR(at(1).words(kTaste, kEat), 0.5, 1e-9);
}

TEST_F(ToyTrace, SecondIteration) {
  EXPECT_NEAR(at(2).sentences(kS2, kS3), 0.625, 1e-9);
  EXPECT_NEAR(at(2).sentences(kS1, kS3), 0.875, 1e-9);
  EXPECT_NEAR(at(2).words(kBanana, kApple), 0.75, 1e-9);
  EXPECT_NEAR(at(2).words(kTaste, kApple), 0.625, 1e-9);
  EXPECT_GT(at(2).words(kBanana, kApple), at(2).words(kTaste, kApple));
}

TEST_F(ToyTrace, Affinities) {
  const ContextIndex<double> index(problem);
  const FeatureList s3 = {kApple, kEat};
  EXPECT_NEAR(affinity_word_to_sentence<double>(kBanana, s3, at(1).words), 0.75, 1e-9);
  EXPECT_NEAR(affinity_sentence_to_word(kS2, kEat, at(1).sentences, index), 0.5, 1e-9);
  // Words inside the sentence have affinity 1 at any iteration.
  const auto w0 = init_word_similarity<double>(4);
  EXPECT_DOUBLE_EQ(affinity_word_to_sentence<double>(kApple, s3, w0), 1.0);
  EXPECT_DOUBLE_EQ(affinity_word_to_sentence<double>(kBanana, s3, w0), 0.0);
  const auto s0 = init_sentence_similarity(index);
  EXPECT_DOUBLE_EQ(affinity_sentence_to_word(kS2, kTaste, s0, index), 1.0);
}

TEST_F(ToyTrace, MatchesTheOracleAtEveryIteration) {
  DenseOracle oracle(problem, 0.01, std::nullopt);
  for (const auto& snap : result.history) {
    oracle.step();
    EXPECT_LE(max_diff(dense(snap.words.values), oracle.state().words), 1e-12);
    EXPECT_LE(max_diff(dense(snap.sentences.values), oracle.state().sentences), 1e-12);
  }
  EXPECT_TRUE(result.trace.converged);
}

TEST(InitWordSimilarity, IsTheIdentity) {
  const auto m = init_word_similarity<double>(2);
  EXPECT_DOUBLE_EQ(m(0, 0), 1.0);
  EXPECT_DOUBLE_EQ(m(1, 1), 1.0);
  EXPECT_DOUBLE_EQ(m(0, 1), 0.0);
  EXPECT_EQ(m.values.nonZeros(), 2);
  EXPECT_EQ(m.iteration, 0u);
  EXPECT_THROW(init_word_similarity<double>(0), Error);
}

TEST(UpdateSentenceMatrices, FirstStepFromIdentity) {
  const auto problem = toy_problem();
  const ContextIndex<double> index(problem);
  const auto s1 = update_sentence_matrices<double>(index, init_word_similarity<double>(4),
                                                   init_sentence_similarity(index), {false, false, false}, 0.0);
  EXPECT_DOUBLE_EQ(s1(kS1, kS3), 0.5);
  EXPECT_DOUBLE_EQ(s1(kS2, kS3), 0.0);
  EXPECT_DOUBLE_EQ(s1(kS2, kS2), 1.0);
  EXPECT_EQ(s1.iteration, 1u);
}

TEST(RunIterations, IterationCountWithinInverseEpsilon) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const auto problem = random_problem(rng, {});
    EngineConfig cfg;
    cfg.max_iterations = 1000;
    cfg.freq_damping_constant = std::nullopt;
    const auto r = run_iterations(cfg, problem);
    EXPECT_TRUE(r.trace.converged);
    EXPECT_LE(r.trace.iteration_count(), 100u);
  }
}

TEST(RunIterations, SingleSentenceFreezesAtOnce) {
  SimilarityProblem<double> p;
  p.vocabulary_size = 1;
  p.originals = {{{0}, {1.0}}};
  p.frequencies = {1};
  const auto r = run_iterations(toy_engine_config(), p);
  EXPECT_EQ(r.trace.iteration_count(), 1u);
  EXPECT_TRUE(r.trace.converged);
  EXPECT_EQ(r.trace.sentence_frozen_at[0], 1u);

  // With two words the sentence row still freezes immediately; the word
  // rows take one more iteration to see each other.
  p.vocabulary_size = 2;
  p.originals = {{{0, 1}, {0.5, 0.5}}};
  p.frequencies = {1, 1};
  const auto r2 = run_iterations(toy_engine_config(), p);
  EXPECT_EQ(r2.trace.sentence_frozen_at[0], 1u);
  EXPECT_EQ(r2.trace.word_frozen_at[0], 2u);
  EXPECT_DOUBLE_EQ(r2.words(0, 1), 1.0);
}

TEST(RunIterations, MaxIterationsIsAHardStop) {
  auto cfg = toy_engine_config(1);
  const auto r = run_iterations(cfg, toy_problem());
  EXPECT_EQ(r.trace.iteration_count(), 1u);
  EXPECT_TRUE(r.trace.hit_max_iterations);
  EXPECT_FALSE(r.trace.converged);
}

TEST(RunIterations, RejectsBadConfig) {
  EngineConfig cfg;
  cfg.epsilon = 0.0;
  EXPECT_THROW(run_iterations(cfg, toy_problem()), Error);
  cfg = EngineConfig{};
  cfg.max_iterations = 0;
  EXPECT_THROW(run_iterations(cfg, toy_problem()), Error);
  cfg = EngineConfig{};
  cfg.freq_damping_constant = -1.0;
  EXPECT_THROW(run_iterations(cfg, toy_problem()), Error);
}

TEST(RunIterations, RejectsMalformedProblems) {
  auto p = toy_problem();
  p.originals[0].features = {kEat, kBanana};  // unsorted
  EXPECT_THROW(run_iterations(toy_engine_config(), p), Error);
  p = toy_problem();
  p.originals[0].features.push_back(9);
  p.originals[0].weights.push_back(0.0);
  EXPECT_THROW(run_iterations(toy_engine_config(), p), Error);
}

TEST(Engine, FeedbackOnlyWordsKeepIdentityRows) {
  auto p = toy_problem();
  p.vocabulary_size = 5;
  p.frequencies.push_back(1);
  p.feedback = {{{kEat, 4}}, {{kTaste}}};
  const auto r = run_iterations(toy_engine_config(), p);
  EXPECT_EQ(r.words.values.row(4).nonZeros(), 1);
  EXPECT_DOUBLE_EQ(r.words(4, 4), 1.0);
  // ...but they still receive similarity from the words of original rows.
  EXPECT_GT(r.words(kEat, 4), 0.0);
  EXPECT_EQ(r.sentences.num_blocks(), 3u);
  EXPECT_EQ(r.sentences.block_size(1), 1);
  EXPECT_GE(r.sentences(kS1, r.sentences.block_begin(1)), 0.5);  // s1 shares eat
}

TEST(Engine, DampingScalesOffDiagonalEntries) {
  auto p = toy_problem();
  p.frequencies = {400, 200, 100, 50};
  auto cfg = toy_engine_config(1);
  cfg.freq_damping_constant = 100.0;
  const auto damped = run_iterations(cfg, p);
  cfg.freq_damping_constant = std::nullopt;
  const auto plain = run_iterations(cfg, p);
  EXPECT_NEAR(damped.words(kEat, kBanana), plain.words(kEat, kBanana) * 0.5, 1e-12);
  EXPECT_NEAR(damped.words(kBanana, kApple), plain.words(kBanana, kApple) * 0.25, 1e-12);
  EXPECT_NEAR(damped.words(kEat, kTaste), plain.words(kEat, kTaste), 1e-12);
  EXPECT_DOUBLE_EQ(damped.words(kApple, kApple), 1.0);
}

TEST(Engine, PruningDropsSmallEntries) {
  auto cfg = toy_engine_config(1);
  cfg.prune_threshold = 0.3;
  const auto r = run_iterations(cfg, toy_problem());
  EXPECT_DOUBLE_EQ(r.words(kBanana, kApple), 0.0);  // 0.25 pruned
  for (Eigen::Index i = 0; i < r.words.size(); ++i) {
    for (SparseRowMatrix<double>::InnerIterator it(r.words.values, i); it; ++it) EXPECT_GE(it.value(), 0.3);
  }
}

TEST(Engine, ContainedSentenceIsFullySimilar) {
  // S1 = {a} is contained in S2 = {a, b}.
  SimilarityProblem<double> p;
  p.vocabulary_size = 2;
  p.originals = {{{0}, {1.0}}, {{0, 1}, {0.5, 0.5}}};
  p.frequencies = {300, 1};
  const auto first = run_iterations(toy_engine_config(1), p);
  EXPECT_DOUBLE_EQ(first.sentences(0, 1), 1.0);
  EXPECT_LT(first.sentences(1, 0), 1.0);
  // With damping toward the frequent word a the asymmetry survives convergence.
  auto cfg = toy_engine_config(50);
  cfg.freq_damping_constant = 100.0;
  const auto converged = run_iterations(cfg, p);
  EXPECT_TRUE(converged.trace.converged);
  EXPECT_DOUBLE_EQ(converged.sentences(0, 1), 1.0);
  EXPECT_LT(converged.sentences(1, 0), 1.0);
}

// The invariants of the recurrences on random corpora.
TEST(EngineProperty, BoundedReflexiveMonotone) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    const auto p = random_problem(rng, {});
    auto cfg = toy_engine_config(1000);
    cfg.prune_threshold = 1e-6;
    const auto r = run_iterations(cfg, p);
    Eigen::MatrixXd prev_w = Eigen::MatrixXd::Identity(p.vocabulary_size, p.vocabulary_size);
    Eigen::MatrixXd prev_s = dense(init_sentence_similarity(ContextIndex<double>(p)).values);
    for (const auto& snap : r.history) {
      const Eigen::MatrixXd w = dense(snap.words.values), s = dense(snap.sentences.values);
      EXPECT_LE(w.maxCoeff(), 1.0 + 1e-12);
      EXPECT_GE(w.minCoeff(), 0.0);
      EXPECT_LE(s.maxCoeff(), 1.0 + 1e-12);
      EXPECT_GE(s.minCoeff(), 0.0);
      for (Eigen::Index i = 0; i < w.rows(); ++i) EXPECT_EQ(w(i, i), 1.0);
      for (Eigen::Index i = 0; i < s.rows(); ++i) EXPECT_EQ(s(i, i), 1.0);
      EXPECT_GE((w - prev_w).minCoeff(), -1e-12);
      EXPECT_GE((s - prev_s).minCoeff(), -1e-12);
      prev_w = w;
      prev_s = s;
    }
    for (const auto& rec : r.trace.iterations) {
      for (const auto& u : rec.updates) EXPECT_GE(u.max_increase, -1e-12);
    }
  }
}

TEST(EngineProperty, FrozenRowsNeverChange) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const auto p = random_problem(rng, {});
    auto cfg = toy_engine_config(1000);
    cfg.epsilon = 0.05;
    const auto r = run_iterations(cfg, p);
    for (std::size_t w = 0; w < r.trace.word_frozen_at.size(); ++w) {
      if (!r.trace.word_frozen_at[w]) continue;
      const std::size_t n = *r.trace.word_frozen_at[w];
      for (std::size_t later = n; later < r.history.size(); ++later) {
        const Eigen::MatrixXd a = dense(r.history[n - 1].words.values).row(static_cast<Eigen::Index>(w));
        const Eigen::MatrixXd b = dense(r.history[later].words.values).row(static_cast<Eigen::Index>(w));
        EXPECT_EQ(a, b);
      }
    }
  }
}

TEST(EngineProperty, MatchesOracleWithDampingAndRandomWeights) {
  std::mt19937_64 rng(29);
  RandomProblemShape shape;
  shape.max_sentences = 20;
  shape.uniform_weights = false;
  shape.senses = 3;
  for (int trial = 0; trial < 20; ++trial) {
    const auto p = random_problem(rng, shape);
    auto cfg = toy_engine_config(6);
    cfg.freq_damping_constant = 50.0;
    cfg.epsilon = 0.02;
    const auto r = run_iterations(cfg, p);
    DenseOracle oracle(p, cfg.epsilon, 50.0);
    for (const auto& snap : r.history) {
      oracle.step();
      EXPECT_LE(max_diff(dense(snap.words.values), oracle.state().words), 1e-9);
      EXPECT_LE(max_diff(dense(snap.sentences.values), oracle.state().sentences), 1e-9);
    }
  }
}

TEST(EngineProperty, FloatScalarAgreesWithDouble) {
  SimilarityProblem<float> pf;
  const auto pd = toy_problem();
  pf.vocabulary_size = pd.vocabulary_size;
  for (const auto& o : pd.originals) {
    pf.originals.push_back({o.features, std::vector<float>(o.weights.begin(), o.weights.end())});
  }
  pf.frequencies.assign(pd.frequencies.begin(), pd.frequencies.end());
  const auto rf = run_iterations(toy_engine_config(), pf);
  const auto rd = run_iterations(toy_engine_config(), pd);
  EXPECT_NEAR(rf.words(kBanana, kApple), rd.words(kBanana, kApple), 1e-6);
}

}  // namespace
}  // namespace simwsd
