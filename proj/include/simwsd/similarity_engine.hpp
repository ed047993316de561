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

#ifndef SIMWSD_SIMILARITY_ENGINE_HPP_
#define SIMWSD_SIMILARITY_ENGINE_HPP_

// Iterative word/sentence similarity.
//
// Sentences are rows of weighted features; words are represented by the
// sentences that contain them. Each iteration first recomputes sentence
// similarities from the current word similarities
//
//   sim(S1, S2) = sum_{W in S1} weight(W, S1) * max_{Wi in S2} sim(W, Wi)
//
// and then word similarities from the sentence similarities just computed
//
//   sim(W1, W2) = mean_{S contains W1} max_{T contains W2} sim(S, T).
//
// Rows are original contexts; columns are the original contexts followed by
// the feedback contexts of each sense. A row (of either matrix) stops being
// updated once its largest increase in an iteration is at most epsilon.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include "simwsd/error.hpp"

namespace simwsd {

template <typename Scalar>
using SparseRowMatrix = Eigen::SparseMatrix<Scalar, Eigen::RowMajor, Eigen::Index>;

template <typename Scalar>
using RowVector = Eigen::Matrix<Scalar, 1, Eigen::Dynamic>;

template <typename Scalar>
using DenseRowMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

using FeatureList = std::vector<Eigen::Index>;  // sorted, unique feature indices

template <typename Scalar>
struct WeightedContext {
  FeatureList features;
  std::vector<Scalar> weights;  // parallel to features, sums to 1
};

template <typename Scalar>
struct SimilarityProblem {
  Eigen::Index vocabulary_size = 0;
  std::vector<WeightedContext<Scalar>> originals;
  std::vector<std::vector<FeatureList>> feedback;  // [sense][context]
  // Corpus frequency per feature; read only when damping is enabled.
  std::vector<Scalar> frequencies;
};

struct EngineConfig {
  double epsilon = 0.01;
  std::size_t max_iterations = 10;
  // Word similarity toward W2 is scaled by min{1, c / freq(W2)}; nullopt disables.
  std::optional<double> freq_damping_constant = 100.0;
  // Entries below this are dropped from the sparse matrices; 0 keeps every nonzero.
  double prune_threshold = 1e-6;
  bool record_history = false;

  void validate() const {
    if (!(epsilon > 0.0)) throw Error("similarity_engine", "epsilon must be positive");
    if (max_iterations < 1) throw Error("similarity_engine", "max_iterations must be at least 1");
    if (freq_damping_constant && !(*freq_damping_constant > 0.0)) {
      throw Error("similarity_engine", "frequency damping constant must be positive");
    }
    if (prune_threshold < 0.0) throw Error("similarity_engine", "prune threshold must be >= 0");
  }
};

template <typename Scalar>
struct WordSimMatrix {
  SparseRowMatrix<Scalar> values;  // vocabulary x vocabulary
  std::size_t iteration = 0;

  Scalar operator()(Eigen::Index i, Eigen::Index j) const { return values.coeff(i, j); }
  Eigen::Index size() const { return values.rows(); }
};

// All sentence similarity matrices side by side: block 0 holds the
// original-to-original similarities, block i > 0 the similarities of the
// originals to the feedback contexts of sense i.
template <typename Scalar>
struct SentenceSimMatrices {
  SparseRowMatrix<Scalar> values;
  std::vector<Eigen::Index> column_offsets;  // blocks + 1 entries
  std::size_t iteration = 0;

  std::size_t num_blocks() const { return column_offsets.size() - 1; }
  Eigen::Index block_begin(std::size_t block) const { return column_offsets[block]; }
  Eigen::Index block_size(std::size_t block) const {
    return column_offsets[block + 1] - column_offsets[block];
  }
  SparseRowMatrix<Scalar> block(std::size_t index) const {
    return values.block(0, block_begin(index), values.rows(), block_size(index));
  }
  Scalar operator()(Eigen::Index row, Eigen::Index column) const { return values.coeff(row, column); }
};

enum class ItemKind { Word, Sentence };

template <typename Scalar>
struct RowUpdate {
  ItemKind kind = ItemKind::Word;
  Eigen::Index item = 0;
  Scalar max_increase = 0;
  bool frozen = false;  // froze in this iteration
};

template <typename Scalar>
struct IterationRecord {
  std::size_t iteration = 0;
  std::vector<RowUpdate<Scalar>> updates;
  double seconds = 0.0;
};

template <typename Scalar>
struct IterationTrace {
  std::vector<IterationRecord<Scalar>> iterations;
  bool converged = false;            // every row froze
  bool hit_max_iterations = false;
  std::vector<std::optional<std::size_t>> word_frozen_at;
  std::vector<std::optional<std::size_t>> sentence_frozen_at;

  std::size_t iteration_count() const { return iterations.size(); }
};

template <typename Scalar>
struct EngineSnapshot {
  WordSimMatrix<Scalar> words;
  SentenceSimMatrices<Scalar> sentences;
};

template <typename Scalar>
struct EngineResult {
  WordSimMatrix<Scalar> words;
  SentenceSimMatrices<Scalar> sentences;
  IterationTrace<Scalar> trace;
  std::vector<EngineSnapshot<Scalar>> history;  // one per iteration when requested
};

// Inverted indices over a problem. Column c < originals.size() is original c;
// the feedback contexts follow in sense order.
template <typename Scalar>
class ContextIndex {
 public:
  explicit ContextIndex(const SimilarityProblem<Scalar>& problem) : problem_(&problem) {
    const Eigen::Index vocab = problem.vocabulary_size;
    const auto n_orig = static_cast<Eigen::Index>(problem.originals.size());
    column_offsets_.push_back(0);
    column_offsets_.push_back(n_orig);
    for (const WeightedContext<Scalar>& row : problem.originals) {
      check_features(row.features, vocab);
      if (row.weights.size() != row.features.size()) {
        throw Error("similarity_engine", "weights and features differ in length");
      }
      columns_.push_back(&row.features);
    }
    for (const auto& sense : problem.feedback) {
      for (const FeatureList& fb : sense) {
        check_features(fb, vocab);
        columns_.push_back(&fb);
      }
      column_offsets_.push_back(static_cast<Eigen::Index>(columns_.size()));
    }

    column_postings_.resize(static_cast<std::size_t>(vocab));
    for (std::size_t c = 0; c < columns_.size(); ++c) {
      for (Eigen::Index w : *columns_[c]) column_postings_[w].push_back(static_cast<Eigen::Index>(c));
    }
    row_postings_.resize(static_cast<std::size_t>(vocab));
    for (std::size_t r = 0; r < problem.originals.size(); ++r) {
      for (Eigen::Index w : problem.originals[r].features) {
        row_postings_[w].push_back(static_cast<Eigen::Index>(r));
      }
    }
    row_slot_.assign(static_cast<std::size_t>(vocab), -1);
    for (Eigen::Index w = 0; w < vocab; ++w) {
      if (!row_postings_[w].empty()) {
        row_slot_[w] = static_cast<Eigen::Index>(row_lexemes_.size());
        row_lexemes_.push_back(w);
      }
    }

    // Row weights re-indexed onto the row lexemes.
    std::vector<Eigen::Triplet<Scalar, Eigen::Index>> triplets;
    for (std::size_t r = 0; r < problem.originals.size(); ++r) {
      const auto& row = problem.originals[r];
      for (std::size_t i = 0; i < row.features.size(); ++i) {
        triplets.emplace_back(static_cast<Eigen::Index>(r), row_slot_[row.features[i]], row.weights[i]);
      }
    }
    row_weights_.resize(n_orig, static_cast<Eigen::Index>(row_lexemes_.size()));
    row_weights_.setFromTriplets(triplets.begin(), triplets.end());
  }

  const SimilarityProblem<Scalar>& problem() const { return *problem_; }
  Eigen::Index vocabulary_size() const { return problem_->vocabulary_size; }
  Eigen::Index num_rows() const { return static_cast<Eigen::Index>(problem_->originals.size()); }
  Eigen::Index num_columns() const { return static_cast<Eigen::Index>(columns_.size()); }
  const std::vector<Eigen::Index>& column_offsets() const { return column_offsets_; }
  const FeatureList& column_features(Eigen::Index column) const { return *columns_[column]; }
  // Columns whose context contains feature w.
  const std::vector<Eigen::Index>& columns_with(Eigen::Index w) const { return column_postings_[w]; }
  // Original rows whose context contains feature w.
  const std::vector<Eigen::Index>& rows_with(Eigen::Index w) const { return row_postings_[w]; }
  // Features that occur in at least one original; only these have updated word rows.
  const std::vector<Eigen::Index>& row_lexemes() const { return row_lexemes_; }
  Eigen::Index row_slot(Eigen::Index w) const { return row_slot_[w]; }
  const SparseRowMatrix<Scalar>& row_weights() const { return row_weights_; }

 private:
  static void check_features(const FeatureList& features, Eigen::Index vocab) {
    for (std::size_t i = 0; i < features.size(); ++i) {
      if (features[i] < 0 || features[i] >= vocab) {
        throw Error("similarity_engine", "feature index out of range");
      }
      if (i > 0 && features[i] <= features[i - 1]) {
        throw Error("similarity_engine", "context features must be sorted and unique");
      }
    }
  }

  const SimilarityProblem<Scalar>* problem_;
  std::vector<const FeatureList*> columns_;
  std::vector<Eigen::Index> column_offsets_;
  std::vector<std::vector<Eigen::Index>> column_postings_;
  std::vector<std::vector<Eigen::Index>> row_postings_;
  std::vector<Eigen::Index> row_lexemes_;
  std::vector<Eigen::Index> row_slot_;
  SparseRowMatrix<Scalar> row_weights_;
};

namespace detail {

template <typename Scalar>
void append_row(std::vector<Eigen::Triplet<Scalar, Eigen::Index>>& out, Eigen::Index row,
                const RowVector<Scalar>& values, Scalar prune) {
  for (Eigen::Index j = 0; j < values.size(); ++j) {
    const Scalar v = values(j);
    if (v != Scalar(0) && v >= prune) out.emplace_back(row, j, v);
  }
}

template <typename Scalar>
void copy_row(std::vector<Eigen::Triplet<Scalar, Eigen::Index>>& out, const SparseRowMatrix<Scalar>& m,
              Eigen::Index row) {
  for (typename SparseRowMatrix<Scalar>::InnerIterator it(m, row); it; ++it) {
    out.emplace_back(row, it.col(), it.value());
  }
}

template <typename Scalar>
Scalar max_increase(const RowVector<Scalar>& next, const SparseRowMatrix<Scalar>& previous,
                    Eigen::Index row) {
  RowVector<Scalar> diff = next;
  for (typename SparseRowMatrix<Scalar>::InnerIterator it(previous, row); it; ++it) {
    diff(it.col()) -= it.value();
  }
  return diff.size() == 0 ? Scalar(0) : diff.maxCoeff();
}

}  // namespace detail

template <typename Scalar>
WordSimMatrix<Scalar> init_word_similarity(Eigen::Index vocabulary_size) {
  if (vocabulary_size <= 0) throw Error("similarity_engine", "vocabulary is empty");
  WordSimMatrix<Scalar> m;
  m.values.resize(vocabulary_size, vocabulary_size);
  m.values.setIdentity();
  return m;
}

// Identity on the original-to-original block, zero elsewhere.
template <typename Scalar>
SentenceSimMatrices<Scalar> init_sentence_similarity(const ContextIndex<Scalar>& index) {
  SentenceSimMatrices<Scalar> s;
  s.column_offsets = index.column_offsets();
  s.values.resize(index.num_rows(), index.num_columns());
  std::vector<Eigen::Triplet<Scalar, Eigen::Index>> diag;
  for (Eigen::Index r = 0; r < index.num_rows(); ++r) diag.emplace_back(r, r, Scalar(1));
  s.values.setFromTriplets(diag.begin(), diag.end());
  return s;
}

// max over the features Wi of the context of sim(w, Wi).
template <typename Scalar>
Scalar affinity_word_to_sentence(Eigen::Index w, std::span<const Eigen::Index> context,
                                 const WordSimMatrix<Scalar>& words) {
  Scalar best = 0;
  for (Eigen::Index wi : context) best = std::max(best, words(w, wi));
  return best;
}

// max over the contexts Sj containing w of sim(row, Sj); 0 when w occurs nowhere.
template <typename Scalar>
Scalar affinity_sentence_to_word(Eigen::Index row, Eigen::Index w, const SentenceSimMatrices<Scalar>& sentences,
                                 const ContextIndex<Scalar>& index) {
  Scalar best = 0;
  for (Eigen::Index column : index.columns_with(w)) best = std::max(best, sentences(row, column));
  return best;
}

// Word-to-context affinities for every row lexeme (rows, in row-lexeme
// order) against every column context.
template <typename Scalar>
DenseRowMatrix<Scalar> word_context_affinities(const ContextIndex<Scalar>& index,
                                               const WordSimMatrix<Scalar>& words) {
  const auto& lexemes = index.row_lexemes();
  DenseRowMatrix<Scalar> aff = DenseRowMatrix<Scalar>::Zero(static_cast<Eigen::Index>(lexemes.size()),
                                                            index.num_columns());
  for (std::size_t slot = 0; slot < lexemes.size(); ++slot) {
    auto row = aff.row(static_cast<Eigen::Index>(slot));
    for (typename SparseRowMatrix<Scalar>::InnerIterator it(words.values, lexemes[slot]); it; ++it) {
      const Scalar v = it.value();
      for (Eigen::Index column : index.columns_with(it.col())) row(column) = std::max(row(column), v);
    }
  }
  return aff;
}

// Context-to-word affinities: entry (r, w) is max over columns T containing w
// of sim(r, T).
template <typename Scalar>
DenseRowMatrix<Scalar> context_word_affinities(const ContextIndex<Scalar>& index,
                                               const SentenceSimMatrices<Scalar>& sentences) {
  DenseRowMatrix<Scalar> aff = DenseRowMatrix<Scalar>::Zero(index.num_rows(), index.vocabulary_size());
  for (Eigen::Index r = 0; r < index.num_rows(); ++r) {
    auto row = aff.row(r);
    for (typename SparseRowMatrix<Scalar>::InnerIterator it(sentences.values, r); it; ++it) {
      const Scalar v = it.value();
      for (Eigen::Index w : index.column_features(it.col())) row(w) = std::max(row(w), v);
    }
  }
  return aff;
}

// Sentence step. Rows flagged in `frozen` keep their previous values;
// `increases`, when given, receives the largest increase of every updated row.
template <typename Scalar>
SentenceSimMatrices<Scalar> update_sentence_matrices(const ContextIndex<Scalar>& index,
                                                     const WordSimMatrix<Scalar>& words,
                                                     const SentenceSimMatrices<Scalar>& previous,
                                                     const std::vector<bool>& frozen, Scalar prune,
                                                     std::vector<Scalar>* increases = nullptr) {
  const DenseRowMatrix<Scalar> aff = word_context_affinities(index, words);
  std::vector<Eigen::Triplet<Scalar, Eigen::Index>> triplets;
  if (increases) increases->assign(static_cast<std::size_t>(index.num_rows()), Scalar(0));
  for (Eigen::Index r = 0; r < index.num_rows(); ++r) {
    if (frozen[r]) {
      detail::copy_row(triplets, previous.values, r);
      continue;
    }
    RowVector<Scalar> next = index.row_weights().row(r) * aff;
    next(r) = Scalar(1);  // reflexivity on the original-to-original block
    if (increases) (*increases)[r] = detail::max_increase(next, previous.values, r);
    detail::append_row(triplets, r, next, prune);
  }
  SentenceSimMatrices<Scalar> out;
  out.column_offsets = index.column_offsets();
  out.iteration = previous.iteration + 1;
  out.values.resize(index.num_rows(), index.num_columns());
  out.values.setFromTriplets(triplets.begin(), triplets.end());
  return out;
}

// Word step, consuming the sentence similarities of the same iteration.
template <typename Scalar>
WordSimMatrix<Scalar> update_word_matrix(const ContextIndex<Scalar>& index,
                                         const SentenceSimMatrices<Scalar>& sentences,
                                         const WordSimMatrix<Scalar>& previous, const std::vector<bool>& frozen,
                                         const std::optional<double>& damping_constant, Scalar prune,
                                         std::vector<Scalar>* increases = nullptr) {
  const Eigen::Index vocab = index.vocabulary_size();
  const DenseRowMatrix<Scalar> aff = context_word_affinities(index, sentences);

  RowVector<Scalar> damping = RowVector<Scalar>::Ones(vocab);
  if (damping_constant) {
    const auto& freq = index.problem().frequencies;
    if (static_cast<Eigen::Index>(freq.size()) != vocab) {
      throw Error("similarity_engine", "damping needs one frequency per feature");
    }
    for (Eigen::Index w = 0; w < vocab; ++w) {
      if (freq[w] > Scalar(0)) damping(w) = std::min(Scalar(1), Scalar(*damping_constant) / freq[w]);
    }
  }

  std::vector<Eigen::Triplet<Scalar, Eigen::Index>> triplets;
  if (increases) increases->assign(static_cast<std::size_t>(vocab), Scalar(0));
  for (Eigen::Index w = 0; w < vocab; ++w) {
    const auto& rows = index.rows_with(w);
    if (rows.empty() || frozen[w]) {
      detail::copy_row(triplets, previous.values, w);
      continue;
    }
    RowVector<Scalar> next = RowVector<Scalar>::Zero(vocab);
    for (Eigen::Index r : rows) next += aff.row(r);
    next /= static_cast<Scalar>(rows.size());
    next = next.cwiseProduct(damping);
    next(w) = Scalar(1);
    if (increases) (*increases)[w] = detail::max_increase(next, previous.values, w);
    detail::append_row(triplets, w, next, prune);
  }
  WordSimMatrix<Scalar> out;
  out.iteration = previous.iteration + 1;
  out.values.resize(vocab, vocab);
  out.values.setFromTriplets(triplets.begin(), triplets.end());
  return out;
}

template <typename Scalar>
EngineResult<Scalar> run_iterations(const EngineConfig& config, const SimilarityProblem<Scalar>& problem) {
  config.validate();
  const ContextIndex<Scalar> index(problem);
  const Eigen::Index vocab = index.vocabulary_size();
  const Scalar prune = static_cast<Scalar>(config.prune_threshold);
  const Scalar epsilon = static_cast<Scalar>(config.epsilon);

  EngineResult<Scalar> result;
  result.words = init_word_similarity<Scalar>(vocab);
  result.sentences = init_sentence_similarity(index);

  std::vector<bool> word_frozen(static_cast<std::size_t>(vocab), false);
  std::vector<bool> sentence_frozen(static_cast<std::size_t>(index.num_rows()), false);
  // Words absent from every original have no row to update.
  for (Eigen::Index w = 0; w < vocab; ++w) word_frozen[w] = index.rows_with(w).empty();
  auto& trace = result.trace;
  trace.word_frozen_at.assign(static_cast<std::size_t>(vocab), std::nullopt);
  trace.sentence_frozen_at.assign(static_cast<std::size_t>(index.num_rows()), std::nullopt);

  const auto all_frozen = [&] {
    return std::all_of(word_frozen.begin(), word_frozen.end(), [](bool b) { return b; }) &&
           std::all_of(sentence_frozen.begin(), sentence_frozen.end(), [](bool b) { return b; });
  };

  for (std::size_t n = 1; n <= config.max_iterations && !all_frozen(); ++n) {
    const auto start = std::chrono::steady_clock::now();
    IterationRecord<Scalar> record;
    record.iteration = n;

    std::vector<Scalar> sentence_increase;
    SentenceSimMatrices<Scalar> sentences = update_sentence_matrices(
        index, result.words, result.sentences, sentence_frozen, prune, &sentence_increase);
    std::vector<Scalar> word_increase;
    WordSimMatrix<Scalar> words = update_word_matrix(index, sentences, result.words, word_frozen,
                                                     config.freq_damping_constant, prune, &word_increase);

    for (Eigen::Index r = 0; r < index.num_rows(); ++r) {
      if (sentence_frozen[r]) continue;
      const bool freeze = sentence_increase[r] <= epsilon;
      record.updates.push_back({ItemKind::Sentence, r, sentence_increase[r], freeze});
      if (freeze) {
        sentence_frozen[r] = true;
        trace.sentence_frozen_at[r] = n;
      }
    }
    for (Eigen::Index w = 0; w < vocab; ++w) {
      if (word_frozen[w]) continue;
      const bool freeze = word_increase[w] <= epsilon;
      record.updates.push_back({ItemKind::Word, w, word_increase[w], freeze});
      if (freeze) {
        word_frozen[w] = true;
        trace.word_frozen_at[w] = n;
      }
    }

    result.sentences = std::move(sentences);
    result.words = std::move(words);
    if (config.record_history) result.history.push_back({result.words, result.sentences});
    record.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    trace.iterations.push_back(std::move(record));
  }
  trace.converged = all_frozen();
  trace.hit_max_iterations = !trace.converged;
  return result;
}

}  // namespace simwsd

#endif  // SIMWSD_SIMILARITY_ENGINE_HPP_
