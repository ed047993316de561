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

#include "simwsd/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>

#include "simwsd/error.hpp"

namespace simwsd {

namespace {

[[noreturn]] void fail(const std::string& message) { throw Error("evaluation", message); }

std::string fixed1(double v) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(1) << round_one_decimal(v);
  return out.str();
}

}  // namespace

PseudoWord make_pseudo_word(std::span<const Sentence> corpus, std::string_view w1, std::string_view w2,
                            std::span<const std::string> definitions1, std::span<const std::string> definitions2,
                            ContextWindow window) {
  if (w1.empty() || w2.empty()) fail("pseudo-word components must be non-empty");
  if (w1 == w2) fail("pseudo-word components must differ");
  PseudoWord pw;
  pw.w1 = w1;
  pw.w2 = w2;
  pw.merged = pw.w1 + "+" + pw.w2;
  pw.corpus.assign(corpus.begin(), corpus.end());

  std::map<std::pair<std::size_t, std::size_t>, std::size_t> gold;  // (sentence, token) -> sense
  std::set<std::size_t> mixed;
  std::size_t seen1 = 0, seen2 = 0;
  for (Sentence& s : pw.corpus) {
    bool has1 = false, has2 = false;
    for (Token& t : s.tokens) {
      if (t.stem != pw.w1 && t.stem != pw.w2) continue;
      const std::size_t sense = t.stem == pw.w1 ? 0 : 1;
      (sense == 0 ? has1 : has2) = true;
      (sense == 0 ? seen1 : seen2) += 1;
      gold.emplace(std::make_pair(s.id, t.position), sense);
      t.stem = pw.merged;
      t.surface = pw.merged;
    }
    if (has1 && has2) mixed.insert(s.id);
  }
  if (seen1 == 0) fail("'" + pw.w1 + "' does not occur in the corpus");
  if (seen2 == 0) fail("'" + pw.w2 + "' does not occur in the corpus");

  for (Context& c : extract_contexts(pw.corpus, pw.merged, window)) {
    if (mixed.contains(c.center())) continue;
    const std::size_t g = gold.at({c.target.sentence, c.target.token});
    c.origin = Origin::Test;
    c.id = pw.labeled.size();
    pw.labeled.push_back({std::move(c), g});
  }

  pw.inventory.target = pw.merged;
  const auto definitions = [&](std::span<const std::string> words) {
    std::set<std::string> out;
    for (const std::string& w : words) {
      if (w != pw.w1 && w != pw.w2 && w != pw.merged && !w.empty()) out.insert(w);
    }
    return std::vector<std::string>(out.begin(), out.end());
  };
  pw.inventory.senses.push_back({pw.w1, "pseudo-word component " + pw.w1, definitions(definitions1)});
  pw.inventory.senses.push_back({pw.w2, "pseudo-word component " + pw.w2, definitions(definitions2)});
  validate_inventory(pw.inventory);
  return pw;
}

std::size_t EvalReport::total_size() const {
  std::size_t n = 0;
  for (const SenseReport& s : senses) n += s.sample_size;
  return n;
}

double EvalReport::total_percent() const {
  const std::size_t n = total_size();
  if (n == 0) return 0.0;
  double correct = 0.0;
  for (const SenseReport& s : senses) correct += s.correct;
  return 100.0 * correct / static_cast<double>(n);
}

double EvalReport::majority_baseline() const {
  const std::size_t n = total_size();
  if (n == 0) return 0.0;
  std::size_t largest = 0;
  for (const SenseReport& s : senses) largest = std::max(largest, s.sample_size);
  return 100.0 * static_cast<double>(largest) / static_cast<double>(n);
}

EvalReport EvalReport::from_accuracies(std::string word, std::span<const std::string> senses,
                                       std::span<const std::size_t> sizes, std::span<const double> percents,
                                       std::span<const std::size_t> feedback_sizes) {
  if (senses.size() != sizes.size() || sizes.size() != percents.size() ||
      (!feedback_sizes.empty() && feedback_sizes.size() != sizes.size())) {
    fail("per-sense columns differ in length");
  }
  EvalReport report;
  report.word = std::move(word);
  for (std::size_t i = 0; i < senses.size(); ++i) {
    if (percents[i] < 0.0 || percents[i] > 100.0) fail("percent correct must lie in [0, 100]");
    SenseReport s;
    s.sense = senses[i];
    s.sample_size = sizes[i];
    s.feedback_size = feedback_sizes.empty() ? 0 : feedback_sizes[i];
    s.correct = static_cast<double>(sizes[i]) * percents[i] / 100.0;
    report.senses.push_back(std::move(s));
  }
  return report;
}

double round_one_decimal(double value) { return std::round(value * 10.0) / 10.0; }

std::string format_table(const EvalReport& report) {
  std::size_t word_w = std::max<std::size_t>(4, report.word.size());
  std::size_t sense_w = 5;
  for (const SenseReport& s : report.senses) sense_w = std::max(sense_w, s.sense.size());
  std::ostringstream out;
  const auto row = [&](std::string_view word, std::string_view sense, std::string sample, std::string feedback,
                       std::string pct) {
    out << std::left << std::setw(static_cast<int>(word_w)) << word << "  " << std::setw(static_cast<int>(sense_w))
        << sense << "  " << std::right << std::setw(6) << sample << "  " << std::setw(8) << feedback << "  "
        << std::setw(9) << pct << '\n';
  };
  row("Word", "Sense", "Sample", "Feedback", "% correct");
  for (std::size_t i = 0; i < report.senses.size(); ++i) {
    const SenseReport& s = report.senses[i];
    row(i == 0 ? report.word : "", s.sense, std::to_string(s.sample_size), std::to_string(s.feedback_size),
        fixed1(s.percent()));
  }
  row("", "total", std::to_string(report.total_size()), "", fixed1(report.total_percent()));
  out << "majority baseline: " << fixed1(report.majority_baseline()) << "%";
  if (report.unclassifiable > 0) out << ", unclassifiable: " << report.unclassifiable;
  out << '\n';
  return out.str();
}

std::string format_csv(const EvalReport& report) {
  std::ostringstream out;
  out << "word,sense,sample_size,feedback_size,percent_correct\n";
  for (const SenseReport& s : report.senses) {
    out << report.word << ',' << s.sense << ',' << s.sample_size << ',' << s.feedback_size << ','
        << fixed1(s.percent()) << '\n';
  }
  out << report.word << ",total," << report.total_size() << ",," << fixed1(report.total_percent()) << '\n';
  return out.str();
}

std::string format_iteration_csv(const EvalReport& report) {
  std::ostringstream out;
  out << "iteration,percent_correct\n";
  for (std::size_t i = 0; i < report.per_iteration_total.size(); ++i) {
    out << i + 1 << ',' << fixed1(report.per_iteration_total[i]) << '\n';
  }
  return out.str();
}

std::vector<std::optional<std::size_t>> predict(const Model& model, std::span<const UsageCluster> clusters,
                                                std::span<const Sentence> corpus,
                                                std::span<const LabeledContext> labeled) {
  std::vector<std::optional<std::size_t>> out;
  out.reserve(labeled.size());
  for (const LabeledContext& lc : labeled) {
    try {
      out.push_back(classify_with(model, clusters, materialize(lc.context, corpus)).winner);
    } catch (const Error&) {
      out.push_back(std::nullopt);
    }
  }
  return out;
}

EvalReport make_report(const Model& model, std::span<const LabeledContext> labeled,
                       std::span<const std::optional<std::size_t>> predictions) {
  if (labeled.empty()) fail("labeled set is empty");
  if (labeled.size() != predictions.size()) fail("one prediction per labeled context is required");
  EvalReport report;
  report.word = model.inventory.target;
  for (std::size_t s = 0; s < model.inventory.senses.size(); ++s) {
    SenseReport r;
    r.sense = model.inventory.senses[s].id;
    if (s < model.summary.feedback_sizes.size()) r.feedback_size = model.summary.feedback_sizes[s];
    report.senses.push_back(std::move(r));
  }
  for (std::size_t i = 0; i < labeled.size(); ++i) {
    if (labeled[i].gold >= report.senses.size()) fail("gold sense out of range");
    SenseReport& r = report.senses[labeled[i].gold];
    ++r.sample_size;
    if (!predictions[i]) {
      ++report.unclassifiable;
    } else if (*predictions[i] == labeled[i].gold) {
      r.correct += 1.0;
    }
  }
  return report;
}

EvalReport evaluate(const Model& model, std::span<const Sentence> corpus, std::span<const LabeledContext> labeled) {
  if (labeled.empty()) fail("labeled set is empty");
  return make_report(model, labeled, predict(model, model.clusters, corpus, labeled));
}

EvalReport cross_validate(const PseudoWord& pseudo, const PipelineConfig& config, const CrossValidation& cv) {
  if (pseudo.labeled.empty()) fail("labeled set is empty");
  std::vector<std::size_t> centers;
  for (const LabeledContext& lc : pseudo.labeled) centers.push_back(lc.context.center());
  std::sort(centers.begin(), centers.end());
  centers.erase(std::unique(centers.begin(), centers.end()), centers.end());
  const std::size_t folds = cv.folds == 0 ? centers.size() : std::min(cv.folds, centers.size());

  std::map<std::size_t, std::size_t> fold_of;  // center sentence -> fold
  for (std::size_t i = 0; i < centers.size(); ++i) fold_of[centers[i]] = i % folds;

  std::vector<std::optional<std::size_t>> predictions(pseudo.labeled.size());
  std::vector<std::vector<std::optional<std::size_t>>> by_iteration(
      cv.per_iteration ? config.max_iterations : 0, std::vector<std::optional<std::size_t>>(pseudo.labeled.size()));

  for (std::size_t f = 0; f < folds; ++f) {
    TrainOptions options;
    options.record_history = cv.per_iteration;
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < pseudo.labeled.size(); ++i) {
      const std::size_t center = pseudo.labeled[i].context.center();
      if (fold_of.at(center) != f) continue;
      members.push_back(i);
      options.excluded_sentences.insert(center);
    }
    const TrainingRun run = train(pseudo.corpus, pseudo.inventory, config, options);
    std::vector<LabeledContext> held_out;
    for (std::size_t i : members) held_out.push_back(pseudo.labeled[i]);

    const auto fold_predictions = predict(run.model, run.model.clusters, pseudo.corpus, held_out);
    for (std::size_t k = 0; k < members.size(); ++k) predictions[members[k]] = fold_predictions[k];
    for (std::size_t n = 0; n < by_iteration.size(); ++n) {
      const std::vector<UsageCluster> clusters = run.clusters_at(n + 1);
      const auto p = predict(run.model, clusters, pseudo.corpus, held_out);
      for (std::size_t k = 0; k < members.size(); ++k) by_iteration[n][members[k]] = p[k];
    }
  }

  const TrainingRun full = train(pseudo.corpus, pseudo.inventory, config);
  EvalReport report = make_report(full.model, pseudo.labeled, predictions);
  for (const auto& p : by_iteration) {
    report.per_iteration_total.push_back(make_report(full.model, pseudo.labeled, p).total_percent());
  }
  return report;
}

}  // namespace simwsd
