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

#include "simwsd/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"
#include "simwsd/error.hpp"
#include "simwsd/evaluation.hpp"
#include "simwsd/model_io.hpp"
#include "simwsd/synthetic_corpus.hpp"
#include "simwsd/thesaurus.hpp"

namespace simwsd {

namespace {

struct ConfigFlags {
  std::string config_path;
  std::optional<double> epsilon;
  std::optional<std::size_t> max_iterations;
  std::optional<int> window;
  std::optional<std::size_t> min_count;
  std::optional<double> weight_threshold;
  std::optional<double> high_freq_cutoff;
  std::optional<double> damping;
  bool toy = false;
  bool plain = false;

  void attach(CLI::App* app) {
    app->add_option("--config", config_path, "JSON config file; flags override its values")->check(CLI::ExistingFile);
    app->add_option("--epsilon", epsilon, "freeze threshold");
    app->add_option("--max-iterations", max_iterations, "iteration cap");
    app->add_option("--window", window, "adjacent sentences per side (0 or 1)")->check(CLI::Range(0, 1));
    app->add_option("--min-count", min_count, "minimum training count of a feature");
    app->add_option("--weight-threshold", weight_threshold, "minimum factor product relative to the largest");
    app->add_option("--high-freq-cutoff", high_freq_cutoff, "definition-noun cutoff as a share of max5");
    app->add_option("--damping", damping, "frequency damping constant");
    app->add_flag("--toy", toy, "uniform weights, no filters, no damping");
    app->add_flag("--plain", plain, "untagged input");
  }

  PipelineConfig resolve() const {
    PipelineConfig c;
    if (!config_path.empty()) c = config_from_json(read_file(config_path));
    if (epsilon) c.epsilon = *epsilon;
    if (max_iterations) c.max_iterations = *max_iterations;
    if (window) c.window = static_cast<ContextWindow>(*window);
    if (min_count) c.min_feature_count = *min_count;
    if (weight_threshold) c.weight_threshold = *weight_threshold;
    if (high_freq_cutoff) c.high_freq_cutoff = *high_freq_cutoff;
    if (damping) c.freq_damping_constant = *damping;
    if (toy) c.toy_mode = true;
    if (plain) c.input_mode = InputMode::Plain;
    c.validate();
    return c;
  }
};

std::string stem_of(const std::string& word) { return stem_word(normalize_surface(word)); }

std::string default_trace_path(const std::string& model_path) {
  std::filesystem::path p(model_path);
  if (p.extension() == ".json") p.replace_extension();
  return p.string() + ".trace.csv";
}

const Sense* find_sense(const SenseInventory& inv, const std::string& word) {
  for (const Sense& s : inv.senses) {
    if (s.id == word || s.id == stem_of(word)) return &s;
  }
  return nullptr;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app("Similarity-based word sense disambiguation", args.empty() ? "simwsd" : args[0]);
  app.require_subcommand(1);

  ConfigFlags train_flags, eval_flags;
  std::string corpus_path, inventory_path, target, model_out, trace_path;
  CLI::App* train_cmd = app.add_subcommand("train", "train a model for one target word");
  train_cmd->add_option("--corpus", corpus_path, "corpus file")->required()->check(CLI::ExistingFile);
  train_cmd->add_option("--inventory", inventory_path, "sense inventory JSON")->required()->check(CLI::ExistingFile);
  train_cmd->add_option("--target", target, "target word; must match the inventory");
  train_cmd->add_option("--out", model_out, "model file to write")->required();
  train_cmd->add_option("--trace", trace_path, "iteration trace CSV (default: <out>.trace.csv)");
  train_flags.attach(train_cmd);

  std::string model_path, input_path;
  CLI::App* classify_cmd = app.add_subcommand("classify", "tag each input line with a sense");
  classify_cmd->add_option("--model", model_path, "model file")->required()->check(CLI::ExistingFile);
  classify_cmd->add_option("--input", input_path, "input file (default: stdin)")->check(CLI::ExistingFile);

  std::string w1, w2, pseudo_corpus, pseudo_inventory, csv_path, iter_csv_path;
  std::size_t folds = 0;
  CLI::App* eval_cmd = app.add_subcommand("eval-pseudo", "pseudo-word evaluation");
  eval_cmd->add_option("--corpus", pseudo_corpus, "corpus file")->required()->check(CLI::ExistingFile);
  eval_cmd->add_option("--w1", w1, "first component word")->required();
  eval_cmd->add_option("--w2", w2, "second component word")->required();
  eval_cmd->add_option("--inventory", pseudo_inventory,
                       "inventory with senses w1 and w2 (default: <corpus>.inventory.json)");
  eval_cmd->add_option("--folds", folds, "cross-validation folds; 0 = leave-one-out");
  eval_cmd->add_option("--csv", csv_path, "also write the report as CSV");
  eval_cmd->add_option("--iterations-csv", iter_csv_path, "write accuracy per iteration as CSV");
  eval_flags.attach(eval_cmd);

  std::string thes_model, sense_id;
  std::size_t k = 0, min_new = 1;
  CLI::App* thes_cmd = app.add_subcommand("thesaurus", "expand senses into related words");
  thes_cmd->add_option("--model", thes_model, "model file")->required()->check(CLI::ExistingFile);
  thes_cmd->add_option("--k", k, "neighbours added per word")->required()->check(CLI::PositiveNumber);
  thes_cmd->add_option("--sense", sense_id, "sense id (default: every sense)");
  thes_cmd->add_option("--min-new", min_new, "stop when a round adds fewer words");

  std::string synth_out;
  std::uint64_t seed = SyntheticCorpusConfig{}.seed;
  CLI::App* synth_cmd = app.add_subcommand("synth", "write the synthetic two-topic corpus");
  synth_cmd->add_option("--out", synth_out, "corpus file; the inventory goes to <out>.inventory.json")->required();
  synth_cmd->add_option("--seed", seed, "generator seed");

  std::vector<std::string> argv_tail(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
  std::reverse(argv_tail.begin(), argv_tail.end());
  try {
    app.parse(argv_tail);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*train_cmd) {
      const PipelineConfig config = train_flags.resolve();
      const SenseInventory inventory = parse_inventory(read_file(inventory_path));
      if (!target.empty() && stem_of(target) != inventory.target) {
        throw Error("cli", "--target '" + target + "' does not match the inventory target '" + inventory.target + "'");
      }
      const std::vector<Sentence> corpus = tokenize_and_stem(read_file(corpus_path), config.input_mode);
      TrainOptions options;
      const TrainingRun run = train(corpus, inventory, config, options);
      save_model(run.model, model_out);
      const std::string trace = trace_path.empty() ? default_trace_path(model_out) : trace_path;
      write_file(trace, trace_csv(run));
      const TrainingSummary& s = run.model.summary;
      out << "trained '" << inventory.target << "': " << s.originals << " contexts, " << run.model.features.size()
          << " features, " << run.model.clusters.size() << " clusters, " << s.iterations << " iterations"
          << (s.converged ? "" : " (iteration cap reached)") << '\n';
      return kExitOk;
    }

    if (*classify_cmd) {
      const Model model = load_model(model_path);
      std::ifstream file;
      if (!input_path.empty()) file.open(input_path);
      std::istream& src = input_path.empty() ? in : file;
      bool any_failed = false;
      std::string line;
      while (std::getline(src, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        nlohmann::json j;
        try {
          const Classification c = classify_line(model, line);
          j["winner"] = model.inventory.senses[c.winner].id;
          nlohmann::json scores = nlohmann::json::object();
          for (std::size_t s = 0; s < c.sense_scores.size(); ++s) {
            scores[model.inventory.senses[s].id] = c.sense_scores[s];
          }
          j["scores"] = scores;
        } catch (const Error& e) {
          j["error"] = e.what();
          any_failed = true;
        }
        out << j.dump() << '\n';
      }
      return any_failed ? kExitUnclassified : kExitOk;
    }

    if (*eval_cmd) {
      const PipelineConfig config = eval_flags.resolve();
      const std::string inv_path = pseudo_inventory.empty() ? pseudo_corpus + ".inventory.json" : pseudo_inventory;
      if (!std::filesystem::exists(inv_path)) throw Error("cli", "inventory '" + inv_path + "' not found");
      const SenseInventory inventory = parse_inventory(read_file(inv_path));
      const Sense* s1 = find_sense(inventory, w1);
      const Sense* s2 = find_sense(inventory, w2);
      if (!s1 || !s2) throw Error("cli", "inventory has no sense for '" + (s1 ? w2 : w1) + "'");
      const std::vector<Sentence> corpus = tokenize_and_stem(read_file(pseudo_corpus), config.input_mode);
      const PseudoWord pw = make_pseudo_word(corpus, stem_of(w1), stem_of(w2), s1->definition_nouns,
                                             s2->definition_nouns, config.window);
      CrossValidation cv;
      cv.folds = folds;
      cv.per_iteration = !iter_csv_path.empty();
      const EvalReport report = cross_validate(pw, config, cv);
      out << format_table(report);
      if (!csv_path.empty()) write_file(csv_path, format_csv(report));
      if (!iter_csv_path.empty()) write_file(iter_csv_path, format_iteration_csv(report));
      return kExitOk;
    }

    if (*thes_cmd) {
      const Model model = load_model(thes_model);
      if (!sense_id.empty()) {
        out << format_related_words(related_words(model, sense_id, k, min_new));
      } else {
        for (const Sense& s : model.inventory.senses) out << format_related_words(related_words(model, s.id, k, min_new));
      }
      return kExitOk;
    }

    if (*synth_cmd) {
      SyntheticCorpusConfig config;
      config.seed = seed;
      const SyntheticCorpus corpus = generate_two_topic_corpus(config);
      write_file(synth_out, corpus.text);
      write_file(synth_out + ".inventory.json", corpus.inventory_json);
      out << "wrote " << synth_out << " and " << synth_out << ".inventory.json\n";
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitUsage;
}

}  // namespace simwsd
