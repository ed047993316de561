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

#include "simwsd/model_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "simwsd/error.hpp"

namespace simwsd {

namespace {

using nlohmann::json;

constexpr const char* kFormat = "simwsd-model";

[[noreturn]] void fail(const std::string& message) { throw Error("cli", message); }

json pos_weights_json(const PosWeights& w) {
  return {{"noun", w.noun}, {"verb", w.verb}, {"adjective", w.adjective}, {"other", w.other}};
}

json config_json(const PipelineConfig& c) {
  return {{"epsilon", c.epsilon},
          {"max_iterations", c.max_iterations},
          {"window", static_cast<int>(c.window)},
          {"min_feature_count", c.min_feature_count},
          {"weight_threshold", c.weight_threshold},
          {"high_freq_cutoff", c.high_freq_cutoff},
          {"freq_damping_constant", c.freq_damping_constant},
          {"pos_weights", pos_weights_json(c.pos_weights)},
          {"toy_mode", c.toy_mode},
          {"input_mode", c.input_mode == InputMode::Tagged ? "tagged" : "plain"},
          {"prune_threshold", c.prune_threshold}};
}

PipelineConfig apply_config(const json& j, PipelineConfig c) {
  if (!j.is_object()) fail("config must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (key == "epsilon") {
      c.epsilon = value.get<double>();
    } else if (key == "max_iterations") {
      c.max_iterations = value.get<std::size_t>();
    } else if (key == "window") {
      const int w = value.get<int>();
      if (w != 0 && w != 1) fail("window must be 0 or 1");
      c.window = static_cast<ContextWindow>(w);
    } else if (key == "min_feature_count") {
      c.min_feature_count = value.get<std::size_t>();
    } else if (key == "weight_threshold") {
      c.weight_threshold = value.get<double>();
    } else if (key == "high_freq_cutoff") {
      c.high_freq_cutoff = value.get<double>();
    } else if (key == "freq_damping_constant") {
      c.freq_damping_constant = value.get<double>();
    } else if (key == "pos_weights") {
      for (const auto& [pos, w] : value.items()) {
        if (pos == "noun") c.pos_weights.noun = w.get<double>();
        else if (pos == "verb") c.pos_weights.verb = w.get<double>();
        else if (pos == "adjective") c.pos_weights.adjective = w.get<double>();
        else if (pos == "other") c.pos_weights.other = w.get<double>();
        else fail("unknown POS weight '" + pos + "'");
      }
    } else if (key == "toy_mode") {
      c.toy_mode = value.get<bool>();
    } else if (key == "input_mode") {
      const auto mode = value.get<std::string>();
      if (mode == "tagged") c.input_mode = InputMode::Tagged;
      else if (mode == "plain") c.input_mode = InputMode::Plain;
      else fail("input_mode must be 'tagged' or 'plain'");
    } else if (key == "prune_threshold") {
      c.prune_threshold = value.get<double>();
    } else {
      fail("unknown config key '" + key + "'");
    }
  }
  c.validate();
  return c;
}

std::string pos_name(PartOfSpeech pos) { return std::string(1, pos_tag(pos)); }

PartOfSpeech pos_from(const json& j) {
  const auto s = j.get<std::string>();
  const auto pos = s.size() == 1 ? parse_pos_tag(s[0]) : std::nullopt;
  if (!pos) fail("bad POS tag '" + s + "' in model");
  return *pos;
}

ExclusionReason reason_from(const std::string& s) {
  for (ExclusionReason r : {ExclusionReason::RareCount, ExclusionReason::LowWeight, ExclusionReason::StopList}) {
    if (to_string(r) == s) return r;
  }
  fail("bad exclusion reason '" + s + "' in model");
}

json model_json(const Model& m) {
  json j;
  j["format"] = kFormat;
  j["version"] = Model::kVersion;
  j["config"] = config_json(m.config);

  json senses = json::array();
  for (const Sense& s : m.inventory.senses) {
    senses.push_back({{"id", s.id}, {"gloss", s.gloss}, {"definition_nouns", s.definition_nouns}});
  }
  j["inventory"] = {{"target", m.inventory.target}, {"senses", senses}};

  json retained = json::array();
  for (const LexemeFactors& f : m.features.retained) {
    retained.push_back({{"stem", f.stem},
                        {"pos", pos_name(f.pos)},
                        {"corpus_freq", f.corpus_freq},
                        {"training_count", f.training_count},
                        {"global_freq", f.global_freq},
                        {"log_likelihood", f.log_likelihood},
                        {"pos_weight", f.pos_weight}});
  }
  json excluded = json::object();
  for (const auto& [stem, reason] : m.features.excluded) excluded[stem] = std::string(to_string(reason));
  j["features"] = {{"retained", retained}, {"excluded", excluded}};

  json entries = json::array();
  const auto& values = m.words.values;
  for (Eigen::Index r = 0; r < values.outerSize(); ++r) {
    for (SparseRowMatrix<double>::InnerIterator it(values, r); it; ++it) {
      entries.push_back(json::array({it.row(), it.col(), it.value()}));
    }
  }
  j["word_similarity"] = {{"size", values.rows()}, {"iteration", m.words.iteration}, {"entries", entries}};

  json clusters = json::array();
  for (const UsageCluster& c : m.clusters) {
    json affinity = json::array();
    for (Eigen::Index i = 0; i < c.affinity.size(); ++i) {
      if (c.affinity(i) != 0.0) affinity.push_back(json::array({i, c.affinity(i)}));
    }
    clusters.push_back({{"sense", c.sense}, {"anchor", c.anchor}, {"members", c.members}, {"affinity", affinity}});
  }
  j["clusters"] = clusters;

  j["training"] = {{"originals", m.summary.originals},
                   {"dropped_originals", m.summary.dropped_originals},
                   {"feedback_sizes", m.summary.feedback_sizes},
                   {"iterations", m.summary.iterations},
                   {"converged", m.summary.converged}};
  return j;
}

Model parse_model(const json& j) {
  if (!j.is_object()) fail("model file is not a JSON object");
  if (j.at("format").get<std::string>() != kFormat) fail("not a simwsd model file");
  const int version = j.at("version").get<int>();
  if (version != Model::kVersion) {
    fail("unsupported model version " + std::to_string(version) + " (expected " +
         std::to_string(Model::kVersion) + ")");
  }

  Model m;
  m.config = apply_config(j.at("config"), PipelineConfig{});

  const json& inv = j.at("inventory");
  m.inventory.target = inv.at("target").get<std::string>();
  for (const json& s : inv.at("senses")) {
    m.inventory.senses.push_back(
        {s.at("id").get<std::string>(), s.at("gloss").get<std::string>(),
         s.at("definition_nouns").get<std::vector<std::string>>()});
  }
  validate_inventory(m.inventory);

  const json& features = j.at("features");
  for (const json& f : features.at("retained")) {
    LexemeFactors lex;
    lex.stem = f.at("stem").get<std::string>();
    lex.pos = pos_from(f.at("pos"));
    lex.corpus_freq = f.at("corpus_freq").get<std::size_t>();
    lex.training_count = f.at("training_count").get<std::size_t>();
    lex.global_freq = f.at("global_freq").get<double>();
    lex.log_likelihood = f.at("log_likelihood").get<double>();
    lex.pos_weight = f.at("pos_weight").get<double>();
    if (!m.features.retained.empty() && !(m.features.retained.back().stem < lex.stem)) {
      fail("model features are not sorted by stem");
    }
    m.features.retained.push_back(std::move(lex));
  }
  for (const auto& [stem, reason] : features.at("excluded").items()) {
    m.features.excluded.emplace(stem, reason_from(reason.get<std::string>()));
  }
  const auto vocab = static_cast<Eigen::Index>(m.features.size());
  if (vocab == 0) fail("model has no features");

  const json& ws = j.at("word_similarity");
  if (ws.at("size").get<Eigen::Index>() != vocab) fail("word matrix size does not match the feature count");
  m.words.iteration = ws.at("iteration").get<std::size_t>();
  std::vector<Eigen::Triplet<double, Eigen::Index>> triplets;
  for (const json& e : ws.at("entries")) {
    if (!e.is_array() || e.size() != 3) fail("bad word matrix entry");
    const auto r = e[0].get<Eigen::Index>();
    const auto c = e[1].get<Eigen::Index>();
    if (r < 0 || r >= vocab || c < 0 || c >= vocab) fail("word matrix entry out of range");
    triplets.emplace_back(r, c, e[2].get<double>());
  }
  m.words.values.resize(vocab, vocab);
  m.words.values.setFromTriplets(triplets.begin(), triplets.end());

  for (const json& cj : j.at("clusters")) {
    UsageCluster c;
    c.sense = cj.at("sense").get<std::size_t>();
    if (c.sense >= m.inventory.senses.size()) fail("cluster sense out of range");
    c.anchor = cj.at("anchor").get<std::size_t>();
    c.members = cj.at("members").get<std::vector<std::size_t>>();
    c.affinity = Eigen::VectorXd::Zero(vocab);
    for (const json& e : cj.at("affinity")) {
      if (!e.is_array() || e.size() != 2) fail("bad cluster affinity entry");
      const auto i = e[0].get<Eigen::Index>();
      if (i < 0 || i >= vocab) fail("cluster affinity index out of range");
      c.affinity(i) = e[1].get<double>();
    }
    m.clusters.push_back(std::move(c));
  }

  const json& t = j.at("training");
  m.summary.originals = t.at("originals").get<std::size_t>();
  m.summary.dropped_originals = t.at("dropped_originals").get<std::size_t>();
  m.summary.feedback_sizes = t.at("feedback_sizes").get<std::vector<std::size_t>>();
  m.summary.iterations = t.at("iterations").get<std::size_t>();
  m.summary.converged = t.at("converged").get<bool>();
  return m;
}

}  // namespace

std::string config_to_json(const PipelineConfig& config) { return config_json(config).dump(2) + "\n"; }

PipelineConfig config_from_json(std::string_view json_text, PipelineConfig base) {
  try {
    return apply_config(json::parse(json_text), base);
  } catch (const json::exception& e) {
    fail(std::string("invalid config: ") + e.what());
  }
}

std::string model_to_json(const Model& model) { return model_json(model).dump() + "\n"; }

Model model_from_json(std::string_view json_text) {
  try {
    return parse_model(json::parse(json_text));
  } catch (const json::exception& e) {
    fail(std::string("invalid model file: ") + e.what());
  }
}

void save_model(const Model& model, const std::string& path) { write_file(path, model_to_json(model)); }

Model load_model(const std::string& path) { return model_from_json(read_file(path)); }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail("cannot write '" + path + "'");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) fail("write to '" + path + "' failed");
}

}  // namespace simwsd
