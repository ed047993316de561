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

#ifndef SIMWSD_MODEL_IO_HPP_
#define SIMWSD_MODEL_IO_HPP_

#include <string>
#include <string_view>

#include "simwsd/pipeline.hpp"

namespace simwsd {

// Config as JSON. Keys missing from the input keep their defaults; unknown
// keys are rejected.
std::string config_to_json(const PipelineConfig& config);
PipelineConfig config_from_json(std::string_view json_text, PipelineConfig base = {});

std::string model_to_json(const Model& model);
// Throws Error("cli", ...) on malformed input or a version mismatch.
Model model_from_json(std::string_view json_text);

void save_model(const Model& model, const std::string& path);
Model load_model(const std::string& path);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace simwsd

#endif  // SIMWSD_MODEL_IO_HPP_
