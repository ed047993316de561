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

#ifndef SIMWSD_TESTS_SUPPORT_FIXTURES_HPP_
#define SIMWSD_TESTS_SUPPORT_FIXTURES_HPP_

#include <string>
#include <vector>

#include "simwsd/similarity_engine.hpp"

namespace simwsd::testing {

// The three fragments "eat banana", "taste banana", "eat apple" with uniform
// weights. Feature ids: apple 0, banana 1, eat 2, taste 3.
inline constexpr Eigen::Index kApple = 0, kBanana = 1, kEat = 2, kTaste = 3;

inline const char* kToyCorpus = "eat_V banana_N\ntaste_V banana_N\neat_V apple_N\n";

inline std::vector<std::string> toy_stems() { return {"appl", "banana", "eat", "tast"}; }

inline SimilarityProblem<double> toy_problem() {
  SimilarityProblem<double> p;
  p.vocabulary_size = 4;
  p.originals = {{{kBanana, kEat}, {0.5, 0.5}}, {{kBanana, kTaste}, {0.5, 0.5}}, {{kApple, kEat}, {0.5, 0.5}}};
  p.frequencies = {1, 2, 2, 1};
  return p;
}

inline EngineConfig toy_engine_config(std::size_t iterations = 10) {
  EngineConfig c;
  c.max_iterations = iterations;
  c.freq_damping_constant = std::nullopt;
  c.prune_threshold = 0.0;
  c.record_history = true;
  return c;
}

}  // namespace simwsd::testing

#endif  // SIMWSD_TESTS_SUPPORT_FIXTURES_HPP_
