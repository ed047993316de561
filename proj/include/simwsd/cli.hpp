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

#ifndef SIMWSD_CLI_HPP_
#define SIMWSD_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace simwsd {

// Exit status of run_command.
enum ExitCode : int {
  kExitOk = 0,
  kExitError = 1,          // a module reported an error
  kExitUsage = 2,          // bad command line
  kExitUnclassified = 3,   // classify: some input lines could not be classified
};

// Runs one subcommand: train, classify, eval-pseudo, thesaurus or synth.
// args[0] is the program name.
int run_command(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace simwsd

#endif  // SIMWSD_CLI_HPP_
