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

#ifndef SIMWSD_PORTER_STEMMER_HPP_
#define SIMWSD_PORTER_STEMMER_HPP_

#include <string>
#include <string_view>

namespace simwsd {

// Porter (1980) suffix-stripping stemmer for lowercase ASCII words. Words
// containing anything other than a-z, or shorter than three letters, are
// returned unchanged.
std::string porter_stem(std::string_view word);

}  // namespace simwsd

#endif  // SIMWSD_PORTER_STEMMER_HPP_
