// Copyright 2026 The drtq Authors.
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

#ifndef DRTQ_CLI_H_
#define DRTQ_CLI_H_

#include <ostream>

namespace drtq {
namespace cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kParseFailure = 1;       // input, syntax, composition
inline constexpr int kResolutionFailure = 2;
inline constexpr int kLexiconFailure = 3;     // lexicon file, unknown word
inline constexpr int kModelFailure = 4;

// Runs the command line tool. Results go to 'out', warnings and traces
// to 'err'.
//   drtq resolve FILE [--render box|linear] [--all-readings] [--trace]
//                     [--lexicon FILE] [--domain-bound N] [--order ORDER]
//   drtq derive SENTENCE [--render box|linear] [--lexicon FILE]
//   drtq verify FILE --model FILE [--lexicon FILE] [--all-readings]
int Run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace cli
}  // namespace drtq

#endif  // DRTQ_CLI_H_
