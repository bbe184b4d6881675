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

#ifndef DRTQ_MODEL_H_
#define DRTQ_MODEL_H_

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "drtq/term.h"

namespace drtq {

struct Model {
  std::vector<std::string> domain;
  // Predicate name to the set of argument tuples (indices into domain).
  std::map<std::string, std::set<std::vector<int>>> interpretation;
};

// Reads the model file format:
//   domain: d1 d2 d3
//   pred bar: (d1) (d2)
//   pred of: (d1,d2)
// Throws ModelError.
Model ParseModel(std::string_view text);

// Truth of a proper DRS in a model under the usual embedding semantics.
// Qualia conditions are ignored. Throws ModelError on non-proper input.
bool Verify(const Drs &k, const Model &model);

// Whether some model with 1..bound individuals verifies k.
bool Consistent(const Drs &k, int bound);

// Whether every model with 1..bound individuals verifying k1 verifies k2.
bool Entails(const Drs &k1, const Drs &k2, int bound);

}  // namespace drtq

#endif  // DRTQ_MODEL_H_
