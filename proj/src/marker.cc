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

#include "drtq/marker.h"

namespace drtq {

char SortLetter(Sort sort) {
  switch (sort) {
    case Sort::kEntity: return 'x';
    case Sort::kEvent: return 'e';
    case Sort::kAny: return 'u';
  }
  return '?';
}

bool SortsCompatible(Sort anaphor, Sort antecedent) {
  if (anaphor == Sort::kAny || antecedent == Sort::kAny) return true;
  return anaphor == antecedent;
}

std::string ToString(Marker m) {
  return std::string(1, SortLetter(m.sort)) + ":" + std::to_string(m.id);
}

std::string ShortName(Marker m) {
  return std::string(1, SortLetter(m.sort)) + std::to_string(m.id);
}

}  // namespace drtq
