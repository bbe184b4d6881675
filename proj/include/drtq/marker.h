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

#ifndef DRTQ_MARKER_H_
#define DRTQ_MARKER_H_

#include <compare>
#include <cstdint>
#include <string>

namespace drtq {

// Sort of a discourse marker. Entities and events both inhabit type e;
// kAny is used for pronoun markers that may pick up either ("it").
enum class Sort : uint8_t { kEntity, kEvent, kAny };

// Single-letter prefix used in the linear text form: x, e, u.
char SortLetter(Sort sort);

// True if an anaphoric marker of sort 'anaphor' may be identified with an
// antecedent marker of sort 'antecedent'.
bool SortsCompatible(Sort anaphor, Sort antecedent);

// A discourse marker. Ids are unique within one derivation; the sort is
// part of the identity only for printing, never reused across sorts.
struct Marker {
  Sort sort = Sort::kEntity;
  int id = 0;

  friend auto operator<=>(const Marker &a, const Marker &b) = default;
};

// "x:3", "e:12", "u:7".
std::string ToString(Marker m);

// "x3", "e12", used in box rendering.
std::string ShortName(Marker m);

}  // namespace drtq

#endif  // DRTQ_MARKER_H_
