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

// Exhaustive enumeration of small proper DRSs: a top box with at most one
// marker and at most two conditions (the first atomic), whose complex conditions embed boxes
// of atoms only (nesting depth two). Predicates p/1 and q/1.

#ifndef DRTQ_TESTING_ENUMERATE_H_
#define DRTQ_TESTING_ENUMERATE_H_

#include <functional>
#include <vector>

#include "drtq/term.h"

namespace drtq {
namespace testing {

inline std::vector<Condition> Atoms(const std::vector<Marker> &acc) {
  std::vector<Condition> out;
  for (Marker m : acc) {
    out.push_back(Pred{"p", {m}});
    out.push_back(Pred{"q", {m}});
  }
  for (size_t i = 0; i < acc.size(); ++i) {
    for (size_t j = i + 1; j < acc.size(); ++j) out.push_back(Eq{acc[i], acc[j]});
  }
  return out;
}

// Boxes of atoms: optional fresh marker 'id', then up to two atoms.
inline std::vector<Drs> AtomBoxes(const std::vector<Marker> &acc, int id) {
  std::vector<Drs> out;
  for (int declare = 0; declare < 2; ++declare) {
    std::vector<Marker> universe;
    std::vector<Marker> scope = acc;
    if (declare) {
      universe.push_back(Marker{Sort::kEntity, id});
      scope.push_back(universe.back());
    }
    out.push_back(Drs(universe, {}));
    std::vector<Condition> atoms = Atoms(scope);
    for (size_t i = 0; i < atoms.size(); ++i) {
      out.push_back(Drs(universe, {atoms[i]}));
      for (size_t j = i + 1; j < atoms.size(); ++j) out.push_back(Drs(universe, {atoms[i], atoms[j]}));
    }
  }
  return out;
}

inline std::vector<Condition> SmallConditions(const std::vector<Marker> &acc) {
  std::vector<Condition> out = Atoms(acc);
  for (const Drs &b : AtomBoxes(acc, 2)) out.push_back(Neg{Term::Box(b)});
  for (const Drs &a : AtomBoxes(acc, 2)) {
    std::vector<Marker> inner = acc;
    inner.insert(inner.end(), a.universe().begin(), a.universe().end());
    for (const Drs &c : AtomBoxes(inner, 3)) out.push_back(Impl{Term::Box(a), Term::Box(c)});
    for (const Drs &c : AtomBoxes(acc, 3)) out.push_back(Disj{Term::Box(a), Term::Box(c)});
  }
  return out;
}

inline void ForEachSmallDrs(const std::function<void(const Drs &)> &fn) {
  for (int declare = 0; declare < 2; ++declare) {
    std::vector<Marker> universe;
    if (declare) universe.push_back(Marker{Sort::kEntity, 1});
    std::vector<Condition> conditions = SmallConditions(universe);
    fn(Drs(universe, {}));
    for (size_t i = 0; i < conditions.size(); ++i) {
      fn(Drs(universe, {conditions[i]}));
      if (std::holds_alternative<Pred>(conditions[i]) || std::holds_alternative<Eq>(conditions[i])) {
        for (size_t j = 0; j < conditions.size(); ++j) {
          if (j != i) fn(Drs(universe, {conditions[i], conditions[j]}));
        }
      }
    }
  }
}

}  // namespace testing
}  // namespace drtq

#endif  // DRTQ_TESTING_ENUMERATE_H_
