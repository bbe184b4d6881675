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

#ifndef DRTQ_DRS_H_
#define DRTQ_DRS_H_

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "drtq/term.h"

namespace drtq {

// Source of fresh marker and variable ids for one derivation. Ids increase
// monotonically and are never handed out twice.
class FreshSupply {
 public:
  explicit FreshSupply(int next = 1) : next_(next) {}

  int NextId() { return next_++; }
  Marker NewMarker(Sort sort) { return Marker{sort, NextId()}; }
  HoVar NewVar(SemType type) { return HoVar{NextId(), std::move(type)}; }

  // Make sure future ids are greater than 'id'.
  void Reserve(int id) {
    if (next_ <= id) next_ = id + 1;
  }

  int peek() const { return next_; }

 private:
  int next_;
};

// Largest marker or variable id occurring anywhere in a term (0 if none).
int MaxId(const Term &term);
int MaxId(const Drs &drs);

// One navigation step from a DRS into the box held by one of its
// conditions. Binary conditions (implication, disjunction) need a side.
enum class Side : uint8_t { kOnly, kLeft, kRight };

struct PathStep {
  int condition = 0;
  Side side = Side::kOnly;
  friend auto operator<=>(const PathStep &a, const PathStep &b) = default;
};

using DrsPath = std::vector<PathStep>;

// "/" for the root, otherwise e.g. "/0L/2".
std::string ToString(const DrsPath &path);

// The sub-DRS at 'path'. Throws PathError if a step does not lead to a box.
const Drs &SubDrs(const Drs &root, const DrsPath &path);

// Paths of all sub-DRSs reachable through box slots, in pre-order, starting
// with the root path. Lambda payloads are not descended into.
std::vector<DrsPath> AllPaths(const Drs &root);

// Merge: union of universes and of condition sets. Markers and conditions
// of k2 are appended after those of k1.
Drs Merge(const Drs &k1, const Drs &k2);

// Coercive accommodation: { k (+) K | Q:K in C(k) } over top-level qualia
// conditions only. Qualia payloads that are lambda terms are skipped.
std::vector<Drs> CoerciveAccommodation(const Drs &k);

// Top-level qualia conditions whose payload is a box, as (condition
// index, payload) pairs.
std::vector<std::pair<int, Drs>> QualiaPayloads(const Drs &k);

// True iff the DRS at p2 is subordinated to the DRS at p1. Irreflexive.
bool Subordinates(const Drs &root, const DrsPath &p1, const DrsPath &p2);

// All paths subordinating 'path', nearest first: the parent, then for an
// implication consequent its antecedent, and so on up to the root.
std::vector<DrsPath> Subordinators(const Drs &root, const DrsPath &path);

// True if the path enters a qualia payload at some step.
bool ThroughQualia(const Drs &root, const DrsPath &path);

// Markers accessible from the DRS at 'from': its own universe plus the
// universes of all subordinating DRSs, excluding those that sit inside
// qualia payloads.
std::vector<Marker> AccessibleMarkers(const Drs &root, const DrsPath &from);

// Replace the sub-DRS at 'at' by 'replacement'.
Drs Substitute(const Drs &root, const DrsPath &at, const Drs &replacement);

// Alpha-variant of k whose bound markers avoid 'avoid'. Free markers are
// left alone.
Drs RenameFresh(const Drs &k, const std::set<Marker> &avoid,
                FreshSupply &supply);

// Markers occurring in conditions with no subordinating universe (or
// enclosing lambda) declaring them.
std::set<Marker> FreeMarkers(const Drs &root);

// No alpha condition anywhere and no free markers.
bool IsProper(const Drs &k);

// Number of alpha conditions anywhere in k (qualia payloads included).
int CountAlpha(const Drs &k);

// Rename markers everywhere according to 'mapping' (markers not in the map
// are kept).
Drs RenameMarkers(const Drs &k, const std::vector<std::pair<Marker, Marker>> &mapping);

// Structural equality up to a bijective, sort-preserving renaming of
// markers and variables. Boxes compare as sets.
bool Isomorphic(const Term &a, const Term &b);
bool Isomorphic(const Drs &a, const Drs &b);

}  // namespace drtq

#endif  // DRTQ_DRS_H_
