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

#ifndef DRTQ_RESOLUTION_H_
#define DRTQ_RESOLUTION_H_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "drtq/drs.h"

namespace drtq {

// A total map from the markers of an anaphoric DRS to markers of a
// candidate DRS.
using Mapping = std::vector<std::pair<Marker, Marker>>;

std::string ToString(const Mapping &m);

// Every sort-compatible, total assignment U(k_alpha) -> U(candidate) that
// sends each condition of k_alpha into the candidate's conditions. Markers
// are never mapped onto themselves. Ordered by candidate universe order.
std::vector<Mapping> SuitableMappings(const Drs &k_alpha, const Drs &candidate);

enum class Mechanism { kLink, kBridge, kAccommodate };

std::string_view MechanismName(Mechanism m);

struct Outcome {
  Drs result;
  DrsPath site;  // antecedent box (link), CA site (bridge), or target box
  Mapping mapping;
};

// Paths of the payloads of all alpha conditions, in traversal order.
std::vector<DrsPath> AlphaPaths(const Drs &root);

// The three mechanisms. 'alpha' is the path of an alpha condition's payload,
// i.e. host path plus the step into the alpha condition.
std::vector<Outcome> Link(const Drs &root, const DrsPath &alpha);
std::vector<Outcome> Bridge(const Drs &root, const DrsPath &alpha);

struct AcceptOptions {
  int domain_bound = 4;
  Drs context;
};

std::vector<Outcome> Accommodate(const Drs &root, const DrsPath &alpha,
                                 const AcceptOptions &options = {});

struct ResolveOneResult {
  Mechanism mechanism = Mechanism::kLink;
  std::vector<Outcome> outcomes;
};

// Link if possible, else bridge, else accommodate. Markers with no
// conditions (pronouns) only link. Throws ResolutionError when nothing
// applies.
ResolveOneResult ResolveOne(const Drs &root, const DrsPath &alpha,
                            const AcceptOptions &options = {});

struct Step {
  DrsPath alpha;
  Mechanism mechanism = Mechanism::kLink;
  DrsPath site;
  Mapping mapping;
  std::vector<Marker> anaphor;  // universe of the resolved alpha DRS

  // alpha@/0R/0 -> Link @/0L [m: x:7->x:3]
  std::string ToString() const;
};

struct Reading {
  Drs resolved;
  std::vector<Step> steps;
  std::vector<std::string> felicity_notes;
};

enum class ResolutionOrder { kPronounsLast, kTextual, kPronounsFirst };
enum class ReadingPolicy { kBestFirst, kAllReadings };

struct ResolveOptions {
  ResolutionOrder order = ResolutionOrder::kPronounsLast;
  ReadingPolicy policy = ReadingPolicy::kBestFirst;
  int domain_bound = 4;
  // Noun predicates whose unanchored accommodation is flagged.
  std::set<std::string> bridging_nouns;
  // Cap on readings kept under kAllReadings.
  int max_readings = 64;
  // Discourse so far; accommodation must be informative with respect to it.
  Drs context;
};

// Resolves alpha conditions one at a time until none is left. Throws
// ResolutionError if some alpha cannot be consumed.
std::vector<Reading> ResolveAll(const Drs &root, const ResolveOptions &options = {});

struct Acceptability {
  bool ok = false;
  bool degenerate = false;  // bound 0: checks vacuous
  std::string reason;
};

// Acceptability of a resolution candidate: it leaves no free markers
// other than those of still pending presuppositions, its projection is
// consistent, and the context does not already entail it. Both model
// checks run up to 'domain_bound' individuals.
Acceptability Acceptable(const Drs &candidate, const Drs &context, int domain_bound);

// 'root' with every alpha condition dropped and every free marker declared
// at the top.
Drs Projection(const Drs &root);

}  // namespace drtq

#endif  // DRTQ_RESOLUTION_H_
