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

#ifndef DRTQ_COMPOSITION_H_
#define DRTQ_COMPOSITION_H_

#include <vector>

#include "drtq/drs.h"
#include "drtq/term.h"

namespace drtq {

// Simple type of a term. Markers have type e, boxes and merges type t.
// Throws TypeError on ill-typed terms.
SemType TypeOf(const Term &term);

// Normal-order beta normal form. Merges of two boxes collapse into one box.
Term BetaReduce(const Term &term, FreshSupply &supply);

// Copy of a lexical template with every marker and variable id replaced by
// a fresh one.
Term Instantiate(const Term &tmpl, FreshSupply &supply);

// Renames every binder (lambda parameters and universe markers) fresh,
// leaving free occurrences alone.
Term RenameBinders(const Term &term, FreshSupply &supply);

// Payloads of every qualia condition in the term, at any depth, in
// traversal order. Payloads are not searched for further qualia.
struct Quale {
  QualiaRole role;
  Term payload;
};
std::vector<Quale> QualiaAccess(const Term &term);

struct Composition {
  Term result;
  int sigma = 0;  // length of the abstracted argument prefix
  bool coerced = false;
  QualiaRole role = QualiaRole::kFormal;  // meaningful when coerced
  Term quale;                             // the coerced payload
};

// functor (.) argument. Tries the plain rule first and falls back to type
// coercion of the argument (depth one) when allow_coercion is set. Results
// are ordered Agentive, Telic, Formal, Constitutive, then by position. An
// empty result means the two do not compose. Throws CompositionError when
// the functor has no function type.
std::vector<Composition> FunctionalComposition(const Term &functor, const Term &argument,
                                               FreshSupply &supply,
                                               bool allow_coercion = true);

// The argument-side coercions of an NP-like term: the term composed, as
// functor, with each of its own qualia.
std::vector<Composition> TypeCoercion(const Term &term, FreshSupply &supply);

}  // namespace drtq

#endif  // DRTQ_COMPOSITION_H_
