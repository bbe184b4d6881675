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

#ifndef DRTQ_GRAMMAR_H_
#define DRTQ_GRAMMAR_H_

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "drtq/composition.h"
#include "drtq/lexicon.h"
#include "drtq/resolution.h"

namespace drtq {

struct Token {
  std::string text;   // lowercased surface form, "," for a comma
  std::string lemma;  // after the normalization table
  bool is_comma() const { return text == ","; }
};

// Lowercases, splits on whitespace and punctuation, keeps commas, drops
// other punctuation, and maps inflected forms to lemmas.
std::vector<Token> Tokenize(std::string_view text);

// The inflection table used by Tokenize, as (surface, lemma) pairs.
const std::vector<std::pair<std::string, std::string>> &NormalizationTable();

// A maximal lexical item: one or more tokens matching a lexicon form.
struct Item {
  std::string form;     // lexicon form, or "," for a comma
  std::string surface;  // the covered tokens' surface text
  std::vector<const LexicalEntry *> entries;
};

// Greedy longest-match segmentation. Throws UnknownWordError.
std::vector<Item> Segment(const std::vector<Token> &tokens, const Lexicon &lexicon);

// Binary derivation tree. Children are kept in surface order; 'functor'
// tells which one is composed as the functor.
struct Derivation {
  std::string label;  // category for leaves, rule name otherwise
  const LexicalEntry *leaf = nullptr;
  std::string surface;
  std::vector<std::shared_ptr<const Derivation>> children;
  int functor = 0;

  std::string ToString() const;  // bracketed form
};

// All complete derivations licensed by the fragment grammar. Throws
// ParseError naming the longest parsed prefix.
std::vector<Derivation> ParseSentence(const std::vector<Item> &items);

// One composition step of a build, for tracing.
struct BuildStep {
  std::string functor;   // surface text
  std::string argument;  // surface text
  Term functor_term;
  Term argument_term;
  Composition composition;
};

struct SentenceReading {
  Drs drs;
  std::vector<BuildStep> steps;
};

// Instantiates leaves in surface order and composes bottom-up. Each
// coercion alternative yields its own reading. A sentence of type <e,t>
// is closed off with the tense entry. Throws CompositionError.
std::vector<SentenceReading> BuildSentenceDrs(const Derivation &derivation,
                                              const Lexicon &lexicon, FreshSupply &supply);

// Splits text into sentences after . ! ? (kept); line breaks count as
// spaces; '#' starts a comment that runs to the end of the line.
std::vector<std::string> SplitSentences(std::string_view text);

struct HistoryItem {
  std::string sentence;
  Reading reading;
};

struct DiscourseState {
  Drs main;
  std::vector<HistoryItem> history;
  int next_id = 1;
};

// Parse, build, merge with the main DRS, resolve; sentence by sentence.
// Under kBestFirst the result has one state; under kAllReadings one per
// surviving reading. Errors carry the sentence index.
std::vector<DiscourseState> ProcessDiscourse(const std::vector<std::string> &sentences,
                                             const Lexicon &lexicon,
                                             const ResolveOptions &options = {});

}  // namespace drtq

#endif  // DRTQ_GRAMMAR_H_
