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

#ifndef DRTQ_LEXICON_H_
#define DRTQ_LEXICON_H_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "drtq/term.h"

namespace drtq {

enum class Category : uint8_t {
  kDet,
  kNoun,
  kName,
  kPron,
  kTVerb,
  kIVerb,
  kAspVerb,
  kSVerb,  // verb with a built-in first person subject ("i invite")
  kAdv,
  kTense,
  kConj,
  kParticle,
};

std::string_view CategoryName(Category category);
std::optional<Category> ParseCategory(std::string_view name);

struct LexicalEntry {
  std::string form;  // lemma; multiword forms are space separated
  Category category = Category::kNoun;
  SemType type;
  Term sem;              // template; instantiate before use
  std::string particle;  // transitive verbs only, e.g. "out"
};

class Lexicon {
 public:
  const std::vector<LexicalEntry> &entries() const { return entries_; }
  const std::map<std::string, int> &arities() const { return arities_; }

  std::vector<const LexicalEntry *> Lookup(std::string_view form) const;
  const LexicalEntry *Find(std::string_view form, Category category) const;

  // Longest form, in words.
  int MaxWords() const;

  // Adds or replaces the entry with the same form and category.
  void Put(LexicalEntry entry);

  // Throws LexiconError on a conflicting arity.
  void Declare(const std::string &pred, int arity);

 private:
  std::vector<LexicalEntry> entries_;
  std::map<std::string, int> arities_;
};

// The text of the builtin fragment, in the lexicon file format.
std::string_view BuiltinFragmentText();

const Lexicon &BuiltinFragment();

// Parses a lexicon file on its own. Throws SyntaxError or LexiconError.
Lexicon ParseLexicon(std::string_view source);

// Parses a lexicon file over the builtin fragment; file entries win.
Lexicon LoadLexicon(std::string_view source);

std::string Serialize(const Lexicon &lexicon);

// Same arities, and the same entries up to marker renaming.
bool Equivalent(const Lexicon &a, const Lexicon &b);

// Noun predicates that occur inside some other noun's qualia payload, such
// as barkeeper under bar.
std::set<std::string> BridgingNouns(const Lexicon &lexicon);

}  // namespace drtq

#endif  // DRTQ_LEXICON_H_
