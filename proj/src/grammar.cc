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

#include "drtq/grammar.h"

#include <algorithm>
#include <cctype>
#include <map>
#include <utility>

#include "drtq/errors.h"

namespace drtq {
namespace {

using Node = std::shared_ptr<const Derivation>;
using Parses = std::vector<std::pair<Node, size_t>>;

Node MakeLeaf(const Item &item, const LexicalEntry *entry) {
  auto d = std::make_shared<Derivation>();
  d->label = std::string(CategoryName(entry->category));
  d->leaf = entry;
  d->surface = item.surface;
  return d;
}

Node MakeNode(std::string label, std::vector<Node> children, int functor,
              std::string surface = "") {
  auto d = std::make_shared<Derivation>();
  d->label = std::move(label);
  if (surface.empty()) {
    for (const Node &c : children) surface += (surface.empty() ? "" : " ") + c->surface;
  }
  d->surface = std::move(surface);
  d->children = std::move(children);
  d->functor = functor;
  return d;
}

class SentenceParser {
 public:
  explicit SentenceParser(const std::vector<Item> &items) : items_(items) {}

  std::vector<Derivation> Run() {
    std::vector<Derivation> out;
    for (const auto &[node, end] : Top(0)) {
      if (end == items_.size()) out.push_back(*node);
    }
    if (out.empty()) {
      std::string prefix;
      for (size_t i = 0; i < furthest_; ++i) {
        prefix += (prefix.empty() ? "" : " ") + items_[i].surface;
      }
      throw ParseError("no parse; longest parsed prefix: '" + prefix + "'", prefix);
    }
    return out;
  }

 private:
  std::vector<const LexicalEntry *> At(size_t i, Category category) const {
    std::vector<const LexicalEntry *> out;
    if (i >= items_.size()) return out;
    for (const LexicalEntry *e : items_[i].entries) {
      if (e->category == category) out.push_back(e);
    }
    return out;
  }

  void Reached(size_t end) { furthest_ = std::max(furthest_, end); }

  Parses Top(size_t i) {
    Parses out;
    for (const LexicalEntry *conj : At(i, Category::kConj)) {
      Reached(i + 1);
      Node c = MakeLeaf(items_[i], conj);
      for (const auto &[s1, e1] : S(i + 1)) {
        if (e1 >= items_.size() || items_[e1].form != ",") continue;
        Reached(e1 + 1);
        for (const auto &[s2, e2] : S(e1 + 1)) {
          Node head = MakeNode("Cond", {c, s1}, 0);
          out.emplace_back(MakeNode("S", {head, s2}, 0,
                                    head->surface + ", " + s2->surface),
                           e2);
        }
      }
    }
    for (auto &p : S(i)) out.push_back(p);
    return out;
  }

  Parses S(size_t i) {
    Parses out;
    for (const auto &[np, e1] : NP(i)) {
      for (const auto &[vp, e2] : VP(e1)) {
        out.emplace_back(MakeNode("S", {np, vp}, 0), e2);
        Reached(e2);
      }
    }
    for (const LexicalEntry *sv : At(i, Category::kSVerb)) {
      Reached(i + 1);
      Node v = MakeLeaf(items_[i], sv);
      for (const auto &[np, e] : NP(i + 1)) {
        out.emplace_back(MakeNode("S", {v, np}, 1), e);
      }
    }
    return out;
  }

  Parses NP(size_t i) {
    Parses out;
    for (const LexicalEntry *det : At(i, Category::kDet)) {
      for (const LexicalEntry *noun : At(i + 1, Category::kNoun)) {
        out.emplace_back(
            MakeNode("NP", {MakeLeaf(items_[i], det), MakeLeaf(items_[i + 1], noun)}, 0), i + 2);
        Reached(i + 2);
      }
    }
    for (Category c : {Category::kName, Category::kPron}) {
      for (const LexicalEntry *e : At(i, c)) {
        out.emplace_back(MakeLeaf(items_[i], e), i + 1);
        Reached(i + 1);
      }
    }
    return out;
  }

  Parses VP(size_t i) {
    Parses out;
    for (const LexicalEntry *adv : At(i, Category::kAdv)) {
      Node a = MakeLeaf(items_[i], adv);
      for (const auto &[vp, e] : VP(i + 1)) out.emplace_back(MakeNode("VP", {a, vp}, 0), e);
    }
    for (const LexicalEntry *iv : At(i, Category::kIVerb)) {
      out.emplace_back(MakeLeaf(items_[i], iv), i + 1);
      Reached(i + 1);
    }
    for (const LexicalEntry *tv : At(i, Category::kTVerb)) {
      Node v = MakeLeaf(items_[i], tv);
      for (const auto &[np, e] : NP(i + 1)) {
        if (tv->particle.empty()) {
          out.emplace_back(MakeNode("VP", {v, np}, 1), e);
        } else if (e < items_.size() && !At(e, Category::kParticle).empty() &&
                   items_[e].form == tv->particle) {
          out.emplace_back(
              MakeNode("VP", {v, np}, 1,
                       v->surface + " " + np->surface + " " + items_[e].surface),
              e + 1);
          Reached(e + 1);
        }
      }
    }
    for (const LexicalEntry *asp : At(i, Category::kAspVerb)) {
      Node v = MakeLeaf(items_[i], asp);
      for (const auto &[np, e] : NP(i + 1)) out.emplace_back(MakeNode("VP", {v, np}, 0), e);
      out.emplace_back(v, i + 1);
      Reached(i + 1);
    }
    return out;
  }

  const std::vector<Item> &items_;
  size_t furthest_ = 0;
};

struct Partial {
  Term term;
  std::vector<BuildStep> steps;
};

class Builder {
 public:
  Builder(const Lexicon &lexicon, FreshSupply &supply) : lexicon_(lexicon), supply_(supply) {}

  std::vector<Partial> Run(const Derivation &d) {
    InstantiateLeaves(d);
    return Build(d);
  }

 private:
  void InstantiateLeaves(const Derivation &d) {
    if (d.leaf != nullptr) {
      leaves_[&d] = Instantiate(d.leaf->sem, supply_);
      return;
    }
    for (const auto &c : d.children) InstantiateLeaves(*c);
  }

  std::vector<Partial> Compose(const std::vector<Partial> &functors, const std::string &fs,
                               const std::vector<Partial> &arguments, const std::string &as) {
    std::vector<Partial> out;
    for (const Partial &f : functors) {
      for (const Partial &a : arguments) {
        std::vector<Composition> comps;
        try {
          comps = FunctionalComposition(f.term, a.term, supply_);
        } catch (const CompositionError &e) {
          throw CompositionError("cannot compose '" + fs + "' with '" + as + "': " + e.what());
        }
        for (Composition &c : comps) {
          Partial p;
          p.term = c.result;
          p.steps = f.steps;
          p.steps.insert(p.steps.end(), a.steps.begin(), a.steps.end());
          p.steps.push_back(BuildStep{fs, as, f.term, a.term, std::move(c)});
          out.push_back(std::move(p));
        }
      }
    }
    if (out.empty()) {
      SemType ft = TypeOf(functors.front().term);
      SemType at = TypeOf(arguments.front().term);
      std::string msg = "cannot compose '" + fs + "' (" + ft.ToString() + ") with '" + as +
                        "' (" + at.ToString() + ")";
      if (at.is_fn() && !(at.arg() == SemType::E())) {
        msg += ": '" + as + "' still expects an argument of type " + at.arg().ToString();
      } else if (ft.is_fn()) {
        msg += ": '" + fs + "' expects an argument of type " + ft.arg().ToString();
      }
      throw CompositionError(msg);
    }
    return out;
  }

  std::vector<Partial> Build(const Derivation &d) {
    if (d.leaf != nullptr) return {Partial{leaves_.at(&d), {}}};
    const Derivation &f = *d.children[d.functor];
    const Derivation &a = *d.children[1 - d.functor];
    std::vector<Partial> fs = Build(f);
    std::vector<Partial> as = Build(a);
    std::vector<Partial> out = Compose(fs, f.surface, as, a.surface);
    if (d.label == "S") out = CloseTense(std::move(out), d.surface);
    return out;
  }

  std::vector<Partial> CloseTense(std::vector<Partial> partials, const std::string &surface) {
    static const SemType kEventType = SemType::Fn(SemType::E(), SemType::T());
    std::vector<Partial> out;
    for (Partial &p : partials) {
      if (!(TypeOf(p.term) == kEventType)) {
        out.push_back(std::move(p));
        continue;
      }
      const LexicalEntry *tense = nullptr;
      for (const LexicalEntry &e : lexicon_.entries()) {
        if (e.category == Category::kTense) {
          tense = &e;
          break;
        }
      }
      if (tense == nullptr) throw CompositionError("no tense entry to close '" + surface + "'");
      Partial t{Instantiate(tense->sem, supply_), {}};
      for (Partial &q : Compose({t}, tense->form, {p}, surface)) out.push_back(std::move(q));
    }
    return out;
  }

  const Lexicon &lexicon_;
  FreshSupply &supply_;
  std::map<const Derivation *, Term> leaves_;
};

}  // namespace

const std::vector<std::pair<std::string, std::string>> &NormalizationTable() {
  static const std::vector<std::pair<std::string, std::string>> kTable = {
      {"began", "begin"},    {"begins", "begin"},   {"begun", "begin"},
      {"invited", "invite"}, {"invites", "invite"}, {"came", "come"},
      {"comes", "come"},     {"throws", "throw"},   {"threw", "throw"},
      {"thrown", "throw"},   {"attends", "attend"}, {"attended", "attend"},
      {"gave", "give"},      {"gives", "give"},     {"given", "give"},
      {"goes", "go"},        {"went", "go"},        {"wrote", "write"},
      {"writes", "write"},   {"written", "write"},  {"reads", "read"},
  };
  return kTable;
}

std::vector<Token> Tokenize(std::string_view text) {
  static const std::map<std::string, std::string> kLemmas(NormalizationTable().begin(),
                                                          NormalizationTable().end());
  std::vector<Token> out;
  std::string word;
  auto flush = [&] {
    if (word.empty()) return;
    auto it = kLemmas.find(word);
    out.push_back(Token{word, it == kLemmas.end() ? word : it->second});
    word.clear();
  };
  for (char raw : text) {
    unsigned char c = static_cast<unsigned char>(raw);
    if (std::isalnum(c) || c == '-' || c == '_' || c >= 0x80) {
      word += static_cast<char>(std::tolower(c));
    } else {
      flush();
      if (c == ',') out.push_back(Token{",", ","});
    }
  }
  flush();
  return out;
}

std::vector<Item> Segment(const std::vector<Token> &tokens, const Lexicon &lexicon) {
  std::vector<Item> out;
  int max_words = std::max(1, lexicon.MaxWords());
  size_t i = 0;
  while (i < tokens.size()) {
    if (tokens[i].is_comma()) {
      out.push_back(Item{",", ",", {}});
      ++i;
      continue;
    }
    bool matched = false;
    for (size_t len = std::min<size_t>(max_words, tokens.size() - i); len >= 1; --len) {
      std::string form;
      std::string surface;
      bool comma = false;
      for (size_t k = i; k < i + len; ++k) {
        comma = comma || tokens[k].is_comma();
        form += (k > i ? " " : "") + tokens[k].lemma;
        surface += (k > i ? " " : "") + tokens[k].text;
      }
      if (comma) continue;
      std::vector<const LexicalEntry *> entries = lexicon.Lookup(form);
      if (entries.empty()) continue;
      out.push_back(Item{form, surface, std::move(entries)});
      i += len;
      matched = true;
      break;
    }
    if (!matched) throw UnknownWordError(tokens[i].text);
  }
  return out;
}

std::string Derivation::ToString() const {
  if (leaf != nullptr) return label + ":" + surface;
  std::string out = "[" + label;
  for (size_t i = 0; i < children.size(); ++i) {
    out += " " + std::string(static_cast<int>(i) == functor ? "*" : "") + children[i]->ToString();
  }
  return out + "]";
}

std::vector<Derivation> ParseSentence(const std::vector<Item> &items) {
  return SentenceParser(items).Run();
}

std::vector<SentenceReading> BuildSentenceDrs(const Derivation &derivation,
                                              const Lexicon &lexicon, FreshSupply &supply) {
  std::vector<SentenceReading> out;
  for (Partial &p : Builder(lexicon, supply).Run(derivation)) {
    if (!p.term.is_box()) {
      throw CompositionError("'" + derivation.surface + "' does not reduce to a DRS (type " +
                             TypeOf(p.term).ToString() + ")");
    }
    out.push_back(SentenceReading{p.term.box(), std::move(p.steps)});
  }
  return out;
}

std::vector<std::string> SplitSentences(std::string_view text) {
  std::vector<std::string> out;
  std::string current;
  bool comment = false;
  auto flush = [&] {
    size_t b = current.find_first_not_of(" \t\r");
    if (b != std::string::npos) {
      size_t e = current.find_last_not_of(" \t\r");
      out.push_back(current.substr(b, e - b + 1));
    }
    current.clear();
  };
  for (char c : text) {
    if (c == '\n') {
      comment = false;
      current += ' ';
      continue;
    }
    if (comment) continue;
    if (c == '#') {
      comment = true;
      continue;
    }
    current += c;
    if (c == '.' || c == '!' || c == '?') flush();
  }
  flush();
  return out;
}

std::vector<DiscourseState> ProcessDiscourse(const std::vector<std::string> &sentences,
                                             const Lexicon &lexicon,
                                             const ResolveOptions &options) {
  std::vector<DiscourseState> states(1);
  bool all = options.policy == ReadingPolicy::kAllReadings;
  for (size_t index = 0; index < sentences.size(); ++index) {
    const std::string &sentence = sentences[index];
    try {
      std::vector<Item> items = Segment(Tokenize(sentence), lexicon);
      std::vector<Derivation> derivations = ParseSentence(items);
      std::vector<DiscourseState> next;
      std::optional<ResolutionError> failure;
      for (const DiscourseState &state : states) {
        FreshSupply supply(state.next_id);
        supply.Reserve(MaxId(state.main));
        std::vector<SentenceReading> readings;
        std::optional<CompositionError> build_failure;
        for (const Derivation &d : derivations) {
          try {
            for (SentenceReading &r : BuildSentenceDrs(d, lexicon, supply)) {
              readings.push_back(std::move(r));
            }
          } catch (const CompositionError &e) {
            if (!build_failure) build_failure = e;
          }
        }
        if (readings.empty()) throw *build_failure;
        ResolveOptions opts = options;
        opts.context = state.main;
        for (const SentenceReading &r : readings) {
          std::vector<Reading> resolved;
          try {
            resolved = ResolveAll(Merge(state.main, r.drs), opts);
          } catch (const ResolutionError &e) {
            if (!failure) failure = e;
            continue;
          }
          for (Reading &rd : resolved) {
            DiscourseState s;
            s.main = rd.resolved;
            s.history = state.history;
            s.next_id = std::max(supply.peek(), MaxId(rd.resolved) + 1);
            s.history.push_back(HistoryItem{sentence, std::move(rd)});
            next.push_back(std::move(s));
            if (!all || static_cast<int>(next.size()) >= options.max_readings) break;
          }
          if (!all && !next.empty()) break;
          if (static_cast<int>(next.size()) >= options.max_readings) break;
        }
        if (!all && !next.empty()) break;
      }
      if (next.empty()) throw *failure;
      states = std::move(next);
    } catch (Error &e) {
      e.set_sentence(static_cast<int>(index));
      throw;
    }
  }
  return states;
}

}  // namespace drtq
