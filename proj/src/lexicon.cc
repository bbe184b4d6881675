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

#include "drtq/lexicon.h"

#include <algorithm>
#include <cctype>
#include <functional>

#include "drtq/composition.h"
#include "drtq/drs.h"
#include "drtq/errors.h"

namespace drtq {
namespace {

constexpr std::pair<Category, std::string_view> kCategoryNames[] = {
    {Category::kDet, "det"},         {Category::kNoun, "noun"},
    {Category::kName, "name"},       {Category::kPron, "pron"},
    {Category::kTVerb, "tverb"},     {Category::kIVerb, "iverb"},
    {Category::kAspVerb, "aspverb"}, {Category::kSVerb, "sverb"},
    {Category::kAdv, "adv"},         {Category::kTense, "tense"},
    {Category::kConj, "conj"},       {Category::kParticle, "particle"},
};

// ---- tokens

struct Tok {
  enum Kind { kIdent, kString, kPunct, kArrow, kEnd } kind = kEnd;
  std::string text;
  int line = 1;
  int col = 1;
};

bool IdentChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
}

std::vector<Tok> Lex(std::string_view src) {
  std::vector<Tok> out;
  int line = 1;
  int col = 1;
  size_t i = 0;
  auto advance = [&](size_t n) {
    for (size_t k = 0; k < n; ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < src.size()) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    Tok tok;
    tok.line = line;
    tok.col = col;
    if (IdentChar(c)) {
      size_t j = i;
      while (j < src.size() && IdentChar(src[j])) ++j;
      tok.kind = Tok::kIdent;
      tok.text = std::string(src.substr(i, j - i));
      advance(j - i);
    } else if (c == '"') {
      size_t j = i + 1;
      while (j < src.size() && src[j] != '"' && src[j] != '\n') ++j;
      if (j >= src.size() || src[j] != '"') throw SyntaxError("unterminated string", line, col);
      tok.kind = Tok::kString;
      tok.text = std::string(src.substr(i + 1, j - i - 1));
      advance(j + 1 - i);
    } else if (c == '=' && i + 1 < src.size() && src[i + 1] == '>') {
      tok.kind = Tok::kArrow;
      tok.text = "=>";
      advance(2);
    } else if (std::string_view("{};:()[]|,.\\+=@/<>").find(c) != std::string_view::npos) {
      tok.kind = Tok::kPunct;
      tok.text = std::string(1, c);
      advance(1);
    } else {
      throw SyntaxError(std::string("unexpected character '") + c + "'", line, col);
    }
    out.push_back(std::move(tok));
  }
  Tok end;
  end.line = line;
  end.col = col;
  out.push_back(end);
  return out;
}

Sort SortFromName(const std::string &name) {
  auto digits = [&](size_t from) {
    return std::all_of(name.begin() + from, name.end(),
                       [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  };
  if (name[0] == 'e' && digits(1)) return Sort::kEvent;
  if (name[0] == 'u' && digits(1)) return Sort::kAny;
  return Sort::kEntity;
}

// ---- parser

struct QualiaSpec {
  QualiaRole role;
  std::optional<Term> payload;
  std::string ref;  // form after '@'
  int line = 0;
};

struct Pending {
  LexicalEntry entry;
  bool has_sem = false;
  bool has_type = false;
  std::string pred;
  std::vector<QualiaSpec> qualia;
  int line = 0;
};

class Parser {
 public:
  explicit Parser(std::vector<Tok> toks) : toks_(std::move(toks)) {}

  void Run(Lexicon &lexicon, std::vector<Pending> &pending) {
    while (Cur().kind != Tok::kEnd) {
      const Tok &head = Cur();
      if (head.kind != Tok::kIdent) Fail("expected a declaration");
      if (head.text == "pred") {
        ++pos_;
        std::string name = Ident("predicate name");
        ExpectPunct("/");
        const Tok &num = Cur();
        if (num.kind != Tok::kIdent ||
            !std::all_of(num.text.begin(), num.text.end(),
                         [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
          Fail("expected an arity");
        }
        ++pos_;
        try {
          lexicon.Declare(name, std::stoi(num.text));
        } catch (const LexiconError &e) {
          throw LexiconError(std::string(e.what()) + " (line " + std::to_string(num.line) + ")");
        }
        continue;
      }
      pending.push_back(Entry());
    }
  }

 private:
  Pending Entry() {
    Pending p;
    p.line = Cur().line;
    auto category = ParseCategory(Cur().text);
    if (!category) Fail("unknown category '" + Cur().text + "'");
    ++pos_;
    p.entry.category = *category;
    if (Cur().kind != Tok::kIdent && Cur().kind != Tok::kString) Fail("expected a word form");
    p.entry.form = Cur().text;
    ++pos_;
    names_.clear();
    next_id_ = 1;
    if (p.entry.category == Category::kNoun) {
      names_["self"] = Marker{Sort::kEntity, next_id_++};
    }
    ExpectPunct("{");
    size_t sem_at = 0;
    while (!IsPunct("}")) {
      std::string key = Ident("an entry field");
      if (key == "type") {
        ExpectPunct(":");
        p.entry.type = Type();
        p.has_type = true;
        ExpectPunct(";");
      } else if (key == "sem") {
        ExpectPunct(":");
        sem_at = pos_;
        p.has_sem = true;
        int depth = 0;
        while (Cur().kind != Tok::kEnd && !(depth == 0 && IsPunct(";"))) {
          if (IsPunct("(") || IsPunct("[")) ++depth;
          if (IsPunct(")") || IsPunct("]")) --depth;
          ++pos_;
        }
        ExpectPunct(";");
      } else if (key == "pred") {
        ExpectPunct(":");
        p.pred = Ident("a predicate name");
        ExpectPunct(";");
      } else if (key == "particle") {
        ExpectPunct(":");
        p.entry.particle = Ident("a particle");
        ExpectPunct(";");
      } else if (key == "qualia") {
        QualiaSpec q;
        q.line = toks_[pos_ - 1].line;
        auto role = ParseRole(Cur().text);
        if (Cur().kind != Tok::kIdent || !role) Fail("expected a qualia role");
        ++pos_;
        q.role = *role;
        if (IsPunct("@")) {
          ++pos_;
          if (Cur().kind != Tok::kIdent && Cur().kind != Tok::kString) Fail("expected a form");
          q.ref = Cur().text;
          ++pos_;
          ExpectPunct(";");
        } else {
          ExpectPunct("{");
          q.payload = Term::Box(BoxBody("}"));
        }
        p.qualia.push_back(std::move(q));
      } else {
        --pos_;
        Fail("unknown field '" + key + "'");
      }
    }
    ExpectPunct("}");
    if (p.has_sem) {
      if (!p.qualia.empty()) {
        throw LexiconError("entry '" + p.entry.form + "' has both sem and qualia blocks (line " +
                           std::to_string(p.line) + ")");
      }
      size_t end = pos_;
      pos_ = sem_at;
      std::optional<SemType> expected;
      if (p.has_type) expected = p.entry.type;
      p.entry.sem = Operand(expected).term;
      if (!IsPunct(";")) Fail("unexpected token in sem");
      pos_ = end;
    }
    return p;
  }

  // Result of parsing an operand; 'pred' is set for a bare predication so
  // that it can stand as a condition.
  struct Parsed {
    Term term;
    std::optional<Pred> pred;
  };

  static Term AsTerm(const Parsed &p) {
    if (p.pred) return Term::Box(Drs({}, {*p.pred}));
    return p.term;
  }

  Parsed Operand(std::optional<SemType> expected = std::nullopt) {
    if (IsPunct("\\")) {
      ++pos_;
      std::vector<Param> params;
      while (Cur().kind == Tok::kIdent) {
        int line = Cur().line;
        int col = Cur().col;
        std::string name = Ident("a parameter");
        std::optional<SemType> type;
        if (IsPunct(":")) {
          ++pos_;
          type = Type();
        }
        std::optional<SemType> from_expected;
        if (expected && expected->is_fn()) {
          from_expected = expected->arg();
          expected = expected->result();
        } else {
          expected.reset();
        }
        if (!type) type = from_expected;
        if (!type) {
          if (!std::islower(static_cast<unsigned char>(name[0]))) {
            throw SyntaxError("parameter '" + name + "' needs a type", line, col);
          }
          type = SemType::E();
        }
        Param param;
        if (*type == SemType::E()) {
          param = Marker{SortFromName(name), next_id_++};
        } else {
          param = HoVar{next_id_++, *type};
        }
        names_[name] = param;
        params.push_back(param);
      }
      if (params.empty()) Fail("expected parameters");
      ExpectPunct(".");
      Term body = AsTerm(Operand(expected));
      for (auto it = params.rbegin(); it != params.rend(); ++it) body = Term::Lam(*it, body);
      return {body, std::nullopt};
    }
    Parsed first = App();
    if (!IsPunct("+")) return first;
    Term merged = AsTerm(first);
    while (IsPunct("+")) {
      ++pos_;
      merged = Term::Merge(merged, AsTerm(App()));
    }
    return {merged, std::nullopt};
  }

  Parsed App() {
    if (Cur().kind == Tok::kIdent && Peek().kind == Tok::kPunct && Peek().text == "(") {
      auto bound = names_.find(Cur().text);
      if (bound == names_.end() || std::holds_alternative<Marker>(bound->second)) {
        return {Term(), Predication()};
      }
    }
    Term t = Atom();
    while (IsPunct("(")) {
      ++pos_;
      do {
        t = Term::App(t, AsTerm(Operand()));
      } while (TryPunct(","));
      ExpectPunct(")");
    }
    return {t, std::nullopt};
  }

  Term Atom() {
    if (TryPunct("[")) return Term::Box(BoxBody("]"));
    if (TryPunct("(")) {
      Term t = AsTerm(Operand());
      ExpectPunct(")");
      return t;
    }
    std::string name = Ident("a term");
    auto it = names_.find(name);
    if (it != names_.end()) return Term::Of(it->second);
    return Term::Ref(MarkerNamed(name));
  }

  Pred Predication() {
    Pred p;
    p.name = Ident("a predicate");
    ExpectPunct("(");
    if (!TryPunct(")")) {
      do {
        p.args.push_back(MarkerNamed(Ident("a marker")));
      } while (TryPunct(","));
      ExpectPunct(")");
    }
    return p;
  }

  Marker MarkerNamed(const std::string &name) {
    auto it = names_.find(name);
    if (it != names_.end()) {
      if (const auto *m = std::get_if<Marker>(&it->second)) return *m;
      Fail("'" + name + "' is not a discourse marker");
    }
    Marker m{SortFromName(name), next_id_++};
    names_[name] = m;
    return m;
  }

  Drs BoxBody(const char *close) {
    std::vector<Marker> universe;
    while (!IsPunct("|")) {
      if (TryPunct(",")) continue;
      universe.push_back(MarkerNamed(Ident("a marker or '|'")));
    }
    ++pos_;
    std::vector<Condition> conditions;
    if (!IsPunct(close)) {
      do {
        conditions.push_back(ConditionSpec());
      } while (TryPunct(","));
    }
    ExpectPunct(close);
    return Drs(std::move(universe), std::move(conditions));
  }

  Condition ConditionSpec() {
    if (Cur().kind == Tok::kIdent) {
      const std::string &word = Cur().text;
      if (word == "alpha" && Peek().kind == Tok::kPunct && Peek().text == ":") {
        pos_ += 2;
        return Alpha{AsTerm(Operand())};
      }
      if (word == "qualia" && Peek().kind == Tok::kIdent) {
        ++pos_;
        auto role = ParseRole(Cur().text);
        if (!role) Fail("unknown qualia role");
        ++pos_;
        ExpectPunct(":");
        return Qualia{*role, AsTerm(Operand())};
      }
      if (word == "not") {
        ++pos_;
        return Neg{AsTerm(Operand())};
      }
      if (Peek().kind == Tok::kPunct && Peek().text == "=") {
        Marker left = MarkerNamed(Ident("a marker"));
        ExpectPunct("=");
        return Eq{left, MarkerNamed(Ident("a marker"))};
      }
    }
    Parsed first = Operand();
    if (Cur().kind == Tok::kArrow) {
      ++pos_;
      return Impl{AsTerm(first), AsTerm(Operand())};
    }
    if (Cur().kind == Tok::kIdent && Cur().text == "or") {
      ++pos_;
      return Disj{AsTerm(first), AsTerm(Operand())};
    }
    if (!first.pred) Fail("expected a condition");
    return *first.pred;
  }

  SemType Type() {
    if (TryPunct("<")) {
      SemType a = Type();
      ExpectPunct(",");
      SemType b = Type();
      ExpectPunct(">");
      return SemType::Fn(a, b);
    }
    std::string name = Ident("a type");
    if (name == "e") return SemType::E();
    if (name == "t") return SemType::T();
    --pos_;
    Fail("unknown type '" + name + "'");
  }

  std::string Ident(const std::string &what) {
    if (Cur().kind != Tok::kIdent) Fail("expected " + what);
    return toks_[pos_++].text;
  }

  const Tok &Cur() const { return toks_[pos_]; }
  const Tok &Peek() const { return toks_[std::min(pos_ + 1, toks_.size() - 1)]; }

  bool IsPunct(const char *p) const {
    return Cur().kind == Tok::kPunct && Cur().text == p;
  }

  bool TryPunct(const char *p) {
    if (!IsPunct(p)) return false;
    ++pos_;
    return true;
  }

  void ExpectPunct(const char *p) {
    if (!TryPunct(p)) Fail(std::string("expected '") + p + "'");
  }

  [[noreturn]] void Fail(const std::string &message) {
    const Tok &t = Cur();
    std::string found = t.kind == Tok::kEnd ? "end of input" : "'" + t.text + "'";
    throw SyntaxError(message + ", found " + found, t.line, t.col);
  }

  std::vector<Tok> toks_;
  size_t pos_ = 0;
  std::map<std::string, Param> names_;
  int next_id_ = 1;
};

// ---- building and validation

std::string DefaultPred(const std::string &form) {
  std::string out = form;
  std::replace(out.begin(), out.end(), ' ', '-');
  return out;
}

void Fill(Pending &p, const Lexicon &lexicon) {
  LexicalEntry &e = p.entry;
  auto where = [&] { return " (entry '" + e.form + "', line " + std::to_string(p.line) + ")"; };
  if (!p.qualia.empty() && e.category != Category::kNoun) {
    throw LexiconError("only nouns carry qualia" + where());
  }
  if (p.has_sem) {
    if (!p.has_type) {
      if (e.category != Category::kNoun) throw LexiconError("missing type" + where());
      e.type = SemType::Fn(SemType::E(), SemType::T());
    }
    return;
  }
  Marker self{Sort::kEntity, 1};
  Marker other{Sort::kEntity, 2};
  std::string pred = p.pred.empty() ? DefaultPred(e.form) : p.pred;
  SemType et = SemType::Fn(SemType::E(), SemType::T());
  switch (e.category) {
    case Category::kNoun: {
      std::vector<Condition> conditions{Pred{pred, {self}}};
      int next_free = 2;
      for (const QualiaSpec &q : p.qualia) {
        if (q.payload) next_free = std::max(next_free, MaxId(*q.payload) + 1);
      }
      for (const QualiaSpec &q : p.qualia) {
        Term payload;
        if (q.payload) {
          payload = *q.payload;
        } else {
          const LexicalEntry *target = nullptr;
          for (const LexicalEntry *cand : lexicon.Lookup(q.ref)) {
            if (target == nullptr || cand->category == Category::kTVerb) target = cand;
          }
          if (target == nullptr) {
            throw LexiconError("qualia reference to unknown form '" + q.ref + "'" + where());
          }
          // Keep ids unique inside the template.
          FreshSupply supply(next_free);
          payload = RenameBinders(target->sem, supply);
          next_free = supply.peek();
        }
        conditions.push_back(Qualia{q.role, payload});
      }
      e.type = et;
      e.sem = Term::Lam(self, Term::Box(Drs({}, std::move(conditions))));
      break;
    }
    case Category::kTVerb:
      // object first, then subject
      e.type = SemType::Fn(SemType::E(), et);
      e.sem = Term::Lam(other, Term::Lam(self, Term::Box(Drs({}, {Pred{pred, {self, other}}}))));
      break;
    case Category::kIVerb:
    case Category::kSVerb:
      e.type = et;
      e.sem = Term::Lam(self, Term::Box(Drs({}, {Pred{pred, {self}}})));
      break;
    case Category::kParticle:
      e.type = SemType::T();
      e.sem = Term();
      break;
    default:
      throw LexiconError("missing sem" + where());
  }
}

void CheckPreds(const Term &term, const Lexicon &lexicon, const std::string &form);

void CheckPreds(const Drs &drs, const Lexicon &lexicon, const std::string &form) {
  for (const Condition &c : drs.conditions()) {
    if (const auto *p = std::get_if<Pred>(&c)) {
      auto it = lexicon.arities().find(p->name);
      if (it == lexicon.arities().end()) {
        throw LexiconError("undeclared predicate '" + p->name + "' in entry '" + form + "'");
      }
      if (it->second != static_cast<int>(p->args.size())) {
        throw LexiconError("predicate '" + p->name + "' declared with arity " +
                           std::to_string(it->second) + " but used with " +
                           std::to_string(p->args.size()) + " in entry '" + form + "'");
      }
    }
    for (int i = 0; i < SlotCount(c); ++i) CheckPreds(Slot(c, i), lexicon, form);
  }
}

void CheckPreds(const Term &term, const Lexicon &lexicon, const std::string &form) {
  switch (term.kind()) {
    case Term::Kind::kBox: CheckPreds(term.box(), lexicon, form); break;
    case Term::Kind::kLam: CheckPreds(term.body(), lexicon, form); break;
    case Term::Kind::kApp:
      CheckPreds(term.fn(), lexicon, form);
      CheckPreds(term.arg(), lexicon, form);
      break;
    case Term::Kind::kMerge:
      CheckPreds(term.left(), lexicon, form);
      CheckPreds(term.right(), lexicon, form);
      break;
    default: break;
  }
}

void Validate(const LexicalEntry &e, const Lexicon &lexicon) {
  SemType actual;
  try {
    actual = TypeOf(e.sem);
  } catch (const TypeError &err) {
    throw LexiconError("ill-typed semantics for '" + e.form + "': " + err.what());
  }
  if (!(actual == e.type)) {
    throw LexiconError("semantics of '" + e.form + "' has type " + actual.ToString() +
                       ", declared " + e.type.ToString());
  }
  if (e.category != Category::kNoun && !QualiaAccess(e.sem).empty()) {
    throw LexiconError("only nouns carry qualia (entry '" + e.form + "')");
  }
  CheckPreds(e.sem, lexicon, e.form);
}

void ParseInto(Lexicon &lexicon, std::string_view source) {
  std::vector<Pending> pending;
  Parser(Lex(source)).Run(lexicon, pending);
  // Entries without qualia references first so that '@form' can point at
  // entries of the same file.
  std::stable_partition(pending.begin(), pending.end(), [](const Pending &p) {
    return std::none_of(p.qualia.begin(), p.qualia.end(),
                        [](const QualiaSpec &q) { return !q.ref.empty(); });
  });
  for (Pending &p : pending) {
    Fill(p, lexicon);
    Validate(p.entry, lexicon);
    lexicon.Put(std::move(p.entry));
  }
}

// ---- serialization

std::string Name(const Param &p) {
  if (const auto *m = std::get_if<Marker>(&p)) return ShortName(*m);
  return "V" + std::to_string(std::get<HoVar>(p).id);
}

std::string SemText(const Term &term);

std::string OperandText(const Term &term) {
  if (term.kind() == Term::Kind::kLam) return "(" + SemText(term) + ")";
  return SemText(term);
}

std::string ConditionText(const Condition &c) {
  if (const auto *p = std::get_if<Pred>(&c)) {
    std::string s = p->name + "(";
    for (size_t i = 0; i < p->args.size(); ++i) {
      if (i > 0) s += ", ";
      s += ShortName(p->args[i]);
    }
    return s + ")";
  }
  if (const auto *eq = std::get_if<Eq>(&c)) {
    return ShortName(eq->left) + " = " + ShortName(eq->right);
  }
  if (const auto *impl = std::get_if<Impl>(&c)) {
    return OperandText(impl->antecedent) + " => " + OperandText(impl->consequent);
  }
  if (const auto *neg = std::get_if<Neg>(&c)) return "not " + OperandText(neg->inner);
  if (const auto *disj = std::get_if<Disj>(&c)) {
    return OperandText(disj->left) + " or " + OperandText(disj->right);
  }
  if (const auto *alpha = std::get_if<Alpha>(&c)) return "alpha: " + OperandText(alpha->inner);
  const auto &q = std::get<Qualia>(c);
  return "qualia " + std::string(RoleName(q.role)) + ": " + OperandText(q.inner);
}

std::string SemText(const Term &term) {
  switch (term.kind()) {
    case Term::Kind::kBox: {
      std::string s = "[";
      for (Marker m : term.box().universe()) s += ShortName(m) + " ";
      s += "|";
      for (size_t i = 0; i < term.box().conditions().size(); ++i) {
        s += (i > 0 ? ", " : " ") + ConditionText(term.box().conditions()[i]);
      }
      return s + "]";
    }
    case Term::Kind::kRef: return ShortName(term.marker());
    case Term::Kind::kVar: return "V" + std::to_string(term.var().id);
    case Term::Kind::kLam: {
      std::string s = "\\";
      const Term *t = &term;
      while (t->kind() == Term::Kind::kLam) {
        s += Name(t->param()) + ":" + ParamType(t->param()).ToString() + " ";
        t = &t->body();
      }
      s.back() = '.';
      return s + " " + SemText(*t);
    }
    case Term::Kind::kApp: {
      std::string fn = SemText(term.fn());
      if (term.fn().kind() == Term::Kind::kLam || term.fn().kind() == Term::Kind::kMerge) {
        fn = "(" + fn + ")";
      }
      return fn + "(" + SemText(term.arg()) + ")";
    }
    case Term::Kind::kMerge:
      return OperandText(term.left()) + " + " + OperandText(term.right());
  }
  return "";
}

}  // namespace

std::string_view CategoryName(Category category) {
  for (const auto &[c, name] : kCategoryNames) {
    if (c == category) return name;
  }
  return "?";
}

std::optional<Category> ParseCategory(std::string_view name) {
  for (const auto &[c, n] : kCategoryNames) {
    if (n == name) return c;
  }
  return std::nullopt;
}

std::vector<const LexicalEntry *> Lexicon::Lookup(std::string_view form) const {
  std::vector<const LexicalEntry *> out;
  for (const LexicalEntry &e : entries_) {
    if (e.form == form) out.push_back(&e);
  }
  return out;
}

const LexicalEntry *Lexicon::Find(std::string_view form, Category category) const {
  for (const LexicalEntry &e : entries_) {
    if (e.form == form && e.category == category) return &e;
  }
  return nullptr;
}

int Lexicon::MaxWords() const {
  int max = 0;
  for (const LexicalEntry &e : entries_) {
    max = std::max(max, 1 + static_cast<int>(std::count(e.form.begin(), e.form.end(), ' ')));
  }
  return max;
}

void Lexicon::Put(LexicalEntry entry) {
  for (LexicalEntry &e : entries_) {
    if (e.form == entry.form && e.category == entry.category) {
      e = std::move(entry);
      return;
    }
  }
  entries_.push_back(std::move(entry));
}

void Lexicon::Declare(const std::string &pred, int arity) {
  auto [it, inserted] = arities_.emplace(pred, arity);
  if (!inserted && it->second != arity) {
    throw LexiconError("predicate '" + pred + "' redeclared with arity " +
                       std::to_string(arity) + " (was " + std::to_string(it->second) + ")");
  }
}

const Lexicon &BuiltinFragment() {
  static const Lexicon *lexicon = [] {
    auto *lex = new Lexicon;
    ParseInto(*lex, BuiltinFragmentText());
    return lex;
  }();
  return *lexicon;
}

Lexicon ParseLexicon(std::string_view source) {
  Lexicon lexicon;
  ParseInto(lexicon, source);
  return lexicon;
}

Lexicon LoadLexicon(std::string_view source) {
  Lexicon lexicon = BuiltinFragment();
  ParseInto(lexicon, source);
  return lexicon;
}

std::string Serialize(const Lexicon &lexicon) {
  std::string out;
  for (const auto &[name, arity] : lexicon.arities()) {
    out += "pred " + name + "/" + std::to_string(arity) + "\n";
  }
  for (const LexicalEntry &e : lexicon.entries()) {
    out += "\n" + std::string(CategoryName(e.category)) + " \"" + e.form + "\" {\n";
    out += "  type: " + e.type.ToString() + ";\n";
    out += "  sem: " + SemText(e.sem) + ";\n";
    if (!e.particle.empty()) out += "  particle: " + e.particle + ";\n";
    out += "}\n";
  }
  return out;
}

bool Equivalent(const Lexicon &a, const Lexicon &b) {
  if (a.arities() != b.arities() || a.entries().size() != b.entries().size()) return false;
  for (const LexicalEntry &e : a.entries()) {
    const LexicalEntry *f = b.Find(e.form, e.category);
    if (f == nullptr || !(f->type == e.type) || f->particle != e.particle ||
        !Isomorphic(f->sem, e.sem)) {
      return false;
    }
  }
  return true;
}

std::set<std::string> BridgingNouns(const Lexicon &lexicon) {
  std::set<std::string> heads;
  std::set<std::string> in_qualia;
  std::function<void(const Term &, std::set<std::string> &)> preds =
      [&](const Term &t, std::set<std::string> &out) {
        switch (t.kind()) {
          case Term::Kind::kBox:
            for (const Condition &c : t.box().conditions()) {
              if (const auto *p = std::get_if<Pred>(&c)) out.insert(p->name);
              for (int i = 0; i < SlotCount(c); ++i) preds(Slot(c, i), out);
            }
            break;
          case Term::Kind::kLam: preds(t.body(), out); break;
          case Term::Kind::kApp:
            preds(t.fn(), out);
            preds(t.arg(), out);
            break;
          case Term::Kind::kMerge:
            preds(t.left(), out);
            preds(t.right(), out);
            break;
          default: break;
        }
      };
  for (const LexicalEntry &e : lexicon.entries()) {
    if (e.category != Category::kNoun) continue;
    const Term *body = &e.sem;
    while (body->kind() == Term::Kind::kLam) body = &body->body();
    if (body->is_box()) {
      for (const Condition &c : body->box().conditions()) {
        if (const auto *p = std::get_if<Pred>(&c)) heads.insert(p->name);
      }
    }
    for (const Quale &q : QualiaAccess(e.sem)) preds(q.payload, in_qualia);
  }
  std::set<std::string> out;
  for (const std::string &h : heads) {
    if (in_qualia.count(h)) out.insert(h);
  }
  return out;
}

}  // namespace drtq
