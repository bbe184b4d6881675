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

#include "drtq/text.h"

#include <cctype>

#include "drtq/errors.h"

namespace drtq {
namespace {

std::string ParamToLinear(const Param &param) {
  if (const auto *m = std::get_if<Marker>(&param)) return ToString(*m) + ":e";
  const auto &v = std::get<HoVar>(param);
  return "v:" + std::to_string(v.id) + ":" + v.type.ToString();
}

std::string MarkerList(const std::vector<Marker> &markers) {
  std::string out = "[";
  for (size_t i = 0; i < markers.size(); ++i) {
    if (i > 0) out += ",";
    out += ToString(markers[i]);
  }
  return out + "]";
}

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  Term Term_() {
    Skip();
    size_t start = pos_;
    std::string word = Word();
    if (Peek() == ':') return Atom(word, start);
    Expect('(');
    Term result;
    if (word == "drs") {
      result = Term::Box(DrsBody());
    } else if (word == "lam") {
      Param param = ParamSpec();
      Expect(',');
      Term body = Term_();
      result = Term::Lam(param, body);
    } else if (word == "app" || word == "oplus") {
      Term a = Term_();
      Expect(',');
      Term b = Term_();
      result = word == "app" ? Term::App(a, b) : Term::Merge(a, b);
    } else {
      Fail("unknown term constructor '" + word + "'", start);
    }
    Expect(')');
    return result;
  }

  Drs Drs_() {
    Skip();
    size_t start = pos_;
    if (Word() != "drs") Fail("expected drs(", start);
    Expect('(');
    Drs d = DrsBody();
    Expect(')');
    return d;
  }

  void End() {
    Skip();
    if (pos_ != text_.size()) Fail("trailing input", pos_);
  }

 private:
  Drs DrsBody() {
    std::vector<Marker> universe;
    Expect('[');
    if (!TryConsume(']')) {
      do {
        universe.push_back(MarkerRef());
      } while (TryConsume(','));
      Expect(']');
    }
    Expect(',');
    std::vector<Condition> conditions;
    Expect('[');
    if (!TryConsume(']')) {
      do {
        conditions.push_back(Condition_());
      } while (TryConsume(','));
      Expect(']');
    }
    return Drs(std::move(universe), std::move(conditions));
  }

  Condition Condition_() {
    Skip();
    size_t start = pos_;
    std::string word = Word();
    Expect('(');
    Condition c;
    if (word == "pred") {
      Pred p;
      Skip();
      p.name = Word();
      if (p.name.empty()) Fail("expected predicate name", pos_);
      Expect(',');
      Expect('[');
      if (!TryConsume(']')) {
        do {
          p.args.push_back(MarkerRef());
        } while (TryConsume(','));
        Expect(']');
      }
      c = std::move(p);
    } else if (word == "eq") {
      Marker a = MarkerRef();
      Expect(',');
      c = Eq{a, MarkerRef()};
    } else if (word == "impl" || word == "or") {
      Term a = Term_();
      Expect(',');
      Term b = Term_();
      if (word == "impl") {
        c = Impl{a, b};
      } else {
        c = Disj{a, b};
      }
    } else if (word == "not") {
      c = Neg{Term_()};
    } else if (word == "alpha") {
      c = Alpha{Term_()};
    } else if (word == "qualia") {
      Skip();
      size_t at = pos_;
      auto role = ParseRole(Word());
      if (!role) Fail("unknown qualia role", at);
      Expect(',');
      c = Qualia{*role, Term_()};
    } else {
      Fail("unknown condition '" + word + "'", start);
    }
    Expect(')');
    return c;
  }

  Marker MarkerRef() {
    Skip();
    size_t start = pos_;
    std::string word = Word();
    Term t = Atom(word, start);
    if (t.kind() != Term::Kind::kRef) Fail("expected a discourse marker", start);
    return t.marker();
  }

  // sort ':' id, optionally ':' type. 'v' requires a type.
  Term Atom(const std::string &sort, size_t start) {
    Expect(':');
    int id = Number();
    std::optional<SemType> type;
    if (Peek() == ':') {
      ++pos_;
      type = Type();
    }
    if (sort == "v") {
      if (!type) Fail("variable needs a type", start);
      return Term::Var(HoVar{id, *type});
    }
    if (type && !(*type == SemType::E())) Fail("marker typed other than e", start);
    if (sort == "x") return Term::Ref(Marker{Sort::kEntity, id});
    if (sort == "e") return Term::Ref(Marker{Sort::kEvent, id});
    if (sort == "u") return Term::Ref(Marker{Sort::kAny, id});
    Fail("unknown marker sort '" + sort + "'", start);
    return Term();
  }

  Param ParamSpec() {
    Skip();
    size_t start = pos_;
    Term t = Atom(Word(), start);
    if (t.kind() == Term::Kind::kRef) return t.marker();
    return t.var();
  }

  SemType Type() {
    Skip();
    size_t start = pos_;
    int depth = 0;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '<') {
        ++depth;
      } else if (c == '>') {
        if (--depth < 0) break;
      } else if ((c == ',' || c == ')' || c == ']') && depth == 0) {
        break;
      }
      ++pos_;
    }
    std::string spelled;
    for (size_t i = start; i < pos_; ++i) {
      if (!std::isspace(static_cast<unsigned char>(text_[i]))) spelled += text_[i];
    }
    try {
      return SemType::Parse(spelled);
    } catch (const SyntaxError &) {
      Fail("bad type '" + spelled + "'", start);
    }
    return SemType();
  }

  int Number() {
    Skip();
    size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (start == pos_) Fail("expected a number", start);
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }

  std::string Word() {
    Skip();
    size_t start = pos_;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '-') break;
      ++pos_;
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  void Skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  char Peek() {
    Skip();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool TryConsume(char c) {
    if (Peek() != c) return false;
    ++pos_;
    return true;
  }

  void Expect(char c) {
    if (!TryConsume(c)) Fail(std::string("expected '") + c + "'", pos_);
  }

  [[noreturn]] void Fail(const std::string &message, size_t at) {
    int line = 1;
    int col = 1;
    for (size_t i = 0; i < at && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw SyntaxError(message, line, col);
  }

  std::string_view text_;
  size_t pos_ = 0;
};

}  // namespace

std::string ToLinear(const Condition &c) {
  if (const auto *p = std::get_if<Pred>(&c)) {
    return "pred(" + p->name + "," + MarkerList(p->args) + ")";
  }
  if (const auto *eq = std::get_if<Eq>(&c)) {
    return "eq(" + ToString(eq->left) + "," + ToString(eq->right) + ")";
  }
  if (const auto *impl = std::get_if<Impl>(&c)) {
    return "impl(" + ToLinear(impl->antecedent) + "," + ToLinear(impl->consequent) + ")";
  }
  if (const auto *neg = std::get_if<Neg>(&c)) return "not(" + ToLinear(neg->inner) + ")";
  if (const auto *disj = std::get_if<Disj>(&c)) {
    return "or(" + ToLinear(disj->left) + "," + ToLinear(disj->right) + ")";
  }
  if (const auto *alpha = std::get_if<Alpha>(&c)) {
    return "alpha(" + ToLinear(alpha->inner) + ")";
  }
  const auto &q = std::get<Qualia>(c);
  return "qualia(" + std::string(RoleName(q.role)) + "," + ToLinear(q.inner) + ")";
}

std::string ToLinear(const Drs &drs) {
  std::string out = "drs(" + MarkerList(drs.universe()) + ",[";
  for (size_t i = 0; i < drs.conditions().size(); ++i) {
    if (i > 0) out += ",";
    out += ToLinear(drs.conditions()[i]);
  }
  return out + "])";
}

std::string ToLinear(const Term &term) {
  switch (term.kind()) {
    case Term::Kind::kBox: return ToLinear(term.box());
    case Term::Kind::kRef: return ToString(term.marker());
    case Term::Kind::kVar:
      return "v:" + std::to_string(term.var().id) + ":" + term.var().type.ToString();
    case Term::Kind::kLam:
      return "lam(" + ParamToLinear(term.param()) + "," + ToLinear(term.body()) + ")";
    case Term::Kind::kApp:
      return "app(" + ToLinear(term.fn()) + "," + ToLinear(term.arg()) + ")";
    case Term::Kind::kMerge:
      return "oplus(" + ToLinear(term.left()) + "," + ToLinear(term.right()) + ")";
  }
  return "";
}

Drs ParseDrs(std::string_view text) {
  Reader reader(text);
  Drs d = reader.Drs_();
  reader.End();
  return d;
}

Term ParseTerm(std::string_view text) {
  Reader reader(text);
  Term t = reader.Term_();
  reader.End();
  return t;
}

}  // namespace drtq
