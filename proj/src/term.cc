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

#include "drtq/term.h"

#include <algorithm>

#include "drtq/errors.h"

namespace drtq {

std::string_view RoleName(QualiaRole role) {
  switch (role) {
    case QualiaRole::kFormal: return "formal";
    case QualiaRole::kConstitutive: return "constitutive";
    case QualiaRole::kTelic: return "telic";
    case QualiaRole::kAgentive: return "agentive";
  }
  return "?";
}

std::optional<QualiaRole> ParseRole(std::string_view name) {
  if (name == "formal") return QualiaRole::kFormal;
  if (name == "constitutive") return QualiaRole::kConstitutive;
  if (name == "telic") return QualiaRole::kTelic;
  if (name == "agentive") return QualiaRole::kAgentive;
  return std::nullopt;
}

int CoercionRank(QualiaRole role) {
  switch (role) {
    case QualiaRole::kAgentive: return 0;
    case QualiaRole::kTelic: return 1;
    case QualiaRole::kFormal: return 2;
    case QualiaRole::kConstitutive: return 3;
  }
  return 4;
}

SemType ParamType(const Param &param) {
  if (const auto *v = std::get_if<HoVar>(&param)) return v->type;
  return SemType::E();
}

int ParamId(const Param &param) {
  if (const auto *v = std::get_if<HoVar>(&param)) return v->id;
  return std::get<Marker>(param).id;
}

struct Term::Node {
  Kind kind = Kind::kBox;
  Drs drs;
  Marker marker;
  HoVar var;
  Param param;
  Term a;
  Term b;
};

namespace {

const Drs &EmptyDrs() {
  static const Drs *empty = new Drs();
  return *empty;
}

}  // namespace

Term::Term() = default;

Term Term::Box(Drs drs) {
  if (drs.empty()) return Term();
  auto node = std::make_shared<Node>();
  node->kind = Kind::kBox;
  node->drs = std::move(drs);
  return Term(std::move(node));
}

Term Term::Ref(Marker marker) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::kRef;
  node->marker = marker;
  return Term(std::move(node));
}

Term Term::Var(HoVar var) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::kVar;
  node->var = std::move(var);
  return Term(std::move(node));
}

Term Term::Lam(Param param, Term body) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::kLam;
  node->param = std::move(param);
  node->a = std::move(body);
  return Term(std::move(node));
}

Term Term::App(Term fn, Term arg) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::kApp;
  node->a = std::move(fn);
  node->b = std::move(arg);
  return Term(std::move(node));
}

Term Term::Merge(Term left, Term right) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::kMerge;
  node->a = std::move(left);
  node->b = std::move(right);
  return Term(std::move(node));
}

Term Term::Of(const Param &param) {
  if (const auto *m = std::get_if<Marker>(&param)) return Ref(*m);
  return Var(std::get<HoVar>(param));
}

Term::Kind Term::kind() const { return node_ ? node_->kind : Kind::kBox; }

namespace {

[[noreturn]] void WrongKind(const char *what) {
  throw TypeError(std::string("term is not a ") + what);
}

}  // namespace

const Drs &Term::box() const {
  if (!node_) return EmptyDrs();
  if (node_->kind != Kind::kBox) WrongKind("box");
  return node_->drs;
}

Marker Term::marker() const {
  if (kind() != Kind::kRef) WrongKind("marker reference");
  return node_->marker;
}

const HoVar &Term::var() const {
  if (kind() != Kind::kVar) WrongKind("variable");
  return node_->var;
}

const Param &Term::param() const {
  if (kind() != Kind::kLam) WrongKind("lambda");
  return node_->param;
}

const Term &Term::body() const {
  if (kind() != Kind::kLam) WrongKind("lambda");
  return node_->a;
}

const Term &Term::fn() const {
  if (kind() != Kind::kApp) WrongKind("application");
  return node_->a;
}

const Term &Term::arg() const {
  if (kind() != Kind::kApp) WrongKind("application");
  return node_->b;
}

const Term &Term::left() const {
  if (kind() != Kind::kMerge) WrongKind("merge");
  return node_->a;
}

const Term &Term::right() const {
  if (kind() != Kind::kMerge) WrongKind("merge");
  return node_->b;
}

bool operator==(const Term &a, const Term &b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Term::Kind::kBox: return a.box() == b.box();
    case Term::Kind::kRef: return a.marker() == b.marker();
    case Term::Kind::kVar: return a.var() == b.var();
    case Term::Kind::kLam:
      return ParamId(a.param()) == ParamId(b.param()) &&
             a.param().index() == b.param().index() && a.body() == b.body();
    case Term::Kind::kApp: return a.fn() == b.fn() && a.arg() == b.arg();
    case Term::Kind::kMerge: return a.left() == b.left() && a.right() == b.right();
  }
  return false;
}

Drs::Drs(std::vector<Marker> universe, std::vector<Condition> conditions) {
  universe_.reserve(universe.size());
  for (Marker m : universe) AddMarker(m);
  conditions_.reserve(conditions.size());
  for (Condition &c : conditions) AddCondition(std::move(c));
}

bool Drs::Declares(Marker m) const {
  return std::find(universe_.begin(), universe_.end(), m) != universe_.end();
}

bool Drs::Contains(const Condition &c) const {
  return std::find(conditions_.begin(), conditions_.end(), c) != conditions_.end();
}

bool Drs::AddMarker(Marker m) {
  if (Declares(m)) return false;
  universe_.push_back(m);
  return true;
}

bool Drs::AddCondition(Condition c) {
  if (Contains(c)) return false;
  conditions_.push_back(std::move(c));
  return true;
}

Drs Drs::WithoutCondition(int index) const {
  if (index < 0 || index >= static_cast<int>(conditions_.size())) {
    throw PathError("condition index " + std::to_string(index) + " out of range");
  }
  Drs result = *this;
  result.conditions_.erase(result.conditions_.begin() + index);
  return result;
}

Drs Drs::WithCondition(int index, Condition c) const {
  if (index < 0 || index >= static_cast<int>(conditions_.size())) {
    throw PathError("condition index " + std::to_string(index) + " out of range");
  }
  Drs result = *this;
  for (int i = 0; i < static_cast<int>(conditions_.size()); ++i) {
    if (i != index && conditions_[i] == c) {
      // Collapses with an existing condition.
      return WithoutCondition(index);
    }
  }
  result.conditions_[index] = std::move(c);
  return result;
}

bool operator==(const Drs &a, const Drs &b) {
  if (a.universe_.size() != b.universe_.size()) return false;
  if (a.conditions_.size() != b.conditions_.size()) return false;
  for (Marker m : a.universe_) {
    if (!b.Declares(m)) return false;
  }
  for (const Condition &c : a.conditions_) {
    if (!b.Contains(c)) return false;
  }
  return true;
}

int SlotCount(const Condition &c) {
  switch (c.index()) {
    case 0:  // Pred
    case 1:  // Eq
      return 0;
    case 2:  // Impl
    case 4:  // Disj
      return 2;
    default:
      return 1;
  }
}

const Term &Slot(const Condition &c, int slot) {
  if (const auto *impl = std::get_if<Impl>(&c)) {
    return slot == 0 ? impl->antecedent : impl->consequent;
  }
  if (const auto *disj = std::get_if<Disj>(&c)) return slot == 0 ? disj->left : disj->right;
  if (const auto *neg = std::get_if<Neg>(&c)) return neg->inner;
  if (const auto *alpha = std::get_if<Alpha>(&c)) return alpha->inner;
  if (const auto *qualia = std::get_if<Qualia>(&c)) return qualia->inner;
  throw PathError("condition has no DRS slot");
}

Condition WithSlot(const Condition &c, int slot, Term term) {
  Condition result = c;
  if (auto *impl = std::get_if<Impl>(&result)) {
    (slot == 0 ? impl->antecedent : impl->consequent) = std::move(term);
  } else if (auto *disj = std::get_if<Disj>(&result)) {
    (slot == 0 ? disj->left : disj->right) = std::move(term);
  } else if (auto *neg = std::get_if<Neg>(&result)) {
    neg->inner = std::move(term);
  } else if (auto *alpha = std::get_if<Alpha>(&result)) {
    alpha->inner = std::move(term);
  } else if (auto *qualia = std::get_if<Qualia>(&result)) {
    qualia->inner = std::move(term);
  } else {
    throw PathError("condition has no DRS slot");
  }
  return result;
}

}  // namespace drtq
