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

#ifndef DRTQ_TERM_H_
#define DRTQ_TERM_H_

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "drtq/marker.h"
#include "drtq/semtype.h"

namespace drtq {

// The four qualia roles.
enum class QualiaRole : uint8_t { kFormal, kConstitutive, kTelic, kAgentive };

// "formal", "constitutive", "telic", "agentive".
std::string_view RoleName(QualiaRole role);
std::optional<QualiaRole> ParseRole(std::string_view name);

// Position of a role in the coercion preference order: agentive, telic,
// formal, constitutive.
int CoercionRank(QualiaRole role);

// A variable of higher type, e.g. the property variable P of a determiner.
// Variables of type e are discourse markers instead.
struct HoVar {
  int id = 0;
  SemType type;

  friend bool operator==(const HoVar &a, const HoVar &b) { return a.id == b.id; }
};

// A lambda parameter: a marker (type e) or a higher-order variable.
using Param = std::variant<Marker, HoVar>;

SemType ParamType(const Param &param);
int ParamId(const Param &param);

class Drs;

// Immutable lambda-DRS term. Copies share structure.
//
//   Box      <U,C>
//   Ref      a marker used as an argument, P(x)
//   Var      a higher-order variable occurrence
//   Lam      lambda p. body
//   App      f(a)
//   Merge    a (+) b
class Term {
 public:
  enum class Kind : uint8_t { kBox, kRef, kVar, kLam, kApp, kMerge };

  // The empty box.
  Term();

  static Term Box(Drs drs);
  static Term Ref(Marker marker);
  static Term Var(HoVar var);
  static Term Lam(Param param, Term body);
  static Term App(Term fn, Term arg);
  static Term Merge(Term left, Term right);

  // Term standing for a parameter: Ref for markers, Var otherwise.
  static Term Of(const Param &param);

  Kind kind() const;
  bool is_box() const { return kind() == Kind::kBox; }

  // Accessors; each is valid only for the matching kind.
  const Drs &box() const;
  Marker marker() const;
  const HoVar &var() const;
  const Param &param() const;
  const Term &body() const;
  const Term &fn() const;
  const Term &arg() const;
  const Term &left() const;
  const Term &right() const;

  // Structural equality; boxes compare as sets.
  friend bool operator==(const Term &a, const Term &b);

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;  // null means the empty box
};

// DRS conditions.
struct Pred {
  std::string name;
  std::vector<Marker> args;
  friend bool operator==(const Pred &a, const Pred &b) = default;
};

struct Eq {
  Marker left;
  Marker right;
  friend bool operator==(const Eq &a, const Eq &b) = default;
};

struct Impl {
  Term antecedent;
  Term consequent;
  friend bool operator==(const Impl &a, const Impl &b) = default;
};

struct Neg {
  Term inner;
  friend bool operator==(const Neg &a, const Neg &b) = default;
};

struct Disj {
  Term left;
  Term right;
  friend bool operator==(const Disj &a, const Disj &b) = default;
};

struct Alpha {
  Term inner;
  friend bool operator==(const Alpha &a, const Alpha &b) = default;
};

struct Qualia {
  QualiaRole role = QualiaRole::kFormal;
  Term inner;
  friend bool operator==(const Qualia &a, const Qualia &b) = default;
};

using Condition = std::variant<Pred, Eq, Impl, Neg, Disj, Alpha, Qualia>;

// A pair <U,C>. Universe and conditions behave as sets: inserting a
// duplicate is a no-op and equality ignores order. Insertion order is kept
// so that printing follows construction order and paths stay stable when
// material is appended.
class Drs {
 public:
  Drs() = default;
  Drs(std::vector<Marker> universe, std::vector<Condition> conditions);

  const std::vector<Marker> &universe() const { return universe_; }
  const std::vector<Condition> &conditions() const { return conditions_; }

  bool empty() const { return universe_.empty() && conditions_.empty(); }
  bool Declares(Marker m) const;
  bool Contains(const Condition &c) const;

  // Append unless already present. Return true if something was added.
  bool AddMarker(Marker m);
  bool AddCondition(Condition c);

  // Copy with the condition at 'index' removed.
  Drs WithoutCondition(int index) const;

  // Copy with the condition at 'index' replaced. The replacement stays at
  // the same index unless it duplicates another condition, in which case
  // the two collapse.
  Drs WithCondition(int index, Condition c) const;

  friend bool operator==(const Drs &a, const Drs &b);

 private:
  std::vector<Marker> universe_;
  std::vector<Condition> conditions_;
};

// Number of sub-term slots of a condition (0 for Pred/Eq, 2 for Impl/Disj,
// 1 otherwise) and access to them.
int SlotCount(const Condition &c);
const Term &Slot(const Condition &c, int slot);
Condition WithSlot(const Condition &c, int slot, Term term);

// Rebuild a condition or DRS with every slot term transformed by fn.
template <typename Fn>
Condition MapSlots(const Condition &c, Fn &&fn) {
  Condition result = c;
  for (int i = 0; i < SlotCount(c); ++i) {
    result = WithSlot(result, i, fn(Slot(c, i)));
  }
  return result;
}

template <typename Fn>
Drs MapSlots(const Drs &drs, Fn &&fn) {
  std::vector<Condition> conditions;
  conditions.reserve(drs.conditions().size());
  for (const Condition &c : drs.conditions()) {
    conditions.push_back(MapSlots(c, fn));
  }
  return Drs(drs.universe(), std::move(conditions));
}

}  // namespace drtq

#endif  // DRTQ_TERM_H_
