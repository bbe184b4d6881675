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

#include "drtq/drs.h"

#include <algorithm>
#include <functional>
#include <map>

#include "drtq/errors.h"

namespace drtq {
namespace {

int SlotIndex(Side side) { return side == Side::kRight ? 1 : 0; }

// The condition a step goes through, checked against the step's side.
const Condition &StepCondition(const Drs &drs, const PathStep &step) {
  if (step.condition < 0 ||
      step.condition >= static_cast<int>(drs.conditions().size())) {
    throw PathError("path step " + std::to_string(step.condition) +
                    " out of range");
  }
  const Condition &c = drs.conditions()[step.condition];
  int slots = SlotCount(c);
  bool ok = (slots == 1 && step.side == Side::kOnly) ||
            (slots == 2 && step.side != Side::kOnly);
  if (!ok) {
    throw PathError("path step " + std::to_string(step.condition) +
                    " does not match the condition's arity");
  }
  return c;
}

const Drs &StepInto(const Drs &drs, const PathStep &step) {
  const Term &slot = Slot(StepCondition(drs, step), SlotIndex(step.side));
  if (!slot.is_box()) throw PathError("path step leads into a lambda term");
  return slot.box();
}

void MaxIdInto(const Term &term, int &max);

void MaxIdInto(const Drs &drs, int &max) {
  for (Marker m : drs.universe()) max = std::max(max, m.id);
  for (const Condition &c : drs.conditions()) {
    if (const auto *p = std::get_if<Pred>(&c)) {
      for (Marker m : p->args) max = std::max(max, m.id);
    } else if (const auto *eq = std::get_if<Eq>(&c)) {
      max = std::max({max, eq->left.id, eq->right.id});
    } else {
      for (int i = 0; i < SlotCount(c); ++i) MaxIdInto(Slot(c, i), max);
    }
  }
}

void MaxIdInto(const Term &term, int &max) {
  switch (term.kind()) {
    case Term::Kind::kBox: MaxIdInto(term.box(), max); break;
    case Term::Kind::kRef: max = std::max(max, term.marker().id); break;
    case Term::Kind::kVar: max = std::max(max, term.var().id); break;
    case Term::Kind::kLam:
      max = std::max(max, ParamId(term.param()));
      MaxIdInto(term.body(), max);
      break;
    case Term::Kind::kApp:
      MaxIdInto(term.fn(), max);
      MaxIdInto(term.arg(), max);
      break;
    case Term::Kind::kMerge:
      MaxIdInto(term.left(), max);
      MaxIdInto(term.right(), max);
      break;
  }
}

void CollectPaths(const Drs &drs, DrsPath &prefix, std::vector<DrsPath> &out) {
  out.push_back(prefix);
  for (int i = 0; i < static_cast<int>(drs.conditions().size()); ++i) {
    const Condition &c = drs.conditions()[i];
    int slots = SlotCount(c);
    for (int s = 0; s < slots; ++s) {
      const Term &slot = Slot(c, s);
      if (!slot.is_box()) continue;
      Side side = slots == 1 ? Side::kOnly : (s == 0 ? Side::kLeft : Side::kRight);
      prefix.push_back(PathStep{i, side});
      CollectPaths(slot.box(), prefix, out);
      prefix.pop_back();
    }
  }
}

// Scoped traversal used for free markers and bound renaming. 'scope' holds
// the markers declared by subordinating universes and enclosing lambdas.
using Scope = std::set<Marker>;

void FreeInTerm(const Term &term, const Scope &scope, std::set<Marker> &out);

void FreeInDrs(const Drs &drs, Scope scope, std::set<Marker> &out) {
  for (Marker m : drs.universe()) scope.insert(m);
  for (const Condition &c : drs.conditions()) {
    if (const auto *p = std::get_if<Pred>(&c)) {
      for (Marker m : p->args) {
        if (!scope.count(m)) out.insert(m);
      }
    } else if (const auto *eq = std::get_if<Eq>(&c)) {
      if (!scope.count(eq->left)) out.insert(eq->left);
      if (!scope.count(eq->right)) out.insert(eq->right);
    } else if (const auto *impl = std::get_if<Impl>(&c)) {
      FreeInTerm(impl->antecedent, scope, out);
      Scope inner = scope;
      if (impl->antecedent.is_box()) {
        for (Marker m : impl->antecedent.box().universe()) inner.insert(m);
      }
      FreeInTerm(impl->consequent, inner, out);
    } else {
      for (int i = 0; i < SlotCount(c); ++i) FreeInTerm(Slot(c, i), scope, out);
    }
  }
}

void FreeInTerm(const Term &term, const Scope &scope, std::set<Marker> &out) {
  switch (term.kind()) {
    case Term::Kind::kBox: FreeInDrs(term.box(), scope, out); break;
    case Term::Kind::kRef:
      if (!scope.count(term.marker())) out.insert(term.marker());
      break;
    case Term::Kind::kVar: break;
    case Term::Kind::kLam: {
      Scope inner = scope;
      if (const auto *m = std::get_if<Marker>(&term.param())) inner.insert(*m);
      FreeInTerm(term.body(), inner, out);
      break;
    }
    case Term::Kind::kApp:
      FreeInTerm(term.fn(), scope, out);
      FreeInTerm(term.arg(), scope, out);
      break;
    case Term::Kind::kMerge:
      FreeInTerm(term.left(), scope, out);
      FreeInTerm(term.right(), scope, out);
      break;
  }
}

using MarkerMap = std::map<Marker, Marker>;

Marker Apply(const MarkerMap &map, Marker m) {
  auto it = map.find(m);
  return it == map.end() ? m : it->second;
}

Term RenameBoundTerm(const Term &term, const Scope &scope, const MarkerMap &map);

Drs RenameBoundDrs(const Drs &drs, Scope scope, const MarkerMap &map) {
  for (Marker m : drs.universe()) scope.insert(m);
  auto bound = [&](Marker m) { return scope.count(m) ? Apply(map, m) : m; };
  std::vector<Marker> universe;
  for (Marker m : drs.universe()) universe.push_back(Apply(map, m));
  std::vector<Condition> conditions;
  for (const Condition &c : drs.conditions()) {
    if (const auto *p = std::get_if<Pred>(&c)) {
      Pred renamed{p->name, {}};
      for (Marker m : p->args) renamed.args.push_back(bound(m));
      conditions.push_back(std::move(renamed));
    } else if (const auto *eq = std::get_if<Eq>(&c)) {
      conditions.push_back(Eq{bound(eq->left), bound(eq->right)});
    } else if (const auto *impl = std::get_if<Impl>(&c)) {
      Scope inner = scope;
      if (impl->antecedent.is_box()) {
        for (Marker m : impl->antecedent.box().universe()) inner.insert(m);
      }
      conditions.push_back(Impl{RenameBoundTerm(impl->antecedent, scope, map),
                                RenameBoundTerm(impl->consequent, inner, map)});
    } else {
      conditions.push_back(MapSlots(
          c, [&](const Term &t) { return RenameBoundTerm(t, scope, map); }));
    }
  }
  return Drs(std::move(universe), std::move(conditions));
}

Term RenameBoundTerm(const Term &term, const Scope &scope, const MarkerMap &map) {
  switch (term.kind()) {
    case Term::Kind::kBox: return Term::Box(RenameBoundDrs(term.box(), scope, map));
    case Term::Kind::kRef:
      return scope.count(term.marker()) ? Term::Ref(Apply(map, term.marker())) : term;
    case Term::Kind::kVar: return term;
    case Term::Kind::kLam: {
      Scope inner = scope;
      Param param = term.param();
      if (const auto *m = std::get_if<Marker>(&term.param())) {
        inner.insert(*m);
        param = Apply(map, *m);
      }
      return Term::Lam(param, RenameBoundTerm(term.body(), inner, map));
    }
    case Term::Kind::kApp:
      return Term::App(RenameBoundTerm(term.fn(), scope, map),
                       RenameBoundTerm(term.arg(), scope, map));
    case Term::Kind::kMerge:
      return Term::Merge(RenameBoundTerm(term.left(), scope, map),
                         RenameBoundTerm(term.right(), scope, map));
  }
  return term;
}

void BinderMarkers(const Term &term, std::set<Marker> &out);

void BinderMarkers(const Drs &drs, std::set<Marker> &out) {
  for (Marker m : drs.universe()) out.insert(m);
  for (const Condition &c : drs.conditions()) {
    for (int i = 0; i < SlotCount(c); ++i) BinderMarkers(Slot(c, i), out);
  }
}

void BinderMarkers(const Term &term, std::set<Marker> &out) {
  switch (term.kind()) {
    case Term::Kind::kBox: BinderMarkers(term.box(), out); break;
    case Term::Kind::kLam:
      if (const auto *m = std::get_if<Marker>(&term.param())) out.insert(*m);
      BinderMarkers(term.body(), out);
      break;
    case Term::Kind::kApp:
      BinderMarkers(term.fn(), out);
      BinderMarkers(term.arg(), out);
      break;
    case Term::Kind::kMerge:
      BinderMarkers(term.left(), out);
      BinderMarkers(term.right(), out);
      break;
    default: break;
  }
}

int CountAlphaTerm(const Term &term);

int CountAlphaDrs(const Drs &drs) {
  int count = 0;
  for (const Condition &c : drs.conditions()) {
    if (std::holds_alternative<Alpha>(c)) ++count;
    for (int i = 0; i < SlotCount(c); ++i) count += CountAlphaTerm(Slot(c, i));
  }
  return count;
}

int CountAlphaTerm(const Term &term) {
  switch (term.kind()) {
    case Term::Kind::kBox: return CountAlphaDrs(term.box());
    case Term::Kind::kLam: return CountAlphaTerm(term.body());
    case Term::Kind::kApp: return CountAlphaTerm(term.fn()) + CountAlphaTerm(term.arg());
    case Term::Kind::kMerge:
      return CountAlphaTerm(term.left()) + CountAlphaTerm(term.right());
    default: return 0;
  }
}

Term RenameAllTerm(const Term &term, const MarkerMap &map);

Drs RenameAllDrs(const Drs &drs, const MarkerMap &map) {
  std::vector<Marker> universe;
  for (Marker m : drs.universe()) universe.push_back(Apply(map, m));
  std::vector<Condition> conditions;
  for (const Condition &c : drs.conditions()) {
    if (const auto *p = std::get_if<Pred>(&c)) {
      Pred renamed{p->name, {}};
      for (Marker m : p->args) renamed.args.push_back(Apply(map, m));
      conditions.push_back(std::move(renamed));
    } else if (const auto *eq = std::get_if<Eq>(&c)) {
      conditions.push_back(Eq{Apply(map, eq->left), Apply(map, eq->right)});
    } else {
      conditions.push_back(
          MapSlots(c, [&](const Term &t) { return RenameAllTerm(t, map); }));
    }
  }
  return Drs(std::move(universe), std::move(conditions));
}

Term RenameAllTerm(const Term &term, const MarkerMap &map) {
  switch (term.kind()) {
    case Term::Kind::kBox: return Term::Box(RenameAllDrs(term.box(), map));
    case Term::Kind::kRef: return Term::Ref(Apply(map, term.marker()));
    case Term::Kind::kVar: return term;
    case Term::Kind::kLam: {
      Param param = term.param();
      if (const auto *m = std::get_if<Marker>(&param)) param = Apply(map, *m);
      return Term::Lam(param, RenameAllTerm(term.body(), map));
    }
    case Term::Kind::kApp:
      return Term::App(RenameAllTerm(term.fn(), map), RenameAllTerm(term.arg(), map));
    case Term::Kind::kMerge:
      return Term::Merge(RenameAllTerm(term.left(), map),
                         RenameAllTerm(term.right(), map));
  }
  return term;
}

// Backtracking isomorphism check in continuation-passing style so that a
// choice made deep inside one condition can be revised when a later sibling
// fails to match.
struct Bindings {
  std::map<Marker, Marker> fwd;
  std::map<Marker, Marker> bwd;
  std::map<int, int> var_fwd;
  std::map<int, int> var_bwd;
};

using Cont = std::function<bool(const Bindings &)>;

bool BindMarker(Marker a, Marker b, Bindings &bs) {
  if (a.sort != b.sort) return false;
  auto f = bs.fwd.find(a);
  auto r = bs.bwd.find(b);
  if (f != bs.fwd.end() || r != bs.bwd.end()) {
    return f != bs.fwd.end() && r != bs.bwd.end() && f->second == b && r->second == a;
  }
  bs.fwd.emplace(a, b);
  bs.bwd.emplace(b, a);
  return true;
}

bool BindVar(const HoVar &a, const HoVar &b, Bindings &bs) {
  if (!(a.type == b.type)) return false;
  auto f = bs.var_fwd.find(a.id);
  auto r = bs.var_bwd.find(b.id);
  if (f != bs.var_fwd.end() || r != bs.var_bwd.end()) {
    return f != bs.var_fwd.end() && r != bs.var_bwd.end() && f->second == b.id &&
           r->second == a.id;
  }
  bs.var_fwd.emplace(a.id, b.id);
  bs.var_bwd.emplace(b.id, a.id);
  return true;
}

bool MatchTerm(const Term &a, const Term &b, Bindings bs, const Cont &k);
bool MatchDrs(const Drs &a, const Drs &b, Bindings bs, const Cont &k);

bool MatchSlots(const Condition &a, const Condition &b, int slot, Bindings bs,
                const Cont &k) {
  if (slot == SlotCount(a)) return k(bs);
  return MatchTerm(Slot(a, slot), Slot(b, slot), std::move(bs),
                   [&](const Bindings &next) { return MatchSlots(a, b, slot + 1, next, k); });
}

bool MatchCondition(const Condition &a, const Condition &b, Bindings bs, const Cont &k) {
  if (a.index() != b.index()) return false;
  if (const auto *pa = std::get_if<Pred>(&a)) {
    const auto &pb = std::get<Pred>(b);
    if (pa->name != pb.name || pa->args.size() != pb.args.size()) return false;
    for (size_t i = 0; i < pa->args.size(); ++i) {
      if (!BindMarker(pa->args[i], pb.args[i], bs)) return false;
    }
    return k(bs);
  }
  if (const auto *ea = std::get_if<Eq>(&a)) {
    const auto &eb = std::get<Eq>(b);
    if (!BindMarker(ea->left, eb.left, bs) || !BindMarker(ea->right, eb.right, bs)) {
      return false;
    }
    return k(bs);
  }
  if (const auto *qa = std::get_if<Qualia>(&a)) {
    if (qa->role != std::get<Qualia>(b).role) return false;
  }
  return MatchSlots(a, b, 0, std::move(bs), k);
}

bool MatchConditions(const Drs &a, const Drs &b, size_t i, std::vector<bool> used,
                     Bindings bs, const Cont &k) {
  if (i == a.conditions().size()) return k(bs);
  for (size_t j = 0; j < b.conditions().size(); ++j) {
    if (used[j]) continue;
    if (a.conditions()[i].index() != b.conditions()[j].index()) continue;
    std::vector<bool> next_used = used;
    next_used[j] = true;
    bool ok = MatchCondition(a.conditions()[i], b.conditions()[j], bs,
                             [&](const Bindings &next) {
                               return MatchConditions(a, b, i + 1, next_used, next, k);
                             });
    if (ok) return true;
  }
  return false;
}

bool MatchUniverse(const Drs &a, const Drs &b, size_t i, std::vector<bool> used,
                   Bindings bs, const Cont &k) {
  if (i == a.universe().size()) return k(bs);
  Marker m = a.universe()[i];
  auto bound = bs.fwd.find(m);
  for (size_t j = 0; j < b.universe().size(); ++j) {
    if (used[j]) continue;
    Marker n = b.universe()[j];
    if (bound != bs.fwd.end() && bound->second != n) continue;
    Bindings next = bs;
    if (!BindMarker(m, n, next)) continue;
    std::vector<bool> next_used = used;
    next_used[j] = true;
    if (MatchUniverse(a, b, i + 1, next_used, next, k)) return true;
  }
  return false;
}

bool MatchDrs(const Drs &a, const Drs &b, Bindings bs, const Cont &k) {
  if (a.universe().size() != b.universe().size() ||
      a.conditions().size() != b.conditions().size()) {
    return false;
  }
  return MatchConditions(
      a, b, 0, std::vector<bool>(b.conditions().size(), false), std::move(bs),
      [&](const Bindings &next) {
        return MatchUniverse(a, b, 0, std::vector<bool>(b.universe().size(), false),
                             next, k);
      });
}

bool MatchTerm(const Term &a, const Term &b, Bindings bs, const Cont &k) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Term::Kind::kBox: return MatchDrs(a.box(), b.box(), std::move(bs), k);
    case Term::Kind::kRef:
      if (!BindMarker(a.marker(), b.marker(), bs)) return false;
      return k(bs);
    case Term::Kind::kVar:
      if (!BindVar(a.var(), b.var(), bs)) return false;
      return k(bs);
    case Term::Kind::kLam: {
      if (a.param().index() != b.param().index()) return false;
      if (const auto *ma = std::get_if<Marker>(&a.param())) {
        if (!BindMarker(*ma, std::get<Marker>(b.param()), bs)) return false;
      } else if (!BindVar(std::get<HoVar>(a.param()), std::get<HoVar>(b.param()), bs)) {
        return false;
      }
      return MatchTerm(a.body(), b.body(), std::move(bs), k);
    }
    case Term::Kind::kApp:
      return MatchTerm(a.fn(), b.fn(), std::move(bs), [&](const Bindings &next) {
        return MatchTerm(a.arg(), b.arg(), next, k);
      });
    case Term::Kind::kMerge:
      return MatchTerm(a.left(), b.left(), std::move(bs), [&](const Bindings &next) {
        return MatchTerm(a.right(), b.right(), next, k);
      });
  }
  return false;
}

}  // namespace

int MaxId(const Term &term) {
  int max = 0;
  MaxIdInto(term, max);
  return max;
}

int MaxId(const Drs &drs) {
  int max = 0;
  MaxIdInto(drs, max);
  return max;
}

std::string ToString(const DrsPath &path) {
  if (path.empty()) return "/";
  std::string out;
  for (const PathStep &step : path) {
    out += "/" + std::to_string(step.condition);
    if (step.side == Side::kLeft) out += "L";
    if (step.side == Side::kRight) out += "R";
  }
  return out;
}

const Drs &SubDrs(const Drs &root, const DrsPath &path) {
  const Drs *drs = &root;
  for (const PathStep &step : path) drs = &StepInto(*drs, step);
  return *drs;
}

std::vector<DrsPath> AllPaths(const Drs &root) {
  std::vector<DrsPath> out;
  DrsPath prefix;
  CollectPaths(root, prefix, out);
  return out;
}

Drs Merge(const Drs &k1, const Drs &k2) {
  Drs result = k1;
  for (Marker m : k2.universe()) result.AddMarker(m);
  for (const Condition &c : k2.conditions()) result.AddCondition(c);
  return result;
}

std::vector<std::pair<int, Drs>> QualiaPayloads(const Drs &k) {
  std::vector<std::pair<int, Drs>> out;
  for (int i = 0; i < static_cast<int>(k.conditions().size()); ++i) {
    const auto *q = std::get_if<Qualia>(&k.conditions()[i]);
    if (q != nullptr && q->inner.is_box()) out.emplace_back(i, q->inner.box());
  }
  return out;
}

std::vector<Drs> CoerciveAccommodation(const Drs &k) {
  std::vector<Drs> out;
  for (const auto &[index, payload] : QualiaPayloads(k)) out.push_back(Merge(k, payload));
  return out;
}

std::vector<DrsPath> Subordinators(const Drs &root, const DrsPath &path) {
  SubDrs(root, path);  // validates
  std::vector<DrsPath> out;
  for (int i = static_cast<int>(path.size()) - 1; i >= 0; --i) {
    DrsPath prefix(path.begin(), path.begin() + i);
    const PathStep &step = path[i];
    const Drs &parent = SubDrs(root, prefix);
    if (step.side == Side::kRight &&
        std::holds_alternative<Impl>(parent.conditions()[step.condition])) {
      DrsPath antecedent = prefix;
      antecedent.push_back(PathStep{step.condition, Side::kLeft});
      if (Slot(parent.conditions()[step.condition], 0).is_box()) {
        out.push_back(std::move(antecedent));
      }
    }
    out.push_back(std::move(prefix));
  }
  return out;
}

bool Subordinates(const Drs &root, const DrsPath &p1, const DrsPath &p2) {
  SubDrs(root, p1);  // validates
  for (const DrsPath &p : Subordinators(root, p2)) {
    if (p == p1) return true;
  }
  return false;
}

bool ThroughQualia(const Drs &root, const DrsPath &path) {
  const Drs *drs = &root;
  for (const PathStep &step : path) {
    if (std::holds_alternative<Qualia>(StepCondition(*drs, step))) return true;
    drs = &StepInto(*drs, step);
  }
  return false;
}

std::vector<Marker> AccessibleMarkers(const Drs &root, const DrsPath &from) {
  std::vector<Marker> out;
  auto add = [&](const Drs &drs) {
    for (Marker m : drs.universe()) {
      if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(m);
    }
  };
  add(SubDrs(root, from));
  for (const DrsPath &p : Subordinators(root, from)) {
    if (ThroughQualia(root, p)) continue;
    add(SubDrs(root, p));
  }
  return out;
}

Drs Substitute(const Drs &root, const DrsPath &at, const Drs &replacement) {
  if (at.empty()) return replacement;
  const PathStep &step = at.front();
  const Condition &c = StepCondition(root, step);
  int slot = SlotIndex(step.side);
  if (!Slot(c, slot).is_box()) throw PathError("path step leads into a lambda term");
  DrsPath rest(at.begin() + 1, at.end());
  Drs inner = Substitute(Slot(c, slot).box(), rest, replacement);
  return root.WithCondition(step.condition, WithSlot(c, slot, Term::Box(std::move(inner))));
}

Drs RenameFresh(const Drs &k, const std::set<Marker> &avoid, FreshSupply &supply) {
  supply.Reserve(MaxId(k));
  for (Marker m : avoid) supply.Reserve(m.id);
  std::set<Marker> binders;
  BinderMarkers(k, binders);
  MarkerMap map;
  for (Marker m : binders) {
    if (avoid.count(m)) map.emplace(m, supply.NewMarker(m.sort));
  }
  if (map.empty()) return k;
  return RenameBoundDrs(k, {}, map);
}

std::set<Marker> FreeMarkers(const Drs &root) {
  std::set<Marker> out;
  FreeInDrs(root, {}, out);
  return out;
}

int CountAlpha(const Drs &k) { return CountAlphaDrs(k); }

bool IsProper(const Drs &k) { return CountAlpha(k) == 0 && FreeMarkers(k).empty(); }

Drs RenameMarkers(const Drs &k, const std::vector<std::pair<Marker, Marker>> &mapping) {
  MarkerMap map(mapping.begin(), mapping.end());
  return RenameAllDrs(k, map);
}

bool Isomorphic(const Term &a, const Term &b) {
  return MatchTerm(a, b, Bindings{}, [](const Bindings &) { return true; });
}

bool Isomorphic(const Drs &a, const Drs &b) {
  return MatchDrs(a, b, Bindings{}, [](const Bindings &) { return true; });
}

}  // namespace drtq
