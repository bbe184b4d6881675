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

#include "drtq/composition.h"

#include <algorithm>
#include <map>
#include <set>

#include "drtq/errors.h"

namespace drtq {
namespace {

struct IdMap {
  std::map<Marker, Marker> markers;
  std::map<int, HoVar> vars;
};

Marker MapMarker(const IdMap &map, Marker m) {
  auto it = map.markers.find(m);
  return it == map.markers.end() ? m : it->second;
}

HoVar MapVar(const IdMap &map, const HoVar &v) {
  auto it = map.vars.find(v.id);
  return it == map.vars.end() ? v : it->second;
}

Term RenameIds(const Term &term, const IdMap &map);

Drs RenameIds(const Drs &drs, const IdMap &map) {
  std::vector<Marker> universe;
  for (Marker m : drs.universe()) universe.push_back(MapMarker(map, m));
  std::vector<Condition> conditions;
  for (const Condition &c : drs.conditions()) {
    if (const auto *p = std::get_if<Pred>(&c)) {
      Pred renamed{p->name, {}};
      for (Marker m : p->args) renamed.args.push_back(MapMarker(map, m));
      conditions.push_back(std::move(renamed));
    } else if (const auto *eq = std::get_if<Eq>(&c)) {
      conditions.push_back(Eq{MapMarker(map, eq->left), MapMarker(map, eq->right)});
    } else {
      conditions.push_back(MapSlots(c, [&](const Term &t) { return RenameIds(t, map); }));
    }
  }
  return Drs(std::move(universe), std::move(conditions));
}

Term RenameIds(const Term &term, const IdMap &map) {
  switch (term.kind()) {
    case Term::Kind::kBox: return Term::Box(RenameIds(term.box(), map));
    case Term::Kind::kRef: return Term::Ref(MapMarker(map, term.marker()));
    case Term::Kind::kVar: return Term::Var(MapVar(map, term.var()));
    case Term::Kind::kLam: {
      Param p = term.param();
      if (const auto *m = std::get_if<Marker>(&p)) {
        p = MapMarker(map, *m);
      } else {
        p = MapVar(map, std::get<HoVar>(p));
      }
      return Term::Lam(p, RenameIds(term.body(), map));
    }
    case Term::Kind::kApp:
      return Term::App(RenameIds(term.fn(), map), RenameIds(term.arg(), map));
    case Term::Kind::kMerge:
      return Term::Merge(RenameIds(term.left(), map), RenameIds(term.right(), map));
  }
  return term;
}

void CollectIds(const Term &term, std::set<Marker> &markers, std::map<int, HoVar> &vars,
                bool binders_only);

void CollectIds(const Drs &drs, std::set<Marker> &markers, std::map<int, HoVar> &vars,
                bool binders_only) {
  for (Marker m : drs.universe()) markers.insert(m);
  for (const Condition &c : drs.conditions()) {
    if (binders_only) {
      // fall through to slots
    } else if (const auto *p = std::get_if<Pred>(&c)) {
      for (Marker m : p->args) markers.insert(m);
    } else if (const auto *eq = std::get_if<Eq>(&c)) {
      markers.insert(eq->left);
      markers.insert(eq->right);
    }
    for (int i = 0; i < SlotCount(c); ++i) CollectIds(Slot(c, i), markers, vars, binders_only);
  }
}

void CollectIds(const Term &term, std::set<Marker> &markers, std::map<int, HoVar> &vars,
                bool binders_only) {
  switch (term.kind()) {
    case Term::Kind::kBox: CollectIds(term.box(), markers, vars, binders_only); break;
    case Term::Kind::kRef:
      if (!binders_only) markers.insert(term.marker());
      break;
    case Term::Kind::kVar:
      if (!binders_only) vars.emplace(term.var().id, term.var());
      break;
    case Term::Kind::kLam:
      if (const auto *m = std::get_if<Marker>(&term.param())) {
        markers.insert(*m);
      } else {
        const auto &v = std::get<HoVar>(term.param());
        vars.emplace(v.id, v);
      }
      CollectIds(term.body(), markers, vars, binders_only);
      break;
    case Term::Kind::kApp:
      CollectIds(term.fn(), markers, vars, binders_only);
      CollectIds(term.arg(), markers, vars, binders_only);
      break;
    case Term::Kind::kMerge:
      CollectIds(term.left(), markers, vars, binders_only);
      CollectIds(term.right(), markers, vars, binders_only);
      break;
  }
}

IdMap FreshMap(const std::set<Marker> &markers, const std::map<int, HoVar> &vars,
               FreshSupply &supply) {
  IdMap map;
  for (Marker m : markers) map.markers.emplace(m, supply.NewMarker(m.sort));
  for (const auto &[id, v] : vars) map.vars.emplace(id, supply.NewVar(v.type));
  return map;
}

// Renames the binder 'p' of a lambda to a fresh one inside 'body'.
Term FreshenBinder(const Param &p, const Term &body, FreshSupply &supply) {
  IdMap map;
  Param fresh;
  if (const auto *m = std::get_if<Marker>(&p)) {
    Marker n = supply.NewMarker(m->sort);
    map.markers.emplace(*m, n);
    fresh = n;
  } else {
    const auto &v = std::get<HoVar>(p);
    HoVar w = supply.NewVar(v.type);
    map.vars.emplace(v.id, w);
    fresh = w;
  }
  return Term::Lam(fresh, RenameIds(body, map));
}

bool Occurs(const Param &p, const std::set<Marker> &markers, const std::map<int, HoVar> &vars) {
  if (const auto *m = std::get_if<Marker>(&p)) return markers.count(*m) > 0;
  return vars.count(std::get<HoVar>(p).id) > 0;
}

bool SameParam(const Param &a, const Param &b) {
  if (a.index() != b.index()) return false;
  return ParamId(a) == ParamId(b) &&
         (a.index() == 1 || std::get<Marker>(a).sort == std::get<Marker>(b).sort);
}

// Capture-avoiding substitution of 'value' for parameter 'p' in 'term'.
Term Subst(const Term &term, const Param &p, const Term &value,
           const std::set<Marker> &value_markers, const std::map<int, HoVar> &value_vars,
           FreshSupply &supply);

Drs SubstDrs(const Drs &drs, const Param &p, const Term &value,
             const std::set<Marker> &vm, const std::map<int, HoVar> &vv,
             FreshSupply &supply) {
  const Marker *pm = std::get_if<Marker>(&p);
  if (pm == nullptr) {
    return MapSlots(drs, [&](const Term &t) { return Subst(t, p, value, vm, vv, supply); });
  }
  Marker to = value.marker();
  auto swap = [&](Marker m) { return m == *pm ? to : m; };
  std::vector<Marker> universe;
  for (Marker m : drs.universe()) universe.push_back(swap(m));
  std::vector<Condition> conditions;
  for (const Condition &c : drs.conditions()) {
    if (const auto *pr = std::get_if<Pred>(&c)) {
      Pred renamed{pr->name, {}};
      for (Marker m : pr->args) renamed.args.push_back(swap(m));
      conditions.push_back(std::move(renamed));
    } else if (const auto *eq = std::get_if<Eq>(&c)) {
      conditions.push_back(Eq{swap(eq->left), swap(eq->right)});
    } else {
      conditions.push_back(
          MapSlots(c, [&](const Term &t) { return Subst(t, p, value, vm, vv, supply); }));
    }
  }
  return Drs(std::move(universe), std::move(conditions));
}

Term Subst(const Term &term, const Param &p, const Term &value,
           const std::set<Marker> &vm, const std::map<int, HoVar> &vv, FreshSupply &supply) {
  switch (term.kind()) {
    case Term::Kind::kBox: return Term::Box(SubstDrs(term.box(), p, value, vm, vv, supply));
    case Term::Kind::kRef: {
      const Marker *pm = std::get_if<Marker>(&p);
      return pm != nullptr && term.marker() == *pm ? value : term;
    }
    case Term::Kind::kVar: {
      const HoVar *pv = std::get_if<HoVar>(&p);
      return pv != nullptr && term.var().id == pv->id ? value : term;
    }
    case Term::Kind::kLam: {
      if (SameParam(term.param(), p)) return term;  // shadowed
      Term lam = term;
      if (Occurs(term.param(), vm, vv)) lam = FreshenBinder(term.param(), term.body(), supply);
      return Term::Lam(lam.param(), Subst(lam.body(), p, value, vm, vv, supply));
    }
    case Term::Kind::kApp:
      return Term::App(Subst(term.fn(), p, value, vm, vv, supply),
                       Subst(term.arg(), p, value, vm, vv, supply));
    case Term::Kind::kMerge:
      return Term::Merge(Subst(term.left(), p, value, vm, vv, supply),
                         Subst(term.right(), p, value, vm, vv, supply));
  }
  return term;
}

Term Reduce(const Term &term, FreshSupply &supply);

Term ApplyLam(const Term &lam, const Term &arg, FreshSupply &supply) {
  const Param &p = lam.param();
  if (std::holds_alternative<Marker>(p) && arg.kind() != Term::Kind::kRef) {
    throw TypeError("marker parameter applied to a non-marker: " +
                    std::string(arg.kind() == Term::Kind::kVar ? "variable" : "term"));
  }
  std::set<Marker> vm;
  std::map<int, HoVar> vv;
  CollectIds(arg, vm, vv, false);
  return Subst(lam.body(), p, arg, vm, vv, supply);
}

Term Reduce(const Term &term, FreshSupply &supply) {
  switch (term.kind()) {
    case Term::Kind::kBox:
      return Term::Box(MapSlots(term.box(), [&](const Term &t) { return Reduce(t, supply); }));
    case Term::Kind::kRef:
    case Term::Kind::kVar: return term;
    case Term::Kind::kLam: return Term::Lam(term.param(), Reduce(term.body(), supply));
    case Term::Kind::kApp: {
      Term fn = Reduce(term.fn(), supply);
      if (fn.kind() == Term::Kind::kLam) {
        Term arg = std::holds_alternative<Marker>(fn.param()) ? Reduce(term.arg(), supply)
                                                              : term.arg();
        return Reduce(ApplyLam(fn, arg, supply), supply);
      }
      return Term::App(fn, Reduce(term.arg(), supply));
    }
    case Term::Kind::kMerge: {
      Term left = Reduce(term.left(), supply);
      Term right = Reduce(term.right(), supply);
      if (left.is_box() && right.is_box()) return Term::Box(Merge(left.box(), right.box()));
      return Term::Merge(left, right);
    }
  }
  return term;
}

void CollectQualia(const Term &term, std::vector<Quale> &out);

void CollectQualia(const Drs &drs, std::vector<Quale> &out) {
  for (const Condition &c : drs.conditions()) {
    if (const auto *q = std::get_if<Qualia>(&c)) {
      out.push_back(Quale{q->role, q->inner});
      continue;
    }
    for (int i = 0; i < SlotCount(c); ++i) CollectQualia(Slot(c, i), out);
  }
}

void CollectQualia(const Term &term, std::vector<Quale> &out) {
  switch (term.kind()) {
    case Term::Kind::kBox: CollectQualia(term.box(), out); break;
    case Term::Kind::kLam: CollectQualia(term.body(), out); break;
    case Term::Kind::kApp:
      CollectQualia(term.fn(), out);
      CollectQualia(term.arg(), out);
      break;
    case Term::Kind::kMerge:
      CollectQualia(term.left(), out);
      CollectQualia(term.right(), out);
      break;
    default: break;
  }
}

std::vector<Param> LeadingParams(const Term &term) {
  std::vector<Param> out;
  const Term *t = &term;
  while (t->kind() == Term::Kind::kLam) {
    out.push_back(t->param());
    t = &t->body();
  }
  return out;
}

// A fresh parameter of the given type, copying the sort of 'like' when it
// is a marker.
Param FreshParam(const SemType &type, const Param *like, FreshSupply &supply) {
  if (type == SemType::E()) {
    Sort sort = Sort::kEntity;
    if (like != nullptr) {
      if (const auto *m = std::get_if<Marker>(like)) sort = m->sort;
    }
    return supply.NewMarker(sort);
  }
  return supply.NewVar(type);
}

// Plain clause of the definition: the argument's first parameter is bound
// by the functor after abstracting over the shortest suffix that makes the
// types line up.
std::optional<Composition> Plain(const Term &functor, const SemType &alpha,
                                 const Term &argument, const SemType &arg_type,
                                 FreshSupply &supply) {
  if (arg_type == alpha) {
    Composition c;
    c.result = Reduce(Term::App(functor, argument), supply);
    return c;
  }
  std::vector<SemType> args = arg_type.Args();
  SemType final_type = arg_type.FinalResult();
  for (size_t k = 1; k < args.size(); ++k) {
    std::vector<SemType> rest(args.begin() + 1 + k, args.end());
    if (!(SemType::Fn(args[0], SemType::Chain(rest, final_type)) == alpha)) continue;
    std::vector<Param> lead = LeadingParams(argument);
    auto like = [&](size_t i) { return i < lead.size() ? &lead[i] : nullptr; };
    Param v = FreshParam(args[0], like(0), supply);
    std::vector<Param> sigma;
    for (size_t i = 1; i <= k; ++i) sigma.push_back(FreshParam(args[i], like(i), supply));
    Term inner = Term::App(argument, Term::Of(v));
    for (const Param &s : sigma) inner = Term::App(inner, Term::Of(s));
    Term body = Term::App(functor, Term::Lam(v, inner));
    for (auto it = sigma.rbegin(); it != sigma.rend(); ++it) body = Term::Lam(*it, body);
    Composition c;
    c.result = Reduce(body, supply);
    c.sigma = static_cast<int>(k);
    return c;
  }
  return std::nullopt;
}

}  // namespace

SemType TypeOf(const Term &term) {
  switch (term.kind()) {
    case Term::Kind::kBox:
      for (const Condition &c : term.box().conditions()) {
        bool qualia = std::holds_alternative<Qualia>(c);
        for (int i = 0; i < SlotCount(c); ++i) {
          SemType t = TypeOf(Slot(c, i));
          if (!qualia && !(t == SemType::T())) {
            throw TypeError("embedded DRS of type " + t.ToString() + " where t expected");
          }
        }
      }
      return SemType::T();
    case Term::Kind::kRef: return SemType::E();
    case Term::Kind::kVar: return term.var().type;
    case Term::Kind::kLam: return SemType::Fn(ParamType(term.param()), TypeOf(term.body()));
    case Term::Kind::kApp: {
      SemType fn = TypeOf(term.fn());
      SemType arg = TypeOf(term.arg());
      if (!fn.is_fn()) throw TypeError("applying a term of type " + fn.ToString());
      if (!(fn.arg() == arg)) {
        throw TypeError("argument of type " + arg.ToString() + " where " +
                        fn.arg().ToString() + " expected");
      }
      return fn.result();
    }
    case Term::Kind::kMerge: {
      SemType l = TypeOf(term.left());
      SemType r = TypeOf(term.right());
      if (!(l == SemType::T()) || !(r == SemType::T())) {
        throw TypeError("merge of " + l.ToString() + " and " + r.ToString());
      }
      return SemType::T();
    }
  }
  return SemType::T();
}

Term BetaReduce(const Term &term, FreshSupply &supply) {
  supply.Reserve(MaxId(term));
  return Reduce(term, supply);
}

Term Instantiate(const Term &tmpl, FreshSupply &supply) {
  std::set<Marker> markers;
  std::map<int, HoVar> vars;
  CollectIds(tmpl, markers, vars, false);
  return RenameIds(tmpl, FreshMap(markers, vars, supply));
}

Term RenameBinders(const Term &term, FreshSupply &supply) {
  supply.Reserve(MaxId(term));
  std::set<Marker> markers;
  std::map<int, HoVar> vars;
  CollectIds(term, markers, vars, true);
  return RenameIds(term, FreshMap(markers, vars, supply));
}

std::vector<Quale> QualiaAccess(const Term &term) {
  std::vector<Quale> out;
  CollectQualia(term, out);
  return out;
}

std::vector<Composition> TypeCoercion(const Term &term, FreshSupply &supply) {
  supply.Reserve(MaxId(term));
  std::vector<Quale> qualia = QualiaAccess(term);
  std::stable_sort(qualia.begin(), qualia.end(), [](const Quale &a, const Quale &b) {
    return CoercionRank(a.role) < CoercionRank(b.role);
  });
  std::vector<Composition> out;
  SemType type = TypeOf(term);
  if (!type.is_fn()) return out;
  for (const Quale &q : qualia) {
    Term payload = RenameBinders(q.payload, supply);
    SemType qt;
    try {
      qt = TypeOf(payload);
    } catch (const TypeError &) {
      continue;
    }
    auto plain = Plain(term, type.arg(), payload, qt, supply);
    if (!plain) continue;
    plain->coerced = true;
    plain->role = q.role;
    plain->quale = q.payload;
    out.push_back(std::move(*plain));
  }
  return out;
}

std::vector<Composition> FunctionalComposition(const Term &functor, const Term &argument,
                                               FreshSupply &supply, bool allow_coercion) {
  supply.Reserve(std::max(MaxId(functor), MaxId(argument)));
  SemType ft = TypeOf(functor);
  if (!ft.is_fn()) {
    throw CompositionError("functor of type " + ft.ToString() + " takes no argument");
  }
  SemType at = TypeOf(argument);
  if (auto plain = Plain(functor, ft.arg(), argument, at, supply)) return {*plain};
  std::vector<Composition> out;
  if (!allow_coercion) return out;
  for (const Composition &coerced : TypeCoercion(argument, supply)) {
    auto plain = Plain(functor, ft.arg(), coerced.result, TypeOf(coerced.result), supply);
    if (!plain) continue;
    plain->coerced = true;
    plain->role = coerced.role;
    plain->quale = coerced.quale;
    out.push_back(std::move(*plain));
  }
  return out;
}

}  // namespace drtq
