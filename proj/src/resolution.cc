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

#include "drtq/resolution.h"

#include <algorithm>
#include <climits>
#include <functional>
#include <tuple>

#include "drtq/errors.h"
#include "drtq/model.h"
#include "drtq/text.h"

namespace drtq {
namespace {

Condition RenameCondition(const Condition &c, const Mapping &m) {
  return RenameMarkers(Drs({}, {c}), m).conditions().front();
}

// Candidate antecedent sites, nearest first, excluding boxes that sit
// inside qualia payloads.
std::vector<DrsPath> Sites(const Drs &root, const DrsPath &alpha) {
  std::vector<DrsPath> out;
  for (DrsPath &p : Subordinators(root, alpha)) {
    if (!ThroughQualia(root, p)) out.push_back(std::move(p));
  }
  return out;
}

void CheckAlphaPath(const Drs &root, const DrsPath &alpha) {
  if (alpha.empty()) throw PathError("root is not an alpha payload");
  DrsPath host(alpha.begin(), alpha.end() - 1);
  const Drs &h = SubDrs(root, host);
  int idx = alpha.back().condition;
  if (idx < 0 || idx >= static_cast<int>(h.conditions().size()) ||
      !std::holds_alternative<Alpha>(h.conditions()[idx])) {
    throw PathError(ToString(alpha) + " is not an alpha payload");
  }
  SubDrs(root, alpha);
}

// The host box with the alpha condition replaced by its content and the
// equations of the mapping.
Drs Linked(const Drs &host, int idx, const Drs &k_alpha, const Mapping &m) {
  Drs out = host.WithoutCondition(idx);
  for (Marker x : k_alpha.universe()) out.AddMarker(x);
  for (const Condition &c : k_alpha.conditions()) out.AddCondition(c);
  for (const auto &[from, to] : m) out.AddCondition(Eq{from, to});
  return out;
}

Drs DropAlpha(const Drs &k);

Term DropAlpha(const Term &t) { return t.is_box() ? Term::Box(DropAlpha(t.box())) : t; }

Drs DropAlpha(const Drs &k) {
  std::vector<Condition> conditions;
  for (const Condition &c : k.conditions()) {
    if (std::holds_alternative<Alpha>(c)) continue;
    if (std::holds_alternative<Qualia>(c)) {
      conditions.push_back(c);
      continue;
    }
    conditions.push_back(MapSlots(c, [](const Term &t) { return DropAlpha(t); }));
  }
  return Drs(k.universe(), std::move(conditions));
}

std::set<Marker> PendingMarkers(const Drs &root) {
  std::set<Marker> out;
  for (const DrsPath &p : AlphaPaths(root)) {
    for (Marker m : SubDrs(root, p).universe()) out.insert(m);
  }
  return out;
}

int MinId(const Drs &k) {
  int min = INT_MAX;
  for (Marker m : k.universe()) min = std::min(min, m.id);
  return min;
}

}  // namespace

std::string ToString(const Mapping &m) {
  std::string out;
  for (const auto &[from, to] : m) {
    if (!out.empty()) out += ",";
    out += ToString(from) + "->" + ToString(to);
  }
  return out;
}

std::string_view MechanismName(Mechanism m) {
  switch (m) {
    case Mechanism::kLink: return "Link";
    case Mechanism::kBridge: return "Bridge";
    case Mechanism::kAccommodate: return "Accommodate";
  }
  return "?";
}

std::vector<Mapping> SuitableMappings(const Drs &k_alpha, const Drs &candidate) {
  std::vector<Mapping> out;
  const auto &from = k_alpha.universe();
  Mapping current;
  std::function<void(size_t)> rec = [&](size_t i) {
    if (i == from.size()) {
      for (const Condition &c : k_alpha.conditions()) {
        if (!candidate.Contains(RenameCondition(c, current))) return;
      }
      out.push_back(current);
      return;
    }
    for (Marker to : candidate.universe()) {
      if (to == from[i] || !SortsCompatible(from[i].sort, to.sort)) continue;
      current.emplace_back(from[i], to);
      rec(i + 1);
      current.pop_back();
    }
  };
  rec(0);
  return out;
}

std::vector<DrsPath> AlphaPaths(const Drs &root) {
  std::vector<DrsPath> out;
  for (const DrsPath &p : AllPaths(root)) {
    if (ThroughQualia(root, p)) continue;
    const Drs &k = SubDrs(root, p);
    for (int i = 0; i < static_cast<int>(k.conditions().size()); ++i) {
      const auto *a = std::get_if<Alpha>(&k.conditions()[i]);
      if (a == nullptr || !a->inner.is_box()) continue;
      DrsPath q = p;
      q.push_back(PathStep{i, Side::kOnly});
      out.push_back(std::move(q));
    }
  }
  return out;
}

std::vector<Outcome> Link(const Drs &root, const DrsPath &alpha) {
  CheckAlphaPath(root, alpha);
  DrsPath host(alpha.begin(), alpha.end() - 1);
  int idx = alpha.back().condition;
  const Drs &k_alpha = SubDrs(root, alpha);
  std::vector<Outcome> out;
  for (const DrsPath &site : Sites(root, alpha)) {
    for (Mapping &m : SuitableMappings(k_alpha, SubDrs(root, site))) {
      Drs k3 = Linked(SubDrs(root, host), idx, k_alpha, m);
      out.push_back(Outcome{Substitute(root, host, k3), site, std::move(m)});
    }
  }
  return out;
}

std::vector<Outcome> Bridge(const Drs &root, const DrsPath &alpha) {
  CheckAlphaPath(root, alpha);
  DrsPath host(alpha.begin(), alpha.end() - 1);
  int idx = alpha.back().condition;
  const Drs &k_alpha = SubDrs(root, alpha);
  std::vector<Outcome> out;
  for (const DrsPath &site : Sites(root, alpha)) {
    // Merging only appends, so the host path stays valid after the CA
    // substitution even when the host is the CA site itself.
    for (const Drs &k1 : CoerciveAccommodation(SubDrs(root, site))) {
      for (Mapping &m : SuitableMappings(k_alpha, k1)) {
        Drs surfaced = Substitute(root, site, k1);
        Drs k3 = Linked(SubDrs(surfaced, host), idx, k_alpha, m);
        out.push_back(Outcome{Substitute(surfaced, host, k3), site, std::move(m)});
      }
    }
  }
  return out;
}

std::vector<Outcome> Accommodate(const Drs &root, const DrsPath &alpha,
                                 const AcceptOptions &options) {
  CheckAlphaPath(root, alpha);
  DrsPath host(alpha.begin(), alpha.end() - 1);
  int idx = alpha.back().condition;
  const Drs &k_alpha = SubDrs(root, alpha);
  std::vector<DrsPath> sites = Sites(root, alpha);
  std::reverse(sites.begin(), sites.end());  // global first
  std::vector<Outcome> out;
  for (const DrsPath &site : sites) {
    Drs merged = Substitute(root, site, Merge(SubDrs(root, site), k_alpha));
    Drs result = Substitute(merged, host, SubDrs(merged, host).WithoutCondition(idx));
    if (!Acceptable(result, options.context, options.domain_bound).ok) continue;
    out.push_back(Outcome{std::move(result), site, {}});
  }
  return out;
}

ResolveOneResult ResolveOne(const Drs &root, const DrsPath &alpha, const AcceptOptions &options) {
  std::vector<Outcome> links = Link(root, alpha);
  if (!links.empty()) return {Mechanism::kLink, std::move(links)};
  const Drs &k_alpha = SubDrs(root, alpha);
  if (k_alpha.conditions().empty()) {
    std::string who = k_alpha.universe().empty() ? "?" : ToString(k_alpha.universe().front());
    throw ResolutionError("no antecedent for pronoun " + who + " at " + ToString(alpha));
  }
  std::vector<Outcome> bridges = Bridge(root, alpha);
  if (!bridges.empty()) return {Mechanism::kBridge, std::move(bridges)};
  std::vector<Outcome> accommodations = Accommodate(root, alpha, options);
  if (!accommodations.empty()) return {Mechanism::kAccommodate, std::move(accommodations)};
  throw ResolutionError("cannot resolve " + ToLinear(k_alpha) + " at " + ToString(alpha));
}

std::string Step::ToString() const {
  std::string out = "alpha@" + drtq::ToString(alpha) + " -> " + std::string(MechanismName(mechanism)) +
                    " @" + drtq::ToString(site);
  if (mechanism != Mechanism::kAccommodate) out += " [m: " + drtq::ToString(mapping) + "]";
  return out;
}

std::vector<Reading> ResolveAll(const Drs &root, const ResolveOptions &options) {
  AcceptOptions accept{options.domain_bound, options.context};
  bool all = options.policy == ReadingPolicy::kAllReadings;
  std::vector<Reading> out;
  std::optional<ResolutionError> failure;

  std::function<void(const Reading &)> rec = [&](const Reading &state) {
    if (static_cast<int>(out.size()) >= options.max_readings) return;
    std::vector<DrsPath> paths = AlphaPaths(state.resolved);
    if (paths.empty()) {
      if (!IsProper(state.resolved)) {
        if (!failure) failure = ResolutionError("resolution left free markers");
        return;
      }
      out.push_back(state);
      return;
    }
    auto key = [&](const DrsPath &p) {
      const Drs &k = SubDrs(state.resolved, p);
      bool pronoun = k.conditions().empty();
      switch (options.order) {
        case ResolutionOrder::kPronounsLast: return std::make_tuple(pronoun ? 1 : 0, MinId(k));
        case ResolutionOrder::kPronounsFirst: return std::make_tuple(pronoun ? 0 : 1, MinId(k));
        case ResolutionOrder::kTextual: break;
      }
      return std::make_tuple(0, MinId(k));
    };
    const DrsPath &next = *std::min_element(
        paths.begin(), paths.end(),
        [&](const DrsPath &a, const DrsPath &b) { return key(a) < key(b); });
    const Drs k_alpha = SubDrs(state.resolved, next);
    ResolveOneResult r;
    try {
      r = ResolveOne(state.resolved, next, accept);
    } catch (const ResolutionError &e) {
      if (!failure) failure = e;
      return;
    }
    for (Outcome &o : r.outcomes) {
      Reading child = state;
      child.resolved = std::move(o.result);
      child.steps.push_back(Step{next, r.mechanism, o.site, o.mapping, k_alpha.universe()});
      if (r.mechanism == Mechanism::kAccommodate) {
        for (const Condition &c : k_alpha.conditions()) {
          const auto *p = std::get_if<Pred>(&c);
          if (p != nullptr && options.bridging_nouns.count(p->name)) {
            child.felicity_notes.push_back("'" + p->name +
                                           "' accommodated with no antecedent and no bridging "
                                           "anchor; the discourse may be infelicitous");
          }
        }
      }
      size_t before = out.size();
      rec(child);
      if (!all && out.size() > before) return;
    }
  };
  rec(Reading{root, {}, {}});
  if (out.empty()) {
    if (failure) throw *failure;
    throw ResolutionError("no reading");
  }
  return out;
}

Acceptability Acceptable(const Drs &candidate, const Drs &context, int domain_bound) {
  Acceptability result;
  std::set<Marker> pending = PendingMarkers(candidate);
  for (Marker m : FreeMarkers(candidate)) {
    if (!pending.count(m)) {
      result.reason = "free marker " + ToString(m);
      return result;
    }
  }
  if (domain_bound <= 0) {
    result.ok = true;
    result.degenerate = true;
    result.reason = "domain bound 0: model checks skipped";
    return result;
  }
  Drs projection = Projection(candidate);
  if (!Consistent(projection, domain_bound)) {
    result.reason = "inconsistent";
    return result;
  }
  if (Entails(Projection(context), projection, domain_bound)) {
    result.reason = "uninformative";
    return result;
  }
  result.ok = true;
  return result;
}

Drs Projection(const Drs &root) {
  Drs out = DropAlpha(root);
  for (Marker m : FreeMarkers(out)) out.AddMarker(m);
  return out;
}

}  // namespace drtq
