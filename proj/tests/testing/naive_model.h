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

// Independent satisfaction recursion and model enumeration, used as an
// oracle for the library's model checker.

#ifndef DRTQ_TESTING_NAIVE_MODEL_H_
#define DRTQ_TESTING_NAIVE_MODEL_H_

#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "drtq/model.h"
#include "drtq/term.h"

namespace drtq {
namespace testing {

using Assignment = std::map<Marker, int>;

bool NaiveSatisfies(const Drs &k, const Model &m, const Assignment &g);

// Calls fn on every extension of g over 'markers'; stops when fn returns true.
inline bool AnyExtension(const std::vector<Marker> &markers, size_t i, const Model &m,
                         Assignment &g, const std::function<bool(Assignment &)> &fn) {
  if (i == markers.size()) return fn(g);
  for (int d = 0; d < static_cast<int>(m.domain.size()); ++d) {
    Assignment saved = g;
    g[markers[i]] = d;
    bool hit = AnyExtension(markers, i + 1, m, g, fn);
    g = saved;
    if (hit) return true;
  }
  return false;
}

inline bool NaiveCondition(const Condition &c, const Model &m, const Assignment &g) {
  if (const auto *p = std::get_if<Pred>(&c)) {
    std::vector<int> tuple;
    for (Marker a : p->args) tuple.push_back(g.at(a));
    auto it = m.interpretation.find(p->name);
    return it != m.interpretation.end() && it->second.count(tuple) > 0;
  }
  if (const auto *e = std::get_if<Eq>(&c)) return g.at(e->left) == g.at(e->right);
  if (const auto *n = std::get_if<Neg>(&c)) return !NaiveSatisfies(n->inner.box(), m, g);
  if (const auto *d = std::get_if<Disj>(&c)) {
    return NaiveSatisfies(d->left.box(), m, g) || NaiveSatisfies(d->right.box(), m, g);
  }
  if (const auto *i = std::get_if<Impl>(&c)) {
    const Drs &a = i->antecedent.box();
    Assignment h = g;
    // Implication fails iff some verifying extension of the antecedent has
    // no verifying extension of the consequent.
    return !AnyExtension(a.universe(), 0, m, h, [&](Assignment &x) {
      for (const Condition &ac : a.conditions()) {
        if (!NaiveCondition(ac, m, x)) return false;
      }
      return !NaiveSatisfies(i->consequent.box(), m, x);
    });
  }
  if (std::holds_alternative<Qualia>(c)) return true;
  throw std::logic_error("alpha condition in naive satisfaction");
}

// Some extension of g over U(k) makes every condition true.
inline bool NaiveSatisfies(const Drs &k, const Model &m, const Assignment &g) {
  Assignment h = g;
  return AnyExtension(k.universe(), 0, m, h, [&](Assignment &x) {
    for (const Condition &c : k.conditions()) {
      if (!NaiveCondition(c, m, x)) return false;
    }
    return true;
  });
}

inline bool NaiveVerify(const Drs &k, const Model &m) { return NaiveSatisfies(k, m, {}); }

// Every model with 1..size individuals over the given predicates.
inline void ForEachModel(const std::vector<std::pair<std::string, int>> &preds, int size,
                         const std::function<void(const Model &)> &fn) {
  Model m;
  for (int i = 0; i < size; ++i) m.domain.push_back("d" + std::to_string(i));
  std::vector<std::pair<std::string, std::vector<int>>> cells;
  for (const auto &[name, arity] : preds) {
    m.interpretation[name];
    int count = 1;
    for (int a = 0; a < arity; ++a) count *= size;
    for (int t = 0; t < count; ++t) {
      std::vector<int> tuple;
      for (int a = 0, r = t; a < arity; ++a, r /= size) tuple.push_back(r % size);
      cells.emplace_back(name, tuple);
    }
  }
  std::function<void(size_t)> rec = [&](size_t i) {
    if (i == cells.size()) {
      fn(m);
      return;
    }
    rec(i + 1);
    m.interpretation[cells[i].first].insert(cells[i].second);
    rec(i + 1);
    m.interpretation[cells[i].first].erase(cells[i].second);
  };
  rec(0);
}

inline void CollectPreds(const Drs &k, std::map<std::string, int> &out) {
  for (const Condition &c : k.conditions()) {
    if (const auto *p = std::get_if<Pred>(&c)) out[p->name] = p->args.size();
    if (std::holds_alternative<Qualia>(c)) continue;
    for (int s = 0; s < SlotCount(c); ++s) {
      if (Slot(c, s).is_box()) CollectPreds(Slot(c, s).box(), out);
    }
  }
}

inline std::vector<std::pair<std::string, int>> PredsOf(const std::vector<Drs> &ks) {
  std::map<std::string, int> preds;
  for (const Drs &k : ks) CollectPreds(k, preds);
  return {preds.begin(), preds.end()};
}

inline bool NaiveConsistent(const Drs &k, int bound) {
  bool found = false;
  for (int n = 1; n <= bound && !found; ++n) {
    ForEachModel(PredsOf({k}), n, [&](const Model &m) {
      if (!found && NaiveVerify(k, m)) found = true;
    });
  }
  return found;
}

// Dynamic entailment: every verifying embedding of k1 extends to one of k2.
inline bool NaiveEntails(const Drs &k1, const Drs &k2, int bound) {
  std::vector<Marker> extra;
  for (Marker x : k2.universe()) {
    if (!k1.Declares(x)) extra.push_back(x);
  }
  Drs rest(extra, k2.conditions());
  bool counterexample = false;
  for (int n = 1; n <= bound && !counterexample; ++n) {
    ForEachModel(PredsOf({k1, k2}), n, [&](const Model &m) {
      if (counterexample) return;
      Assignment g;
      counterexample = AnyExtension(k1.universe(), 0, m, g, [&](Assignment &x) {
        for (const Condition &c : k1.conditions()) {
          if (!NaiveCondition(c, m, x)) return false;
        }
        return !NaiveSatisfies(rest, m, x);
      });
    });
  }
  return !counterexample;
}

}  // namespace testing
}  // namespace drtq

#endif  // DRTQ_TESTING_NAIVE_MODEL_H_
