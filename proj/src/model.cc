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

#include "drtq/model.h"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <sstream>

#include "drtq/drs.h"
#include "drtq/errors.h"

namespace drtq {
namespace {

// ---- direct verification

using Assignment = std::map<Marker, int>;

class Verifier {
 public:
  explicit Verifier(const Model &model) : model_(model) {}

  bool Box(const Drs &k, const Assignment &g) const {
    return Extend(k.universe(), 0, g, [&](const Assignment &h) { return Conditions(k, h); });
  }

 private:
  bool Extend(const std::vector<Marker> &universe, size_t i, Assignment g,
              const std::function<bool(const Assignment &)> &check) const {
    if (i == universe.size()) return check(g);
    for (int d = 0; d < static_cast<int>(model_.domain.size()); ++d) {
      g[universe[i]] = d;
      if (Extend(universe, i + 1, g, check)) return true;
    }
    return false;
  }

  bool Conditions(const Drs &k, const Assignment &h) const {
    for (const Condition &c : k.conditions()) {
      if (!Holds(c, h)) return false;
    }
    return true;
  }

  static const Drs &BoxOf(const Term &t) {
    if (!t.is_box()) throw ModelError("lambda term in a truth-relevant position");
    return t.box();
  }

  int Value(Marker m, const Assignment &h) const {
    auto it = h.find(m);
    if (it == h.end()) throw ModelError("free marker " + ToString(m));
    return it->second;
  }

  bool Holds(const Condition &c, const Assignment &h) const {
    if (const auto *p = std::get_if<Pred>(&c)) {
      auto it = model_.interpretation.find(p->name);
      if (it == model_.interpretation.end()) return false;
      std::vector<int> tuple;
      for (Marker m : p->args) tuple.push_back(Value(m, h));
      return it->second.count(tuple) > 0;
    }
    if (const auto *eq = std::get_if<Eq>(&c)) return Value(eq->left, h) == Value(eq->right, h);
    if (const auto *impl = std::get_if<Impl>(&c)) {
      const Drs &ante = BoxOf(impl->antecedent);
      const Drs &cons = BoxOf(impl->consequent);
      // Look for a verifying antecedent embedding with no consequent extension.
      bool counterexample = Extend(ante.universe(), 0, h, [&](const Assignment &h1) {
        return Conditions(ante, h1) && !Box(cons, h1);
      });
      return !counterexample;
    }
    if (const auto *neg = std::get_if<Neg>(&c)) return !Box(BoxOf(neg->inner), h);
    if (const auto *disj = std::get_if<Disj>(&c)) {
      return Box(BoxOf(disj->left), h) || Box(BoxOf(disj->right), h);
    }
    if (std::holds_alternative<Alpha>(c)) throw ModelError("unresolved presupposition");
    return true;  // qualia are truth-conditionally inert
  }

  const Model &model_;
};

// ---- grounding

// Hash-consed propositional DAG.
class Formula {
 public:
  enum Kind { kTrue, kFalse, kAtom, kNot, kAnd, kOr };
  struct Node {
    Kind kind;
    std::vector<int> kids;
  };

  Formula() {
    Make(kTrue, {});
    Make(kFalse, {});
  }

  int True() const { return 0; }
  int False() const { return 1; }

  int Atom(const std::string &key) {
    auto it = atoms_.find(key);
    if (it != atoms_.end()) return it->second;
    int id = Make(kAtom, {static_cast<int>(atoms_.size())});
    atoms_.emplace(key, id);
    return id;
  }

  int Not(int a) {
    if (a == True()) return False();
    if (a == False()) return True();
    if (nodes_[a].kind == kNot) return nodes_[a].kids[0];
    return Make(kNot, {a});
  }

  int And(std::vector<int> kids) { return Junction(kAnd, std::move(kids)); }
  int Or(std::vector<int> kids) { return Junction(kOr, std::move(kids)); }

  const Node &node(int i) const { return nodes_[i]; }
  int size() const { return static_cast<int>(nodes_.size()); }

 private:
  int Junction(Kind kind, std::vector<int> kids) {
    int unit = kind == kAnd ? True() : False();
    int zero = kind == kAnd ? False() : True();
    std::vector<int> kept;
    for (int k : kids) {
      if (k == zero) return zero;
      if (k == unit) continue;
      if (nodes_[k].kind == kind) {
        kept.insert(kept.end(), nodes_[k].kids.begin(), nodes_[k].kids.end());
      } else {
        kept.push_back(k);
      }
    }
    std::sort(kept.begin(), kept.end());
    kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
    if (kept.empty()) return unit;
    if (kept.size() == 1) return kept[0];
    return Make(kind, std::move(kept));
  }

  int Make(Kind kind, std::vector<int> kids) {
    auto key = std::make_pair(static_cast<int>(kind), kids);
    auto it = table_.find(key);
    if (it != table_.end()) return it->second;
    nodes_.push_back(Node{kind, std::move(kids)});
    int id = static_cast<int>(nodes_.size()) - 1;
    table_.emplace(std::move(key), id);
    return id;
  }

  std::vector<Node> nodes_;
  std::map<std::pair<int, std::vector<int>>, int> table_;
  std::map<std::string, int> atoms_;
};

// Grounds DRSs over a domain {0..n-1}. Markers of the outermost universe
// can be made symbolic: their value is chosen by one-hot propositional
// variables instead of being enumerated.
class Grounder {
 public:
  Grounder(Formula &f, int n) : f_(f), n_(n) {}

  void MakeSymbolic(Marker m) {
    if (symbolic_.count(m)) return;
    std::vector<int> vars;
    for (int d = 0; d < n_; ++d) {
      vars.push_back(f_.Atom("@" + ToString(m) + "=" + std::to_string(d)));
    }
    symbolic_.emplace(m, vars);
    // exactly one value
    constraints_.push_back(f_.Or(vars));
    for (int a = 0; a < n_; ++a) {
      for (int b = a + 1; b < n_; ++b) {
        constraints_.push_back(f_.Or({f_.Not(vars[a]), f_.Not(vars[b])}));
      }
    }
  }

  int Constraints() { return f_.And(constraints_); }

  // Conditions of k with its universe already bound in env.
  int Conditions(const Drs &k, const Assignment &env) {
    std::vector<int> parts;
    for (const Condition &c : k.conditions()) {
      int g = Cond(c, env);
      if (g == f_.False()) return g;
      parts.push_back(g);
    }
    return f_.And(std::move(parts));
  }

  // Existential closure of k's universe over env.
  int Box(const Drs &k, const Assignment &env) {
    std::vector<int> alternatives;
    Enumerate(k.universe(), 0, env, [&](const Assignment &h) {
      alternatives.push_back(Conditions(k, h));
    });
    return f_.Or(std::move(alternatives));
  }

 private:
  void Enumerate(const std::vector<Marker> &universe, size_t i, Assignment env,
                 const std::function<void(const Assignment &)> &fn) {
    if (i == universe.size()) {
      fn(env);
      return;
    }
    for (int d = 0; d < n_; ++d) {
      env[universe[i]] = d;
      Enumerate(universe, i + 1, env, fn);
    }
  }

  static const Drs &BoxOf(const Term &t) {
    if (!t.is_box()) throw ModelError("lambda term in a truth-relevant position");
    return t.box();
  }

  // Calls fn with every concrete valuation of 'markers', paired with the
  // propositional condition under which symbolic markers take it.
  void Valuations(const std::vector<Marker> &markers, const Assignment &env,
                  const std::function<void(const std::vector<int> &, int)> &fn) {
    std::vector<int> values(markers.size());
    std::function<void(size_t, std::vector<int>)> rec = [&](size_t i, std::vector<int> guard) {
      if (i == markers.size()) {
        fn(values, f_.And(guard));
        return;
      }
      auto it = env.find(markers[i]);
      if (it != env.end()) {
        values[i] = it->second;
        rec(i + 1, guard);
        return;
      }
      auto sym = symbolic_.find(markers[i]);
      if (sym == symbolic_.end()) throw ModelError("free marker " + ToString(markers[i]));
      for (int d = 0; d < n_; ++d) {
        values[i] = d;
        std::vector<int> g = guard;
        g.push_back(sym->second[d]);
        rec(i + 1, g);
      }
    };
    rec(0, {});
  }

  int Cond(const Condition &c, const Assignment &env) {
    if (const auto *p = std::get_if<Pred>(&c)) {
      std::vector<int> alternatives;
      Valuations(p->args, env, [&](const std::vector<int> &values, int guard) {
        std::string key = p->name + "/" + std::to_string(values.size()) + "(";
        for (int v : values) key += std::to_string(v) + ",";
        alternatives.push_back(f_.And({guard, f_.Atom(key)}));
      });
      return f_.Or(std::move(alternatives));
    }
    if (const auto *eq = std::get_if<Eq>(&c)) {
      std::vector<int> alternatives;
      Valuations({eq->left, eq->right}, env, [&](const std::vector<int> &values, int guard) {
        if (values[0] == values[1]) alternatives.push_back(guard);
      });
      return f_.Or(std::move(alternatives));
    }
    if (const auto *impl = std::get_if<Impl>(&c)) {
      const Drs &ante = BoxOf(impl->antecedent);
      const Drs &cons = BoxOf(impl->consequent);
      std::vector<int> cases;
      Enumerate(ante.universe(), 0, env, [&](const Assignment &h) {
        cases.push_back(f_.Or({f_.Not(Conditions(ante, h)), Box(cons, h)}));
      });
      return f_.And(std::move(cases));
    }
    if (const auto *neg = std::get_if<Neg>(&c)) return f_.Not(Box(BoxOf(neg->inner), env));
    if (const auto *disj = std::get_if<Disj>(&c)) {
      return f_.Or({Box(BoxOf(disj->left), env), Box(BoxOf(disj->right), env)});
    }
    if (std::holds_alternative<Alpha>(c)) throw ModelError("unresolved presupposition");
    return f_.True();
  }

  Formula &f_;
  int n_;
  std::map<Marker, std::vector<int>> symbolic_;
  std::vector<int> constraints_;
};

// ---- satisfiability: Tseitin encoding and DPLL with two watched literals.

class Solver {
 public:
  explicit Solver(const Formula &f) : f_(f), var_of_(f.size(), 0) {}

  bool Satisfiable(int root) {
    if (root == f_.True()) return true;
    if (root == f_.False()) return false;
    // Number atoms first so that decisions are made on them.
    for (int i = 0; i < f_.size(); ++i) {
      if (f_.node(i).kind == Formula::kAtom) var_of_[i] = ++num_vars_;
    }
    int lit = Encode(root);
    clauses_.push_back({lit});
    return Dpll();
  }

 private:
  int Encode(int node) {
    const Formula::Node &n = f_.node(node);
    if (n.kind == Formula::kNot) return -Encode(n.kids[0]);
    if (var_of_[node] != 0) return var_of_[node];
    int v = ++num_vars_;
    var_of_[node] = v;
    std::vector<int> kids;
    for (int k : n.kids) kids.push_back(Encode(k));
    if (n.kind == Formula::kAnd) {
      std::vector<int> big{v};
      for (int k : kids) {
        clauses_.push_back({-v, k});
        big.push_back(-k);
      }
      clauses_.push_back(std::move(big));
    } else {
      std::vector<int> big{-v};
      for (int k : kids) {
        clauses_.push_back({v, -k});
        big.push_back(k);
      }
      clauses_.push_back(std::move(big));
    }
    return v;
  }

  static int Code(int lit) { return lit > 0 ? 2 * lit : -2 * lit + 1; }

  int Value(int lit) const {
    int v = value_[std::abs(lit)];
    if (v < 0) return -1;
    return lit > 0 ? v : 1 - v;
  }

  void Assign(int lit) {
    value_[std::abs(lit)] = lit > 0 ? 1 : 0;
    trail_.push_back(lit);
  }

  bool Propagate() {
    while (head_ < trail_.size()) {
      int falsified = -trail_[head_++];
      std::vector<int> &watch = watches_[Code(falsified)];
      for (size_t i = 0; i < watch.size();) {
        std::vector<int> &c = clauses_[watch[i]];
        if (c[0] == falsified) std::swap(c[0], c[1]);
        if (Value(c[0]) == 1) {
          ++i;
          continue;
        }
        bool moved = false;
        for (size_t k = 2; k < c.size(); ++k) {
          if (Value(c[k]) != 0) {
            std::swap(c[1], c[k]);
            watches_[Code(c[1])].push_back(watch[i]);
            watch[i] = watch.back();
            watch.pop_back();
            moved = true;
            break;
          }
        }
        if (moved) continue;
        if (Value(c[0]) == 0) return false;
        Assign(c[0]);
        ++i;
      }
    }
    return true;
  }

  void Undo(size_t level) {
    while (trail_.size() > level) {
      value_[std::abs(trail_.back())] = -1;
      trail_.pop_back();
    }
    head_ = std::min(head_, trail_.size());
  }

  bool Dpll() {
    value_.assign(num_vars_ + 1, -1);
    watches_.assign(2 * num_vars_ + 2, {});
    for (size_t i = 0; i < clauses_.size(); ++i) {
      std::vector<int> &c = clauses_[i];
      if (c.size() == 1) {
        if (Value(c[0]) == 0) return false;
        if (Value(c[0]) < 0) Assign(c[0]);
        continue;
      }
      watches_[Code(c[0])].push_back(static_cast<int>(i));
      watches_[Code(c[1])].push_back(static_cast<int>(i));
    }
    struct Decision {
      size_t level;
      int lit;
      bool flipped;
    };
    std::vector<Decision> decisions;
    int next = 1;
    while (true) {
      if (!Propagate()) {
        while (!decisions.empty() && decisions.back().flipped) decisions.pop_back();
        if (decisions.empty()) return false;
        Decision &d = decisions.back();
        Undo(d.level);
        d.lit = -d.lit;
        d.flipped = true;
        Assign(d.lit);
        next = 1;
        continue;
      }
      while (next <= num_vars_ && value_[next] >= 0) ++next;
      if (next > num_vars_) return true;
      decisions.push_back(Decision{trail_.size(), -next, false});
      Assign(-next);
    }
  }

  const Formula &f_;
  std::vector<int> var_of_;
  int num_vars_ = 0;
  std::vector<std::vector<int>> clauses_;
  std::vector<std::vector<int>> watches_;
  std::vector<int> value_;
  std::vector<int> trail_;
  size_t head_ = 0;
};

void RequireProper(const Drs &k) {
  if (!IsProper(k)) throw ModelError("model checking needs a proper DRS");
}

// Whether, at some domain size in 1..bound, some interpretation verifies
// 'pos' while 'neg' (if given) fails for the same values of pos's
// outermost markers.
bool Search(const Drs &pos, const Drs *neg, int bound) {
  for (int n = 1; n <= bound; ++n) {
    Formula f;
    Grounder g(f, n);
    for (Marker m : pos.universe()) g.MakeSymbolic(m);
    int root = g.Conditions(pos, {});
    if (neg != nullptr) {
      std::vector<Marker> fresh;
      for (Marker m : neg->universe()) {
        if (!pos.Declares(m)) fresh.push_back(m);
      }
      Drs rest(fresh, neg->conditions());
      root = f.And({root, f.Not(g.Box(rest, {}))});
    }
    root = f.And({root, g.Constraints()});
    if (Solver(f).Satisfiable(root)) return true;
  }
  return false;
}

std::vector<int> ParseTuple(const std::string &text, const std::map<std::string, int> &index) {
  std::vector<int> tuple;
  std::string item;
  std::stringstream in(text);
  while (std::getline(in, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    auto it = index.find(item);
    if (it == index.end()) throw ModelError("unknown individual '" + item + "'");
    tuple.push_back(it->second);
  }
  return tuple;
}

}  // namespace

Model ParseModel(std::string_view text) {
  Model model;
  std::map<std::string, int> index;
  std::map<std::string, size_t> arity;
  bool have_domain = false;
  std::stringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  auto fail = [&](const std::string &msg) {
    throw ModelError(msg + " (line " + std::to_string(line_no) + ")");
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::stringstream words(line);
    std::string head;
    if (!(words >> head)) continue;
    if (head == "domain:") {
      if (have_domain) fail("second domain line");
      have_domain = true;
      std::string d;
      while (words >> d) {
        if (index.count(d)) fail("duplicate individual '" + d + "'");
        index[d] = static_cast<int>(model.domain.size());
        model.domain.push_back(d);
      }
      if (model.domain.empty()) fail("empty domain");
      continue;
    }
    if (head != "pred") fail("expected 'domain:' or 'pred'");
    if (!have_domain) fail("pred before domain");
    std::string rest;
    std::getline(words, rest);
    auto colon = rest.find(':');
    if (colon == std::string::npos) fail("missing ':' after predicate name");
    std::string name = rest.substr(0, colon);
    name.erase(0, name.find_first_not_of(" \t"));
    name.erase(name.find_last_not_of(" \t") + 1);
    if (name.empty()) fail("missing predicate name");
    auto &extension = model.interpretation[name];
    std::string tuples = rest.substr(colon + 1);
    size_t pos = 0;
    while (true) {
      size_t open = tuples.find_first_not_of(" \t", pos);
      if (open == std::string::npos) break;
      if (tuples[open] != '(') fail("expected '('");
      size_t close = tuples.find(')', open);
      if (close == std::string::npos) fail("missing ')'");
      std::vector<int> tuple;
      try {
        tuple = ParseTuple(tuples.substr(open + 1, close - open - 1), index);
      } catch (const ModelError &e) {
        fail(e.what());
      }
      auto [it, fresh] = arity.emplace(name, tuple.size());
      if (!fresh && it->second != tuple.size()) fail("arity mismatch for '" + name + "'");
      extension.insert(tuple);
      pos = close + 1;
    }
  }
  if (!have_domain) throw ModelError("missing domain line");
  return model;
}

bool Verify(const Drs &k, const Model &model) {
  RequireProper(k);
  for (const auto &[name, tuples] : model.interpretation) {
    for (const auto &t : tuples) {
      for (int d : t) {
        if (d < 0 || d >= static_cast<int>(model.domain.size())) {
          throw ModelError("tuple outside the domain for '" + name + "'");
        }
      }
    }
  }
  return Verifier(model).Box(k, {});
}

bool Consistent(const Drs &k, int bound) {
  RequireProper(k);
  return Search(k, nullptr, bound);
}

bool Entails(const Drs &k1, const Drs &k2, int bound) {
  RequireProper(k1);
  RequireProper(k2);
  return !Search(k1, &k2, bound);
}

}  // namespace drtq
