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

// Random DRS generators for property tests.

#ifndef DRTQ_TESTING_GENERATORS_H_
#define DRTQ_TESTING_GENERATORS_H_

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "drtq/drs.h"
#include "drtq/term.h"

namespace drtq {
namespace testing {

struct GenOptions {
  int depth = 2;
  int max_universe = 2;
  int max_conditions = 3;
  bool alphas = false;        // emit presuppositions
  bool qualia = false;        // emit qualia conditions with box payloads
  bool free_markers = false;  // allow references to undeclared markers
  std::vector<std::pair<std::string, int>> preds = {{"p", 1}, {"q", 1}, {"r", 2}};
};

class DrsGenerator {
 public:
  DrsGenerator(uint32_t seed, GenOptions options) : rng_(seed), options_(std::move(options)) {}

  Drs Generate() { return Box(options_.depth, {}); }

  int Uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool Chance(double p) { return std::bernoulli_distribution(p)(rng_); }
  std::mt19937 &rng() { return rng_; }

  Marker NewMarker() { return Marker{Sort::kEntity, next_id_++}; }

  Pred RandomPred(const std::vector<Marker> &pool) {
    const auto &[name, arity] = options_.preds[Uniform(0, options_.preds.size() - 1)];
    Pred p{name, {}};
    for (int i = 0; i < arity; ++i) p.args.push_back(Pick(pool));
    return p;
  }

  Marker Pick(const std::vector<Marker> &pool) {
    if (pool.empty() || (options_.free_markers && Chance(0.1))) return NewMarker();
    return pool[Uniform(0, pool.size() - 1)];
  }

  Drs Box(int depth, std::vector<Marker> accessible) {
    Drs k;
    int n = Uniform(0, options_.max_universe);
    for (int i = 0; i < n; ++i) {
      Marker m = NewMarker();
      k.AddMarker(m);
      accessible.push_back(m);
    }
    int c = Uniform(accessible.empty() ? 0 : 1, options_.max_conditions);
    for (int i = 0; i < c; ++i) k.AddCondition(RandomCondition(depth, accessible, k));
    return k;
  }

 private:
  Condition RandomCondition(int depth, const std::vector<Marker> &accessible, const Drs &host) {
    int kind = Uniform(0, depth > 0 ? 9 : 3);
    if (accessible.empty() && kind < 4) kind = depth > 0 ? 4 : -1;
    if (kind == -1) return Neg{Term::Box(Drs())};
    switch (kind) {
      case 0:
      case 1:
        return RandomPred(accessible);
      case 2:
        return Eq{Pick(accessible), Pick(accessible)};
      case 3:
        if (options_.qualia && !host.universe().empty()) return RandomQualia(host);
        return RandomPred(accessible);
      case 4:
      case 5: {
        Drs antecedent = Box(depth - 1, accessible);
        std::vector<Marker> inner = accessible;
        inner.insert(inner.end(), antecedent.universe().begin(), antecedent.universe().end());
        return Impl{Term::Box(antecedent), Term::Box(Box(depth - 1, inner))};
      }
      case 6:
        return Neg{Term::Box(Box(depth - 1, accessible))};
      case 7:
        return Disj{Term::Box(Box(depth - 1, accessible)), Term::Box(Box(depth - 1, accessible))};
      default:
        if (options_.alphas) return RandomAlpha(accessible);
        return Neg{Term::Box(Box(depth - 1, accessible))};
    }
  }

  Condition RandomQualia(const Drs &host) {
    Marker self = host.universe()[Uniform(0, host.universe().size() - 1)];
    Marker part = NewMarker();
    Drs payload({part}, {Pred{"r", {part, self}}});
    if (Chance(0.5)) payload.AddCondition(Pred{Chance(0.5) ? "p" : "q", {part}});
    auto role = static_cast<QualiaRole>(Uniform(0, 3));
    return Qualia{role, Term::Box(payload)};
  }

  Condition RandomAlpha(const std::vector<Marker> &accessible) {
    Marker y = NewMarker();
    Drs k({y}, {});
    if (Chance(0.8)) {
      std::vector<Marker> pool = accessible;
      pool.push_back(y);
      k.AddCondition(Pred{Chance(0.5) ? "p" : "q", {y}});
      if (Chance(0.3) && !accessible.empty()) k.AddCondition(Pred{"r", {y, Pick(accessible)}});
    }
    return Alpha{Term::Box(k)};
  }

  std::mt19937 rng_;
  GenOptions options_;
  int next_id_ = 1;
};

}  // namespace testing
}  // namespace drtq

#endif  // DRTQ_TESTING_GENERATORS_H_
