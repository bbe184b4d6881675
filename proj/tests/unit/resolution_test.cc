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

#include <fstream>
#include <sstream>

#include "doctest.h"
#include "drtq/errors.h"
#include "drtq/text.h"
#include "testing/properties.h"

namespace drtq {
namespace {

std::string ReadData(const std::string &name) {
  std::ifstream in(std::string(DRTQ_TEST_DATA) + "/" + name);
  REQUIRE(in);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

Drs Data(const std::string &name) { return ParseDrs(ReadData(name)); }

Marker X(int id) { return Marker{Sort::kEntity, id}; }

// The consequent's first condition is the alpha in all unresolved examples.
const DrsPath kAlpha = {{0, Side::kRight}, {0, Side::kOnly}};
const DrsPath kPronoun = {{0, Side::kRight}, {1, Side::kOnly}};

TEST_CASE("suitable mappings") {
  Drs celebrity({X(2)}, {Pred{"celebrity", {X(2)}}});
  Drs antecedent({X(1)}, {Pred{"celebrity", {X(1)}}, Pred{"I-invite", {X(1)}}});
  CHECK(SuitableMappings(celebrity, antecedent) == std::vector<Mapping>{{{X(2), X(1)}}});

  Drs barkeeper({X(2)}, {Pred{"barkeeper", {X(2)}}});
  Drs bar({X(1)}, {Pred{"bar", {X(1)}}, Pred{"I-go-to", {X(1)}}});
  CHECK(SuitableMappings(barkeeper, bar).empty());
  Drs surfaced = Merge(bar, Drs({X(3)}, {Pred{"barkeeper", {X(3)}}, Pred{"of", {X(3), X(1)}}}));
  CHECK(SuitableMappings(barkeeper, surfaced) == std::vector<Mapping>{{{X(2), X(3)}}});

  // Pronouns: one mapping per sort-compatible marker, never the marker itself.
  Marker it{Sort::kAny, 9}, e{Sort::kEvent, 4};
  Drs candidate({X(1), e, it}, {});
  CHECK(SuitableMappings(Drs({it}, {}), candidate).size() == 2);
  std::vector<Mapping> he = SuitableMappings(Drs({X(5)}, {}), candidate);
  REQUIRE(he.size() == 2);
  for (const Mapping &m : he) CHECK(m[0].second != e);
}

TEST_CASE("alpha paths") {
  Drs k = Data("kingoffrance.unresolved");
  CHECK(AlphaPaths(k) == std::vector<DrsPath>{kAlpha, kPronoun});
  CHECK(AlphaPaths(Data("celebrity.golden")).empty());
}

TEST_CASE("link") {
  std::vector<Outcome> link = Link(Data("celebrity.unresolved"), kAlpha);
  REQUIRE(link.size() == 1);
  CHECK(link[0].result == Data("celebrity.golden"));
  CHECK(link[0].site == DrsPath{{0, Side::kLeft}});
  CHECK(Link(Data("barkeeper.unresolved"), kAlpha).empty());

  std::vector<Outcome> pronoun = Link(Data("kingoffrance.unresolved"), kPronoun);
  REQUIRE(pronoun.size() == 1);
  CHECK(pronoun[0].mapping == Mapping{{Marker{Sort::kAny, 3}, X(1)}});
  CHECK(SubDrs(pronoun[0].result, {{0, Side::kRight}}).Contains(Eq{Marker{Sort::kAny, 3}, X(1)}));
}

TEST_CASE("link only touches the host universe") {
  Drs before = Data("celebrity.unresolved");
  Drs after = Link(before, kAlpha)[0].result;
  CHECK(after.universe() == before.universe());
  CHECK(SubDrs(after, {{0, Side::kLeft}}) == SubDrs(before, {{0, Side::kLeft}}));
}

TEST_CASE("bridge") {
  std::vector<Outcome> bridge = Bridge(Data("barkeeper.unresolved"), kAlpha);
  REQUIRE(bridge.size() == 1);
  CHECK(bridge[0].result == Data("barkeeper.golden"));
  CHECK(bridge[0].mapping == Mapping{{X(2), X(3)}});

  Drs playground = ParseDrs(
      "drs([],[impl(drs([x:1],[pred(playground,[x:1]),qualia(formal,drs([],[pred(place,[x:1])])),"
      "pred(I-go-to,[x:1])]),drs([],[alpha(drs([x:2],[pred(barkeeper,[x:2])])),"
      "pred(always-throws-me-out,[x:2])]))])");
  CHECK(Bridge(playground, kAlpha).empty());
  std::vector<Outcome> acc = Accommodate(playground, kAlpha, {});
  REQUIRE_FALSE(acc.empty());
  CHECK(acc[0].site.empty());
  CHECK(acc[0].result.Declares(X(2)));
}

TEST_CASE("accommodate") {
  Drs k = Link(Data("kingoffrance.unresolved"), kPronoun)[0].result;
  std::vector<Outcome> acc = Accommodate(k, kAlpha, {});
  REQUIRE_FALSE(acc.empty());
  CHECK(acc[0].site.empty());
  CHECK(Isomorphic(acc[0].result, Data("kingoffrance.golden")));

  // A restrictor mentioning a marker of the consequent cannot go global.
  Drs deep = ParseDrs(
      "drs([],[impl(drs([x:1],[pred(party,[x:1])]),drs([],[alpha(drs([x:2],[pred(of,[x:2,x:1])])),"
      "pred(p,[x:2])]))])");
  for (const Outcome &o : Accommodate(deep, kAlpha, {})) {
    CHECK(FreeMarkers(o.result).empty());
    CHECK_FALSE(o.site.empty());
  }
}

TEST_CASE("resolve one gates the mechanisms") {
  CHECK(ResolveOne(Data("celebrity.unresolved"), kAlpha, {}).mechanism == Mechanism::kLink);
  CHECK(ResolveOne(Data("barkeeper.unresolved"), kAlpha, {}).mechanism == Mechanism::kBridge);
  CHECK(ResolveOne(Data("kingoffrance.unresolved"), kAlpha, {}).mechanism ==
        Mechanism::kAccommodate);
  Drs lonely = ParseDrs("drs([],[alpha(drs([x:1],[])),pred(p,[x:1])])");
  CHECK_THROWS_AS(ResolveOne(lonely, {{0, Side::kOnly}}, {}), ResolutionError);
  CHECK_THROWS_AS(ResolveOne(lonely, {{1, Side::kOnly}}, {}), PathError);
}

TEST_CASE("resolve all") {
  ResolveOptions options;
  options.bridging_nouns = {"barkeeper"};
  for (ResolutionOrder order : {ResolutionOrder::kPronounsLast, ResolutionOrder::kTextual,
                                ResolutionOrder::kPronounsFirst}) {
    options.order = order;
    std::vector<Reading> r = ResolveAll(Data("kingoffrance.unresolved"), options);
    REQUIRE(r.size() == 1);
    CHECK(Isomorphic(r[0].resolved, Data("kingoffrance.golden")));
    REQUIRE(r[0].steps.size() == 2);
    for (const Step &s : r[0].steps) {
      bool pronoun = s.anaphor == std::vector<Marker>{Marker{Sort::kAny, 3}};
      CHECK(s.mechanism == (pronoun ? Mechanism::kLink : Mechanism::kAccommodate));
    }
    CHECK(r[0].felicity_notes.empty());
  }
  Drs proper = Data("celebrity.golden");
  std::vector<Reading> id = ResolveAll(proper, options);
  REQUIRE(id.size() == 1);
  CHECK(id[0].resolved == proper);
  CHECK(id[0].steps.empty());
}

TEST_CASE("trace format") {
  std::vector<Reading> r = ResolveAll(Data("celebrity.unresolved"), {});
  REQUIRE(r[0].steps.size() == 1);
  CHECK(r[0].steps[0].ToString() == "alpha@/0R/0 -> Link @/0L [m: x:2->x:1]");
}

TEST_CASE("all readings") {
  // Two candidate antecedents give two readings.
  Drs k = ParseDrs(
      "drs([x:1,x:2],[pred(p,[x:1]),pred(p,[x:2]),alpha(drs([x:3],[pred(p,[x:3])])),"
      "pred(q,[x:3])])");
  ResolveOptions options;
  CHECK(ResolveAll(k, options).size() == 1);
  options.policy = ReadingPolicy::kAllReadings;
  CHECK(ResolveAll(k, options).size() == 2);
}

TEST_CASE("acceptability") {
  Drs ok = Data("kingoffrance.golden");
  CHECK(Acceptable(ok, Drs(), 4).ok);
  Drs contradiction = ParseDrs(
      "drs([x:1],[pred(king,[x:1]),not(drs([x:2],[pred(king,[x:2])]))])");
  Acceptability a = Acceptable(contradiction, Drs(), 4);
  CHECK_FALSE(a.ok);
  CHECK(a.reason == "inconsistent");
  Acceptability zero = Acceptable(contradiction, Drs(), 0);
  CHECK(zero.ok);
  CHECK(zero.degenerate);
  CHECK_FALSE(Acceptable(ParseDrs("drs([],[pred(p,[x:1])])"), Drs(), 4).ok);
  Drs context = ParseDrs("drs([x:1],[pred(king,[x:1])])");
  Acceptability old = Acceptable(context, context, 4);
  CHECK_FALSE(old.ok);
  CHECK(old.reason == "uninformative");
}

TEST_CASE("accommodation is filtered by consistency") {
  Drs k = ParseDrs(
      "drs([],[not(drs([x:1],[pred(king,[x:1])])),alpha(drs([x:2],[pred(king,[x:2])])),"
      "pred(p,[x:2])])");
  CHECK(Accommodate(k, {{1, Side::kOnly}}, {}).empty());
  CHECK_THROWS_AS(ResolveAll(k, {}), ResolutionError);
}

TEST_CASE("projection") {
  Drs k = Data("kingoffrance.unresolved");
  Drs p = Projection(k);
  CHECK(CountAlpha(p) == 0);
  CHECK(FreeMarkers(p).empty());
  CHECK(p.Declares(X(2)));
}

TEST_CASE("resolution properties on generated drs") {
  for (const testing::SuiteResult &r : {testing::AlphaDecrease(21, 200), testing::Gating(22, 100)}) {
    INFO(r.first_failure);
    CHECK(r.cases > 0);
    CHECK(r.ok());
  }
}

}  // namespace
}  // namespace drtq
