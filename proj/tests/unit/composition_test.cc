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
#include <set>

#include "doctest.h"
#include "drtq/errors.h"
#include "drtq/lexicon.h"
#include "drtq/text.h"

namespace drtq {
namespace {

Term Entry(const std::string &form, FreshSupply &supply) {
  std::vector<const LexicalEntry *> entries = BuiltinFragment().Lookup(form);
  REQUIRE(!entries.empty());
  return Instantiate(entries.front()->sem, supply);
}

std::set<std::string> PredNames(const Drs &k) {
  std::set<std::string> out;
  for (const Condition &c : k.conditions()) {
    if (const auto *p = std::get_if<Pred>(&c)) out.insert(p->name);
  }
  return out;
}

bool HasPred(const Drs &k, const std::string &name, std::vector<Marker> args) {
  return k.Contains(Pred{name, std::move(args)});
}

TEST_CASE("types of lexical entries") {
  FreshSupply supply;
  CHECK(TypeOf(Entry("book", supply)) == SemType::Parse("<e,t>"));
  CHECK(TypeOf(Entry("write", supply)) == SemType::Parse("<e,<e,<e,t>>>"));
  CHECK(TypeOf(Entry("begin", supply)) == SemType::Parse("<<e,<e,t>>,<e,<e,t>>>"));
  CHECK(TypeOf(Entry("a", supply)) == SemType::Parse("<<e,t>,<<e,t>,t>>"));
  CHECK(TypeOf(Term::Box(Drs())) == SemType::T());
  CHECK_THROWS_AS(TypeOf(ParseTerm("app(drs([],[]),x:1)")), TypeError);
}

TEST_CASE("beta reduction") {
  FreshSupply supply(100);
  Term t = ParseTerm("app(lam(x:1:e,drs([],[pred(p,[x:1])])),x:7)");
  CHECK(BetaReduce(t, supply) == ParseTerm("drs([],[pred(p,[x:7])])"));
  Term nf = BetaReduce(ParseTerm("app(lam(v:1:<e,t>,lam(x:2:e,app(v:1:<e,t>,x:2))),"
                                 "lam(x:3:e,drs([],[pred(q,[x:3])])))"),
                       supply);
  CHECK(nf == ParseTerm("lam(x:2:e,drs([],[pred(q,[x:2])]))"));
  CHECK(BetaReduce(nf, supply) == nf);
  CHECK(BetaReduce(ParseTerm("oplus(drs([x:1],[]),drs([],[pred(p,[x:1])]))"), supply) ==
        ParseTerm("drs([x:1],[pred(p,[x:1])])"));
}

TEST_CASE("a book keeps the qualia structure") {
  FreshSupply supply;
  Term a = Entry("a", supply);
  Term book = Entry("book", supply);
  std::vector<Composition> np = FunctionalComposition(a, book, supply);
  REQUIRE(np.size() == 1);
  CHECK_FALSE(np[0].coerced);
  CHECK(TypeOf(np[0].result) == SemType::Parse("<<e,t>,t>"));
  std::vector<Quale> qualia = QualiaAccess(np[0].result);
  REQUIRE(qualia.size() == 4);
  std::set<QualiaRole> roles;
  for (const Quale &q : qualia) roles.insert(q.role);
  CHECK(roles.size() == 4);
}

TEST_CASE("proper names have no qualia") {
  FreshSupply supply;
  CHECK(QualiaAccess(Entry("john", supply)).empty());
}

TEST_CASE("every book exposes its restrictor's qualia") {
  FreshSupply supply;
  Term every = Entry("every", supply);
  Term book = Entry("book", supply);
  std::vector<Composition> np = FunctionalComposition(every, book, supply);
  REQUIRE(np.size() == 1);
  std::vector<Quale> qualia = QualiaAccess(np[0].result);
  int events = 0;
  for (const Quale &q : qualia) events += !q.payload.is_box();
  CHECK(events == 2);
}

TEST_CASE("begin a book coerces through the agentive and telic qualia") {
  FreshSupply supply;
  Term begin = Entry("begin", supply);
  Term np = FunctionalComposition(Entry("a", supply), Entry("book", supply), supply)[0].result;

  std::vector<Composition> tc = TypeCoercion(np, supply);
  REQUIRE(tc.size() == 2);
  for (const Composition &c : tc) CHECK(TypeOf(c.result) == SemType::Parse("<e,<e,t>>"));

  std::vector<Composition> vp = FunctionalComposition(begin, np, supply);
  REQUIRE(vp.size() == 2);
  CHECK(vp[0].coerced);
  CHECK(vp[0].role == QualiaRole::kAgentive);
  CHECK(vp[1].role == QualiaRole::kTelic);
  const char *events[] = {"write", "read"};
  for (int i = 0; i < 2; ++i) {
    const Composition &c = vp[i];
    CHECK(TypeOf(c.result) == SemType::Parse("<e,<e,t>>"));
    // Saturate subject and event to inspect the body.
    Marker x{Sort::kEntity, 900}, e{Sort::kEvent, 901};
    Term body = BetaReduce(Term::App(Term::App(c.result, Term::Ref(x)), Term::Ref(e)), supply);
    REQUIRE(body.is_box());
    const Drs &k = body.box();
    CHECK(HasPred(k, "begin", {e}));
    CHECK(HasPred(k, events[i], {e}));
    CHECK(HasPred(k, "agent", {e, x}));
    REQUIRE(k.universe().size() == 1);
    Marker y = k.universe()[0];
    CHECK(HasPred(k, "theme", {e, y}));
    CHECK(HasPred(k, "book", {y}));
    int qualia = std::count_if(k.conditions().begin(), k.conditions().end(), [](const Condition &q) {
      return std::holds_alternative<Qualia>(q);
    });
    CHECK(qualia == 4);
  }
}

TEST_CASE("direct application when types match") {
  FreshSupply supply(50);
  Term f = ParseTerm("lam(x:1:e,drs([],[pred(p,[x:1])]))");
  std::vector<Composition> r = FunctionalComposition(f, ParseTerm("x:9"), supply);
  REQUIRE(r.size() == 1);
  CHECK(r[0].sigma == 0);
  CHECK(r[0].result == BetaReduce(Term::App(f, ParseTerm("x:9")), supply));
}

TEST_CASE("composition failures") {
  FreshSupply supply;
  CHECK_THROWS_AS(FunctionalComposition(Term::Box(Drs()), Entry("book", supply), supply),
                  CompositionError);
  // A qualia-free argument of the wrong type has no coercion route.
  CHECK(FunctionalComposition(Entry("begin", supply), Entry("john", supply), supply).empty());
  CHECK(TypeCoercion(Entry("john", supply), supply).empty());
}

TEST_CASE("composition never invents predicates") {
  FreshSupply supply;
  Term np = FunctionalComposition(Entry("a", supply), Entry("book", supply), supply)[0].result;
  std::vector<Composition> vp = FunctionalComposition(Entry("begin", supply), np, supply);
  std::set<std::string> allowed = {"begin", "book", "write", "read", "agent", "theme",
                                   "info_cont", "sections", "has"};
  for (const Composition &c : vp) {
    Marker x{Sort::kEntity, 900}, e{Sort::kEvent, 901};
    Term body = BetaReduce(Term::App(Term::App(c.result, Term::Ref(x)), Term::Ref(e)), supply);
    for (const std::string &name : PredNames(body.box())) CHECK(allowed.count(name) == 1);
  }
}

}  // namespace
}  // namespace drtq
