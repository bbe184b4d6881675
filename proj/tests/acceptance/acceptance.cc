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

// Acceptance runner: one PASS/FAIL line per criterion.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "drtq/drs.h"
#include "drtq/errors.h"
#include "drtq/grammar.h"
#include "drtq/lexicon.h"
#include "drtq/model.h"
#include "drtq/resolution.h"
#include "drtq/text.h"
#include "testing/enumerate.h"
#include "testing/naive_model.h"
#include "testing/properties.h"

namespace drtq {
namespace {

struct Verdict {
  bool pass = true;
  std::string detail;

  void Require(bool ok, const std::string &what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

std::string ReadData(const std::string &name) {
  std::ifstream in(std::string(DRTQ_TEST_DATA) + "/" + name);
  if (!in) throw Error("missing test data " + name);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

Drs Golden(const std::string &name) { return ParseDrs(ReadData(name + ".golden")); }

std::vector<DiscourseState> Readings(const std::string &name, ReadingPolicy policy,
                                     ResolutionOrder order = ResolutionOrder::kPronounsLast) {
  const Lexicon &lex = BuiltinFragment();
  ResolveOptions options;
  options.policy = policy;
  options.order = order;
  options.bridging_nouns = BridgingNouns(lex);
  return ProcessDiscourse(SplitSentences(ReadData(name + ".txt")), lex, options);
}

std::vector<DiscourseState> AllReadings(const std::string &name) {
  return Readings(name, ReadingPolicy::kAllReadings);
}

// The preferred reading: accommodation at the most global acceptable site.
std::vector<DiscourseState> Preferred(const std::string &name,
                                      ResolutionOrder order = ResolutionOrder::kPronounsLast) {
  return Readings(name, ReadingPolicy::kBestFirst, order);
}

Drs SentenceDrs(const std::string &name) {
  const Lexicon &lex = BuiltinFragment();
  std::vector<Derivation> d = ParseSentence(Segment(Tokenize(ReadData(name + ".txt")), lex));
  FreshSupply supply;
  return BuildSentenceDrs(d.at(0), lex, supply).at(0).drs;
}

std::string Mechanisms(const Reading &r) {
  std::string out;
  for (const Step &s : r.steps) {
    if (!out.empty()) out += ", ";
    out += std::string(MechanismName(s.mechanism)) + (s.anaphor.size() == 1 &&
                                                      s.anaphor[0].sort == Sort::kAny
                                                          ? "(pronoun)"
                                                          : "");
  }
  return "[" + out + "]";
}

Verdict LinkingGolden() {
  Verdict v;
  std::vector<DiscourseState> s = AllReadings("celebrity");
  v.Require(s.size() == 1, "expected one reading, got " + std::to_string(s.size()));
  const Reading &r = s[0].history.at(0).reading;
  v.Require(Isomorphic(s[0].main, Golden("celebrity")), "differs from the golden box");
  v.Require(r.steps.size() == 1 && r.steps[0].mechanism == Mechanism::kLink,
            "mechanisms " + Mechanisms(r));
  v.detail = v.pass ? "1 reading, isomorphic to golden, mechanisms " + Mechanisms(r) : v.detail;
  return v;
}

Verdict BridgingGolden() {
  Verdict v;
  std::vector<DiscourseState> s = AllReadings("barkeeper");
  v.Require(s.size() == 1, "expected one reading, got " + std::to_string(s.size()));
  const Reading &r = s[0].history.at(0).reading;
  v.Require(Isomorphic(s[0].main, Golden("barkeeper")), "differs from the golden box");
  v.Require(r.steps.size() == 1 && r.steps[0].mechanism == Mechanism::kBridge,
            "mechanisms " + Mechanisms(r));
  Drs unresolved = SentenceDrs("barkeeper");
  std::vector<DrsPath> alphas = AlphaPaths(unresolved);
  v.Require(alphas.size() == 1, "expected one alpha");
  size_t links = Link(unresolved, alphas.at(0)).size();
  v.Require(links == 0, "link produced " + std::to_string(links) + " candidates");
  if (v.pass) v.detail = "1 reading, isomorphic to golden, mechanisms " + Mechanisms(r) + ", 0 link candidates";
  return v;
}

Verdict AccommodationGolden() {
  Verdict v;
  std::string seen;
  for (ResolutionOrder order : {ResolutionOrder::kPronounsLast, ResolutionOrder::kTextual,
                                ResolutionOrder::kPronounsFirst}) {
    std::vector<DiscourseState> s = Preferred("kingoffrance", order);
    v.Require(s.size() == 1, "expected one reading, got " + std::to_string(s.size()));
    const Reading &r = s[0].history.at(0).reading;
    v.Require(Isomorphic(s[0].main, Golden("kingoffrance")), "differs from the golden box");
    v.Require(r.steps.size() == 2, "expected two steps");
    for (const Step &step : r.steps) {
      bool pronoun = step.anaphor.size() == 1 && step.anaphor[0].sort == Sort::kAny;
      v.Require(step.mechanism == (pronoun ? Mechanism::kLink : Mechanism::kAccommodate),
                "mechanisms " + Mechanisms(r));
      if (!pronoun) v.Require(step.site.empty(), "definite not accommodated globally");
    }
    if (order == ResolutionOrder::kPronounsFirst) {
      v.Require(r.steps.size() == 2 && r.steps[0].mechanism == Mechanism::kLink &&
                    r.steps[1].mechanism == Mechanism::kAccommodate,
                "pronoun-first sequence " + Mechanisms(r));
    }
    seen += (seen.empty() ? "" : " ") + Mechanisms(r);
  }
  if (v.pass) {
    v.detail = "preferred reading golden under all 3 orders; step sequences " + seen + "; " +
               std::to_string(AllReadings("kingoffrance").size()) + " readings with local sites";
  }
  return v;
}

Verdict FelicityContrast() {
  Verdict v;
  std::vector<DiscourseState> p = Preferred("playground");
  v.Require(p.size() == 1, "expected one playground reading");
  const Reading &r = p[0].history.at(0).reading;
  v.Require(r.steps.size() == 1 && r.steps[0].mechanism == Mechanism::kAccommodate &&
                r.steps[0].site.empty(),
            "playground mechanisms " + Mechanisms(r));
  v.Require(!r.felicity_notes.empty(), "no felicity warning for the playground");
  std::vector<DiscourseState> b = AllReadings("barkeeper");
  v.Require(b[0].history.at(0).reading.felicity_notes.empty(), "warning for the bar sentence");
  if (v.pass) v.detail = "playground: global accommodation + 1 warning; bar: 0 warnings";
  return v;
}

Verdict CoercionCardinality() {
  Verdict v;
  const Lexicon &lex = BuiltinFragment();
  std::vector<Derivation> d = ParseSentence(Segment(Tokenize("John begins a book."), lex));
  FreshSupply supply;
  std::vector<SentenceReading> readings;
  for (const Derivation &x : d) {
    for (SentenceReading &r : BuildSentenceDrs(x, lex, supply)) readings.push_back(std::move(r));
  }
  v.Require(readings.size() == 2, "expected 2 sentence DRSs, got " + std::to_string(readings.size()));
  std::set<std::string> kinds;
  for (const SentenceReading &r : readings) {
    const Drs &k = r.drs;
    Marker e{};
    bool found_e = false;
    for (Marker m : k.universe()) {
      if (m.sort == Sort::kEvent && k.Contains(Pred{"begin", {m}})) {
        e = m;
        found_e = true;
      }
    }
    v.Require(found_e, "no begin(e)");
    if (!found_e) continue;
    bool agent = false, theme_book = false;
    int qualia = 0;
    for (const Condition &c : k.conditions()) {
      if (const auto *p = std::get_if<Pred>(&c)) {
        if (p->name == "agent" && p->args.size() == 2 && p->args[0] == e) agent = true;
        if (p->name == "theme" && p->args.size() == 2 && p->args[0] == e &&
            k.Declares(p->args[1]) && k.Contains(Pred{"book", {p->args[1]}})) {
          theme_book = true;
        }
      }
      qualia += std::holds_alternative<Qualia>(c);
    }
    v.Require(agent && theme_book, "missing agent(e,x) or theme(e,y) with book(y)");
    v.Require(qualia == 4, "qualia residue has " + std::to_string(qualia) + " conditions");
    for (const char *event : {"read", "write"}) {
      if (k.Contains(Pred{event, {e}})) kinds.insert(event);
    }
  }
  v.Require(kinds == std::set<std::string>{"read", "write"}, "read/write split not found");
  if (v.pass) v.detail = "2 sentence DRSs: write(e) and read(e), each with begin/agent/theme/book and 4 qualia";
  return v;
}

Verdict GatingProperty() {
  Verdict v;
  testing::SuiteResult r = testing::Gating(20240601, 200);
  v.Require(r.cases == 200, "only " + std::to_string(r.cases) + " resolvable configurations");
  v.Require(r.ok(), std::to_string(r.failures) + " violations, first: " + r.first_failure);
  if (v.pass) {
    v.detail = "200 configurations (";
    for (const auto &[mechanism, n] : r.tally) v.detail += mechanism + " " + std::to_string(n) + ", ";
    v.detail.resize(v.detail.size() - 2);
    v.detail += "), 0 violations";
  }
  return v;
}

Verdict AlgebraProperties() {
  Verdict v;
  struct Suite {
    const char *name;
    testing::SuiteResult result;
  };
  std::vector<Suite> suites = {
      {"merge", testing::MergeLaws(101, 500)},
      {"substitution", testing::SubstitutionRoundTrip(102, 500)},
      {"rename_fresh", testing::RenameFreshLaws(103, 500)},
      {"alpha-decrease", testing::AlphaDecrease(104, 500)},
  };
  std::string counts;
  for (const Suite &s : suites) {
    v.Require(s.result.cases >= 500, std::string(s.name) + ": only " + std::to_string(s.result.cases) + " cases");
    v.Require(s.result.ok(), std::string(s.name) + ": " + std::to_string(s.result.failures) +
                                 " failures, first: " + s.result.first_failure);
    counts += (counts.empty() ? "" : ", ") + std::string(s.name) + " " + std::to_string(s.result.cases);
  }
  if (v.pass) v.detail = "0 failures (" + counts + " cases)";
  return v;
}

Verdict ModelOracle() {
  Verdict v;
  std::vector<Model> models;
  testing::ForEachModel({{"p", 1}, {"q", 1}}, 3, [&](const Model &m) { models.push_back(m); });
  long checks = 0, disagreements = 0, drs = 0;
  std::string first;
  testing::ForEachSmallDrs([&](const Drs &k) {
    ++drs;
    for (const Model &m : models) {
      ++checks;
      if (Verify(k, m) != testing::NaiveVerify(k, m) && disagreements++ == 0) first = ToLinear(k);
    }
  });
  v.Require(disagreements == 0, std::to_string(disagreements) + " disagreements, first: " + first);
  for (const char *name : {"kingoffrance", "celebrity", "barkeeper"}) {
    v.Require(Consistent(AllReadings(name)[0].main, 4), std::string(name) + " inconsistent at 4");
  }
  if (v.pass) {
    v.detail = std::to_string(drs) + " DRSs x " + std::to_string(models.size()) + " models, " +
               std::to_string(checks) + " checks, 0 disagreements; 3 resolved examples consistent at N=4";
  }
  return v;
}

Verdict InterSentential() {
  Verdict v;
  std::vector<DiscourseState> s = AllReadings("intersentential");
  v.Require(s.size() == 1, "expected one reading");
  v.Require(s[0].history.size() == 2, "expected two sentences");
  const Reading &second = s[0].history.at(1).reading;
  v.Require(second.steps.size() == 1 && second.steps[0].mechanism == Mechanism::kLink,
            "second sentence mechanisms " + Mechanisms(second));
  const Reading &first = s[0].history.at(0).reading;
  bool into_first = false;
  if (v.pass) {
    Marker target = second.steps[0].mapping.at(0).second;
    into_first = first.resolved.Declares(target);
  }
  v.Require(into_first, "antecedent is not the first sentence's marker");
  v.Require(IsProper(s[0].main), "main DRS not proper");
  if (v.pass) v.detail = "second definite linked: " + second.steps[0].ToString();
  return v;
}

}  // namespace
}  // namespace drtq

int main() {
  using Clock = std::chrono::steady_clock;
  struct Criterion {
    const char *name;
    std::function<drtq::Verdict()> run;
  };
  const Criterion criteria[] = {
      {"linking golden", drtq::LinkingGolden},
      {"bridging golden", drtq::BridgingGolden},
      {"accommodation golden", drtq::AccommodationGolden},
      {"felicity contrast", drtq::FelicityContrast},
      {"coercion cardinality", drtq::CoercionCardinality},
      {"gating property", drtq::GatingProperty},
      {"algebra properties", drtq::AlgebraProperties},
      {"model oracle", drtq::ModelOracle},
      {"inter-sentential link", drtq::InterSentential},
  };
  auto start = Clock::now();
  int failed = 0, index = 0;
  for (const Criterion &c : criteria) {
    ++index;
    auto t0 = Clock::now();
    drtq::Verdict v;
    try {
      v = c.run();
    } catch (const std::exception &e) {
      v.pass = false;
      v.detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    failed += !v.pass;
    std::printf("%s %d %s: %s (%.2fs)\n", v.pass ? "PASS" : "FAIL", index, c.name, v.detail.c_str(),
                secs);
  }
  double total = std::chrono::duration<double>(Clock::now() - start).count();
  std::printf("%d/%d criteria passed in %.2fs\n", index - failed, index, total);
  return failed == 0 ? 0 : 1;
}
