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

#include "drtq/cli.h"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "drtq/drs.h"
#include "drtq/text.h"

namespace drtq {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result Run(std::vector<std::string> args) {
  args.insert(args.begin(), "drtq");
  std::vector<const char *> argv;
  for (const std::string &a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli::Run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string Data(const std::string &name) { return std::string(DRTQ_TEST_DATA) + "/" + name; }

std::string ReadData(const std::string &name) {
  std::ifstream in(Data(name));
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

int Count(const std::string &text, const std::string &needle) {
  int n = 0;
  for (size_t p = text.find(needle); p != std::string::npos; p = text.find(needle, p + 1)) ++n;
  return n;
}

TEST_CASE("resolve renders the bridged reading") {
  Result linear = Run({"resolve", Data("barkeeper.txt"), "--render", "linear"});
  CHECK(linear.code == cli::kOk);
  CHECK(Isomorphic(ParseDrs(linear.out), ParseDrs(ReadData("barkeeper.golden"))));
  CHECK(linear.err.empty());

  Result box = Run({"resolve", Data("barkeeper.txt")});
  CHECK(box.code == cli::kOk);
  CHECK(box.out.find("==>") != std::string::npos);
  CHECK(box.out.find("Q_C:") != std::string::npos);
  CHECK(box.out.find("barkeeper(x") != std::string::npos);
  CHECK(Run({"resolve", Data("barkeeper.txt")}).out == box.out);
}

TEST_CASE("resolve warns about unanchored bridging nouns") {
  Result r = Run({"resolve", Data("playground.txt")});
  CHECK(r.code == cli::kOk);
  CHECK(r.err.find("warning:") != std::string::npos);
  CHECK(r.err.find("barkeeper") != std::string::npos);
}

TEST_CASE("resolve traces steps on stderr") {
  Result r = Run({"resolve", Data("kingoffrance.txt"), "--trace", "--render", "linear"});
  CHECK(r.code == cli::kOk);
  CHECK(Count(r.err, "trace:") == 2);
  CHECK(r.err.find("-> Link @/0L [m: ") != std::string::npos);
  CHECK(r.err.find("-> Accommodate @/") != std::string::npos);
}

TEST_CASE("resolve all readings") {
  Result r = Run({"resolve", Data("kingoffrance.txt"), "--all-readings", "--render", "linear"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out.find("drs(") != std::string::npos);
}

TEST_CASE("exit codes") {
  Result unknown = Run({"resolve", Data("unknown_word.txt")});
  CHECK(unknown.code == cli::kLexiconFailure);
  CHECK(unknown.err.find("unicorn") != std::string::npos);
  CHECK(Run({"resolve", Data("unbound_pronoun.txt")}).code == cli::kResolutionFailure);
  CHECK(Run({"resolve", Data("no_such_file.txt")}).code == cli::kParseFailure);
  CHECK(Run({"resolve", Data("john_begins.txt")}).code == cli::kParseFailure);
  CHECK(Run({"resolve", Data("celebrity.txt"), "--lexicon", Data("bad.model")}).code ==
        cli::kLexiconFailure);
  CHECK(Run({"verify", Data("celebrity.txt"), "--model", Data("bad.model")}).code ==
        cli::kModelFailure);
  CHECK(Run({"resolve"}).code != cli::kOk);
  CHECK(Run({"frobnicate"}).code != cli::kOk);
}

TEST_CASE("derive shows coercion") {
  Result r = Run({"derive", "John begins a book"});
  CHECK(r.code == cli::kOk);
  CHECK(Count(r.out, "reading ") == 2);
  CHECK(Count(r.out, "[coerced via Q_") == 2);
  CHECK(r.out.find("Q_agentive") < r.out.find("Q_telic"));
  CHECK(r.out.find("write(e") != std::string::npos);
  CHECK(r.out.find("read(e") != std::string::npos);

  Result plain = Run({"derive", "I invite a celebrity", "--render", "linear"});
  CHECK(plain.code == cli::kOk);
  CHECK(plain.out.find("coerced") == std::string::npos);

  Result fail = Run({"derive", "John begins"});
  CHECK(fail.code == cli::kParseFailure);
  CHECK(fail.err.find("<e,<e,t>>") != std::string::npos);
}

TEST_CASE("verify against models") {
  Result yes = Run({"verify", Data("celebrity.txt"), "--model", Data("celebrity_true.model")});
  CHECK(yes.code == cli::kOk);
  CHECK(yes.out == "reading 1: TRUE\n");
  Result no = Run({"verify", Data("celebrity.txt"), "--model", Data("celebrity_false.model")});
  CHECK(no.out == "reading 1: FALSE\n");
  Result empty = Run({"verify", Data("empty.txt"), "--model", Data("celebrity_true.model")});
  CHECK(empty.out == "reading 1: TRUE\n");
}

TEST_CASE("linear output round-trips") {
  for (const char *f : {"celebrity.txt", "barkeeper.txt", "kingoffrance.txt", "intersentential.txt"}) {
    Result r = Run({"resolve", Data(f), "--render", "linear"});
    REQUIRE(r.code == cli::kOk);
    CHECK(ToLinear(ParseDrs(r.out)) + "\n" == r.out);
  }
}

}  // namespace
}  // namespace drtq
