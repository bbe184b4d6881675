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
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "drtq/errors.h"
#include "drtq/grammar.h"
#include "drtq/lexicon.h"
#include "drtq/model.h"
#include "drtq/render.h"
#include "drtq/resolution.h"
#include "drtq/text.h"

namespace drtq {
namespace cli {
namespace {

struct Flags {
  std::string input;
  std::string render = "box";
  bool all_readings = false;
  bool trace = false;
  std::string lexicon;
  std::string model;
  int domain_bound = 4;
  std::string order = "pronouns-last";
};

class InputError : public Error {
 public:
  using Error::Error;
};

std::string ReadFile(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Lexicon GetLexicon(const Flags &flags) {
  if (flags.lexicon.empty()) return BuiltinFragment();
  std::string text;
  try {
    text = ReadFile(flags.lexicon);
  } catch (const InputError &e) {
    throw LexiconError(e.what());
  }
  try {
    return LoadLexicon(text);
  } catch (const SyntaxError &e) {
    throw LexiconError(flags.lexicon + ": " + e.what());
  }
}

std::string Render(const Drs &drs, const Flags &flags) {
  return flags.render == "linear" ? ToLinear(drs) + "\n" : RenderBox(drs);
}

std::vector<DiscourseState> Process(const Flags &flags) {
  Lexicon lexicon = GetLexicon(flags);
  std::vector<std::string> sentences = SplitSentences(ReadFile(flags.input));
  static const std::map<std::string, ResolutionOrder> kOrders = {
      {"pronouns-last", ResolutionOrder::kPronounsLast},
      {"textual", ResolutionOrder::kTextual},
      {"pronouns-first", ResolutionOrder::kPronounsFirst}};
  ResolveOptions options;
  options.order = kOrders.at(flags.order);
  options.policy = flags.all_readings ? ReadingPolicy::kAllReadings : ReadingPolicy::kBestFirst;
  options.domain_bound = flags.domain_bound;
  options.bridging_nouns = BridgingNouns(lexicon);
  return ProcessDiscourse(sentences, lexicon, options);
}

void ReportNotes(const std::vector<DiscourseState> &states, const Flags &flags,
                 std::ostream &err) {
  for (size_t r = 0; r < states.size(); ++r) {
    const DiscourseState &s = states[r];
    for (size_t i = 0; i < s.history.size(); ++i) {
      const Reading &reading = s.history[i].reading;
      if (flags.trace) {
        for (const Step &step : reading.steps) {
          err << "trace: reading " << r + 1 << ", sentence " << i + 1 << ": " << step.ToString()
              << "\n";
        }
      }
      for (const std::string &note : reading.felicity_notes) {
        err << "warning: sentence " << i + 1 << ": " << note << "\n";
      }
    }
  }
}

int Resolve(const Flags &flags, std::ostream &out, std::ostream &err) {
  std::vector<DiscourseState> states = Process(flags);
  ReportNotes(states, flags, err);
  for (size_t r = 0; r < states.size(); ++r) {
    if (states.size() > 1) out << "reading " << r + 1 << ":\n";
    out << Render(states[r].main, flags);
  }
  return kOk;
}

int Verify(const Flags &flags, std::ostream &out, std::ostream &err) {
  Model model;
  try {
    model = ParseModel(ReadFile(flags.model));
  } catch (const InputError &e) {
    throw ModelError(e.what());
  }
  std::vector<DiscourseState> states = Process(flags);
  ReportNotes(states, flags, err);
  for (size_t r = 0; r < states.size(); ++r) {
    out << "reading " << r + 1 << ": " << (drtq::Verify(states[r].main, model) ? "TRUE" : "FALSE")
        << "\n";
  }
  return kOk;
}

int Derive(const Flags &flags, std::ostream &out) {
  Lexicon lexicon = GetLexicon(flags);
  std::vector<Item> items = Segment(Tokenize(flags.input), lexicon);
  std::vector<Derivation> derivations = ParseSentence(items);
  int count = 0;
  for (const Derivation &d : derivations) {
    FreshSupply supply;
    for (const SentenceReading &reading : BuildSentenceDrs(d, lexicon, supply)) {
      out << "reading " << ++count << ": " << d.ToString() << "\n";
      int n = 0;
      for (const BuildStep &step : reading.steps) {
        const Composition &c = step.composition;
        out << "step " << ++n << ": '" << step.functor << "' (.) '" << step.argument << "'";
        if (c.sigma > 0) out << " [sigma " << c.sigma << "]";
        if (c.coerced) out << " [coerced via Q_" << RoleName(c.role) << "]";
        out << "\n";
        out << "  functor:  " << ToLinear(step.functor_term) << "\n";
        out << "  argument: " << ToLinear(step.argument_term) << "\n";
        if (c.coerced) out << "  quale:    " << ToLinear(c.quale) << "\n";
        out << "  result:   " << ToLinear(c.result) << "\n";
      }
      out << Render(reading.drs, flags);
    }
  }
  return kOk;
}

int ExitCode(const Error &e) {
  if (dynamic_cast<const LexiconError *>(&e)) return kLexiconFailure;
  if (dynamic_cast<const ResolutionError *>(&e)) return kResolutionFailure;
  if (dynamic_cast<const ModelError *>(&e)) return kModelFailure;
  return kParseFailure;
}

}  // namespace

int Run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
  CLI::App app{"Discourse representation with qualia-driven bridging", "drtq"};
  app.require_subcommand(1);
  Flags flags;

  auto add_common = [&](CLI::App *sub) {
    sub->add_option("--render", flags.render, "Output style")
        ->check(CLI::IsMember({"box", "linear"}));
    sub->add_option("--lexicon", flags.lexicon, "Lexicon file merged over the builtin fragment");
  };
  auto add_resolution = [&](CLI::App *sub) {
    sub->add_flag("--all-readings", flags.all_readings, "Print every reading");
    sub->add_flag("--trace", flags.trace, "Print resolution steps on stderr");
    sub->add_option("--domain-bound", flags.domain_bound, "Model size bound")
        ->check(CLI::Range(0, 8));
    sub->add_option("--order", flags.order, "Resolution order")
        ->check(CLI::IsMember({"pronouns-last", "textual", "pronouns-first"}));
  };

  CLI::App *resolve = app.add_subcommand("resolve", "Build and resolve a discourse");
  resolve->add_option("file", flags.input, "Discourse file")->required();
  add_common(resolve);
  add_resolution(resolve);

  CLI::App *derive = app.add_subcommand("derive", "Show the composition of one sentence");
  derive->add_option("sentence", flags.input, "Sentence")->required();
  add_common(derive);

  CLI::App *verify = app.add_subcommand("verify", "Check resolved readings against a model");
  verify->add_option("file", flags.input, "Discourse file")->required();
  verify->add_option("--model", flags.model, "Model file")->required();
  add_common(verify);
  add_resolution(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    return app.exit(e, out, err);
  }

  try {
    if (resolve->parsed()) return Resolve(flags, out, err);
    if (derive->parsed()) return Derive(flags, out);
    return Verify(flags, out, err);
  } catch (const Error &e) {
    err << "error: ";
    if (e.sentence() >= 0) err << "sentence " << e.sentence() + 1 << ": ";
    err << e.what() << "\n";
    return ExitCode(e);
  }
}

}  // namespace cli
}  // namespace drtq
