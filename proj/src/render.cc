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

#include "drtq/render.h"

#include <algorithm>

#include "drtq/text.h"

namespace drtq {
namespace {

using Block = std::vector<std::string>;

size_t Width(const Block &b) {
  size_t w = 0;
  for (const std::string &line : b) w = std::max(w, line.size());
  return w;
}

// Lays blocks side by side; 'joiners' goes between consecutive blocks on
// the middle line, spaces elsewhere.
Block Beside(const std::vector<Block> &blocks, const std::vector<std::string> &joiners) {
  size_t height = 0;
  for (const Block &b : blocks) height = std::max(height, b.size());
  size_t mid = height / 2;
  Block out(height);
  for (size_t i = 0; i < blocks.size(); ++i) {
    size_t w = Width(blocks[i]);
    for (size_t row = 0; row < height; ++row) {
      std::string cell = row < blocks[i].size() ? blocks[i][row] : "";
      cell.resize(w, ' ');
      out[row] += cell;
      if (i < joiners.size()) {
        out[row] += row == mid ? joiners[i] : std::string(joiners[i].size(), ' ');
      }
    }
  }
  return out;
}

Block TermBlock(const Term &term);

char RoleLetter(QualiaRole role) {
  switch (role) {
    case QualiaRole::kFormal: return 'F';
    case QualiaRole::kConstitutive: return 'C';
    case QualiaRole::kTelic: return 'T';
    case QualiaRole::kAgentive: return 'A';
  }
  return '?';
}

std::string MarkerName(Marker m) { return ShortName(m); }

Block ConditionBlock(const Condition &c) {
  if (const auto *p = std::get_if<Pred>(&c)) {
    std::string s = p->name + "(";
    for (size_t i = 0; i < p->args.size(); ++i) {
      if (i > 0) s += ",";
      s += MarkerName(p->args[i]);
    }
    return {s + ")"};
  }
  if (const auto *eq = std::get_if<Eq>(&c)) {
    return {MarkerName(eq->left) + " = " + MarkerName(eq->right)};
  }
  if (const auto *impl = std::get_if<Impl>(&c)) {
    return Beside({TermBlock(impl->antecedent), TermBlock(impl->consequent)}, {" ==> "});
  }
  if (const auto *neg = std::get_if<Neg>(&c)) {
    return Beside({{"~"}, TermBlock(neg->inner)}, {" "});
  }
  if (const auto *disj = std::get_if<Disj>(&c)) {
    return Beside({TermBlock(disj->left), TermBlock(disj->right)}, {" v "});
  }
  if (const auto *alpha = std::get_if<Alpha>(&c)) {
    return Beside({{"a:"}, TermBlock(alpha->inner)}, {" "});
  }
  const auto &q = std::get<Qualia>(c);
  std::string label = std::string("Q_") + RoleLetter(q.role) + ":";
  return Beside({{label}, TermBlock(q.inner)}, {" "});
}

Block DrsBlock(const Drs &drs) {
  std::string header;
  for (Marker m : drs.universe()) {
    if (!header.empty()) header += " ";
    header += MarkerName(m);
  }
  Block body;
  for (const Condition &c : drs.conditions()) {
    Block cb = ConditionBlock(c);
    body.insert(body.end(), cb.begin(), cb.end());
  }
  size_t inner = std::max(header.size(), Width(body));
  inner = std::max<size_t>(inner, 1);
  std::string rule = "+" + std::string(inner + 2, '-') + "+";
  auto row = [&](const std::string &s) {
    return "| " + s + std::string(inner - s.size(), ' ') + " |";
  };
  Block out{rule, row(header), rule};
  for (const std::string &line : body) out.push_back(row(line));
  out.push_back(rule);
  return out;
}

Block TermBlock(const Term &term) {
  if (term.is_box()) return DrsBlock(term.box());
  return {ToLinear(term)};
}

std::string Join(const Block &b) {
  std::string out;
  for (std::string line : b) {
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  }
  return out;
}

}  // namespace

std::string RenderBox(const Drs &drs) { return Join(DrsBlock(drs)); }

std::string RenderBox(const Term &term) { return Join(TermBlock(term)); }

}  // namespace drtq
