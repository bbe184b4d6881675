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

#include "drtq/semtype.h"

#include <cctype>

#include "drtq/errors.h"

namespace drtq {

SemType SemType::E() {
  SemType t;
  t.kind_ = Kind::kE;
  return t;
}

SemType SemType::T() { return SemType(); }

SemType SemType::Fn(SemType arg, SemType result) {
  SemType t;
  t.kind_ = Kind::kFn;
  t.fn_ = std::make_shared<const std::pair<SemType, SemType>>(std::move(arg),
                                                               std::move(result));
  return t;
}

SemType SemType::Chain(const std::vector<SemType> &args, SemType result) {
  for (auto it = args.rbegin(); it != args.rend(); ++it) {
    result = Fn(*it, std::move(result));
  }
  return result;
}

const SemType &SemType::arg() const {
  if (!is_fn()) throw TypeError("type " + ToString() + " is not a function type");
  return fn_->first;
}

const SemType &SemType::result() const {
  if (!is_fn()) throw TypeError("type " + ToString() + " is not a function type");
  return fn_->second;
}

std::vector<SemType> SemType::Args() const {
  std::vector<SemType> args;
  const SemType *t = this;
  while (t->is_fn()) {
    args.push_back(t->arg());
    t = &t->result();
  }
  return args;
}

SemType SemType::FinalResult() const {
  const SemType *t = this;
  while (t->is_fn()) t = &t->result();
  return *t;
}

std::string SemType::ToString() const {
  switch (kind_) {
    case Kind::kE: return "e";
    case Kind::kT: return "t";
    case Kind::kFn: return "<" + arg().ToString() + "," + result().ToString() + ">";
  }
  return "?";
}

bool operator==(const SemType &a, const SemType &b) {
  if (a.kind_ != b.kind_) return false;
  if (a.kind_ != SemType::Kind::kFn) return true;
  if (a.fn_ == b.fn_) return true;
  return a.fn_->first == b.fn_->first && a.fn_->second == b.fn_->second;
}

namespace {

class TypeParser {
 public:
  explicit TypeParser(std::string_view text) : text_(text) {}

  SemType ParseAll() {
    SemType t = ParseType();
    SkipSpace();
    if (pos_ != text_.size()) Fail("trailing characters in type");
    return t;
  }

 private:
  SemType ParseType() {
    SkipSpace();
    if (pos_ >= text_.size()) Fail("unexpected end of type");
    char c = text_[pos_++];
    if (c == 'e') return SemType::E();
    if (c == 't') return SemType::T();
    if (c != '<') Fail("expected e, t or <");
    SemType arg = ParseType();
    Expect(',');
    SemType result = ParseType();
    Expect('>');
    return SemType::Fn(std::move(arg), std::move(result));
  }

  void Expect(char c) {
    SkipSpace();
    if (pos_ >= text_.size() || text_[pos_] != c) {
      Fail(std::string("expected '") + c + "' in type");
    }
    ++pos_;
  }

  void SkipSpace() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void Fail(const std::string &message) {
    throw SyntaxError(message, 1, static_cast<int>(pos_) + 1);
  }

  std::string_view text_;
  size_t pos_ = 0;
};

}  // namespace

SemType SemType::Parse(std::string_view text) { return TypeParser(text).ParseAll(); }

}  // namespace drtq
