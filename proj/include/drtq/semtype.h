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

#ifndef DRTQ_SEMTYPE_H_
#define DRTQ_SEMTYPE_H_

#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace drtq {

// Simple semantic types: e, t and functions <a,b>.
class SemType {
 public:
  enum class Kind { kE, kT, kFn };

  SemType() = default;  // t

  static SemType E();
  static SemType T();
  static SemType Fn(SemType arg, SemType result);

  // Right-nested function type args[0] -> ... -> args[n-1] -> result.
  static SemType Chain(const std::vector<SemType> &args, SemType result);

  // Parses "e", "t" or "<a,b>".
  static SemType Parse(std::string_view text);

  Kind kind() const { return kind_; }
  bool is_fn() const { return kind_ == Kind::kFn; }

  // Only valid for function types.
  const SemType &arg() const;
  const SemType &result() const;

  // Argument types of the maximal function chain; empty for e and t.
  std::vector<SemType> Args() const;

  // The type reached after consuming all Args().
  SemType FinalResult() const;

  std::string ToString() const;

  friend bool operator==(const SemType &a, const SemType &b);

 private:
  Kind kind_ = Kind::kT;
  std::shared_ptr<const std::pair<SemType, SemType>> fn_;
};

}  // namespace drtq

#endif  // DRTQ_SEMTYPE_H_
