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

// Linear text form of DRSs and lambda terms, e.g.
//   drs([x:1],[pred(bar,[x:1]),alpha(drs([x:2],[pred(barkeeper,[x:2])]))])
//   lam(v:4:<e,t>,oplus(drs([x:5],[]),app(v:4:<e,t>,x:5)))

#ifndef DRTQ_TEXT_H_
#define DRTQ_TEXT_H_

#include <string>
#include <string_view>

#include "drtq/term.h"

namespace drtq {

std::string ToLinear(const Drs &drs);
std::string ToLinear(const Term &term);
std::string ToLinear(const Condition &condition);

// Whitespace-insensitive. Throws SyntaxError.
Drs ParseDrs(std::string_view text);
Term ParseTerm(std::string_view text);

}  // namespace drtq

#endif  // DRTQ_TEXT_H_
