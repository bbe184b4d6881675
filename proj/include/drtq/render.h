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

#ifndef DRTQ_RENDER_H_
#define DRTQ_RENDER_H_

#include <string>

#include "drtq/term.h"

namespace drtq {

// Two-dimensional ASCII box drawing. Implication is drawn as "==>",
// negation as "~", disjunction as "v", presupposed material as "a:" and
// qualia as "Q_F:", "Q_C:", "Q_T:", "Q_A:".
std::string RenderBox(const Drs &drs);
std::string RenderBox(const Term &term);

}  // namespace drtq

#endif  // DRTQ_RENDER_H_
