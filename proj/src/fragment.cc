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

#include "drtq/lexicon.h"

namespace drtq {

// Kept byte-identical with docs/fragment.lex.
std::string_view BuiltinFragmentText() {
  static constexpr std::string_view kText = R"lex(# Builtin fragment lexicon.
#
# Predicates must be declared with their arity before use.

pred now/1
pred begin/1
pred write/1
pred read/1
pred agent/2
pred theme/2
pred john/1
pred speaker/1
pred book/1
pred info_cont/1
pred sections/1
pred has/2
pred bar/1
pred barkeeper/1
pred of/2
pred playground/1
pred place/1
pred celebrity/1
pred party/1
pred king-of-france/1
pred invite/2
pred attend/2
pred give/2
pred go-to/2
pred throw-out/2
pred come/1
pred always-attends/2
pred never-comes/1
pred always-throws-me-out/1
pred I-invite/1
pred I-give/1
pred I-go-to/1

# Determiners.
det a {
  type: <<e,t>,<<e,t>,t>>;
  sem: \P Q. [x |] + P(x) + Q(x);
}
det the {
  type: <<e,t>,<<e,t>,t>>;
  sem: \P Q. [ | alpha: [x |] + P(x)] + Q(x);
}
det every {
  type: <<e,t>,<<e,t>,t>>;
  sem: \P Q. [ | [x |] + P(x) => Q(x)];
}

# Proper names and pronouns. Pronouns presuppose a marker with no
# conditions; "it" may pick up an entity or an event.
name john {
  type: <<e,t>,t>;
  sem: \P. [ | alpha: [x | john(x)]] + P(x);
}
pron he {
  type: <<e,t>,t>;
  sem: \P. [ | alpha: [x |]] + P(x);
}
pron it {
  type: <<e,t>,t>;
  sem: \P. [ | alpha: [u |]] + P(u);
}
pron i {
  type: <<e,t>,t>;
  sem: \P. [ | alpha: [x | speaker(x)]] + P(x);
}
pron me {
  type: <<e,t>,t>;
  sem: \P. [ | alpha: [x | speaker(x)]] + P(x);
}

# Nouns. "self" is the noun's own variable.
noun book {
  qualia formal { | info_cont(self) }
  qualia constitutive { Z | sections(Z), has(self, Z) }
  qualia agentive @write;
  qualia telic @read;
}
noun bar {
  qualia constitutive { z | barkeeper(z), of(z, self) }
}
noun barkeeper {}
noun playground {
  qualia formal { | place(self) }
}
noun celebrity {}
noun party {}
noun "king of france" { pred: king-of-france; }

# Verbs. Event verbs take object, subject, event in that order.
tverb write {
  type: <e,<e,<e,t>>>;
  sem: \y x e. [ | write(e), agent(e, x), theme(e, y)];
}
tverb read {
  type: <e,<e,<e,t>>>;
  sem: \y x e. [ | read(e), agent(e, x), theme(e, y)];
}
aspverb begin {
  type: <<e,<e,t>>,<e,<e,t>>>;
  sem: \E x e. [ | begin(e)] + E(x)(e);
}
tverb invite { pred: invite; }
tverb attend { pred: attend; }
tverb give { pred: give; }
tverb "go to" { pred: go-to; }
tverb throw { pred: throw-out; particle: out; }
tverb "always attend" { pred: always-attends; }
iverb come { pred: come; }
iverb "never come" { pred: never-comes; }
iverb "always throw me out" { pred: always-throws-me-out; }
sverb "i invite" { pred: I-invite; }
sverb "i give" { pred: I-give; }
sverb "i go to" { pred: I-go-to; }

# Adverbs, tense, connectives.
adv never {
  type: <<e,t>,<e,t>>;
  sem: \V x. [ | not V(x)];
}
adv always {
  type: <<e,t>,<e,t>>;
  sem: \V x. V(x);
}
tense pres {
  type: <<e,t>,t>;
  sem: \E. [e | now(e)] + E(e);
}
conj when {
  type: <t,<t,t>>;
  sem: \p q. [ | p => q];
}
conj if {
  type: <t,<t,t>>;
  sem: \p q. [ | p => q];
}
particle out {}
)lex";
  return kText;
}

}  // namespace drtq
