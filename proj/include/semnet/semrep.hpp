// Copyright 2026 The Semnet Authors
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

#ifndef SEMNET_SEMREP_HPP_
#define SEMNET_SEMREP_HPP_

#include <optional>
#include <string>
#include <vector>

#include "semnet/factbase.hpp"
#include "semnet/inference.hpp"
#include "semnet/lexicon.hpp"
#include "semnet/parser.hpp"

namespace semnet {

// Codes contributed by one represented sentence, split into object records,
// situation records (action/process/thought/message/event) and connector
// records (link, cause, property, relation, number).
struct SemanticNet {
  std::vector<Code> objects;
  std::vector<Code> situations;
  std::vector<Code> connectors;
};

struct Antecedent {
  Code code;
  Sort sort;
  std::string sex;     // male, female or empty
  std::string number;  // singular or plural
};

// Carry-over state between sentences of a discourse. Place and time persist
// within a fragment; antecedents persist across fragments.
struct DiscourseContext {
  std::optional<Code> current_place;
  std::optional<Code> current_time;
  std::vector<Antecedent> antecedents;  // most recent first

  void begin_fragment();
  void note(const Antecedent& a);
};

// Result of representing one sentence: the net plus any Horn rules extracted
// from universally quantified clauses, which assert no ground records.
struct Representation {
  SemanticNet net;
  std::vector<logic::HornClause> rules;
};

enum class IdentifyOutcome : std::uint8_t { existing, created };

struct IdentifyResult {
  IdentifyOutcome outcome;
  Code code;
};

// Argument of a clause as seen by sense selection: the surface preposition
// (empty for the direct object) and the head's semantic code.
struct ArgSlot {
  std::string prep;
  SemCode code;
  std::string word;  // head base form, for error messages
};

enum class ArgRole : std::uint8_t { at, from, to, with, place_adv, time_adv };

struct SenseChoice {
  const VerbEntry* entry;
  std::vector<ArgRole> roles;  // one per input slot
};

// First verb sense, in dictionary order, admitting the subject and every
// argument. Arguments the control sets do not claim may still stand as
// place/time adverbials; anything else fails the sense. When no sense is
// admissible the sentence is rejected as NonsenseSentence naming the verb,
// the slot and the offending code.
SenseChoice select_verb_sense(const std::string& base, SemCode subject,
                              const std::vector<ArgSlot>& args,
                              const Lexicon& lexicon);

// Finds a stored record of the same sort agreeing with `candidate` on every
// identity field both specify (ABSENT is a wildcard); the most recent match
// wins and absorbs the candidate's filled slots. Filling would-overwrite
// conflicts raise ConflictingIdentity; the caller then inserts a new record.
IdentifyResult identify_object(FactStore& store,
                               const PredicateRecord& candidate);

// Most recent compatible antecedent for a personal pronoun. Quantifier
// words are not resolved here.
Code resolve_pronoun(const std::string& word, const DiscourseContext& ctx);

// Represents one parsed sentence into the store, consuming and updating the
// discourse context. On any rejection the store is left untouched by the
// caller (engine snapshots around this call).
Representation represent(const Sentence& sentence, DiscourseContext& ctx,
                         const Lexicon& lexicon, FactStore& store);

// Short human-readable form of a record: persons by name, objects by their
// name slot, situations by verb word, fallback #code.
std::string render_entity(const FactStore& store, Code code);

// Sort an object noun maps to, by its semantic code.
Sort sort_for_sem_code(SemCode code);

}  // namespace semnet

#endif  // SEMNET_SEMREP_HPP_
