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

#ifndef SEMNET_QA_HPP_
#define SEMNET_QA_HPP_

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "semnet/factbase.hpp"
#include "semnet/inference.hpp"
#include "semnet/lexicon.hpp"
#include "semnet/parser.hpp"

namespace semnet {

enum class QuestionKind : std::uint8_t { simple_wh, yes_no };
enum class Focus : std::uint8_t { who, what, where, when_, why, how, none };

const char* focus_name(Focus f);

// Normalized question: a clause pattern with at most one focused hole.
// Yes/no questions have Focus::none; the isa form ("Is X a Y?") carries the
// class word instead of a verb.
struct Question {
  QuestionKind kind = QuestionKind::yes_no;
  Focus focus = Focus::none;
  bool subject_hole = false;           // wh word stood in subject position
  std::unique_ptr<NounGroup> subject;  // null when subject_hole
  VerbGroup verb;
  std::vector<std::pair<std::string, std::unique_ptr<NounGroup>>> arguments;
  bool isa_form = false;
  std::unique_ptr<NounGroup> isa_class;
};

Question parse_question(const std::string& text, const Lexicon& lexicon);

enum class AnswerKind : std::uint8_t { entities, yes, no, unknown };

struct Answer {
  AnswerKind kind = AnswerKind::unknown;
  std::vector<Code> entities;
  std::vector<std::string> rendered;       // entity names, matching entities
  std::vector<logic::HornClause> proof;    // for logical yes answers
};

// Wh-questions answered directly against stored situation records.
Answer answer_simple(const Question& question, const FactStore& store,
                     const Lexicon& lexicon);

// Yes/no questions answered by resolution over the compiled store, the
// bridging rules and the knowledge-base clauses. yes carries the proof
// trace; no is finite failure; unknown means the depth limit was hit.
Answer answer_logical(const Question& question, const FactStore& store,
                      const Lexicon& lexicon, const logic::Program& kb,
                      int depth_limit);

// Rules connecting stored slot atoms to the isa predicate the knowledge
// base speaks: class membership via name, prof, maj_class, concept and the
// object sorts themselves.
std::vector<logic::HornClause> bridging_clauses();

}  // namespace semnet

#endif  // SEMNET_QA_HPP_
