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

#ifndef SEMNET_KBASE_HPP_
#define SEMNET_KBASE_HPP_

#include <map>
#include <set>
#include <string>
#include <vector>

#include "semnet/inference.hpp"
#include "semnet/lexicon.hpp"
#include "semnet/parser.hpp"

namespace semnet {

struct Stage {
  int alternative = 1;
  int index = 1;         // 1-based position within the alternative
  std::string action;    // raw phrase, e.g. "to come in"
};

// One knowledge article. Noun articles carry function sentences and an
// optional structure line; verb articles carry defining phrases and motives;
// operation articles carry staged alternatives.
struct Article {
  ArticleHeader header;
  std::string genus;                  // generic concept, from the lexicon
  std::vector<std::string> functions;  // raw function/definition sentences
  std::vector<std::string> structure;  // part names from a consists-of line
  std::vector<std::string> definitions;  // verb article defining phrases
  std::vector<std::pair<std::string, std::string>> motives;  // (action, cause)
  std::vector<Stage> stages;

  bool operator==(const Article&) const = default;
};

// Parses one article block (header line first, body lines after).
Article ingest_article(const std::vector<std::string>& lines,
                       const Lexicon& lexicon);

// Renders an article back to its line form; re-ingesting yields an equal
// article.
std::vector<std::string> render_article(const Article& article);

// Horn clauses of an article: genus and is-a sentences become subsumption
// clauses, function sentences capability clauses, structure lines part_of
// facts, stages step facts, verb definitions defines facts and motives
// motive clauses.
std::vector<logic::HornClause> compile_article(const Article& article,
                                               const Lexicon& lexicon);

// Word definition graph for the primitives analysis. No word may appear in
// its own definition set.
struct DefinitionGraph {
  std::map<std::string, std::set<std::string>> defs;

  std::set<std::string> words() const;
  static DefinitionGraph load(const std::string& path);
};

struct PrimitiveCheck {
  bool primitive = false;
  int layers = 0;                        // closure iterations that added words
  std::vector<std::string> unreached;    // sorted, when not primitive
};

// Whether every word of the graph is reachable from s0 through layered
// definitions: repeatedly admit words whose definition lies entirely in the
// words admitted so far. Non-s0 words without a definition entry raise
// UndefinedWord.
PrimitiveCheck is_primitive_set(const DefinitionGraph& graph,
                                const std::set<std::string>& s0);

// Smallest irredundant set of words to add to s0 so the check passes:
// sufficient, and removing any single returned word breaks sufficiency.
std::vector<std::string> minimal_primitive_extension(
    const DefinitionGraph& graph, const std::set<std::string>& s0);

}  // namespace semnet

#endif  // SEMNET_KBASE_HPP_
