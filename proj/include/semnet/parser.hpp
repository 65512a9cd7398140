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

#ifndef SEMNET_PARSER_HPP_
#define SEMNET_PARSER_HPP_

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "semnet/lexicon.hpp"

namespace semnet {

enum class TokenKind : std::uint8_t { word, number, punct };

struct Token {
  std::string surface;
  TokenKind kind = TokenKind::word;
  int position = 0;  // character offset in the input line

  bool operator==(const Token&) const = default;
};

// Splits one line into words, numbers and punctuation. The possessive
// clitic 's is its own token. Lowercasing happens at lookup, not here.
std::vector<Token> tokenize(const std::string& text);

enum class ArticleForm : std::uint8_t { none, indefinite, definite };

struct NounGroup {
  ArticleForm article = ArticleForm::none;
  std::vector<std::string> attributes;  // adjectives, quantifiers, possessives
  std::string head;                     // surface form of the head
  std::string head_base;                // base form after paradigm lookup
  GramCat head_cat = GramCat::noun;     // noun, pronoun or numeral head
  std::string number = "singular";      // grammatical number from morphology
  std::vector<std::pair<std::string, std::unique_ptr<NounGroup>>> postmods;
};

enum class Tense : std::uint8_t { past, present, future };
enum class Aspect : std::uint8_t { complete, incomplete };

const char* tense_name(Tense t);
const char* aspect_name(Aspect a);

struct VerbGroup {
  std::string base;      // infinitive form
  std::string particle;  // after-verb particle if any
  bool negated = false;
  Tense tense = Tense::present;
  Aspect aspect = Aspect::incomplete;
  std::string adverb;
};

// One clause: subject, verb, then arguments in surface order. An argument
// without preposition is the direct object.
struct Clause {
  std::unique_ptr<NounGroup> subject;
  VerbGroup verb;
  std::vector<std::pair<std::string, std::unique_ptr<NounGroup>>> arguments;
};

enum class SentenceKind : std::uint8_t { simple, compound, complex_, scene };

// A sentence is one clause, clauses joined by coordinating conjunctions,
// a main clause with subordinate clauses, or a scene setting consisting of
// place/time prepositional phrases only ("In London in 1900.").
struct Sentence {
  SentenceKind kind = SentenceKind::simple;
  std::vector<std::unique_ptr<Clause>> clauses;
  std::vector<std::string> conjunctions;  // between/before clauses 1..n-1
  std::vector<std::pair<std::string, std::unique_ptr<NounGroup>>> scene;
};

// Recursive-descent parse of one declarative sentence. All words must
// resolve through the lexicon (UnknownWord); structural failures raise
// SyntaxError with the token position.
std::unique_ptr<Sentence> parse_sentence(const std::vector<Token>& tokens,
                                         const Lexicon& lexicon);

// Parses one noun group starting at tokens[index], advancing index past it.
std::unique_ptr<NounGroup> parse_noun_group_at(const std::vector<Token>& tokens,
                                               std::size_t& index,
                                               const Lexicon& lexicon);

// Canonical text of a parse tree; re-parsing it yields an equal tree.
std::string sentence_to_text(const Sentence& sentence);
std::string noun_group_to_text(const NounGroup& group);

bool sentence_equal(const Sentence& a, const Sentence& b);

enum class ArticleKind : std::uint8_t { noun, verb, operation };

struct ArticleHeader {
  std::string term;     // e.g. "doctor", "go on", "rob an organization"
  ArticleKind kind = ArticleKind::noun;
};

// First line of a knowledge article: `frame is a <noun>`, `frame is to
// <verb...>`, or `frame is how to <goal...>`.
ArticleHeader parse_article_header(const std::string& line);

// Splits a text block into sentences at terminators, keeping token
// positions (relative to the line a token came from). Blank lines separate
// fragments; a fragment boundary appears as one empty token list.
std::vector<std::vector<Token>> split_sentences(const std::string& text);

}  // namespace semnet

#endif  // SEMNET_PARSER_HPP_
