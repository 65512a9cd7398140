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

#include "semnet/parser.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "semnet/errors.hpp"

namespace semnet {

namespace {

std::string lower(const std::string& s) {
  std::string out = s;
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  return out;
}

bool is_terminator(const Token& t) {
  return t.kind == TokenKind::punct &&
         (t.surface == "." || t.surface == "!" || t.surface == "?");
}

bool coordinating(const std::string& conj) {
  return conj == "and" || conj == "or" || conj == "but";
}

}  // namespace

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    if (std::isalpha(c)) {
      std::size_t start = i;
      while (i < text.size() &&
             (std::isalpha(static_cast<unsigned char>(text[i])) ||
              text[i] == '-')) {
        ++i;
      }
      out.push_back({text.substr(start, i - start), TokenKind::word,
                     static_cast<int>(start)});
      continue;
    }
    if (std::isdigit(c)) {
      std::size_t start = i;
      while (i < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[i]))) {
        ++i;
      }
      out.push_back({text.substr(start, i - start), TokenKind::number,
                     static_cast<int>(start)});
      continue;
    }
    if (c == '\'' && i + 1 < text.size() && (text[i + 1] == 's' ||
                                             text[i + 1] == 'S') &&
        (i + 2 >= text.size() ||
         !std::isalnum(static_cast<unsigned char>(text[i + 2])))) {
      out.push_back({"'s", TokenKind::word, static_cast<int>(i)});
      i += 2;
      continue;
    }
    out.push_back({std::string(1, text[i]), TokenKind::punct,
                   static_cast<int>(i)});
    ++i;
  }
  return out;
}

std::vector<std::vector<Token>> split_sentences(const std::string& text) {
  std::vector<std::vector<Token>> out;
  std::vector<Token> current;
  bool boundary_pending = false;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    bool blank = line.find_first_not_of(" \t\r") == std::string::npos;
    if (blank) {
      if (!out.empty() && current.empty()) boundary_pending = true;
      continue;
    }
    for (Token& tok : tokenize(line)) {
      if (is_terminator(tok)) {
        if (!current.empty()) {
          if (boundary_pending) {
            out.emplace_back();
            boundary_pending = false;
          }
          out.push_back(std::move(current));
          current.clear();
        }
      } else {
        current.push_back(std::move(tok));
      }
    }
  }
  if (!current.empty()) {
    if (boundary_pending) out.emplace_back();
    out.push_back(std::move(current));
  }
  return out;
}

const char* tense_name(Tense t) {
  switch (t) {
    case Tense::past: return "past";
    case Tense::present: return "present";
    case Tense::future: return "future";
  }
  return "present";
}

const char* aspect_name(Aspect a) {
  return a == Aspect::complete ? "complete" : "incomplete";
}

namespace {

// Token-stream cursor. All grammatical category questions go through the
// paradigm dictionary; a word token with no paradigm entry at all is an
// UnknownWord wherever it appears.
struct ParseState {
  const std::vector<Token>& tokens;
  const Lexicon& lex;
  std::size_t idx = 0;
  std::size_t end = 0;

  ParseState(const std::vector<Token>& t, const Lexicon& l)
      : tokens(t), lex(l), end(t.size()) {
    while (end > idx && is_terminator(tokens[end - 1])) --end;
  }

  bool at_end() const { return idx >= end; }

  const Token& peek() const {
    if (at_end()) {
      throw Error(ErrorKind::SyntaxError, "unexpected end of sentence")
          .at_position(end > 0 ? tokens[end - 1].position : 0);
    }
    return tokens[idx];
  }

  [[noreturn]] void fail(const std::string& reason) const {
    int pos = at_end() ? (end > 0 ? tokens[end - 1].position : 0)
                       : tokens[idx].position;
    throw Error(ErrorKind::SyntaxError, reason).at_position(pos);
  }

  std::vector<const ParadigmEntry*> entries(const Token& tok) const {
    auto found = lex.lookup_surface(lower(tok.surface));
    if (found.empty()) {
      throw Error(ErrorKind::UnknownWord, "unknown word: " + tok.surface)
          .with_word(tok.surface)
          .at_position(tok.position);
    }
    return found;
  }

  const ParadigmEntry* entry_with_cat(const Token& tok, GramCat cat) const {
    if (tok.kind != TokenKind::word) return nullptr;
    for (const ParadigmEntry* e : entries(tok)) {
      if (e->gram_cat == cat) return e;
    }
    return nullptr;
  }

  bool word_has_cat(const Token& tok, GramCat cat) const {
    return entry_with_cat(tok, cat) != nullptr;
  }

  bool verbish(const Token& tok) const {
    return tok.kind == TokenKind::word && word_has_cat(tok, GramCat::verb);
  }

  bool can_start_noun_group(const Token& tok) const {
    if (tok.kind == TokenKind::number) return true;
    if (tok.kind != TokenKind::word) return false;
    for (const ParadigmEntry* e : entries(tok)) {
      switch (e->gram_cat) {
        case GramCat::article:
        case GramCat::adjective:
        case GramCat::noun:
        case GramCat::pronoun:
        case GramCat::numeral:
          return true;
        default:
          break;
      }
    }
    return false;
  }

  std::optional<SemCode> head_sem_code(const NounGroup& ng) const {
    if (ng.head_cat != GramCat::noun) return std::nullopt;
    std::string base = ng.head_base.substr(0, ng.head_base.find(' '));
    auto senses = lex.noun_senses(base);
    if (senses.empty()) return std::nullopt;
    return senses.front()->sem_cod;
  }

  std::unique_ptr<NounGroup> parse_noun_group() {
    auto ng = std::make_unique<NounGroup>();
    if (!at_end()) {
      if (const ParadigmEntry* art =
              entry_with_cat(peek(), GramCat::article)) {
        ng->article = art->osn_form == "the" ? ArticleForm::definite
                                             : ArticleForm::indefinite;
        ++idx;
      }
    }
    while (!at_end()) {
      const Token& tok = peek();
      const ParadigmEntry* adj = entry_with_cat(tok, GramCat::adjective);
      if (!adj) break;
      // A word that is also a noun stays an attribute only when a head can
      // still follow it.
      if (word_has_cat(tok, GramCat::noun)) {
        if (idx + 1 >= end || !can_start_noun_group(tokens[idx + 1])) break;
      }
      ng->attributes.push_back(adj->osn_form);
      ++idx;
    }
    if (at_end()) fail("expected a noun group head");
    const Token& head_tok = peek();
    if (head_tok.kind == TokenKind::number) {
      ng->head = head_tok.surface;
      ng->head_base = head_tok.surface;
      ng->head_cat = GramCat::numeral;
      ++idx;
    } else if (const ParadigmEntry* noun =
                   entry_with_cat(head_tok, GramCat::noun)) {
      ng->head = head_tok.surface;
      ng->head_base = noun->osn_form;
      ng->head_cat = GramCat::noun;
      if (noun->synt_char == "plur") ng->number = "plural";
      ++idx;
      auto senses = lex.noun_senses(noun->osn_form);
      bool first_name = !senses.empty() &&
                        (senses.front()->maj_class == "man" ||
                         senses.front()->maj_class == "woman");
      if (first_name && !at_end() && peek().kind == TokenKind::word) {
        if (const ParadigmEntry* next =
                entry_with_cat(peek(), GramCat::noun)) {
          auto next_senses = lex.noun_senses(next->osn_form);
          if (!next_senses.empty() &&
              next_senses.front()->maj_class == "surname") {
            ng->head += " " + peek().surface;
            ng->head_base += " " + next->osn_form;
            ++idx;
          }
        }
      }
    } else if (const ParadigmEntry* pron =
                   entry_with_cat(head_tok, GramCat::pronoun)) {
      ng->head = head_tok.surface;
      ng->head_base = pron->osn_form;
      ng->head_cat = GramCat::pronoun;
      if (pron->synt_char.find("plur") != std::string::npos) {
        ng->number = "plural";
      }
      ++idx;
    } else {
      fail("expected a noun group head");
    }
    // Postmodifier attachment: a (preposition, code) pair sticks to the
    // noun only when the noun's combination field admits it; otherwise the
    // phrase is left for the verb.
    while (!at_end()) {
      const ParadigmEntry* prep = entry_with_cat(peek(), GramCat::preposition);
      if (!prep || ng->head_cat != GramCat::noun) break;
      std::size_t saved = idx;
      ++idx;
      if (at_end() || !can_start_noun_group(peek())) {
        idx = saved;
        break;
      }
      auto inner = parse_noun_group();
      auto code = head_sem_code(*inner);
      std::string outer = ng->head_base.substr(0, ng->head_base.find(' '));
      if (!code || !lex.noun_admissible(outer, prep->osn_form, *code)) {
        idx = saved;
        break;
      }
      ng->postmods.emplace_back(prep->osn_form, std::move(inner));
    }
    return ng;
  }

  VerbGroup parse_verb_group() {
    if (at_end() || !verbish(peek())) fail("expected a verb");
    const ParadigmEntry* entry = entry_with_cat(peek(), GramCat::verb);
    VerbGroup vg;
    ++idx;
    auto tense_of = [](const std::string& tag) {
      if (tag == "past") return Tense::past;
      if (tag == "future") return Tense::future;
      return Tense::present;
    };
    auto consume_not = [&] {
      if (!at_end()) {
        const ParadigmEntry* p = entry_with_cat(peek(), GramCat::particle);
        if (p && p->synt_char == "negation") {
          vg.negated = true;
          ++idx;
        }
      }
    };
    if (entry->osn_form == "will") {
      vg.tense = Tense::future;
      consume_not();
      if (at_end() || !verbish(peek())) fail("expected a verb after will");
      const ParadigmEntry* main = entry_with_cat(peek(), GramCat::verb);
      if (main->synt_char != "inf") fail("expected the verb base form");
      vg.base = main->osn_form;
      ++idx;
    } else if (entry->osn_form == "do") {
      vg.tense = tense_of(entry->synt_char);
      consume_not();
      if (at_end() || !verbish(peek())) fail("expected a verb after do");
      const ParadigmEntry* main = entry_with_cat(peek(), GramCat::verb);
      if (main->synt_char != "inf") fail("expected the verb base form");
      vg.base = main->osn_form;
      ++idx;
    } else if (entry->osn_form == "be") {
      vg.base = "be";
      vg.tense = tense_of(entry->synt_char);
      consume_not();
    } else {
      if (entry->synt_char == "partic") fail("unsupported verb form");
      vg.base = entry->osn_form;
      vg.tense = tense_of(entry->synt_char);
      if (vg.tense == Tense::past) vg.aspect = Aspect::complete;
    }
    if (!at_end()) {
      const ParadigmEntry* part = entry_with_cat(peek(), GramCat::particle);
      if (part && part->synt_char != "negation") {
        vg.particle = part->osn_form;
        ++idx;
      }
    }
    if (!at_end()) {
      if (const ParadigmEntry* adv = entry_with_cat(peek(), GramCat::adverb)) {
        vg.adverb = adv->osn_form;
        ++idx;
      }
    }
    return vg;
  }

  std::unique_ptr<Clause> parse_clause_tail(
      std::unique_ptr<NounGroup> subject) {
    auto clause = std::make_unique<Clause>();
    clause->subject = std::move(subject);
    clause->verb = parse_verb_group();
    while (!at_end()) {
      const Token& tok = peek();
      if (tok.kind == TokenKind::punct) break;
      if (const ParadigmEntry* prep =
              entry_with_cat(tok, GramCat::preposition)) {
        ++idx;
        clause->arguments.emplace_back(prep->osn_form, parse_noun_group());
        continue;
      }
      if (tok.kind == TokenKind::word &&
          word_has_cat(tok, GramCat::conjunction)) {
        break;
      }
      if (tok.kind == TokenKind::word && word_has_cat(tok, GramCat::adverb) &&
          !can_start_noun_group(tok)) {
        break;
      }
      if (can_start_noun_group(tok)) {
        clause->arguments.emplace_back("", parse_noun_group());
        continue;
      }
      break;
    }
    if (!at_end() && clause->verb.adverb.empty()) {
      if (const ParadigmEntry* adv = entry_with_cat(peek(), GramCat::adverb)) {
        clause->verb.adverb = adv->osn_form;
        ++idx;
      }
    }
    return clause;
  }

  std::unique_ptr<Sentence> parse_sentence() {
    if (at_end()) fail("empty sentence");
    auto sentence = std::make_unique<Sentence>();
    if (peek().kind == TokenKind::word &&
        word_has_cat(peek(), GramCat::preposition) &&
        !word_has_cat(peek(), GramCat::noun)) {
      sentence->kind = SentenceKind::scene;
      while (!at_end()) {
        const ParadigmEntry* prep =
            entry_with_cat(peek(), GramCat::preposition);
        if (!prep) fail("expected a preposition in a scene sentence");
        ++idx;
        sentence->scene.emplace_back(prep->osn_form, parse_noun_group());
      }
      return sentence;
    }
    sentence->clauses.push_back(parse_clause_tail(parse_noun_group()));
    bool subordinate = false;
    while (!at_end()) {
      const ParadigmEntry* conj =
          entry_with_cat(peek(), GramCat::conjunction);
      if (!conj) fail("unexpected token after clause");
      std::string word = conj->osn_form;
      ++idx;
      if (at_end()) fail("dangling conjunction");
      if (coordinating(word)) {
        if (verbish(peek())) {
          sentence->conjunctions.push_back(word);
          sentence->clauses.push_back(parse_clause_tail(nullptr));
          continue;
        }
        if (!can_start_noun_group(peek())) fail("expected a clause or noun");
        auto ng = parse_noun_group();
        if (!at_end() && verbish(peek())) {
          sentence->conjunctions.push_back(word);
          sentence->clauses.push_back(parse_clause_tail(std::move(ng)));
        } else {
          sentence->clauses.back()->arguments.emplace_back(word,
                                                           std::move(ng));
        }
        continue;
      }
      subordinate = true;
      sentence->conjunctions.push_back(word);
      sentence->clauses.push_back(parse_clause_tail(parse_noun_group()));
    }
    if (sentence->clauses.size() > 1) {
      sentence->kind =
          subordinate ? SentenceKind::complex_ : SentenceKind::compound;
    }
    return sentence;
  }
};

}  // namespace

std::unique_ptr<Sentence> parse_sentence(const std::vector<Token>& tokens,
                                         const Lexicon& lexicon) {
  ParseState state(tokens, lexicon);
  auto sentence = state.parse_sentence();
  if (!state.at_end()) state.fail("trailing tokens after sentence");
  return sentence;
}

std::unique_ptr<NounGroup> parse_noun_group_at(const std::vector<Token>& tokens,
                                               std::size_t& index,
                                               const Lexicon& lexicon) {
  ParseState state(tokens, lexicon);
  state.idx = index;
  auto group = state.parse_noun_group();
  index = state.idx;
  return group;
}

namespace {

bool starts_with_vowel(const std::string& word) {
  if (word.empty()) return false;
  char c = static_cast<char>(std::tolower(static_cast<unsigned char>(word[0])));
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

void append_noun_group(std::string& out, const NounGroup& ng) {
  std::string first = ng.attributes.empty() ? ng.head : ng.attributes.front();
  if (ng.article == ArticleForm::indefinite) {
    out += starts_with_vowel(first) ? "an " : "a ";
  } else if (ng.article == ArticleForm::definite) {
    out += "the ";
  }
  for (const std::string& attr : ng.attributes) {
    out += attr;
    out += ' ';
  }
  out += ng.head;
  for (const auto& [prep, inner] : ng.postmods) {
    out += ' ';
    out += prep;
    out += ' ';
    append_noun_group(out, *inner);
  }
}

void append_verb_group(std::string& out, const VerbGroup& vg, bool plural) {
  if (vg.base == "be") {
    if (vg.tense == Tense::future) {
      out += vg.negated ? "will not be" : "will be";
    } else if (vg.tense == Tense::past) {
      out += plural ? "were" : "was";
      if (vg.negated) out += " not";
    } else {
      out += plural ? "are" : "is";
      if (vg.negated) out += " not";
    }
  } else {
    switch (vg.tense) {
      case Tense::future: out += "will"; break;
      case Tense::past: out += "did"; break;
      case Tense::present: out += plural ? "do" : "does"; break;
    }
    if (vg.negated) out += " not";
    out += ' ';
    out += vg.base;
  }
  if (!vg.particle.empty()) {
    out += ' ';
    out += vg.particle;
  }
  if (!vg.adverb.empty()) {
    out += ' ';
    out += vg.adverb;
  }
}

void append_clause(std::string& out, const Clause& clause) {
  bool plural = false;
  if (clause.subject) {
    append_noun_group(out, *clause.subject);
    out += ' ';
    plural = clause.subject->number == "plural";
  }
  append_verb_group(out, clause.verb, plural);
  for (const auto& [prep, ng] : clause.arguments) {
    out += ' ';
    if (!prep.empty()) {
      out += prep;
      out += ' ';
    }
    append_noun_group(out, *ng);
  }
}

}  // namespace

std::string noun_group_to_text(const NounGroup& group) {
  std::string out;
  append_noun_group(out, group);
  return out;
}

std::string sentence_to_text(const Sentence& sentence) {
  std::string out;
  if (sentence.kind == SentenceKind::scene) {
    for (std::size_t i = 0; i < sentence.scene.size(); ++i) {
      if (i) out += ' ';
      out += sentence.scene[i].first;
      out += ' ';
      append_noun_group(out, *sentence.scene[i].second);
    }
  } else {
    std::size_t conj = 0;
    for (std::size_t i = 0; i < sentence.clauses.size(); ++i) {
      if (i) {
        out += ' ';
        out += sentence.conjunctions[conj++];
        out += ' ';
      }
      append_clause(out, *sentence.clauses[i]);
    }
  }
  if (!out.empty()) {
    out[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(out[0])));
    out += '.';
  }
  return out;
}

namespace {

bool ng_equal(const NounGroup& a, const NounGroup& b) {
  if (a.article != b.article || a.attributes != b.attributes ||
      lower(a.head_base) != lower(b.head_base) || a.head_cat != b.head_cat ||
      a.number != b.number || a.postmods.size() != b.postmods.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.postmods.size(); ++i) {
    if (a.postmods[i].first != b.postmods[i].first) return false;
    if (!ng_equal(*a.postmods[i].second, *b.postmods[i].second)) return false;
  }
  return true;
}

bool vg_equal(const VerbGroup& a, const VerbGroup& b) {
  return a.base == b.base && a.particle == b.particle &&
         a.negated == b.negated && a.tense == b.tense &&
         a.aspect == b.aspect && a.adverb == b.adverb;
}

bool clause_equal(const Clause& a, const Clause& b) {
  if (static_cast<bool>(a.subject) != static_cast<bool>(b.subject)) {
    return false;
  }
  if (a.subject && !ng_equal(*a.subject, *b.subject)) return false;
  if (!vg_equal(a.verb, b.verb)) return false;
  if (a.arguments.size() != b.arguments.size()) return false;
  for (std::size_t i = 0; i < a.arguments.size(); ++i) {
    if (a.arguments[i].first != b.arguments[i].first) return false;
    if (!ng_equal(*a.arguments[i].second, *b.arguments[i].second)) {
      return false;
    }
  }
  return true;
}

}  // namespace

bool sentence_equal(const Sentence& a, const Sentence& b) {
  if (a.kind != b.kind || a.conjunctions != b.conjunctions ||
      a.clauses.size() != b.clauses.size() || a.scene.size() != b.scene.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.scene.size(); ++i) {
    if (a.scene[i].first != b.scene[i].first) return false;
    if (!ng_equal(*a.scene[i].second, *b.scene[i].second)) return false;
  }
  for (std::size_t i = 0; i < a.clauses.size(); ++i) {
    if (!clause_equal(*a.clauses[i], *b.clauses[i])) return false;
  }
  return true;
}

ArticleHeader parse_article_header(const std::string& line) {
  std::vector<std::string> words;
  for (const Token& tok : tokenize(line)) {
    if (tok.kind == TokenKind::punct) continue;
    words.push_back(lower(tok.surface));
  }
  auto malformed = [&] {
    return Error(ErrorKind::NotAnArticleHeader,
                 "not an article header: " + line)
        .with_value(line);
  };
  if (words.size() < 3 || words[0] != "frame" || words[1] != "is") {
    throw malformed();
  }
  ArticleHeader header;
  std::size_t rest = 0;
  if (words[2] == "a" || words[2] == "an") {
    header.kind = ArticleKind::noun;
    rest = 3;
  } else if (words[2] == "how" && words.size() > 3 && words[3] == "to") {
    header.kind = ArticleKind::operation;
    rest = 4;
  } else if (words[2] == "to") {
    header.kind = ArticleKind::verb;
    rest = 3;
  } else {
    throw malformed();
  }
  if (rest >= words.size()) throw malformed();
  for (std::size_t i = rest; i < words.size(); ++i) {
    if (i > rest) header.term += ' ';
    header.term += words[i];
  }
  return header;
}

}  // namespace semnet
