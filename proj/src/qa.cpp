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

#include "semnet/qa.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <functional>

#include "semnet/semrep.hpp"

namespace semnet {

const char* focus_name(Focus f) {
  switch (f) {
    case Focus::who: return "who";
    case Focus::what: return "what";
    case Focus::where: return "where";
    case Focus::when_: return "when";
    case Focus::why: return "why";
    case Focus::how: return "how";
    case Focus::none: return "none";
  }
  return "none";
}

namespace {

std::string lower(const std::string& s) {
  std::string out = s;
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  return out;
}

std::optional<Focus> focus_of(const std::string& word) {
  if (word == "who") return Focus::who;
  if (word == "what") return Focus::what;
  if (word == "where") return Focus::where;
  if (word == "when") return Focus::when_;
  if (word == "why") return Focus::why;
  if (word == "how") return Focus::how;
  return std::nullopt;
}

std::string first_word(const std::string& s) {
  return s.substr(0, s.find(' '));
}

[[noreturn]] void unsupported(const std::string& text) {
  throw Error(ErrorKind::UnsupportedQuestionForm,
              "unsupported question form: " + text)
      .with_value(text);
}

std::vector<Token> strip_terminators(std::vector<Token> toks) {
  while (!toks.empty() && toks.back().kind == TokenKind::punct) {
    toks.pop_back();
  }
  return toks;
}

bool leads_with_verb(const Token& tok, const Lexicon& lexicon) {
  if (tok.kind != TokenKind::word) return false;
  for (const ParadigmEntry* entry : lexicon.lookup_surface(lower(tok.surface))) {
    if (entry->gram_cat == GramCat::verb && entry->synt_char != "partic") {
      return true;
    }
  }
  return false;
}

// Moves the single clause of a parsed declarative into the question shell.
void adopt_clause(Question& q, Sentence& sentence, const std::string& text) {
  if (sentence.kind != SentenceKind::simple || sentence.clauses.size() != 1) {
    unsupported(text);
  }
  Clause& clause = *sentence.clauses.front();
  q.subject = std::move(clause.subject);
  q.verb = clause.verb;
  q.arguments = std::move(clause.arguments);
}

}  // namespace

Question parse_question(const std::string& text, const Lexicon& lexicon) {
  std::vector<Token> toks = strip_terminators(tokenize(text));
  if (toks.empty()) unsupported(text);
  std::string head = lower(toks.front().surface);

  Question q;
  if (auto focus = focus_of(head)) {
    q.kind = QuestionKind::simple_wh;
    q.focus = *focus;
    std::string second = toks.size() > 1 ? lower(toks[1].surface) : "";
    bool aux_form = second == "did" || second == "does" || second == "do" ||
                    second == "can";
    if (aux_form) {
      Tense tense = second == "did" ? Tense::past : Tense::present;
      std::vector<Token> rest(toks.begin() + 2, toks.end());
      if (rest.empty()) unsupported(text);
      if (leads_with_verb(rest.front(), lexicon)) {
        // "Who can drive a car?": the wh word itself is the subject.
        std::vector<Token> with_subject;
        with_subject.push_back(toks.front());
        with_subject.insert(with_subject.end(), rest.begin(), rest.end());
        auto sentence = parse_sentence(with_subject, lexicon);
        adopt_clause(q, *sentence, text);
        if (!q.subject || lower(q.subject->head_base) != head) {
          unsupported(text);
        }
        q.subject.reset();
        q.subject_hole = true;
      } else {
        auto sentence = parse_sentence(rest, lexicon);
        adopt_clause(q, *sentence, text);
      }
      q.verb.tense = tense;
    } else {
      // Wh word in subject position parses as a pronoun-headed subject.
      auto sentence = parse_sentence(toks, lexicon);
      adopt_clause(q, *sentence, text);
      if (!q.subject || lower(q.subject->head_base) != head) {
        unsupported(text);
      }
      q.subject.reset();
      q.subject_hole = true;
    }
    return q;
  }

  if (head == "did" || head == "does" || head == "do" || head == "can") {
    q.kind = QuestionKind::yes_no;
    Tense tense = head == "did" ? Tense::past : Tense::present;
    std::vector<Token> rest(toks.begin() + 1, toks.end());
    auto sentence = parse_sentence(rest, lexicon);
    adopt_clause(q, *sentence, text);
    q.verb.tense = tense;
    return q;
  }

  if (head == "is" || head == "was" || head == "are" || head == "were") {
    q.kind = QuestionKind::yes_no;
    q.isa_form = true;
    q.verb.base = "be";
    q.verb.tense = (head == "was" || head == "were") ? Tense::past
                                                     : Tense::present;
    std::size_t idx = 1;
    q.subject = parse_noun_group_at(toks, idx, lexicon);
    if (idx >= toks.size()) unsupported(text);
    q.isa_class = parse_noun_group_at(toks, idx, lexicon);
    if (idx != toks.size()) unsupported(text);
    return q;
  }

  unsupported(text);
}

namespace {

// An argument or subject as a match pattern: either one resolved record, or
// a class of records named by a head word.
struct ObjPattern {
  std::optional<Code> code;
  Sort sort = Sort::person;
  std::string class_word;
};

bool class_match(const FactStore& store, const PredicateRecord& rec,
                 const std::string& word) {
  auto slot_is = [&](const char* slot) {
    if (!has_slot(rec.sort(), slot)) return false;
    const std::string* v = std::get_if<std::string>(&rec.get(slot));
    return v && *v == word;
  };
  if (word == "person") return rec.sort() == Sort::person;
  if (word == "man" || word == "woman") {
    if (rec.sort() != Sort::person) return false;
    const std::string* v = std::get_if<std::string>(&rec.get("sex"));
    return v && *v == (word == "man" ? "male" : "female");
  }
  switch (rec.sort()) {
    case Sort::person:
      return slot_is("prof");
    case Sort::organization:
      return slot_is("typ_org") || slot_is("name_org");
    case Sort::thing:
      return slot_is("name") || slot_is("maj_class");
    case Sort::machine:
      return slot_is("name") || slot_is("trademark");
    case Sort::animal:
      return slot_is("typ_an") || slot_is("name");
    case Sort::nature:
      return slot_is("typ_nat") || slot_is("name");
    case Sort::place:
      return slot_is("constr") || slot_is("locat") || slot_is("name_loc");
    case Sort::abstr:
      return slot_is("concept");
    case Sort::action:
      return slot_is("word");
    default:
      return false;
  }
}

std::optional<Code> most_recent(const FactStore& store, Sort sort,
                                const std::function<bool(
                                    const PredicateRecord&)>& pred) {
  std::vector<Code> codes = store.codes_of_sort(sort);
  for (auto it = codes.rbegin(); it != codes.rend(); ++it) {
    if (pred(store.get(*it))) return *it;
  }
  return std::nullopt;
}

bool slots_equal_if_set(const PredicateRecord& rec, const char* slot,
                        const std::string& value) {
  const std::string* v = std::get_if<std::string>(&rec.get(slot));
  return v && *v == value;
}

ObjPattern pattern_of(const NounGroup& ng, const FactStore& store,
                      const Lexicon& lexicon) {
  ObjPattern p;
  if (ng.head_cat != GramCat::noun) {
    throw Error(ErrorKind::UnsupportedQuestionForm,
                "questions name things directly: " + ng.head)
        .with_word(ng.head);
  }
  auto senses = lexicon.noun_senses(first_word(ng.head_base));
  if (senses.empty()) {
    throw Error(ErrorKind::UnknownNoun, "word has no noun entry: " + ng.head)
        .with_word(ng.head);
  }
  const NounEntry* sense = senses.front();

  if (sense->maj_class == "man" || sense->maj_class == "woman" ||
      sense->maj_class == "surname") {
    p.sort = Sort::person;
    std::string surface = ng.head;
    std::size_t space = surface.find(' ');
    std::string first =
        sense->maj_class == "surname" ? "" : surface.substr(0, space);
    std::string second;
    if (sense->maj_class == "surname") {
      second = surface;
    } else if (space != std::string::npos) {
      second = surface.substr(space + 1);
    }
    p.code = most_recent(store, Sort::person, [&](const PredicateRecord& r) {
      if (!first.empty() && !slots_equal_if_set(r, "first_name", first)) {
        return false;
      }
      if (!second.empty() && !slots_equal_if_set(r, "second_name", second)) {
        return false;
      }
      return true;
    });
    p.class_word = lower(first.empty() ? second : first);
    return p;
  }
  if (sense->maj_class == "town") {
    p.sort = Sort::place;
    p.code = most_recent(store, Sort::place, [&](const PredicateRecord& r) {
      return slots_equal_if_set(r, "name_loc", ng.head);
    });
    p.class_word = lower(ng.head);
    return p;
  }

  p.sort = sort_for_sem_code(sense->sem_cod);
  p.class_word = ng.head_base;
  if (ng.article != ArticleForm::indefinite) {
    p.code = most_recent(store, p.sort, [&](const PredicateRecord& r) {
      return class_match(store, r, p.class_word);
    });
  }
  return p;
}

bool value_matches(const FactStore& store, const SlotValue& value,
                   const ObjPattern& pattern) {
  const Code* ref = std::get_if<Code>(&value);
  if (!ref) return false;
  if (pattern.code) return *ref == *pattern.code;
  return class_match(store, store.get(*ref), pattern.class_word);
}

const std::array<Sort, 5> kSituationSorts = {
    Sort::action, Sort::process, Sort::thought, Sort::message, Sort::event};

const char* neg_slot(Sort sort) {
  switch (sort) {
    case Sort::action: return "neg_act";
    case Sort::process: return "neg_pr";
    case Sort::thought: return "neg_th";
    case Sort::message: return "neg_ms";
    default: return "neg_evt";
  }
}

std::vector<const char*> arg_slots(Sort sort, const std::string& prep) {
  if (prep.empty()) {
    if (sort == Sort::message) return {"theme", "cod_adr"};
    return {"cod_obj"};
  }
  if (prep == "from") return {"cod_from_obj", "cod_start_loc"};
  if (prep == "to") return {"cod_to_obj", "cod_adr", "cod_end_loc"};
  if (prep == "with" || prep == "by") return {"cod_way"};
  if (prep == "in" || prep == "at" || prep == "on" || prep == "near") {
    return {"cod_loc", "cod_start_loc", "cod_time", "cod_start_pr"};
  }
  if (prep == "during" || prep == "after" || prep == "before") {
    return {"cod_time", "cod_start_pr"};
  }
  return {};
}

std::vector<const char*> hole_slots(Sort sort, Focus focus,
                                    bool subject_hole) {
  if (subject_hole) return {"cod_sub"};
  switch (focus) {
    case Focus::who:
      if (sort == Sort::message) return {"cod_adr"};
      return {"cod_obj"};
    case Focus::what:
      if (sort == Sort::message) return {"theme", "cod_adr"};
      return {"cod_obj"};
    case Focus::where:
      return {"cod_loc", "cod_start_loc"};
    case Focus::when_:
      return {"cod_time", "cod_start_pr"};
    case Focus::how:
      return {"cod_way"};
    default:
      return {};
  }
}

struct Compiled {
  std::string word;
  std::string tense;
  std::optional<ObjPattern> subject;
  std::vector<std::pair<std::string, ObjPattern>> args;
};

Compiled compile_question(const Question& q, const FactStore& store,
                          const Lexicon& lexicon) {
  Compiled c;
  c.word = q.verb.base;
  if (!q.verb.particle.empty()) c.word += " " + q.verb.particle;
  c.tense = tense_name(q.verb.tense);
  if (q.subject) c.subject = pattern_of(*q.subject, store, lexicon);
  for (const auto& [prep, ng] : q.arguments) {
    c.args.emplace_back(prep, pattern_of(*ng, store, lexicon));
  }
  return c;
}

bool record_matches(const FactStore& store, const PredicateRecord& rec,
                    const Compiled& c, const char* required_neg) {
  if (!slots_equal_if_set(rec, "word", c.word)) return false;
  if (!slots_equal_if_set(rec, "tense", c.tense)) return false;
  if (!slots_equal_if_set(rec, neg_slot(rec.sort()), required_neg)) {
    return false;
  }
  if (c.subject && !value_matches(store, rec.get("cod_sub"), *c.subject)) {
    return false;
  }
  for (const auto& [prep, pattern] : c.args) {
    bool ok = false;
    for (const char* slot : arg_slots(rec.sort(), prep)) {
      if (!has_slot(rec.sort(), slot)) continue;
      if (value_matches(store, rec.get(slot), pattern)) {
        ok = true;
        break;
      }
    }
    if (!ok) return false;
  }
  return true;
}

void push_entity(Answer& answer, const FactStore& store, Code code) {
  for (Code c : answer.entities) {
    if (c == code) return;
  }
  answer.entities.push_back(code);
  answer.rendered.push_back(render_entity(store, code));
}

}  // namespace

Answer answer_simple(const Question& question, const FactStore& store,
                     const Lexicon& lexicon) {
  Answer answer;

  if (question.isa_form) {
    if (!question.subject || !question.isa_class) return answer;
    ObjPattern subject = pattern_of(*question.subject, store, lexicon);
    if (!subject.code) return answer;
    const PredicateRecord& rec = store.get(*subject.code);
    std::string cls = first_word(question.isa_class->head_base);
    if (class_match(store, rec, cls)) {
      answer.kind = AnswerKind::yes;
    }
    return answer;
  }

  Compiled compiled;
  try {
    compiled = compile_question(question, store, lexicon);
  } catch (const Error&) {
    return answer;
  }
  if (compiled.subject && !compiled.subject->code &&
      question.kind == QuestionKind::simple_wh) {
    return answer;
  }

  if (question.kind == QuestionKind::simple_wh) {
    for (Sort sort : kSituationSorts) {
      for (Code code : store.codes_of_sort(sort)) {
        const PredicateRecord& rec = store.get(code);
        if (!record_matches(store, rec, compiled, "no")) continue;
        if (question.focus == Focus::why) {
          if (!has_slot(sort, "cod_cause")) continue;
          const Code* cause_ref = std::get_if<Code>(&rec.get("cod_cause"));
          if (!cause_ref) continue;
          const PredicateRecord& cause = store.get(*cause_ref);
          if (const Code* origin =
                  std::get_if<Code>(&cause.get("cod_cause"))) {
            push_entity(answer, store, *origin);
          }
          continue;
        }
        for (const char* slot :
             hole_slots(sort, question.focus, question.subject_hole)) {
          if (!has_slot(sort, slot)) continue;
          if (const Code* value = std::get_if<Code>(&rec.get(slot))) {
            push_entity(answer, store, *value);
          }
        }
      }
    }
    if (!answer.entities.empty()) answer.kind = AnswerKind::entities;
    return answer;
  }

  // Yes/no: an assertion with matching polarity decides; otherwise unknown
  // and the logical route takes over.
  for (Sort sort : kSituationSorts) {
    for (Code code : store.codes_of_sort(sort)) {
      if (record_matches(store, store.get(code), compiled, "no")) {
        answer.kind = AnswerKind::yes;
        return answer;
      }
    }
  }
  for (Sort sort : kSituationSorts) {
    for (Code code : store.codes_of_sort(sort)) {
      if (record_matches(store, store.get(code), compiled, "yes")) {
        answer.kind = AnswerKind::no;
        return answer;
      }
    }
  }
  return answer;
}

std::vector<logic::HornClause> bridging_clauses() {
  using logic::parse_clauses;
  static const char* kText = R"(
isa(X, C) :- name(X, C).
isa(X, C) :- prof(X, C).
isa(X, C) :- maj_class(X, C).
isa(X, C) :- concept(X, C).
isa(X, C) :- name_org(X, C).
isa(X, C) :- typ_org(X, C).
isa(X, C) :- typ_an(X, C).
isa(X, man) :- sex(X, male).
isa(X, woman) :- sex(X, female).
isa(X, person) :- person(X).
isa(X, organization) :- organization(X).
isa(X, thing) :- thing(X).
isa(X, machine) :- machine(X).
isa(X, animal) :- animal(X).
isa(X, place) :- place(X).
)";
  return parse_clauses(kText);
}

namespace {

std::optional<Code> code_of_constant(const logic::TermPtr& term) {
  if (term->kind != logic::Term::Kind::constant || term->is_number) {
    return std::nullopt;
  }
  const std::string& name = term->name;
  if (name.size() < 2 || name[0] != 'c') return std::nullopt;
  for (std::size_t i = 1; i < name.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(name[i]))) {
      return std::nullopt;
    }
  }
  return Code{static_cast<std::uint32_t>(std::stoul(name.substr(1)))};
}

}  // namespace

Answer answer_logical(const Question& question, const FactStore& store,
                      const Lexicon& lexicon, const logic::Program& kb,
                      int depth_limit) {
  using logic::Atom;
  using logic::SolveResult;
  using logic::Term;

  Answer answer;
  logic::Program program;
  for (const Atom& fact : logic::compile_facts(store)) {
    logic::HornClause clause;
    clause.head = fact;
    program.add(std::move(clause));
  }
  program.add_all(bridging_clauses());
  program.add_all(kb.clauses());

  bool hit_limit = false;

  auto run = [&](const std::vector<Atom>& goals,
                 std::size_t max) -> SolveResult {
    SolveResult result = logic::solve(goals, program, depth_limit, max);
    hit_limit = hit_limit || result.depth_limit_reached;
    return result;
  };

  if (question.isa_form) {
    if (!question.subject || !question.isa_class) return answer;
    ObjPattern subject = pattern_of(*question.subject, store, lexicon);
    if (!subject.code) return answer;
    Atom goal{"isa", {logic::code_constant(*subject.code),
                      Term::atom(first_word(question.isa_class->head_base))}};
    SolveResult result = run({goal}, 1);
    if (!result.solutions.empty()) {
      answer.kind = AnswerKind::yes;
      answer.proof = result.solutions.front().trace;
    } else {
      answer.kind = hit_limit ? AnswerKind::unknown : AnswerKind::no;
    }
    return answer;
  }

  Compiled compiled;
  try {
    compiled = compile_question(question, store, lexicon);
  } catch (const Error&) {
    return answer;
  }

  bool wh = question.kind == QuestionKind::simple_wh;
  if (wh && !question.subject_hole) return answer;

  auto subject_term = [&]() -> logic::TermPtr {
    if (question.subject_hole || !compiled.subject) return Term::var("S");
    if (compiled.subject->code) {
      return logic::code_constant(*compiled.subject->code);
    }
    return Term::var("S");
  };

  // Instance route: a stored situation record of the right shape.
  for (Sort sort : kSituationSorts) {
    std::vector<Atom> goals;
    logic::TermPtr rec = Term::var("A");
    logic::TermPtr subj = subject_term();
    goals.push_back({sort_name(sort), {rec}});
    goals.push_back({"word", {rec, Term::atom(compiled.word)}});
    goals.push_back({neg_slot(sort), {rec, Term::atom("no")}});
    goals.push_back({"tense", {rec, Term::atom(tense_name(
                                        question.verb.tense))}});
    goals.push_back({"cod_sub", {rec, subj}});
    if (compiled.subject && !compiled.subject->code) {
      goals.push_back({"isa", {subj, Term::atom(first_word(
                                          compiled.subject->class_word))}});
    }
    bool shaped = true;
    int obj_counter = 0;
    for (const auto& [prep, pattern] : compiled.args) {
      auto slots = arg_slots(sort, prep);
      const char* slot = nullptr;
      for (const char* s : slots) {
        if (has_slot(sort, s)) {
          slot = s;
          break;
        }
      }
      if (!slot) {
        shaped = false;
        break;
      }
      logic::TermPtr value;
      if (pattern.code) {
        value = logic::code_constant(*pattern.code);
      } else {
        value = Term::var("O" + std::to_string(obj_counter++));
      }
      goals.push_back({slot, {rec, value}});
      if (!pattern.code) {
        goals.push_back(
            {"isa", {value, Term::atom(first_word(pattern.class_word))}});
      }
    }
    if (!shaped) continue;
    SolveResult result = run(goals, wh ? SIZE_MAX : 1);
    for (const logic::Solution& sol : result.solutions) {
      if (wh) {
        if (auto bound = sol.bindings.lookup("S")) {
          if (auto code = code_of_constant(*bound)) {
            push_entity(answer, store, *code);
          }
        }
      } else {
        answer.kind = AnswerKind::yes;
        answer.proof = sol.trace;
        return answer;
      }
    }
  }

  // Capability route: class-level rules from quantified sentences and the
  // knowledge base.
  std::string object_class = "none";
  for (const auto& [prep, pattern] : compiled.args) {
    if (prep.empty()) {
      object_class = first_word(pattern.class_word);
      break;
    }
  }
  std::string verb_id = question.verb.base;
  if (!question.verb.particle.empty()) verb_id += "_" + question.verb.particle;
  std::vector<Atom> goals;
  logic::TermPtr subj = subject_term();
  goals.push_back(
      {"can", {subj, Term::atom(verb_id), Term::atom(object_class)}});
  if (compiled.subject && !compiled.subject->code) {
    goals.push_back({"isa", {subj, Term::atom(first_word(
                                        compiled.subject->class_word))}});
  }
  SolveResult result = run(goals, wh ? SIZE_MAX : 1);
  if (wh) {
    for (const logic::Solution& sol : result.solutions) {
      if (auto bound = sol.bindings.lookup("S")) {
        if (auto code = code_of_constant(*bound)) {
          push_entity(answer, store, *code);
        }
      }
    }
    if (!answer.entities.empty()) answer.kind = AnswerKind::entities;
    return answer;
  }
  if (!result.solutions.empty()) {
    answer.kind = AnswerKind::yes;
    answer.proof = result.solutions.front().trace;
    return answer;
  }
  answer.kind = hit_limit ? AnswerKind::unknown : AnswerKind::no;
  return answer;
}

}  // namespace semnet
