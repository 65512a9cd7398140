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

#include "semnet/semrep.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>

namespace semnet {

void DiscourseContext::begin_fragment() {
  current_place.reset();
  current_time.reset();
}

void DiscourseContext::note(const Antecedent& a) {
  antecedents.erase(
      std::remove_if(antecedents.begin(), antecedents.end(),
                     [&](const Antecedent& b) { return b.code == a.code; }),
      antecedents.end());
  antecedents.insert(antecedents.begin(), a);
}

Sort sort_for_sem_code(SemCode code) {
  switch (code) {
    case SemCode::person:
    case SemCode::prof:
    case SemCode::sibl:
      return Sort::person;
    case SemCode::org:
      return Sort::organization;
    case SemCode::thing:
    case SemCode::weapon:
    case SemCode::cloth:
    case SemCode::food:
    case SemCode::mat:
    case SemCode::plant:
    case SemCode::body:
      return Sort::thing;
    case SemCode::mach:
      return Sort::machine;
    case SemCode::anim:
      return Sort::animal;
    case SemCode::natur:
    case SemCode::env:
      return Sort::nature;
    case SemCode::place:
      return Sort::place;
    case SemCode::time:
      return Sort::time;
    default:
      return Sort::abstr;
  }
}

namespace {

SemCode code_for_sort(Sort sort) {
  switch (sort) {
    case Sort::person: return SemCode::person;
    case Sort::organization: return SemCode::org;
    case Sort::thing: return SemCode::thing;
    case Sort::machine: return SemCode::mach;
    case Sort::animal: return SemCode::anim;
    case Sort::nature: return SemCode::natur;
    case Sort::place: return SemCode::place;
    case Sort::time: return SemCode::time;
    case Sort::abstr: return SemCode::abstr;
    default: return SemCode::act;
  }
}

bool locative_prep(const std::string& prep) {
  return prep == "in" || prep == "at" || prep == "on" || prep == "near";
}

bool temporal_prep(const std::string& prep) {
  return prep == "in" || prep == "at" || prep == "on" || prep == "during" ||
         prep == "after" || prep == "before";
}

bool universal_word(const std::string& w) {
  return w == "every" || w == "all" || w == "each";
}

bool existential_word(const std::string& w) {
  return w == "some" || w == "any";
}

bool coordinating(const std::string& conj) {
  return conj == "and" || conj == "or" || conj == "but";
}

std::optional<ArgRole> classify_arg(const VerbEntry& verb,
                                    const std::string& prep, SemCode code) {
  if (prep.empty() || prep == "and") {
    if (Lexicon::admissible(verb, ControlSlot::at, "", code)) {
      return ArgRole::at;
    }
    return std::nullopt;
  }
  if (Lexicon::admissible(verb, ControlSlot::from, prep, code)) {
    return ArgRole::from;
  }
  if (Lexicon::admissible(verb, ControlSlot::to, prep, code)) {
    return ArgRole::to;
  }
  if (Lexicon::admissible(verb, ControlSlot::with, prep, code)) {
    return ArgRole::with;
  }
  if (code == SemCode::place && locative_prep(prep)) {
    return ArgRole::place_adv;
  }
  if (code == SemCode::time && temporal_prep(prep)) {
    return ArgRole::time_adv;
  }
  return std::nullopt;
}

Error nonsense(const std::string& verb, const std::string& slot, SemCode code,
               const std::string& word) {
  return Error(ErrorKind::NonsenseSentence,
               "no sense of " + verb + " admits " + word + " (" +
                   sem_code_name(code) + ") as " + slot)
      .with_word(word)
      .with_slot(slot)
      .with_value(sem_code_name(code));
}

}  // namespace

SenseChoice select_verb_sense(const std::string& base, SemCode subject,
                              const std::vector<ArgSlot>& args,
                              const Lexicon& lexicon) {
  auto senses = lexicon.verb_senses(base);
  if (senses.empty()) {
    throw Error(ErrorKind::UnknownWord, "unknown verb: " + base)
        .with_word(base);
  }
  std::optional<Error> first_failure;
  auto fail = [&](const std::string& slot, SemCode code,
                  const std::string& word) {
    if (!first_failure) first_failure = nonsense(base, slot, code, word);
  };
  for (const VerbEntry* verb : senses) {
    if (!Lexicon::admissible(*verb, ControlSlot::subject, "", subject)) {
      fail("subject", subject, "subject");
      continue;
    }
    std::vector<ArgRole> roles;
    bool ok = true;
    for (const ArgSlot& arg : args) {
      auto role = classify_arg(*verb, arg.prep, arg.code);
      if (!role) {
        fail(arg.prep.empty() ? "object" : arg.prep, arg.code, arg.word);
        ok = false;
        break;
      }
      roles.push_back(*role);
    }
    if (ok) return {verb, std::move(roles)};
  }
  throw *first_failure;
}

namespace {

// Slots that identify a record of a sort. ABSENT on either side is a
// wildcard; disagreement on any listed slot rules the pair out.
std::vector<std::string> identity_slots(Sort sort) {
  switch (sort) {
    case Sort::person:
      return {"first_name", "second_name", "sex", "prof"};
    case Sort::organization:
      return {"name_org"};
    case Sort::thing:
    case Sort::machine:
      return {"name", "cod_owner"};
    case Sort::animal:
      return {"name", "cod_owner"};
    case Sort::abstr:
      return {"concept"};
    case Sort::nature:
      return {"typ_nat", "name"};
    case Sort::place:
    case Sort::time: {
      std::vector<std::string> all;
      for (const SlotDef& def : schema_of(sort)) all.push_back(def.name);
      return all;
    }
    default:
      return {};
  }
}

}  // namespace

IdentifyResult identify_object(FactStore& store,
                               const PredicateRecord& candidate) {
  std::vector<std::string> keys = identity_slots(candidate.sort());
  if (!keys.empty()) {
    bool candidate_named = false;
    for (const std::string& key : keys) {
      if (!is_absent(candidate.get(key))) candidate_named = true;
    }
    std::vector<Code> same_sort = store.codes_of_sort(candidate.sort());
    for (auto it = same_sort.rbegin(); it != same_sort.rend(); ++it) {
      const PredicateRecord& existing = store.get(*it);
      bool compatible = true;
      // A candidate that carries identity information must share at least
      // one specified identity field with the stored record; otherwise
      // records describing unrelated named entities would coalesce.
      bool anchored = !candidate_named;
      for (const std::string& key : keys) {
        const SlotValue& a = candidate.get(key);
        const SlotValue& b = existing.get(key);
        if (is_absent(a) || is_absent(b)) continue;
        if (!(a == b)) {
          compatible = false;
          break;
        }
        anchored = true;
      }
      if (!compatible || !anchored) continue;
      // Validate the whole merge before applying any of it.
      for (int i = 0; i < candidate.slot_count(); ++i) {
        const SlotValue& mine = candidate.get(i);
        const SlotValue& theirs = existing.get(i);
        if (!is_absent(mine) && !is_absent(theirs) && !(mine == theirs)) {
          throw Error(ErrorKind::ConflictingIdentity,
                      "record #" + std::to_string(it->value) +
                          " disagrees on " + candidate.slot_name(i))
              .with_slot(candidate.slot_name(i))
              .with_value(slot_value_to_string(mine));
        }
      }
      Code code = *it;
      for (int i = 0; i < candidate.slot_count(); ++i) {
        const SlotValue& mine = candidate.get(i);
        if (!is_absent(mine) && is_absent(existing.get(i))) {
          store.update(code, candidate.slot_name(i), mine);
        }
      }
      return {IdentifyOutcome::existing, code};
    }
  }
  Code code = store.insert(candidate);
  return {IdentifyOutcome::created, code};
}

Code resolve_pronoun(const std::string& word, const DiscourseContext& ctx) {
  for (const Antecedent& a : ctx.antecedents) {
    bool singular = a.number != "plural";
    if (word == "he" && a.sort == Sort::person && singular &&
        (a.sex == "male" || a.sex.empty())) {
      return a.code;
    }
    if (word == "she" && a.sort == Sort::person && singular &&
        (a.sex == "female" || a.sex.empty())) {
      return a.code;
    }
    if (word == "it" && a.sort != Sort::person && singular) return a.code;
    if (word == "they" && !singular) return a.code;
  }
  throw Error(ErrorKind::UnresolvedPronoun, "no antecedent for " + word)
      .with_word(word);
}

namespace {

struct NGAnalysis {
  enum class Kind {
    pronoun, universal, existential, proper_person, proper_place, common,
    numeral, verbal,
  };
  const NounGroup* ng = nullptr;
  Kind kind = Kind::common;
  std::vector<const NounEntry*> senses;
  Code antecedent{};
  Sort antecedent_sort = Sort::person;
};

std::string first_word(const std::string& s) {
  return s.substr(0, s.find(' '));
}

NGAnalysis analyze(const NounGroup& ng, const Lexicon& lex,
                   const DiscourseContext& dctx, const FactStore& store) {
  NGAnalysis a;
  a.ng = &ng;
  bool universal = false;
  bool existential = false;
  for (const std::string& attr : ng.attributes) {
    if (universal_word(attr)) universal = true;
    if (existential_word(attr)) existential = true;
  }
  if (ng.head_cat == GramCat::pronoun) {
    a.kind = NGAnalysis::Kind::pronoun;
    a.antecedent = resolve_pronoun(ng.head_base, dctx);
    a.antecedent_sort = store.get(a.antecedent).sort();
    return a;
  }
  if (ng.head_cat == GramCat::numeral) {
    a.kind = NGAnalysis::Kind::numeral;
    return a;
  }
  a.senses = lex.noun_senses(first_word(ng.head_base));
  if (a.senses.empty()) {
    throw Error(ErrorKind::UnknownNoun, "word has no noun entry: " + ng.head)
        .with_word(ng.head);
  }
  const NounEntry* front = a.senses.front();
  if (universal) {
    a.kind = NGAnalysis::Kind::universal;
  } else if (existential) {
    a.kind = NGAnalysis::Kind::existential;
  } else if (!front->verb.empty()) {
    a.kind = NGAnalysis::Kind::verbal;
  } else if (front->maj_class == "man" || front->maj_class == "woman" ||
             front->maj_class == "surname") {
    a.kind = NGAnalysis::Kind::proper_person;
  } else if (front->maj_class == "town") {
    a.kind = NGAnalysis::Kind::proper_place;
  }
  return a;
}

// Candidate (code, sense index) pairs in sense priority order; -1 marks a
// head with no dictionary sense (pronoun, numeral).
std::vector<std::pair<SemCode, int>> code_options(const NGAnalysis& a) {
  switch (a.kind) {
    case NGAnalysis::Kind::pronoun:
      return {{code_for_sort(a.antecedent_sort), -1}};
    case NGAnalysis::Kind::numeral:
      return {{SemCode::time, -1}};
    default: {
      std::vector<std::pair<SemCode, int>> out;
      for (std::size_t i = 0; i < a.senses.size(); ++i) {
        SemCode code = a.senses[i]->sem_cod;
        bool seen = false;
        for (const auto& [c, idx] : out) {
          if (c == code) {
            seen = true;
            break;
          }
        }
        if (!seen) out.emplace_back(code, static_cast<int>(i));
      }
      return out;
    }
  }
}

struct ChosenArg {
  ArgRole role;
  int sense = -1;
};

struct ClauseChoice {
  const VerbEntry* verb = nullptr;
  int subject_sense = -1;
  std::vector<ChosenArg> args;
};

// Joint selection: the first verb sense, in dictionary order respecting the
// particle, under which the subject and every argument can take some noun
// sense. Noun senses are tried in their own dictionary order.
ClauseChoice choose_clause(const Clause& clause, const NGAnalysis& subject,
                           const std::vector<NGAnalysis>& args,
                           const Lexicon& lex) {
  const std::string& base = clause.verb.base;
  auto senses = lex.verb_senses(base);
  if (senses.empty()) {
    throw Error(ErrorKind::UnknownWord, "unknown verb: " + base)
        .with_word(base);
  }
  std::vector<const VerbEntry*> ordered;
  for (const VerbEntry* v : senses) {
    if (v->after_verb == clause.verb.particle) ordered.push_back(v);
  }
  if (!clause.verb.particle.empty()) {
    for (const VerbEntry* v : senses) {
      if (v->after_verb.empty()) ordered.push_back(v);
    }
  }
  if (ordered.empty()) {
    throw nonsense(base, "particle", SemCode::act, clause.verb.particle);
  }
  std::optional<Error> first_failure;
  for (const VerbEntry* v : ordered) {
    ClauseChoice choice;
    choice.verb = v;
    bool ok = false;
    for (const auto& [code, idx] : code_options(subject)) {
      if (Lexicon::admissible(*v, ControlSlot::subject, "", code)) {
        choice.subject_sense = idx;
        ok = true;
        break;
      }
    }
    if (!ok) {
      if (!first_failure) {
        first_failure = nonsense(base, "subject",
                                 code_options(subject).front().first,
                                 subject.ng ? subject.ng->head_base
                                            : "subject");
      }
      continue;
    }
    for (std::size_t k = 0; ok && k < args.size(); ++k) {
      const std::string& prep = clause.arguments[k].first;
      bool found = false;
      for (const auto& [code, idx] : code_options(args[k])) {
        if (auto role = classify_arg(*v, prep, code)) {
          choice.args.push_back({*role, idx});
          found = true;
          break;
        }
      }
      if (!found) {
        ok = false;
        if (!first_failure) {
          first_failure = nonsense(
              base, prep.empty() ? "object" : prep,
              code_options(args[k]).front().first, args[k].ng->head_base);
        }
      }
    }
    if (ok) return choice;
  }
  throw *first_failure;
}

Sort situation_sort(const VerbEntry& verb) {
  switch (verb.sem_typ) {
    case ActionType::MESSAGE:
      return Sort::message;
    case ActionType::CREATE:
    case ActionType::ATTEND:
      return verb.mental ? Sort::thought : Sort::action;
    case ActionType::PROCESS:
      return Sort::process;
    case ActionType::CHANGE:
    case ActionType::BE:
      return Sort::event;
    default:
      return Sort::action;
  }
}

const char* neg_slot(Sort sort) {
  switch (sort) {
    case Sort::action: return "neg_act";
    case Sort::process: return "neg_pr";
    case Sort::thought: return "neg_th";
    case Sort::message: return "neg_ms";
    default: return "neg_evt";
  }
}

const char* mode_slot(Sort sort) {
  switch (sort) {
    case Sort::action: return "sort_act";
    case Sort::process: return "sort_pr";
    case Sort::thought: return "sort_th";
    case Sort::message: return "sort_ms";
    default: return "sort_evt";
  }
}

const char* time_slot(Sort sort) {
  return sort == Sort::process ? "cod_start_pr" : "cod_time";
}

const char* place_slot(Sort sort) {
  return sort == Sort::process ? "cod_start_loc" : "cod_loc";
}

struct Builder {
  FactStore& store;
  const Lexicon& lex;
  DiscourseContext& dctx;
  Representation& rep;

  void note_record(Code code) {
    const PredicateRecord& rec = store.get(code);
    Antecedent a;
    a.code = code;
    a.sort = rec.sort();
    if (rec.sort() == Sort::person) {
      if (const std::string* s = std::get_if<std::string>(&rec.get("sex"))) {
        a.sex = *s;
      }
    }
    if (has_slot(rec.sort(), "number")) {
      if (const std::string* n =
              std::get_if<std::string>(&rec.get("number"))) {
        a.number = *n;
      }
    }
    if (a.number.empty()) a.number = "singular";
    dctx.note(a);
  }

  Code place_record(const NGAnalysis& a, Code code) {
    rep.net.objects.push_back(code);
    note_record(code);
    make_properties(a, code);
    return code;
  }

  void make_properties(const NGAnalysis& a, Code owner) {
    if (!a.ng) return;
    for (const std::string& attr : a.ng->attributes) {
      if (universal_word(attr) || existential_word(attr)) continue;
      PredicateRecord prop(Sort::property);
      prop.set("name", attr);
      auto senses = lex.noun_senses(attr);
      if (!senses.empty()) {
        if (!senses.front()->scale.empty()) {
          prop.set("scale", senses.front()->scale);
        }
        if (senses.front()->state) {
          prop.set("state",
                   static_cast<std::int64_t>(*senses.front()->state));
        }
      }
      prop.set("cod_obj", owner);
      rep.net.connectors.push_back(store.insert(std::move(prop)));
    }
  }

  Code identify_or_new(PredicateRecord candidate) {
    try {
      return identify_object(store, candidate).code;
    } catch (const Error& e) {
      if (e.kind != ErrorKind::ConflictingIdentity) throw;
      return store.insert(std::move(candidate));
    }
  }

  Code build(const NGAnalysis& a, int sense_idx) {
    const NounGroup& ng = *a.ng;
    switch (a.kind) {
      case NGAnalysis::Kind::pronoun:
        rep.net.objects.push_back(a.antecedent);
        note_record(a.antecedent);
        return a.antecedent;
      case NGAnalysis::Kind::numeral: {
        PredicateRecord rec(Sort::time);
        rec.set("year",
                static_cast<std::int64_t>(std::strtoll(ng.head_base.c_str(),
                                                       nullptr, 10)));
        return place_record(a, identify_or_new(std::move(rec)));
      }
      case NGAnalysis::Kind::verbal: {
        const std::string& verb = a.senses.front()->verb;
        if (ng.article == ArticleForm::definite) {
          auto found =
              store.query(Sort::action, {{"word", verb}, {"neg_act", "no"}});
          if (!found.empty()) return place_record(a, found.back());
        }
        PredicateRecord rec(Sort::action);
        rec.set("word", verb);
        auto verb_senses = lex.verb_senses(verb);
        if (!verb_senses.empty()) {
          rec.set("sem_typ_act",
                  action_type_name(verb_senses.front()->sem_typ));
        }
        return place_record(a, store.insert(std::move(rec)));
      }
      default:
        break;
    }

    // Postmodifier objects come first so ownership references can be part
    // of the identification candidate.
    std::vector<std::pair<std::string, Code>> post;
    for (const auto& [prep, inner] : ng.postmods) {
      NGAnalysis ia = analyze(*inner, lex, dctx, store);
      post.emplace_back(prep, build(ia, 0));
    }

    const NounEntry* sense =
        a.senses[sense_idx >= 0 ? static_cast<std::size_t>(sense_idx) : 0];
    PredicateRecord rec(Sort::person);
    std::vector<bool> consumed(post.size(), false);

    if (a.kind == NGAnalysis::Kind::proper_person) {
      rec = PredicateRecord(Sort::person);
      std::string surface = ng.head;
      std::size_t space = surface.find(' ');
      if (sense->maj_class == "surname") {
        rec.set("second_name", surface);
      } else {
        rec.set("first_name", surface.substr(0, space));
        if (space != std::string::npos) {
          rec.set("second_name", surface.substr(space + 1));
        }
        rec.set("sex", sense->maj_class == "man" ? "male" : "female");
      }
      rec.set("number", ng.number);
    } else if (a.kind == NGAnalysis::Kind::proper_place) {
      rec = PredicateRecord(Sort::place);
      rec.set("name_loc", ng.head);
      rec.set("locat", "town");
    } else {
      Sort sort = sort_for_sem_code(sense->sem_cod);
      rec = PredicateRecord(sort);
      const std::string& word = ng.head_base;
      switch (sort) {
        case Sort::person:
          if (word == "man") {
            rec.set("sex", "male");
          } else if (word == "woman") {
            rec.set("sex", "female");
          } else if (word != "person") {
            rec.set("prof", word);
          }
          break;
        case Sort::organization:
          rec.set("typ_org", word);
          break;
        case Sort::thing:
        case Sort::machine:
          rec.set("name", word);
          break;
        case Sort::animal:
          rec.set("typ_an", word);
          break;
        case Sort::nature:
          rec.set("typ_nat", word);
          break;
        case Sort::place:
          if (sense->maj_class == "constr") {
            rec.set("constr", word);
          } else {
            rec.set("locat", word);
          }
          break;
        case Sort::time:
          rec.set("season", word);
          break;
        default:
          rec.set("concept", word);
          break;
      }
      if (has_slot(sort, "number")) rec.set("number", ng.number);
    }

    if (has_slot(rec.sort(), "cod_owner")) {
      for (std::size_t i = 0; i < post.size(); ++i) {
        if (post[i].first == "of") {
          rec.set("cod_owner", post[i].second);
          consumed[i] = true;
          break;
        }
      }
    }

    bool fresh = a.kind == NGAnalysis::Kind::existential ||
                 ng.article == ArticleForm::indefinite;
    Code code =
        fresh ? store.insert(std::move(rec)) : identify_or_new(std::move(rec));

    for (std::size_t i = 0; i < post.size(); ++i) {
      if (consumed[i]) continue;
      PredicateRecord rel(Sort::relation);
      rel.set("typ_rel", post[i].first);
      rel.set("cod_first", code);
      rel.set("cod_sec", post[i].second);
      rep.net.connectors.push_back(store.insert(std::move(rel)));
    }
    return place_record(a, code);
  }
};

std::string sem_char_of(const std::string& conj) {
  if (conj == "when") return "time";
  if (conj == "because") return "cause";
  if (conj == "if") return "condition";
  if (conj == "where") return "place";
  return "";
}

}  // namespace

Representation represent(const Sentence& sentence, DiscourseContext& ctx,
                         const Lexicon& lexicon, FactStore& store) {
  Representation rep;
  Builder builder{store, lexicon, ctx, rep};

  if (sentence.kind == SentenceKind::scene) {
    for (const auto& [prep, ng] : sentence.scene) {
      NGAnalysis a = analyze(*ng, lexicon, ctx, store);
      Code code = builder.build(a, 0);
      Sort sort = store.get(code).sort();
      if (sort == Sort::place) ctx.current_place = code;
      if (sort == Sort::time) ctx.current_time = code;
    }
    return rep;
  }

  std::vector<std::optional<Code>> situations;
  std::optional<Code> running_subject;

  for (const auto& clause_ptr : sentence.clauses) {
    const Clause& clause = *clause_ptr;

    // Universally quantified subjects yield a capability rule and no ground
    // records.
    if (clause.subject) {
      bool universal = false;
      for (const std::string& attr : clause.subject->attributes) {
        if (universal_word(attr)) universal = true;
      }
      if (universal) {
        if (lexicon.verb_senses(clause.verb.base).empty()) {
          throw Error(ErrorKind::UnknownWord,
                      "unknown verb: " + clause.verb.base)
              .with_word(clause.verb.base);
        }
        std::string object_class = "none";
        for (const auto& [prep, ng] : clause.arguments) {
          if (prep.empty()) {
            object_class = first_word(ng->head_base);
            break;
          }
        }
        logic::HornClause rule;
        rule.head.predicate = "can";
        rule.head.args = {logic::Term::var("X"),
                          logic::Term::atom(clause.verb.base),
                          logic::Term::atom(object_class)};
        logic::Atom body;
        body.predicate = "isa";
        body.args = {logic::Term::var("X"),
                     logic::Term::atom(first_word(clause.subject->head_base))};
        rule.body.push_back(body);
        rep.rules.push_back(std::move(rule));
        situations.push_back(std::nullopt);
        continue;
      }
    }

    // Subject: explicit noun group, or carried over from the previous
    // clause when elided.
    std::optional<NGAnalysis> subject_analysis;
    Code subject_code{};
    bool existential = false;
    if (clause.subject) {
      subject_analysis = analyze(*clause.subject, lexicon, ctx, store);
      if (subject_analysis->kind == NGAnalysis::Kind::existential) {
        existential = true;
      }
    } else if (running_subject) {
      subject_code = *running_subject;
    } else {
      throw Error(ErrorKind::SyntaxError, "clause without subject");
    }

    if (clause.verb.base == "be") {
      if (subject_analysis) {
        subject_code = builder.build(*subject_analysis, 0);
      }
      const NounGroup* complement = nullptr;
      for (const auto& [prep, ng] : clause.arguments) {
        if (prep.empty()) {
          complement = ng.get();
          break;
        }
      }
      if (!complement) {
        throw Error(ErrorKind::SyntaxError, "copula without complement");
      }
      auto comp_senses = lexicon.noun_senses(first_word(complement->head_base));
      if (comp_senses.empty()) {
        throw Error(ErrorKind::UnknownNoun,
                    "word has no noun entry: " + complement->head)
            .with_word(complement->head);
      }
      const NounEntry* comp = comp_senses.front();
      const PredicateRecord& target = store.get(subject_code);
      const std::string& word = comp->osn_form;
      if (target.sort() == Sort::person) {
        if (word == "man") {
          store.update(subject_code, "sex", "male");
        } else if (word == "woman") {
          store.update(subject_code, "sex", "female");
        } else if (comp->sem_cod == SemCode::prof ||
                   comp->sem_cod == SemCode::person) {
          if (word != "person") store.update(subject_code, "prof", word);
        }
      } else if (target.sort() == Sort::thing && word != "thing") {
        store.update(subject_code, "maj_class", word);
      }
      PredicateRecord event(Sort::event);
      event.set("word", "be");
      event.set("tense", tense_name(clause.verb.tense));
      event.set("neg_evt", clause.verb.negated ? "yes" : "no");
      event.set("cod_sub", subject_code);
      if (existential) event.set("sort_evt", "possible");
      if (ctx.current_time) event.set("cod_time", *ctx.current_time);
      if (ctx.current_place) event.set("cod_loc", *ctx.current_place);
      Code sit = store.insert(std::move(event));
      rep.net.situations.push_back(sit);
      situations.push_back(sit);
      running_subject = subject_code;
      builder.note_record(subject_code);
      continue;
    }

    std::vector<NGAnalysis> arg_analyses;
    for (const auto& [prep, ng] : clause.arguments) {
      arg_analyses.push_back(analyze(*ng, lexicon, ctx, store));
      if (arg_analyses.back().kind == NGAnalysis::Kind::existential) {
        existential = true;
      }
    }

    NGAnalysis carried;
    if (!subject_analysis) {
      carried.kind = NGAnalysis::Kind::pronoun;
      carried.antecedent = subject_code;
      carried.antecedent_sort = store.get(subject_code).sort();
    }
    const NGAnalysis& subj_ref =
        subject_analysis ? *subject_analysis : carried;
    ClauseChoice choice =
        choose_clause(clause, subj_ref, arg_analyses, lexicon);

    if (subject_analysis) {
      subject_code = builder.build(*subject_analysis, choice.subject_sense);
    }

    std::vector<Code> arg_codes;
    for (std::size_t k = 0; k < arg_analyses.size(); ++k) {
      arg_codes.push_back(
          builder.build(arg_analyses[k], choice.args[k].sense));
    }

    const VerbEntry& verb = *choice.verb;
    Sort sort = situation_sort(verb);
    PredicateRecord sit(sort);
    std::string word = verb.inf;
    if (!clause.verb.particle.empty()) word += " " + clause.verb.particle;
    sit.set("word", word);
    sit.set("tense", tense_name(clause.verb.tense));
    sit.set(neg_slot(sort), clause.verb.negated ? "yes" : "no");
    if (existential) sit.set(mode_slot(sort), "possible");
    if (!clause.verb.adverb.empty()) sit.set("adverb", clause.verb.adverb);
    if (sort == Sort::action) {
      sit.set("sem_typ_act", action_type_name(verb.sem_typ));
      if (!verb.scale.empty()) sit.set("scale", verb.scale);
      if (verb.end_state) {
        sit.set("res_state", static_cast<std::int64_t>(*verb.end_state));
      }
    } else if (sort == Sort::process) {
      sit.set("typ_pr", action_type_name(verb.sem_typ));
    } else if (sort == Sort::event) {
      if (!verb.scale.empty()) sit.set("scale", verb.scale);
      if (verb.beg_state) {
        sit.set("beg_state", static_cast<std::int64_t>(*verb.beg_state));
      }
      if (verb.end_state) {
        sit.set("res_state", static_cast<std::int64_t>(*verb.end_state));
      }
    }
    sit.set("cod_sub", subject_code);

    for (std::size_t k = 0; k < arg_codes.size(); ++k) {
      Code value = arg_codes[k];
      const char* slot = nullptr;
      switch (choice.args[k].role) {
        case ArgRole::at:
          if (sort == Sort::message) {
            Sort obj_sort = store.get(value).sort();
            slot = (obj_sort == Sort::person ||
                    obj_sort == Sort::organization)
                       ? "cod_adr"
                       : "theme";
          } else {
            slot = "cod_obj";
          }
          break;
        case ArgRole::from:
          slot = sort == Sort::process ? "cod_start_loc" : "cod_from_obj";
          break;
        case ArgRole::to:
          if (sort == Sort::message) {
            slot = "cod_adr";
          } else if (sort == Sort::process) {
            slot = "cod_end_loc";
          } else {
            slot = "cod_to_obj";
          }
          break;
        case ArgRole::with:
          slot = "cod_way";
          break;
        case ArgRole::place_adv:
          slot = place_slot(sort);
          break;
        case ArgRole::time_adv:
          slot = time_slot(sort);
          break;
      }
      if (slot && has_slot(sort, slot)) sit.set(slot, value);
    }

    if (has_slot(sort, time_slot(sort)) &&
        is_absent(sit.get(time_slot(sort))) && ctx.current_time) {
      sit.set(time_slot(sort), *ctx.current_time);
    }
    if (has_slot(sort, place_slot(sort)) &&
        is_absent(sit.get(place_slot(sort))) && ctx.current_place) {
      sit.set(place_slot(sort), *ctx.current_place);
    }

    Code sit_code = store.insert(std::move(sit));
    rep.net.situations.push_back(sit_code);
    situations.push_back(sit_code);
    running_subject = subject_code;
    builder.note_record(subject_code);

    // Possession verbs also mark ownership on the owned object.
    if (verb.sem_typ == ActionType::HAVE) {
      for (std::size_t k = 0; k < arg_codes.size(); ++k) {
        if (choice.args[k].role != ArgRole::at) continue;
        const PredicateRecord& owned = store.get(arg_codes[k]);
        if (has_slot(owned.sort(), "cod_owner") &&
            is_absent(owned.get("cod_owner"))) {
          store.update(arg_codes[k], "cod_owner", subject_code);
        }
      }
    }
  }

  for (std::size_t i = 1; i < sentence.clauses.size(); ++i) {
    const std::string& conj = sentence.conjunctions[i - 1];
    std::size_t base_idx = coordinating(conj) ? i - 1 : 0;
    if (!situations[i] || !situations[base_idx]) continue;
    Code base = *situations[base_idx];
    Code sub = *situations[i];
    PredicateRecord link(Sort::link);
    link.set("cod_base", base);
    link.set("cod_sub", sub);
    link.set("conj", conj);
    std::string sem_char = sem_char_of(conj);
    if (!sem_char.empty()) link.set("sem_char", sem_char);
    rep.net.connectors.push_back(store.insert(std::move(link)));
    if (conj == "because") {
      PredicateRecord cause(Sort::cause);
      cause.set("cod_cause", sub);
      cause.set("cod_res", base);
      Code cause_code = store.insert(std::move(cause));
      rep.net.connectors.push_back(cause_code);
      Sort base_sort = store.get(base).sort();
      if (has_slot(base_sort, "cod_cause")) {
        store.update(base, "cod_cause", cause_code);
      }
    }
  }

  return rep;
}

namespace {

std::string string_slot(const PredicateRecord& rec, const char* slot) {
  if (!has_slot(rec.sort(), slot)) return "";
  if (const std::string* s = std::get_if<std::string>(&rec.get(slot))) {
    return *s;
  }
  return "";
}

}  // namespace

std::string render_entity(const FactStore& store, Code code) {
  const PredicateRecord& rec = store.get(code);
  std::string fallback = "#" + std::to_string(code.value);
  switch (rec.sort()) {
    case Sort::person: {
      std::string first = string_slot(rec, "first_name");
      std::string second = string_slot(rec, "second_name");
      if (!first.empty() && !second.empty()) return first + " " + second;
      if (!first.empty()) return first;
      if (!second.empty()) return second;
      std::string prof = string_slot(rec, "prof");
      if (!prof.empty()) return prof;
      std::string sex = string_slot(rec, "sex");
      if (sex == "male") return "man";
      if (sex == "female") return "woman";
      return fallback;
    }
    case Sort::organization: {
      std::string name = string_slot(rec, "name_org");
      if (!name.empty()) return name;
      std::string typ = string_slot(rec, "typ_org");
      return typ.empty() ? fallback : typ;
    }
    case Sort::thing:
    case Sort::machine: {
      std::string name = string_slot(rec, "name");
      return name.empty() ? fallback : name;
    }
    case Sort::animal: {
      std::string name = string_slot(rec, "name");
      if (!name.empty()) return name;
      std::string typ = string_slot(rec, "typ_an");
      return typ.empty() ? fallback : typ;
    }
    case Sort::nature: {
      std::string name = string_slot(rec, "name");
      if (!name.empty()) return name;
      std::string typ = string_slot(rec, "typ_nat");
      return typ.empty() ? fallback : typ;
    }
    case Sort::place: {
      for (const char* slot : {"name_loc", "name_constr", "constr",
                               "name_ter", "name_reg", "country", "locat"}) {
        std::string v = string_slot(rec, slot);
        if (!v.empty()) return v;
      }
      return fallback;
    }
    case Sort::time: {
      if (const std::int64_t* year =
              std::get_if<std::int64_t>(&rec.get("year"))) {
        return std::to_string(*year);
      }
      for (const char* slot : {"season", "month", "day_week", "part_day"}) {
        std::string v = string_slot(rec, slot);
        if (!v.empty()) return v;
      }
      return fallback;
    }
    case Sort::abstr: {
      std::string label = string_slot(rec, "concept");
      return label.empty() ? fallback : label;
    }
    case Sort::property: {
      std::string name = string_slot(rec, "name");
      return name.empty() ? fallback : name;
    }
    case Sort::action:
    case Sort::process:
    case Sort::thought:
    case Sort::message:
    case Sort::event: {
      std::string out;
      if (const Code* sub = std::get_if<Code>(&rec.get("cod_sub"))) {
        out += render_entity(store, *sub);
        out += ' ';
      }
      out += string_slot(rec, "word");
      const Code* obj = nullptr;
      if (rec.sort() == Sort::message) {
        obj = std::get_if<Code>(&rec.get("theme"));
        if (!obj) obj = std::get_if<Code>(&rec.get("cod_adr"));
      } else {
        obj = std::get_if<Code>(&rec.get("cod_obj"));
      }
      if (obj) {
        out += ' ';
        out += render_entity(store, *obj);
      }
      return out.empty() ? fallback : out;
    }
    default:
      return fallback;
  }
}

}  // namespace semnet
