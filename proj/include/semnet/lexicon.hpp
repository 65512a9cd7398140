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

#ifndef SEMNET_LEXICON_HPP_
#define SEMNET_LEXICON_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "semnet/errors.hpp"

namespace semnet {

// Closed set of semantic codes a noun may carry.
enum class SemCode : std::uint8_t {
  person, prof, sibl, org, anim, plant, place, time, thing, weapon, mach,
  occup, event, state, prop, body, natur, mat, env, psych, mes, act, abstr,
  scale, cloth, food, quant,
};

inline constexpr int kSemCodeCount = 27;

// Closed set of elementary action types a verb sense belongs to.
enum class ActionType : std::uint8_t {
  PROCESS, PROPEL, MOVE, INGEST, EXPEL, GRASP, GO, TRANSFER, ATTEND,
  MESSAGE, BE, CHANGE, CREATE, HAVE,
};

inline constexpr int kActionTypeCount = 14;

const char* sem_code_name(SemCode code);
std::optional<SemCode> sem_code_from_name(const std::string& name);
const char* action_type_name(ActionType type);
std::optional<ActionType> action_type_from_name(const std::string& name);

enum class GramCat : std::uint8_t {
  noun, verb, adjective, adverb, pronoun, preposition, conjunction, article,
  particle, numeral,
};

const char* gram_cat_name(GramCat cat);
std::optional<GramCat> gram_cat_from_name(const std::string& name);

// One surface form. osn_form is the base form the other dictionaries key on;
// synt_char carries the morphological tag (verb tense, noun number, pronoun
// features, adverb function).
struct ParadigmEntry {
  int cod_par = 0;
  std::string osn_form;
  std::string paradigm;  // the surface form itself
  GramCat gram_cat = GramCat::noun;
  std::string synt_char;

  bool operator==(const ParadigmEntry&) const = default;
};

// A (preposition, semantic code) pair admissible after a noun or inside a
// verb control construction, e.g. of_person.
struct PrepCode {
  std::string prep;
  SemCode code;

  bool operator==(const PrepCode&) const = default;
};

struct NounEntry {
  int cod_int = 0;
  std::string osn_form;
  GramCat gram_cat = GramCat::noun;  // noun or adjective
  std::string maj_class;
  SemCode sem_cod = SemCode::thing;
  std::string verb;   // base verb for verbal nouns, else empty
  std::string scale;
  std::optional<int> state;
  std::vector<PrepCode> combin;

  bool operator==(const NounEntry&) const = default;
};

// One verb sense. The control sets say which argument fillers the sense
// admits: contr_at by bare semantic code (direct object), contr_from and
// contr_to by (preposition, code) pair, contr_with by code reached through
// "with"/"by". Empty contr_at means the sense takes no direct object.
struct VerbEntry {
  int cod_verb = 0;
  std::string inf;
  std::string after_verb;  // particle, e.g. "on" for "go on"
  bool mental = false;     // routes CREATE/ATTEND senses to thought records
  ActionType sem_typ = ActionType::PROCESS;
  std::string scale;
  std::optional<int> beg_state;
  std::optional<int> end_state;
  std::vector<SemCode> subj;
  std::vector<SemCode> contr_at;
  std::vector<PrepCode> contr_from;
  std::vector<PrepCode> contr_to;
  std::vector<SemCode> contr_with;

  bool operator==(const VerbEntry&) const = default;
};

enum class ControlSlot : std::uint8_t { subject, at, from, to, with };

// The three dictionaries, loaded read-only. Lookups are by exact lowercase
// surface or base form; result order is dictionary file order, which is also
// the sense priority order during disambiguation.
class Lexicon {
 public:
  static Lexicon load(const std::string& paradigm_path,
                      const std::string& noun_path,
                      const std::string& verb_path);

  void save(const std::string& paradigm_path, const std::string& noun_path,
            const std::string& verb_path) const;

  std::vector<const ParadigmEntry*> lookup_surface(
      const std::string& surface) const;
  std::vector<const NounEntry*> noun_senses(const std::string& base) const;
  std::vector<const VerbEntry*> verb_senses(const std::string& base) const;

  // Whether (prep, code) may fill `slot` of this sense. For subject and at
  // the preposition must be empty.
  static bool admissible(const VerbEntry& verb, ControlSlot slot,
                         const std::string& prep, SemCode code);

  // Whether the noun admits (prep, code) as a postmodifier, per its combin
  // field.
  bool noun_admissible(const std::string& noun_base, const std::string& prep,
                       SemCode code) const;

  const std::vector<ParadigmEntry>& paradigm_entries() const {
    return paradigms_;
  }
  const std::vector<NounEntry>& noun_entries() const { return nouns_; }
  const std::vector<VerbEntry>& verb_entries() const { return verbs_; }

  bool operator==(const Lexicon& other) const;

 private:
  void build_indexes();

  std::vector<ParadigmEntry> paradigms_;
  std::vector<NounEntry> nouns_;
  std::vector<VerbEntry> verbs_;
  std::unordered_map<std::string, std::vector<int>> by_surface_;
  std::unordered_map<std::string, std::vector<int>> nouns_by_base_;
  std::unordered_map<std::string, std::vector<int>> verbs_by_base_;
};

}  // namespace semnet

#endif  // SEMNET_LEXICON_HPP_
