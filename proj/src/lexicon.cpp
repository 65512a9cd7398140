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

#include "semnet/lexicon.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace semnet {

namespace {

constexpr const char* kSemCodeNames[kSemCodeCount] = {
    "person", "prof",  "sibl",  "org",   "anim", "plant", "place",
    "time",   "thing", "weapon", "mach", "occup", "event", "state",
    "prop",   "body",  "natur", "mat",   "env",  "psych", "mes",
    "act",    "abstr", "scale", "cloth", "food", "quant",
};

constexpr const char* kActionTypeNames[kActionTypeCount] = {
    "PROCESS", "PROPEL", "MOVE",    "INGEST", "EXPEL",  "GRASP", "GO",
    "TRANSFER", "ATTEND", "MESSAGE", "BE",     "CHANGE", "CREATE", "HAVE",
};

constexpr const char* kGramCatNames[] = {
    "noun", "verb", "adjective", "adverb", "pronoun", "preposition",
    "conjunction", "article", "particle", "numeral",
};

std::string lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

std::string strip(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

struct DicReader {
  std::string path;
  std::vector<std::pair<int, std::vector<std::string>>> rows;  // (line, fields)

  explicit DicReader(const std::string& file_path, int field_count)
      : path(file_path) {
    std::ifstream in(file_path);
    if (!in) {
      throw Error(ErrorKind::IoError, "cannot open dictionary " + file_path);
    }
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
      ++number;
      std::string text = strip(line);
      if (text.empty() || text[0] == '#') continue;
      std::vector<std::string> fields = split(text, '|');
      if (static_cast<int>(fields.size()) != field_count) {
        throw Error(ErrorKind::MalformedRecord,
                    path + ": expected " + std::to_string(field_count) +
                        " fields, got " + std::to_string(fields.size()))
            .at_line(number);
      }
      for (std::string& f : fields) f = strip(f);
      rows.emplace_back(number, std::move(fields));
    }
  }
};

int parse_int(const std::string& s, const std::string& path, int line) {
  int value = 0;
  const char* begin = s.data();
  if (!s.empty() && s[0] == '+') ++begin;
  auto [ptr, ec] = std::from_chars(begin, s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw Error(ErrorKind::MalformedRecord, path + ": bad integer " + s)
        .at_line(line);
  }
  return value;
}

std::optional<int> parse_state(const std::string& s, const std::string& path,
                               int line) {
  if (s.empty()) return std::nullopt;
  int value = parse_int(s, path, line);
  if (value < -100 || value > 100) {
    throw Error(ErrorKind::MalformedRecord,
                path + ": scale state " + s + " out of [-100,100]")
        .at_line(line);
  }
  return value;
}

SemCode parse_sem_code(const std::string& s, const std::string& path,
                       int line) {
  auto code = sem_code_from_name(s);
  if (!code) {
    throw Error(ErrorKind::UnknownSemanticCode,
                path + ": unknown semantic code " + s)
        .with_value(s)
        .at_line(line);
  }
  return *code;
}

std::vector<SemCode> parse_code_set(const std::string& s,
                                    const std::string& path, int line) {
  std::vector<SemCode> out;
  if (strip(s).empty()) return out;
  for (const std::string& part : split(s, ',')) {
    out.push_back(parse_sem_code(strip(part), path, line));
  }
  return out;
}

std::vector<PrepCode> parse_prep_codes(const std::string& s,
                                       const std::string& path, int line) {
  std::vector<PrepCode> out;
  if (strip(s).empty()) return out;
  for (const std::string& part : split(s, ',')) {
    std::string pair = strip(part);
    std::size_t us = pair.rfind('_');
    if (us == std::string::npos || us == 0 || us + 1 == pair.size()) {
      throw Error(ErrorKind::MalformedRecord,
                  path + ": expected prep_code pair, got " + pair)
          .at_line(line);
    }
    out.push_back(PrepCode{pair.substr(0, us),
                           parse_sem_code(pair.substr(us + 1), path, line)});
  }
  return out;
}

std::string join_codes(const std::vector<SemCode>& codes) {
  std::string out;
  for (std::size_t i = 0; i < codes.size(); ++i) {
    if (i) out += ',';
    out += sem_code_name(codes[i]);
  }
  return out;
}

std::string join_prep_codes(const std::vector<PrepCode>& pairs) {
  std::string out;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (i) out += ',';
    out += pairs[i].prep;
    out += '_';
    out += sem_code_name(pairs[i].code);
  }
  return out;
}

std::string state_to_string(const std::optional<int>& state) {
  if (!state) return "";
  if (*state > 0) return "+" + std::to_string(*state);
  return std::to_string(*state);
}

}  // namespace

const char* sem_code_name(SemCode code) {
  return kSemCodeNames[static_cast<int>(code)];
}

std::optional<SemCode> sem_code_from_name(const std::string& name) {
  for (int i = 0; i < kSemCodeCount; ++i) {
    if (name == kSemCodeNames[i]) return static_cast<SemCode>(i);
  }
  return std::nullopt;
}

const char* action_type_name(ActionType type) {
  return kActionTypeNames[static_cast<int>(type)];
}

std::optional<ActionType> action_type_from_name(const std::string& name) {
  for (int i = 0; i < kActionTypeCount; ++i) {
    if (name == kActionTypeNames[i]) return static_cast<ActionType>(i);
  }
  return std::nullopt;
}

const char* gram_cat_name(GramCat cat) {
  return kGramCatNames[static_cast<int>(cat)];
}

std::optional<GramCat> gram_cat_from_name(const std::string& name) {
  for (int i = 0; i < 10; ++i) {
    if (name == kGramCatNames[i]) return static_cast<GramCat>(i);
  }
  return std::nullopt;
}

Lexicon Lexicon::load(const std::string& paradigm_path,
                      const std::string& noun_path,
                      const std::string& verb_path) {
  Lexicon lex;

  std::set<int> seen;
  for (const auto& [line, f] : DicReader(paradigm_path, 5).rows) {
    ParadigmEntry e;
    e.cod_par = parse_int(f[0], paradigm_path, line);
    if (!seen.insert(e.cod_par).second) {
      throw Error(ErrorKind::DuplicateCode,
                  paradigm_path + ": duplicate code " + f[0])
          .at_line(line);
    }
    e.osn_form = lower(f[1]);
    e.paradigm = lower(f[2]);
    auto cat = gram_cat_from_name(f[3]);
    if (!cat) {
      throw Error(ErrorKind::MalformedRecord,
                  paradigm_path + ": unknown category " + f[3])
          .at_line(line);
    }
    e.gram_cat = *cat;
    e.synt_char = f[4];
    lex.paradigms_.push_back(std::move(e));
  }

  seen.clear();
  for (const auto& [line, f] : DicReader(noun_path, 9).rows) {
    NounEntry e;
    e.cod_int = parse_int(f[0], noun_path, line);
    if (!seen.insert(e.cod_int).second) {
      throw Error(ErrorKind::DuplicateCode,
                  noun_path + ": duplicate code " + f[0])
          .at_line(line);
    }
    e.osn_form = lower(f[1]);
    auto cat = gram_cat_from_name(f[2]);
    if (!cat || (*cat != GramCat::noun && *cat != GramCat::adjective)) {
      throw Error(ErrorKind::MalformedRecord,
                  noun_path + ": bad category " + f[2])
          .at_line(line);
    }
    e.gram_cat = *cat;
    e.maj_class = f[3];
    e.sem_cod = parse_sem_code(f[4], noun_path, line);
    e.verb = f[5];
    e.scale = f[6];
    e.state = parse_state(f[7], noun_path, line);
    e.combin = parse_prep_codes(f[8], noun_path, line);
    lex.nouns_.push_back(std::move(e));
  }

  seen.clear();
  for (const auto& [line, f] : DicReader(verb_path, 13).rows) {
    VerbEntry e;
    e.cod_verb = parse_int(f[0], verb_path, line);
    if (!seen.insert(e.cod_verb).second) {
      throw Error(ErrorKind::DuplicateCode,
                  verb_path + ": duplicate code " + f[0])
          .at_line(line);
    }
    e.inf = lower(f[1]);
    e.after_verb = f[2];
    e.mental = (f[3] == "yes");
    auto type = action_type_from_name(f[4]);
    if (!type) {
      throw Error(ErrorKind::UnknownActionType,
                  verb_path + ": unknown action type " + f[4])
          .with_value(f[4])
          .at_line(line);
    }
    e.sem_typ = *type;
    e.scale = f[5];
    e.beg_state = parse_state(f[6], verb_path, line);
    e.end_state = parse_state(f[7], verb_path, line);
    if (!e.scale.empty() && (!e.beg_state || !e.end_state)) {
      throw Error(ErrorKind::MalformedRecord,
                  verb_path + ": scale " + e.scale + " without states")
          .at_line(line);
    }
    e.subj = parse_code_set(f[8], verb_path, line);
    e.contr_at = parse_code_set(f[9], verb_path, line);
    e.contr_from = parse_prep_codes(f[10], verb_path, line);
    e.contr_to = parse_prep_codes(f[11], verb_path, line);
    e.contr_with = parse_code_set(f[12], verb_path, line);
    lex.verbs_.push_back(std::move(e));
  }

  lex.build_indexes();
  return lex;
}

void Lexicon::save(const std::string& paradigm_path,
                   const std::string& noun_path,
                   const std::string& verb_path) const {
  std::ofstream p(paradigm_path);
  for (const ParadigmEntry& e : paradigms_) {
    p << e.cod_par << '|' << e.osn_form << '|' << e.paradigm << '|'
      << gram_cat_name(e.gram_cat) << '|' << e.synt_char << '\n';
  }
  std::ofstream n(noun_path);
  for (const NounEntry& e : nouns_) {
    n << e.cod_int << '|' << e.osn_form << '|' << gram_cat_name(e.gram_cat)
      << '|' << e.maj_class << '|' << sem_code_name(e.sem_cod) << '|' << e.verb
      << '|' << e.scale << '|' << state_to_string(e.state) << '|'
      << join_prep_codes(e.combin) << '\n';
  }
  std::ofstream v(verb_path);
  for (const VerbEntry& e : verbs_) {
    v << e.cod_verb << '|' << e.inf << '|' << e.after_verb << '|'
      << (e.mental ? "yes" : "") << '|' << action_type_name(e.sem_typ) << '|'
      << e.scale << '|' << state_to_string(e.beg_state) << '|'
      << state_to_string(e.end_state) << '|' << join_codes(e.subj) << '|'
      << join_codes(e.contr_at) << '|' << join_prep_codes(e.contr_from) << '|'
      << join_prep_codes(e.contr_to) << '|' << join_codes(e.contr_with)
      << '\n';
  }
}

void Lexicon::build_indexes() {
  by_surface_.clear();
  nouns_by_base_.clear();
  verbs_by_base_.clear();
  for (int i = 0; i < static_cast<int>(paradigms_.size()); ++i) {
    by_surface_[paradigms_[i].paradigm].push_back(i);
  }
  for (int i = 0; i < static_cast<int>(nouns_.size()); ++i) {
    nouns_by_base_[nouns_[i].osn_form].push_back(i);
  }
  for (int i = 0; i < static_cast<int>(verbs_.size()); ++i) {
    verbs_by_base_[verbs_[i].inf].push_back(i);
  }
}

std::vector<const ParadigmEntry*> Lexicon::lookup_surface(
    const std::string& surface) const {
  std::vector<const ParadigmEntry*> out;
  auto it = by_surface_.find(lower(surface));
  if (it == by_surface_.end()) return out;
  out.reserve(it->second.size());
  for (int i : it->second) out.push_back(&paradigms_[i]);
  return out;
}

std::vector<const NounEntry*> Lexicon::noun_senses(
    const std::string& base) const {
  std::vector<const NounEntry*> out;
  auto it = nouns_by_base_.find(lower(base));
  if (it == nouns_by_base_.end()) return out;
  for (int i : it->second) out.push_back(&nouns_[i]);
  return out;
}

std::vector<const VerbEntry*> Lexicon::verb_senses(
    const std::string& base) const {
  std::vector<const VerbEntry*> out;
  auto it = verbs_by_base_.find(lower(base));
  if (it == verbs_by_base_.end()) return out;
  for (int i : it->second) out.push_back(&verbs_[i]);
  return out;
}

bool Lexicon::admissible(const VerbEntry& verb, ControlSlot slot,
                         const std::string& prep, SemCode code) {
  switch (slot) {
    case ControlSlot::subject:
      return prep.empty() &&
             std::find(verb.subj.begin(), verb.subj.end(), code) !=
                 verb.subj.end();
    case ControlSlot::at:
      return prep.empty() &&
             std::find(verb.contr_at.begin(), verb.contr_at.end(), code) !=
                 verb.contr_at.end();
    case ControlSlot::from:
      return std::find(verb.contr_from.begin(), verb.contr_from.end(),
                       PrepCode{prep, code}) != verb.contr_from.end();
    case ControlSlot::to:
      return std::find(verb.contr_to.begin(), verb.contr_to.end(),
                       PrepCode{prep, code}) != verb.contr_to.end();
    case ControlSlot::with:
      return (prep == "with" || prep == "by") &&
             std::find(verb.contr_with.begin(), verb.contr_with.end(), code) !=
                 verb.contr_with.end();
  }
  return false;
}

bool Lexicon::noun_admissible(const std::string& noun_base,
                              const std::string& prep, SemCode code) const {
  for (const NounEntry* entry : noun_senses(noun_base)) {
    if (std::find(entry->combin.begin(), entry->combin.end(),
                  PrepCode{prep, code}) != entry->combin.end()) {
      return true;
    }
  }
  return false;
}

bool Lexicon::operator==(const Lexicon& other) const {
  return paradigms_ == other.paradigms_ && nouns_ == other.nouns_ &&
         verbs_ == other.verbs_;
}

}  // namespace semnet
