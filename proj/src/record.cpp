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

#include "semnet/record.hpp"

#include <array>
#include <charconv>
#include <cctype>
#include <sstream>
#include <unordered_map>

namespace semnet {

namespace {

// Field order follows the canonical predicate layouts; the record's own
// code slot is implicit.
constexpr SlotDef kPerson[] = {
    {"sex", false},          {"age", false},          {"number", false},
    {"first_name", false},   {"second_name", false},  {"cod_pl_birth", true},
    {"cod_dt_birth", true},  {"nath", false},         {"lang", false},
    {"face", false},         {"nose", false},         {"eyes", false},
    {"hair", false},         {"stature", false},      {"prof", false},
};

constexpr SlotDef kOrganization[] = {
    {"name_org", false}, {"typ_org", false}, {"number", false},
    {"cod_loc_org", true}, {"director", false},
};

constexpr SlotDef kThing[] = {
    {"name", false},   {"maj_class", false}, {"number", false},
    {"weight", false}, {"color", false},     {"length", false},
    {"height", false}, {"thickness", false}, {"cod_owner", true},
};

constexpr SlotDef kMachine[] = {
    {"name", false},      {"function", false},  {"number", false},
    {"typ_eng", false},   {"color", false},     {"trademark", false},
    {"name_prod", false}, {"cod_owner", true},
};

constexpr SlotDef kAnimal[] = {
    {"typ_an", false}, {"number", false}, {"maj_class", false},
    {"weight", false}, {"name", false},   {"color", false},
    {"cod_owner", true},
};

constexpr SlotDef kNature[] = {
    {"typ_nat", false}, {"number", false}, {"name", false},
    {"charact", false},
};

constexpr SlotDef kPlace[] = {
    {"country", false},     {"typ_reg", false},        {"name_reg", false},
    {"ter_entity", false},  {"name_ter", false},       {"locat", false},
    {"name_loc", false},    {"constr", false},         {"name_constr", false},
    {"add_inf_constr", false}, {"fin_locat", false},   {"name_room", false},
};

constexpr SlotDef kTime[] = {
    {"year", false},    {"season", false},   {"month", false},
    {"numb_mon", false}, {"day_week", false}, {"holyday", false},
    {"part_day", false}, {"hours", false},    {"minutes", false},
};

constexpr SlotDef kProperty[] = {
    {"name", false}, {"scale", false}, {"state", false}, {"cod_obj", true},
};

constexpr SlotDef kCause[] = {
    {"typ_cs", false}, {"typ_sit", false}, {"cod_cause", true},
    {"cod_res", true},
};

constexpr SlotDef kRelation[] = {
    {"typ_rel", false},  {"emot_estim", false}, {"first_obj", false},
    {"sec_obj", false},  {"cod_first", true},   {"cod_sec", true},
};

constexpr SlotDef kLink[] = {
    {"base_str", false}, {"sub_str", false}, {"cod_base", true},
    {"cod_sub", true},   {"conj", false},    {"sem_char", false},
};

constexpr SlotDef kAbstr[] = {
    {"concept", false}, {"domain", false}, {"ad_prop", false},
    {"cod_owner", true},
};

constexpr SlotDef kNumber[] = {
    {"descr_word", false}, {"numb", false}, {"cod_obj", true},
};

constexpr SlotDef kAction[] = {
    {"sem_typ_act", false}, {"sort_act", false}, {"neg_act", false},
    {"tense", false},       {"char_act", false}, {"adverb", false},
    {"word", false},        {"cod_sub", true},   {"cod_obj", true},
    {"cod_from_obj", true}, {"cod_to_obj", true}, {"scale", false},
    {"res_state", false},   {"cod_time", true},  {"cod_loc", true},
    {"cod_way", true},      {"cod_purp", true},  {"cod_cause", true},
};

constexpr SlotDef kProcess[] = {
    {"sort_pr", false},      {"typ_pr", false},       {"neg_pr", false},
    {"tense", false},        {"char_pr", false},      {"adverb", false},
    {"word", false},         {"cod_sub", true},       {"cod_obj", true},
    {"cod_start_pr", true},  {"cod_end_pr", true},    {"cod_start_loc", true},
    {"cod_end_loc", true},   {"cod_way", true},       {"cod_purp", true},
    {"cod_res", true},
};

constexpr SlotDef kThought[] = {
    {"sort_th", false}, {"neg_th", false},  {"tense", false},
    {"char_th", false}, {"adverb", false},  {"word", false},
    {"cod_sub", true},  {"cod_obj", true},  {"cod_time", true},
    {"cod_loc", true},  {"cod_purp", true},
};

constexpr SlotDef kMessage[] = {
    {"sort_ms", false}, {"neg_ms", false},  {"tense", false},
    {"char_ms", false}, {"adverb", false},  {"word", false},
    {"cod_sub", true},  {"cod_adr", true},  {"theme", true},
    {"cod_time", true}, {"cod_loc", true},  {"cod_purp", true},
    {"cod_way", true},  {"cod_cause", true},
};

constexpr SlotDef kEvent[] = {
    {"sort_evt", false}, {"neg_evt", false},  {"tense", false},
    {"char_evt", false}, {"adverb", false},   {"word", false},
    {"cod_sub", true},   {"cod_obj", true},   {"scale", false},
    {"beg_state", false}, {"res_state", false}, {"cod_time", true},
    {"cod_loc", true},   {"cod_cause", true},
};

constexpr const char* kSortNames[kSortCount] = {
    "person", "organization", "thing",  "machine", "animal", "nature",
    "place",  "time",         "property", "cause", "relation", "link",
    "abstr",  "number",       "action", "process", "thought", "message",
    "event",
};

std::span<const SlotDef> schema_table(Sort sort) {
  switch (sort) {
    case Sort::person: return kPerson;
    case Sort::organization: return kOrganization;
    case Sort::thing: return kThing;
    case Sort::machine: return kMachine;
    case Sort::animal: return kAnimal;
    case Sort::nature: return kNature;
    case Sort::place: return kPlace;
    case Sort::time: return kTime;
    case Sort::property: return kProperty;
    case Sort::cause: return kCause;
    case Sort::relation: return kRelation;
    case Sort::link: return kLink;
    case Sort::abstr: return kAbstr;
    case Sort::number: return kNumber;
    case Sort::action: return kAction;
    case Sort::process: return kProcess;
    case Sort::thought: return kThought;
    case Sort::message: return kMessage;
    case Sort::event: return kEvent;
  }
  return {};
}

const std::unordered_map<std::string, int>& slot_map(Sort sort) {
  static std::array<std::unordered_map<std::string, int>, kSortCount> maps = [] {
    std::array<std::unordered_map<std::string, int>, kSortCount> out;
    for (int s = 0; s < kSortCount; ++s) {
      auto schema = schema_table(static_cast<Sort>(s));
      for (int i = 0; i < static_cast<int>(schema.size()); ++i) {
        out[s].emplace(schema[i].name, i);
      }
    }
    return out;
  }();
  return maps[static_cast<int>(sort)];
}

bool looks_like_integer(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

bool needs_quoting(const std::string& s) {
  if (s.empty() || s[0] == '#' || looks_like_integer(s)) return true;
  for (char c : s) {
    if (c == '{' || c == '}' || c == ',' || c == '=' || c == '"' ||
        c == '\\' || std::isspace(static_cast<unsigned char>(c))) {
      return true;
    }
  }
  return false;
}

void append_quoted(std::string& out, const std::string& s) {
  out += '"';
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
}

Error corrupt(const std::string& line, const std::string& reason) {
  return Error(ErrorKind::CorruptStore, "corrupt record line: " + reason)
      .with_value(line);
}

}  // namespace

const char* sort_name(Sort sort) {
  return kSortNames[static_cast<int>(sort)];
}

std::optional<Sort> sort_from_name(const std::string& name) {
  for (int i = 0; i < kSortCount; ++i) {
    if (name == kSortNames[i]) return static_cast<Sort>(i);
  }
  return std::nullopt;
}

std::span<const SlotDef> schema_of(Sort sort) { return schema_table(sort); }

int slot_index(Sort sort, const std::string& slot) {
  const auto& map = slot_map(sort);
  auto it = map.find(slot);
  if (it == map.end()) {
    throw Error(ErrorKind::UnknownSlot,
                std::string("sort ") + sort_name(sort) + " has no slot " + slot)
        .with_slot(slot);
  }
  return it->second;
}

bool has_slot(Sort sort, const std::string& slot) {
  return slot_map(sort).count(slot) > 0;
}

PredicateRecord::PredicateRecord(Sort sort)
    : sort_(sort), slots_(schema_of(sort).size()) {}

const SlotValue& PredicateRecord::get(const std::string& slot) const {
  return slots_[slot_index(sort_, slot)];
}

void PredicateRecord::set(const std::string& slot, SlotValue value) {
  set(slot_index(sort_, slot), std::move(value));
}

void PredicateRecord::set(int index, SlotValue value) {
  const SlotDef& def = schema_of(sort_)[index];
  if (!is_absent(value)) {
    bool is_code = std::holds_alternative<Code>(value);
    if (def.is_ref && !is_code) {
      throw Error(ErrorKind::MalformedRecord,
                  std::string("slot ") + def.name + " requires a reference")
          .with_slot(def.name);
    }
    if (!def.is_ref && is_code) {
      throw Error(ErrorKind::MalformedRecord,
                  std::string("slot ") + def.name + " cannot hold a reference")
          .with_slot(def.name);
    }
  }
  slots_[index] = std::move(value);
}

const std::string& PredicateRecord::slot_name(int index) const {
  static std::vector<std::vector<std::string>> names = [] {
    std::vector<std::vector<std::string>> out(kSortCount);
    for (int s = 0; s < kSortCount; ++s) {
      for (const SlotDef& def : schema_table(static_cast<Sort>(s))) {
        out[s].emplace_back(def.name);
      }
    }
    return out;
  }();
  return names[static_cast<int>(sort_)][index];
}

bool PredicateRecord::operator==(const PredicateRecord& other) const {
  return sort_ == other.sort_ && code_ == other.code_ &&
         slots_ == other.slots_;
}

std::string slot_value_to_string(const SlotValue& value) {
  if (is_absent(value)) return "";
  if (const Code* c = std::get_if<Code>(&value)) {
    return "#" + std::to_string(c->value);
  }
  if (const std::int64_t* n = std::get_if<std::int64_t>(&value)) {
    return std::to_string(*n);
  }
  return std::get<std::string>(value);
}

std::string PredicateRecord::to_line() const {
  std::string out = sort_name(sort_);
  out += '#';
  out += std::to_string(code_.value);
  out += '{';
  bool first = true;
  auto schema = schema_of(sort_);
  for (std::size_t i = 0; i < slots_.size(); ++i) {
    if (is_absent(slots_[i])) continue;
    if (!first) out += ',';
    first = false;
    out += schema[i].name;
    out += '=';
    if (const std::string* s = std::get_if<std::string>(&slots_[i])) {
      if (needs_quoting(*s)) {
        append_quoted(out, *s);
      } else {
        out += *s;
      }
    } else {
      out += slot_value_to_string(slots_[i]);
    }
  }
  out += '}';
  return out;
}

PredicateRecord PredicateRecord::from_line(const std::string& line) {
  std::size_t hash = line.find('#');
  std::size_t brace = line.find('{');
  if (hash == std::string::npos || brace == std::string::npos || hash > brace ||
      line.empty() || line.back() != '}') {
    throw corrupt(line, "expected sort#code{...}");
  }
  auto sort = sort_from_name(line.substr(0, hash));
  if (!sort) throw corrupt(line, "unknown sort");
  std::uint32_t code_value = 0;
  {
    const char* begin = line.data() + hash + 1;
    const char* end = line.data() + brace;
    auto [ptr, ec] = std::from_chars(begin, end, code_value);
    if (ec != std::errc() || ptr != end) throw corrupt(line, "bad code");
  }
  PredicateRecord record(*sort);
  record.set_code(Code{code_value});

  std::size_t pos = brace + 1;
  std::size_t stop = line.size() - 1;
  while (pos < stop) {
    std::size_t eq = line.find('=', pos);
    if (eq == std::string::npos || eq >= stop) {
      throw corrupt(line, "expected slot=value");
    }
    std::string slot = line.substr(pos, eq - pos);
    pos = eq + 1;
    SlotValue value;
    if (pos < stop && line[pos] == '"') {
      std::string s;
      ++pos;
      bool closed = false;
      while (pos < stop) {
        char c = line[pos];
        if (c == '\\' && pos + 1 < stop) {
          s += line[pos + 1];
          pos += 2;
          continue;
        }
        if (c == '"') {
          closed = true;
          ++pos;
          break;
        }
        s += c;
        ++pos;
      }
      if (!closed) throw corrupt(line, "unterminated string");
      value = s;
    } else {
      std::size_t end = line.find(',', pos);
      if (end == std::string::npos || end > stop) end = stop;
      std::string raw = line.substr(pos, end - pos);
      pos = end;
      if (!raw.empty() && raw[0] == '#') {
        std::uint32_t ref = 0;
        auto [ptr, ec] =
            std::from_chars(raw.data() + 1, raw.data() + raw.size(), ref);
        if (ec != std::errc() || ptr != raw.data() + raw.size()) {
          throw corrupt(line, "bad reference " + raw);
        }
        value = Code{ref};
      } else if (looks_like_integer(raw)) {
        std::int64_t n = 0;
        auto [ptr, ec] =
            std::from_chars(raw.data(), raw.data() + raw.size(), n);
        if (ec != std::errc()) throw corrupt(line, "bad integer " + raw);
        value = n;
      } else if (raw.empty()) {
        throw corrupt(line, "empty unquoted value");
      } else {
        value = raw;
      }
    }
    try {
      record.set(slot, std::move(value));
    } catch (const Error& e) {
      throw corrupt(line, e.what());
    }
    if (pos < stop) {
      if (line[pos] != ',') throw corrupt(line, "expected comma");
      ++pos;
    }
  }
  return record;
}

}  // namespace semnet
