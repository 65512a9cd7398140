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

#ifndef SEMNET_RECORD_HPP_
#define SEMNET_RECORD_HPP_

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "semnet/errors.hpp"

namespace semnet {

// Unique identifier of one record in a store. Records cross-reference each
// other by Code; the empty reference is SlotValue's ABSENT state.
struct Code {
  std::uint32_t value = 0;
  auto operator<=>(const Code&) const = default;
};

// The nineteen record sorts of the net.
enum class Sort : std::uint8_t {
  person, organization, thing, machine, animal, nature, place, time,
  property, cause, relation, link, abstr, number,
  action, process, thought, message, event,
};

inline constexpr int kSortCount = 19;

const char* sort_name(Sort sort);
std::optional<Sort> sort_from_name(const std::string& name);

// A slot holds nothing (ABSENT), a reference to another record, a symbolic
// value, or an integer (scale positions, years, quantities).
using SlotValue = std::variant<std::monostate, Code, std::string, std::int64_t>;

inline constexpr std::monostate ABSENT{};

inline bool is_absent(const SlotValue& v) {
  return std::holds_alternative<std::monostate>(v);
}

struct SlotDef {
  const char* name;
  bool is_ref;  // slot must hold a Code when filled
};

// Slot layout of a sort, in canonical field order. The record's own code is
// not listed; it is carried by PredicateRecord::code.
std::span<const SlotDef> schema_of(Sort sort);

// Index of `slot` within schema_of(sort), or throws UnknownSlot.
int slot_index(Sort sort, const std::string& slot);
bool has_slot(Sort sort, const std::string& slot);

// One typed record. Slots are positional against schema_of(sort); every
// record of a sort carries exactly that slot set, unfilled ones ABSENT.
class PredicateRecord {
 public:
  explicit PredicateRecord(Sort sort);

  Sort sort() const { return sort_; }
  Code code() const { return code_; }
  void set_code(Code code) { code_ = code; }

  const SlotValue& get(const std::string& slot) const;
  const SlotValue& get(int index) const { return slots_[index]; }
  void set(const std::string& slot, SlotValue value);
  void set(int index, SlotValue value);

  int slot_count() const { return static_cast<int>(slots_.size()); }
  const std::string& slot_name(int index) const;

  bool operator==(const PredicateRecord& other) const;

  // Canonical one-line form: sort#code{slot=value,...}. ABSENT slots are
  // omitted, references print as #N, symbols are quoted only when needed.
  std::string to_line() const;
  static PredicateRecord from_line(const std::string& line);

 private:
  Sort sort_;
  Code code_;
  std::vector<SlotValue> slots_;
};

std::string slot_value_to_string(const SlotValue& value);

}  // namespace semnet

#endif  // SEMNET_RECORD_HPP_
