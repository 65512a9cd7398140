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

#include "semnet/factbase.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace semnet {

namespace {

Error corrupt(const std::string& path, int line, const std::string& reason) {
  return Error(ErrorKind::CorruptStore, path + ": " + reason).at_line(line);
}

}  // namespace

void FactStore::check_refs(const PredicateRecord& record,
                           std::uint32_t self) const {
  auto schema = schema_of(record.sort());
  for (int i = 0; i < record.slot_count(); ++i) {
    if (!schema[i].is_ref) continue;
    const SlotValue& v = record.get(i);
    if (is_absent(v)) continue;
    Code ref = std::get<Code>(v);
    if (ref.value >= records_.size() && ref.value != self) {
      throw Error(ErrorKind::DanglingReference,
                  std::string("slot ") + schema[i].name + " references #" +
                      std::to_string(ref.value) + " which does not exist")
          .with_slot(schema[i].name);
    }
  }
}

Code FactStore::insert(PredicateRecord record) {
  Code code = next_code();
  check_refs(record, code.value);
  record.set_code(code);
  records_.push_back(std::move(record));
  return code;
}

const PredicateRecord& FactStore::get(Code code) const {
  if (!contains(code)) {
    throw Error(ErrorKind::DanglingReference,
                "no record #" + std::to_string(code.value));
  }
  return records_[code.value];
}

void FactStore::update(Code code, const std::string& slot, SlotValue value) {
  if (!contains(code)) {
    throw Error(ErrorKind::DanglingReference,
                "no record #" + std::to_string(code.value));
  }
  PredicateRecord& record = records_[code.value];
  int index = slot_index(record.sort(), slot);
  if (const Code* ref = std::get_if<Code>(&value)) {
    if (ref->value >= records_.size()) {
      throw Error(ErrorKind::DanglingReference,
                  "slot " + slot + " references #" +
                      std::to_string(ref->value) + " which does not exist")
          .with_slot(slot);
    }
  }
  record.set(index, std::move(value));
}

std::vector<Code> FactStore::query(
    Sort sort,
    const std::vector<std::pair<std::string, SlotValue>>& constraints) const {
  std::vector<int> indexes;
  indexes.reserve(constraints.size());
  for (const auto& [slot, value] : constraints) {
    indexes.push_back(slot_index(sort, slot));  // throws UnknownSlot
    (void)value;
  }
  std::vector<Code> out;
  for (const PredicateRecord& record : records_) {
    if (record.sort() != sort) continue;
    bool ok = true;
    for (std::size_t i = 0; i < constraints.size(); ++i) {
      if (!(record.get(indexes[i]) == constraints[i].second)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(record.code());
  }
  return out;
}

std::vector<Code> FactStore::codes_of_sort(Sort sort) const {
  std::vector<Code> out;
  for (const PredicateRecord& record : records_) {
    if (record.sort() == sort) out.push_back(record.code());
  }
  return out;
}

std::string FactStore::dump() const {
  std::string out;
  for (const PredicateRecord& record : records_) {
    out += record.to_line();
    out += '\n';
  }
  return out;
}

void FactStore::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) {
    throw Error(ErrorKind::IoError, "cannot write " + path);
  }
  out << "!semnet-facts 1\n";
  out << "!next_code " << records_.size() << "\n";
  out << dump();
  out << "!count " << records_.size() << "\n";
}

FactStore FactStore::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorKind::IoError, "cannot open " + path);
  }
  FactStore store;
  std::string line;
  int number = 0;
  long declared_next = -1;
  long declared_count = -1;
  bool saw_magic = false;
  while (std::getline(in, line)) {
    ++number;
    if (line.empty()) continue;
    if (line[0] == '!') {
      std::istringstream header(line);
      std::string tag;
      header >> tag;
      if (tag == "!semnet-facts") {
        saw_magic = true;
      } else if (tag == "!next_code") {
        header >> declared_next;
      } else if (tag == "!count") {
        header >> declared_count;
      } else {
        throw corrupt(path, number, "unknown header " + tag);
      }
      continue;
    }
    PredicateRecord record = [&] {
      try {
        return PredicateRecord::from_line(line);
      } catch (const Error& e) {
        throw corrupt(path, number, e.what());
      }
    }();
    if (record.code().value != store.records_.size()) {
      throw corrupt(path, number,
                    "expected code " + std::to_string(store.records_.size()) +
                        ", got " + std::to_string(record.code().value));
    }
    store.records_.push_back(std::move(record));
  }
  // References may point forward (slots filled after later inserts), so
  // they are only checked once the whole file is in.
  for (const PredicateRecord& record : store.records_) {
    try {
      store.check_refs(record, record.code().value);
    } catch (const Error& e) {
      throw corrupt(path, number, e.what());
    }
  }
  if (!saw_magic) {
    throw corrupt(path, 1, "missing !semnet-facts header");
  }
  if (declared_count < 0 ||
      declared_count != static_cast<long>(store.records_.size())) {
    throw corrupt(path, number, "record count mismatch (truncated file?)");
  }
  if (declared_next != static_cast<long>(store.records_.size())) {
    throw corrupt(path, number, "next_code mismatch");
  }
  return store;
}

}  // namespace semnet
