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

#ifndef SEMNET_FACTBASE_HPP_
#define SEMNET_FACTBASE_HPP_

#include <string>
#include <utility>
#include <vector>

#include "semnet/record.hpp"

namespace semnet {

// Code-addressed record store. Codes are dense and append-only; updates may
// fill slots of existing records but never delete. One writer at a time;
// concurrent readers are safe between writes.
class FactStore {
 public:
  // Inserts a record, assigning the next free code. Every reference slot
  // must resolve to an existing record (DanglingReference otherwise).
  Code insert(PredicateRecord record);

  const PredicateRecord& get(Code code) const;
  bool contains(Code code) const { return code.value < records_.size(); }
  std::size_t size() const { return records_.size(); }
  Code next_code() const { return Code{static_cast<std::uint32_t>(records_.size())}; }

  // Fills or overwrites one slot of an existing record. References are
  // validated like insert.
  void update(Code code, const std::string& slot, SlotValue value);

  // Codes of records of `sort` whose listed slots all hold exactly the given
  // values, in ascending code order.
  std::vector<Code> query(
      Sort sort,
      const std::vector<std::pair<std::string, SlotValue>>& constraints) const;

  std::vector<Code> codes_of_sort(Sort sort) const;

  // Dump of the whole net, one canonical record line per code.
  std::string dump() const;

  // dump() plus bookkeeping headers; load() restores an identical store,
  // including the next assigned code.
  void save(const std::string& path) const;
  static FactStore load(const std::string& path);

  const std::vector<PredicateRecord>& records() const { return records_; }

 private:
  void check_refs(const PredicateRecord& record, std::uint32_t self) const;

  std::vector<PredicateRecord> records_;
};

}  // namespace semnet

#endif  // SEMNET_FACTBASE_HPP_
