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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "semnet/errors.hpp"
#include "semnet/factbase.hpp"

using namespace semnet;

namespace {

PredicateRecord person(const std::string& first) {
  PredicateRecord rec(Sort::person);
  rec.set("first_name", first);
  return rec;
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / name;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
}

}  // namespace

TEST_CASE("insert assigns sequential codes") {
  FactStore store;
  CHECK(store.size() == 0);
  CHECK(store.next_code() == Code{0});
  Code a = store.insert(person("Peter"));
  Code b = store.insert(person("Anna"));
  CHECK(a == Code{0});
  CHECK(b == Code{1});
  CHECK(store.size() == 2);
  CHECK(store.contains(a));
  CHECK(!store.contains(Code{2}));
  CHECK(std::get<std::string>(store.get(b).get("first_name")) == "Anna");
  CHECK(store.get(a).code() == a);
  CHECK_THROWS_AS(store.get(Code{5}), Error);
}

TEST_CASE("references are validated on insert and update") {
  FactStore store;
  Code peter = store.insert(person("Peter"));

  PredicateRecord act(Sort::action);
  act.set("word", std::string("sleep"));
  act.set("cod_sub", peter);
  Code action = store.insert(act);
  CHECK(std::get<Code>(store.get(action).get("cod_sub")) == peter);

  PredicateRecord bad(Sort::action);
  bad.set("cod_sub", Code{40});
  CHECK_THROWS_AS(store.insert(bad), Error);

  store.update(action, "cod_obj", peter);
  CHECK_THROWS_AS(store.update(action, "cod_obj", Code{40}), Error);
  CHECK_THROWS_AS(store.update(Code{40}, "word", std::string("x")), Error);
  CHECK_THROWS_AS(store.update(action, "nosuch", std::string("x")), Error);
}

TEST_CASE("a record may reference its own code at insert time") {
  FactStore store;
  PredicateRecord rec(Sort::cause);
  rec.set("cod_cause", store.next_code());
  rec.set("cod_res", store.next_code());
  Code code = store.insert(rec);
  CHECK(std::get<Code>(store.get(code).get("cod_cause")) == code);
}

TEST_CASE("query filters by sort and slot constraints") {
  FactStore store;
  Code peter = store.insert(person("Peter"));
  store.insert(person("Anna"));
  PredicateRecord prof = person("Bob");
  prof.set("prof", std::string("doctor"));
  Code bob = store.insert(prof);
  PredicateRecord thing(Sort::thing);
  thing.set("name", std::string("gun"));
  store.insert(thing);

  CHECK(store.codes_of_sort(Sort::person) ==
        std::vector<Code>{Code{0}, Code{1}, Code{2}});
  CHECK(store.query(Sort::person, {}).size() == 3);
  CHECK(store.query(Sort::person, {{"first_name", std::string("Peter")}}) ==
        std::vector<Code>{peter});
  CHECK(store.query(Sort::person, {{"prof", std::string("doctor")}}) ==
        std::vector<Code>{bob});
  CHECK(store
            .query(Sort::person, {{"first_name", std::string("Bob")},
                                  {"prof", std::string("doctor")}})
            .size() == 1);
  CHECK(store.query(Sort::person, {{"first_name", std::string("Zoe")}})
            .empty());
  CHECK(store.query(Sort::person, {{"prof", SlotValue{}}}).size() == 2);
  CHECK_THROWS_AS(store.query(Sort::person, {{"nosuch", SlotValue{}}}), Error);
}

TEST_CASE("dump lists records in code order") {
  FactStore store;
  store.insert(person("Peter"));
  PredicateRecord thing(Sort::thing);
  thing.set("name", std::string("gun"));
  store.insert(thing);
  CHECK(store.dump() ==
        "person#0{first_name=Peter}\n"
        "thing#1{name=gun}\n");
}

TEST_CASE("save and load round trip preserves every record") {
  FactStore store;
  Code peter = store.insert(person("Peter"));
  PredicateRecord act(Sort::action);
  act.set("word", std::string("run away"));
  act.set("cod_sub", peter);
  act.set("res_state", std::int64_t{-100});
  store.insert(act);

  auto path = temp_file("factbase_roundtrip.net");
  store.save(path.string());
  FactStore loaded = FactStore::load(path.string());
  REQUIRE(loaded.size() == store.size());
  for (std::size_t i = 0; i < store.size(); ++i) {
    CHECK(loaded.records()[i] == store.records()[i]);
  }
  CHECK(loaded.dump() == store.dump());
  CHECK(loaded.next_code() == store.next_code());
  std::remove(path.string().c_str());
}

TEST_CASE("load rejects missing and malformed files") {
  CHECK_THROWS_AS(FactStore::load("/nonexistent/facts.net"), Error);

  auto path = temp_file("factbase_bad.net");

  write_file(path, "person#0{first_name=Peter}\n!count 1\n");
  CHECK_THROWS_AS(FactStore::load(path.string()), Error);  // no magic

  write_file(path, "!semnet-facts 1\n!next_code 1\n"
                   "person#0{first_name=Peter}\n");
  CHECK_THROWS_AS(FactStore::load(path.string()), Error);  // no count

  write_file(path, "!semnet-facts 1\n!next_code 2\n"
                   "person#0{first_name=Peter}\n!count 2\n");
  CHECK_THROWS_AS(FactStore::load(path.string()), Error);  // count mismatch

  write_file(path, "!semnet-facts 1\n!next_code 2\n"
                   "person#1{first_name=Peter}\n!count 1\n");
  CHECK_THROWS_AS(FactStore::load(path.string()), Error);  // gap in codes

  write_file(path, "!semnet-facts 1\n!next_code 1\n"
                   "action#0{cod_sub=#9}\n!count 1\n");
  CHECK_THROWS_AS(FactStore::load(path.string()), Error);  // dangling ref

  write_file(path, "!semnet-facts 1\n!next_code 1\n"
                   "garbage\n!count 1\n");
  CHECK_THROWS_AS(FactStore::load(path.string()), Error);

  write_file(path, "!unknown 3\n!count 0\n");
  CHECK_THROWS_AS(FactStore::load(path.string()), Error);
  std::remove(path.string().c_str());
}

TEST_CASE("forward references survive the round trip") {
  FactStore store;
  PredicateRecord act(Sort::action);
  act.set("word", std::string("cry"));
  store.insert(act);
  PredicateRecord cs(Sort::cause);
  cs.set("cod_res", Code{0});
  Code cause = store.insert(cs);
  store.update(Code{0}, "cod_cause", cause);

  auto path = temp_file("factbase_forward.net");
  store.save(path.string());
  FactStore loaded = FactStore::load(path.string());
  CHECK(std::get<Code>(loaded.get(Code{0}).get("cod_cause")) == cause);
  std::remove(path.string().c_str());
}
