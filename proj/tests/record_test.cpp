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

#include <string>

#include "semnet/errors.hpp"
#include "semnet/record.hpp"

using namespace semnet;

TEST_CASE("every sort has a name that maps back to it") {
  for (int i = 0; i < kSortCount; ++i) {
    Sort sort = static_cast<Sort>(i);
    std::string name = sort_name(sort);
    CHECK(!name.empty());
    auto back = sort_from_name(name);
    REQUIRE(back.has_value());
    CHECK(*back == sort);
  }
  CHECK(!sort_from_name("verb").has_value());
  CHECK(!sort_from_name("").has_value());
  CHECK(!sort_from_name("Person").has_value());
}

TEST_CASE("schemas are non-empty and slot names are unique per sort") {
  for (int i = 0; i < kSortCount; ++i) {
    Sort sort = static_cast<Sort>(i);
    auto schema = schema_of(sort);
    REQUIRE(schema.size() > 0);
    for (std::size_t a = 0; a < schema.size(); ++a) {
      CHECK(has_slot(sort, schema[a].name));
      CHECK(slot_index(sort, schema[a].name) == static_cast<int>(a));
      for (std::size_t b = a + 1; b < schema.size(); ++b) {
        CHECK(std::string(schema[a].name) != schema[b].name);
      }
    }
  }
}

TEST_CASE("known slot layouts") {
  CHECK(slot_index(Sort::person, "sex") == 0);
  CHECK(slot_index(Sort::person, "first_name") == 3);
  CHECK(slot_index(Sort::person, "prof") == 14);
  CHECK(slot_index(Sort::action, "sem_typ_act") == 0);
  CHECK(slot_index(Sort::action, "word") == 6);
  CHECK(slot_index(Sort::event, "beg_state") == 9);
  CHECK(has_slot(Sort::message, "cod_adr"));
  CHECK(has_slot(Sort::message, "theme"));
  CHECK(!has_slot(Sort::action, "cod_adr"));
  CHECK(!has_slot(Sort::person, "word"));
  CHECK_THROWS_AS(slot_index(Sort::person, "word"), Error);
}

TEST_CASE("reference slots only accept codes and value slots reject them") {
  PredicateRecord rec(Sort::action);
  rec.set("word", std::string("shoot"));
  rec.set("cod_sub", Code{4});
  CHECK(std::get<std::string>(rec.get("word")) == "shoot");
  CHECK(std::get<Code>(rec.get("cod_sub")) == Code{4});

  CHECK_THROWS_AS(rec.set("cod_obj", std::string("bob")), Error);
  CHECK_THROWS_AS(rec.set("word", Code{1}), Error);
  CHECK_THROWS_AS(rec.set("cod_obj", std::int64_t{7}), Error);

  rec.set("cod_sub", SlotValue{});
  CHECK(is_absent(rec.get("cod_sub")));
}

TEST_CASE("record line round trip") {
  PredicateRecord rec(Sort::event);
  rec.set_code(Code{14});
  rec.set("neg_evt", std::string("no"));
  rec.set("tense", std::string("past"));
  rec.set("word", std::string("cure"));
  rec.set("cod_sub", Code{2});
  rec.set("cod_obj", Code{8});
  rec.set("scale", std::string("HEALTH"));
  rec.set("beg_state", std::int64_t{-50});
  rec.set("res_state", std::int64_t{100});

  std::string line = rec.to_line();
  CHECK(line ==
        "event#14{neg_evt=no,tense=past,word=cure,cod_sub=#2,cod_obj=#8,"
        "scale=HEALTH,beg_state=-50,res_state=100}");
  PredicateRecord back = PredicateRecord::from_line(line);
  CHECK(back == rec);
}

TEST_CASE("values with separators or spaces are quoted and restored") {
  PredicateRecord rec(Sort::action);
  rec.set_code(Code{0});
  rec.set("word", std::string("run away"));
  rec.set("adverb", std::string("a=b,c"));
  rec.set("char_act", std::string("say \"hi\" \\ there"));

  std::string line = rec.to_line();
  CHECK(line.find("word=\"run away\"") != std::string::npos);
  PredicateRecord back = PredicateRecord::from_line(line);
  CHECK(back == rec);

  PredicateRecord empty_string(Sort::abstr);
  empty_string.set_code(Code{1});
  empty_string.set("concept", std::string(""));
  PredicateRecord back2 = PredicateRecord::from_line(empty_string.to_line());
  CHECK(back2 == empty_string);

  PredicateRecord digits(Sort::abstr);
  digits.set_code(Code{2});
  digits.set("concept", std::string("1905"));
  std::string line3 = digits.to_line();
  PredicateRecord back3 = PredicateRecord::from_line(line3);
  REQUIRE(std::holds_alternative<std::string>(back3.get("concept")));
  CHECK(std::get<std::string>(back3.get("concept")) == "1905");
}

TEST_CASE("absent slots are omitted from the line form") {
  PredicateRecord rec(Sort::person);
  rec.set_code(Code{3});
  rec.set("first_name", std::string("Mary"));
  CHECK(rec.to_line() == "person#3{first_name=Mary}");

  PredicateRecord none(Sort::cause);
  none.set_code(Code{9});
  CHECK(none.to_line() == "cause#9{}");
  CHECK(PredicateRecord::from_line("cause#9{}") == none);
}

TEST_CASE("malformed record lines are rejected") {
  CHECK_THROWS_AS(PredicateRecord::from_line("noise"), Error);
  CHECK_THROWS_AS(PredicateRecord::from_line("verb#1{}"), Error);
  CHECK_THROWS_AS(PredicateRecord::from_line("person#{}"), Error);
  CHECK_THROWS_AS(PredicateRecord::from_line("person#1{nosuch=x}"), Error);
  CHECK_THROWS_AS(PredicateRecord::from_line("person#1{sex=male"), Error);
  CHECK_THROWS_AS(PredicateRecord::from_line("person#1{cod_pl_birth=male}"),
                  Error);
  CHECK_THROWS_AS(PredicateRecord::from_line("person#1{sex=\"male}"), Error);
}

TEST_CASE("slot value rendering") {
  CHECK(slot_value_to_string(SlotValue{}) == "");
  CHECK(slot_value_to_string(SlotValue{Code{12}}) == "#12");
  CHECK(slot_value_to_string(SlotValue{std::int64_t{-100}}) == "-100");
  CHECK(slot_value_to_string(SlotValue{std::string("wolf")}) == "wolf");
}
