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
#include "semnet/lexicon.hpp"

using namespace semnet;

namespace {

Lexicon fixture() {
  return Lexicon::load("data/lexicon/paradigm.dic", "data/lexicon/noun.dic",
                       "data/lexicon/verb.dic");
}

struct TempDics {
  std::filesystem::path dir;

  TempDics(const std::string& paradigm, const std::string& noun,
           const std::string& verb) {
    dir = std::filesystem::temp_directory_path() / "lexicon_test_dics";
    std::filesystem::create_directories(dir);
    write("paradigm.dic", paradigm);
    write("noun.dic", noun);
    write("verb.dic", verb);
  }

  void write(const std::string& name, const std::string& text) {
    std::ofstream out(dir / name);
    out << text;
  }

  Lexicon load() {
    return Lexicon::load((dir / "paradigm.dic").string(),
                         (dir / "noun.dic").string(),
                         (dir / "verb.dic").string());
  }
};

const std::string kMinimalParadigm = "1|run|run|verb|inf\n";
const std::string kMinimalNoun = "1|dog|noun|animal|anim||||\n";
const std::string kMinimalVerb = "1|run|||GO||||person|||to_place|\n";

}  // namespace

TEST_CASE("name tables round trip") {
  CHECK(std::string(sem_code_name(SemCode::person)) == "person");
  CHECK(sem_code_from_name("weapon").has_value());
  CHECK(!sem_code_from_name("wizard").has_value());
  CHECK(std::string(action_type_name(ActionType::PROPEL)) == "PROPEL");
  CHECK(action_type_from_name("MESSAGE").has_value());
  CHECK(!action_type_from_name("propel").has_value());
  CHECK(std::string(gram_cat_name(GramCat::noun)) == "noun");
  CHECK(gram_cat_from_name("preposition").has_value());
  CHECK(!gram_cat_from_name("interjection").has_value());
}

TEST_CASE("surface lookup resolves inflected forms to base entries") {
  Lexicon lex = fixture();

  auto shot = lex.lookup_surface("shot");
  REQUIRE(shot.size() == 1);
  CHECK(shot[0]->osn_form == "shoot");
  CHECK(shot[0]->gram_cat == GramCat::verb);
  CHECK(shot[0]->synt_char == "past");

  auto men = lex.lookup_surface("men");
  REQUIRE(men.size() == 1);
  CHECK(men[0]->osn_form == "man");
  CHECK(men[0]->synt_char == "plur");

  CHECK(lex.lookup_surface("Peter").size() == 1);
  CHECK(lex.lookup_surface("peter").size() == 1);
  CHECK(lex.lookup_surface("xyzzy").empty());
}

TEST_CASE("noun senses keep file order") {
  Lexicon lex = fixture();

  auto field = lex.noun_senses("field");
  REQUIRE(field.size() == 2);
  CHECK(field[0]->sem_cod == SemCode::place);
  CHECK(field[1]->sem_cod == SemCode::abstr);

  auto shooting = lex.noun_senses("shooting");
  REQUIRE(shooting.size() == 1);
  CHECK(shooting[0]->verb == "shoot");

  auto sick = lex.noun_senses("sick");
  REQUIRE(sick.size() == 1);
  CHECK(sick[0]->gram_cat == GramCat::adjective);
  CHECK(sick[0]->scale == "HEALTH");
  CHECK(sick[0]->state.value_or(0) == -50);

  CHECK(lex.noun_senses("nonword").empty());
}

TEST_CASE("verb control sets drive admissibility") {
  Lexicon lex = fixture();

  auto shoot = lex.verb_senses("shoot");
  REQUIRE(shoot.size() == 2);
  const VerbEntry& main = *shoot[0];
  CHECK(Lexicon::admissible(main, ControlSlot::subject, "", SemCode::person));
  CHECK(!Lexicon::admissible(main, ControlSlot::subject, "", SemCode::anim));
  CHECK(Lexicon::admissible(main, ControlSlot::at, "", SemCode::person));
  CHECK(Lexicon::admissible(main, ControlSlot::with, "with", SemCode::weapon));
  CHECK(!Lexicon::admissible(main, ControlSlot::with, "with", SemCode::thing));

  const VerbEntry& hunt = *shoot[1];
  CHECK(Lexicon::admissible(hunt, ControlSlot::at, "", SemCode::anim));
  CHECK(Lexicon::admissible(hunt, ControlSlot::from, "from", SemCode::weapon));
  CHECK(!Lexicon::admissible(hunt, ControlSlot::from, "at", SemCode::weapon));

  auto take = lex.verb_senses("take");
  REQUIRE(take.size() == 1);
  CHECK(Lexicon::admissible(*take[0], ControlSlot::from, "from",
                            SemCode::org));
  CHECK(Lexicon::admissible(*take[0], ControlSlot::from, "from",
                            SemCode::place));
  CHECK(!Lexicon::admissible(*take[0], ControlSlot::from, "from",
                             SemCode::anim));

  CHECK(lex.verb_senses("blorp").empty());
}

TEST_CASE("noun combination table gates postmodifiers") {
  Lexicon lex = fixture();
  CHECK(lex.noun_admissible("letter", "of", SemCode::person));
  CHECK(!lex.noun_admissible("letter", "to", SemCode::person));
  CHECK(lex.noun_admissible("book", "on", SemCode::abstr));
  CHECK(lex.noun_admissible("book", "of", SemCode::person));
  CHECK(!lex.noun_admissible("book", "on", SemCode::person));
  CHECK(!lex.noun_admissible("stone", "of", SemCode::person));
  CHECK(!lex.noun_admissible("nonword", "of", SemCode::person));
}

TEST_CASE("comments and blank lines are skipped, fields are stripped") {
  TempDics dics("# comment\n\n  1 | run | run | verb | inf \n",
                "# nouns\n 1 | dog | noun | animal | anim ||||\n",
                "# verbs\n 1 | run ||| GO |||| person ||| to_place |\n");
  Lexicon lex = dics.load();
  REQUIRE(lex.paradigm_entries().size() == 1);
  CHECK(lex.paradigm_entries()[0].paradigm == "run");
  REQUIRE(lex.noun_entries().size() == 1);
  CHECK(lex.noun_entries()[0].osn_form == "dog");
  REQUIRE(lex.verb_entries().size() == 1);
  CHECK(lex.verb_entries()[0].contr_to ==
        std::vector<PrepCode>{PrepCode{"to", SemCode::place}});
}

TEST_CASE("dictionary format violations are rejected") {
  CHECK_THROWS_AS(TempDics("1|run|run|verb\n", kMinimalNoun, kMinimalVerb)
                      .load(),
                  Error);  // field count
  CHECK_THROWS_AS(TempDics("1|run|run|gerund|inf\n", kMinimalNoun,
                           kMinimalVerb)
                      .load(),
                  Error);  // unknown category
  CHECK_THROWS_AS(TempDics(kMinimalParadigm + "1|go|go|verb|inf\n",
                           kMinimalNoun, kMinimalVerb)
                      .load(),
                  Error);  // duplicate paradigm code
  CHECK_THROWS_AS(TempDics(kMinimalParadigm,
                           "1|dog|noun|animal|dragon||||\n", kMinimalVerb)
                      .load(),
                  Error);  // unknown semantic code
  CHECK_THROWS_AS(TempDics(kMinimalParadigm,
                           kMinimalNoun + "1|cat|noun|animal|anim||||\n",
                           kMinimalVerb)
                      .load(),
                  Error);  // duplicate noun code
  CHECK_THROWS_AS(
      TempDics(kMinimalParadigm, kMinimalNoun,
               "1|run|||WANDER||||person|||to_place|\n")
          .load(),
      Error);  // unknown action type
  CHECK_THROWS_AS(
      TempDics(kMinimalParadigm, kMinimalNoun,
               "1|hurt|||PROPEL|HEALTH|+50|-200|person|person|||\n")
          .load(),
      Error);  // state out of range
  CHECK_THROWS_AS(
      TempDics(kMinimalParadigm, kMinimalNoun,
               "1|hurt|||PROPEL|HEALTH||-100|person|person|||\n")
          .load(),
      Error);  // scale without both states
  CHECK_THROWS_AS(
      TempDics(kMinimalParadigm, kMinimalNoun,
               "1|run|||GO||||person|||place|\n")
          .load(),
      Error);  // to-control without preposition pair
  CHECK_THROWS_AS(Lexicon::load("/no/para.dic", "/no/noun.dic",
                                "/no/verb.dic"),
                  Error);
}

TEST_CASE("fixture dictionaries save and reload unchanged") {
  Lexicon lex = fixture();
  auto dir = std::filesystem::temp_directory_path() / "lexicon_test_save";
  std::filesystem::create_directories(dir);
  lex.save((dir / "paradigm.dic").string(), (dir / "noun.dic").string(),
           (dir / "verb.dic").string());
  Lexicon back =
      Lexicon::load((dir / "paradigm.dic").string(),
                    (dir / "noun.dic").string(), (dir / "verb.dic").string());
  CHECK(back == lex);
  std::filesystem::remove_all(dir);
}
