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

#include <random>
#include <set>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "semnet/errors.hpp"
#include "semnet/factbase.hpp"
#include "semnet/inference.hpp"

using namespace semnet;
using namespace semnet::logic;
using namespace semnet::testing;

namespace {

Program program_of(const std::string& text) {
  Program p;
  p.add_all(parse_clauses(text));
  return p;
}

}  // namespace

TEST_CASE("term construction and rendering") {
  TermPtr x = Term::var("X");
  TermPtr a = Term::atom("wolf");
  TermPtr n = Term::integer(-50);
  TermPtr c = Term::compound("f", {x, a});

  CHECK(term_to_string(x) == "X");
  CHECK(term_to_string(a) == "wolf");
  CHECK(term_to_string(n) == "-50");
  CHECK(term_to_string(c) == "f(X, wolf)");

  CHECK(!term_ground(x));
  CHECK(term_ground(a));
  CHECK(term_ground(n));
  CHECK(!term_ground(c));
  CHECK(term_ground(Term::compound("f", {a, n})));

  CHECK(term_equal(Term::atom("a"), Term::atom("a")));
  CHECK(!term_equal(Term::atom("a"), Term::var("a")));
  CHECK(!term_equal(Term::integer(1), Term::atom("1")));

  Atom atom{"isa", {x, a}};
  CHECK(atom_to_string(atom) == "isa(X, wolf)");
  CHECK(!atom_ground(atom));
  Atom fact{"yes", {}};
  CHECK(atom_to_string(fact) == "yes");
  CHECK(atom_ground(fact));
}

TEST_CASE("substitution application follows binding chains") {
  Substitution s;
  s.bind("X", Term::var("Y"));
  s.bind("Y", Term::atom("a"));
  CHECK(term_to_string(s.apply(Term::var("X"))) == "a");
  CHECK(term_to_string(s.apply(Term::compound("f", {Term::var("X")}))) ==
        "f(a)");
  CHECK(term_to_string(s.apply(Term::var("Z"))) == "Z");
}

TEST_CASE("unification handles the standard cases") {
  auto atom1 = [](const std::string& p, TermPtr t) {
    return Atom{p, {t}};
  };

  CHECK(unify(atom1("p", Term::atom("a")), atom1("p", Term::atom("a")))
            .has_value());
  CHECK(!unify(atom1("p", Term::atom("a")), atom1("p", Term::atom("b")))
             .has_value());
  CHECK(!unify(atom1("p", Term::atom("a")), atom1("q", Term::atom("a")))
             .has_value());
  CHECK(!unify(Atom{"p", {Term::atom("a")}},
               Atom{"p", {Term::atom("a"), Term::atom("a")}})
             .has_value());

  auto bound = unify(atom1("p", Term::var("X")), atom1("p", Term::atom("a")));
  REQUIRE(bound.has_value());
  CHECK(term_to_string(bound->apply(Term::var("X"))) == "a");

  auto shared = unify(Atom{"p", {Term::var("X"), Term::var("X")}},
                      Atom{"p", {Term::atom("a"), Term::var("Y")}});
  REQUIRE(shared.has_value());
  CHECK(term_to_string(shared->apply(Term::var("Y"))) == "a");

  auto nested = unify(
      Atom{"p", {Term::compound("g", {Term::var("X"), Term::atom("b")})}},
      Atom{"p", {Term::compound("g",
                                {Term::atom("a"), Term::var("Y")})}});
  REQUIRE(nested.has_value());
  CHECK(term_to_string(nested->apply(Term::var("X"))) == "a");
  CHECK(term_to_string(nested->apply(Term::var("Y"))) == "b");

  CHECK(!unify(Atom{"p", {Term::integer(1)}}, Atom{"p", {Term::integer(2)}})
             .has_value());
  CHECK(unify(Atom{"p", {Term::integer(7)}}, Atom{"p", {Term::var("X")}})
            .has_value());
}

TEST_CASE("occurs check rejects cyclic bindings") {
  CHECK(!unify(Atom{"p", {Term::var("X")}},
               Atom{"p", {Term::compound("f", {Term::var("X")})}})
             .has_value());
  CHECK(!unify(Atom{"p", {Term::var("X")}},
               Atom{"p", {Term::compound(
                             "g", {Term::atom("a"),
                                   Term::compound("f", {Term::var("X")})})}})
             .has_value());
  CHECK(!unify(Atom{"p", {Term::var("X"), Term::var("X")}},
               Atom{"p", {Term::var("Y"),
                          Term::compound("f", {Term::var("Y")})}})
             .has_value());
}

TEST_CASE("match_ground accepts exactly the instances of a pattern") {
  Atom pattern{"isa", {Term::var("X"), Term::atom("weapon")}};
  CHECK(match_ground(pattern,
                     Atom{"isa", {Term::atom("c1"), Term::atom("weapon")}}));
  CHECK(!match_ground(pattern,
                      Atom{"isa", {Term::atom("c1"), Term::atom("animal")}}));
  Atom twice{"p", {Term::var("X"), Term::var("X")}};
  CHECK(match_ground(twice, Atom{"p", {Term::atom("a"), Term::atom("a")}}));
  CHECK(!match_ground(twice, Atom{"p", {Term::atom("a"), Term::atom("b")}}));
}

TEST_CASE("clause text round trips through parse and to_string") {
  HornClause fact = parse_clause("isa(c3, wolf).");
  CHECK(fact.is_fact());
  CHECK(fact.to_string() == "isa(c3, wolf).");

  HornClause rule = parse_clause("isa(X, C) :- name(X, C), thing(X).");
  CHECK(rule.body.size() == 2);
  CHECK(rule.to_string() == "isa(X, C) :- name(X, C), thing(X).");

  HornClause numbers = parse_clause("state(c4, -100).");
  CHECK(numbers.to_string() == "state(c4, -100).");

  HornClause nested = parse_clause("p(f(g(a, X))) :- q(X).");
  CHECK(nested.to_string() == "p(f(g(a, X))) :- q(X).");

  std::vector<HornClause> block = parse_clauses(
      "% comment\n"
      "edge(a, b).\n"
      "path(X, Y) :-\n"
      "  edge(X, Y).\n"
      "\n"
      "path(X, Z) :- edge(X, Y), path(Y, Z).\n");
  REQUIRE(block.size() == 3);
  CHECK(block[1].to_string() == "path(X, Y) :- edge(X, Y).");
}

TEST_CASE("clause parse errors carry positions") {
  CHECK_THROWS_AS(parse_clause("isa(a, b)"), Error);      // no period
  CHECK_THROWS_AS(parse_clause("Isa(a, b)."), Error);     // upper predicate
  CHECK_THROWS_AS(parse_clause("isa(a, b). extra"), Error);
  CHECK_THROWS_AS(parse_clause("isa(a,)."), Error);
  CHECK_THROWS_AS(parse_clause("isa(a, b"), Error);
  CHECK_THROWS_AS(parse_clause(""), Error);
  CHECK_THROWS_AS(parse_clauses("isa(a, b) :- \n"), Error);
}

TEST_CASE("solve enumerates answers in program order") {
  Program p = program_of(
      "likes(peter, anna).\n"
      "likes(anna, bob).\n"
      "likes(bob, anna).\n");
  SolveResult all =
      solve({Atom{"likes", {Term::var("A"), Term::var("B")}}}, p, 16);
  REQUIRE(all.solutions.size() == 3);
  CHECK(term_to_string(*all.solutions[0].bindings.lookup("A")) == "peter");
  CHECK(term_to_string(*all.solutions[2].bindings.lookup("B")) == "anna");

  SolveResult capped =
      solve({Atom{"likes", {Term::var("A"), Term::var("B")}}}, p, 16, 2);
  CHECK(capped.solutions.size() == 2);

  SolveResult none = solve({Atom{"likes", {Term::atom("bob"),
                                           Term::atom("bob")}}},
                           p, 16);
  CHECK(none.solutions.empty());
  CHECK(!none.depth_limit_reached);
}

TEST_CASE("solve chains rules and conjunctive goals") {
  Program p = program_of(
      "edge(a, b).\n"
      "edge(b, c).\n"
      "edge(c, d).\n"
      "path(X, Y) :- edge(X, Y).\n"
      "path(X, Z) :- edge(X, Y), path(Y, Z).\n");
  SolveResult r =
      solve({Atom{"path", {Term::atom("a"), Term::var("T")}}}, p, 32);
  std::set<std::string> targets;
  for (const Solution& s : r.solutions) {
    targets.insert(term_to_string(*s.bindings.lookup("T")));
  }
  CHECK(targets == std::set<std::string>{"b", "c", "d"});

  SolveResult conj = solve({Atom{"edge", {Term::atom("a"), Term::var("M")}},
                            Atom{"edge", {Term::var("M"), Term::var("E")}}},
                           p, 32);
  REQUIRE(conj.solutions.size() == 1);
  CHECK(term_to_string(*conj.solutions[0].bindings.lookup("E")) == "c");
}

TEST_CASE("repeated ground goals succeed across sibling subtrees") {
  Program p = program_of("p(a).\n");
  Atom pa{"p", {Term::atom("a")}};
  SolveResult twice = solve({pa, pa}, p, 16);
  CHECK(twice.solutions.size() == 1);

  Program body = program_of(
      "p(a).\n"
      "r(X) :- p(X), p(X).\n");
  SolveResult via_rule = solve({Atom{"r", {Term::atom("a")}}}, body, 16);
  CHECK(via_rule.solutions.size() == 1);

  Program diamond = program_of(
      "leg(a).\n"
      "top(X) :- left(X), right(X).\n"
      "left(X) :- leg(X).\n"
      "right(X) :- leg(X).\n");
  SolveResult joined = solve({Atom{"top", {Term::var("V")}}}, diamond, 16);
  REQUIRE(joined.solutions.size() == 1);
  CHECK(term_to_string(*joined.solutions[0].bindings.lookup("V")) == "a");
}

TEST_CASE("recursion through nonground goals still finds ground answers") {
  Program swap = program_of(
      "q :- p(A, B), r(B).\n"
      "p(X, Y) :- p(Y, X).\n"
      "p(a, b).\n"
      "r(a).\n");
  CHECK(evaluate_ground(Atom{"q", {}}, swap, 64) == Truth::yes);

  Program spin = program_of(
      "p0(W) :- p0(a), p0(Z), p0(W).\n"
      "p0(a).\n"
      "p0(Y) :- p0(Y), p0(X).\n");
  CHECK(evaluate_ground(Atom{"p0", {Term::atom("a")}}, spin, 108) ==
        Truth::yes);
  CHECK(evaluate_ground(Atom{"p0", {Term::atom("b")}}, spin, 108) ==
        Truth::no);
}

TEST_CASE("solution traces replay through a fresh program") {
  Program p = program_of(
      "name(c1, pistol).\n"
      "isa(X, C) :- name(X, C).\n"
      "isa(X, weapon) :- isa(X, pistol).\n"
      "unused(c9).\n");
  Atom goal{"isa", {Term::atom("c1"), Term::atom("weapon")}};
  SolveResult r = solve({goal}, p, 16, 1);
  REQUIRE(r.solutions.size() == 1);
  const std::vector<HornClause>& trace = r.solutions[0].trace;
  REQUIRE(!trace.empty());

  Program replay;
  replay.add_all(trace);
  SolveResult again = solve({goal}, replay, 16, 1);
  CHECK(again.solutions.size() == 1);
  for (const HornClause& used : trace) {
    CHECK(used.head.predicate != "unused");
  }
}

TEST_CASE("cyclic programs fail finitely on ground goals") {
  Program p = program_of(
      "p(X) :- q(X).\n"
      "q(X) :- p(X).\n");
  CHECK(evaluate_ground(Atom{"p", {Term::atom("a")}}, p, 64) == Truth::no);

  Program growing = program_of("q(X) :- q(f(X)).\n");
  CHECK(evaluate_ground(Atom{"q", {Term::atom("a")}}, growing, 24) ==
        Truth::unknown);

  Program left = program_of(
      "p(a) :- p(a), q(a).\n"
      "p(a).\n");
  CHECK(evaluate_ground(Atom{"p", {Term::atom("a")}}, left, 64) == Truth::yes);
}

TEST_CASE("depth limit reports a cutoff instead of looping") {
  Program p = program_of(
      "num(z).\n"
      "num(s(X)) :- num(X).\n");
  SolveResult shallow = solve({Atom{"num", {Term::var("N")}}}, p, 4, 100);
  CHECK(shallow.depth_limit_reached);
  CHECK(shallow.solutions.size() < 100);
  CHECK(!shallow.solutions.empty());
}

TEST_CASE("resolution agrees with the bottom-up fixpoint oracle") {
  std::mt19937 rng(20260815);
  for (int round = 0; round < 150; ++round) {
    std::vector<TermPtr> constants;
    std::vector<std::string> preds;
    std::vector<int> arities;
    Program program =
        random_datalog_program(rng, &constants, &preds, &arities);
    int depth = static_cast<int>(program.clauses().size()) *
                static_cast<int>(constants.size() * constants.size());
    std::set<std::string> expected = datalog_fixpoint(program, constants);
    for (const Atom& atom : herbrand_base(preds, arities, constants)) {
      bool derivable =
          evaluate_ground(atom, program, depth) == Truth::yes;
      bool oracle = expected.count(atom_to_string(atom)) > 0;
      if (derivable != oracle) {
        CAPTURE(round);
        CAPTURE(atom_to_string(atom));
        REQUIRE(derivable == oracle);
      }
    }
  }
}

TEST_CASE("unification agrees with exhaustive ground enumeration") {
  std::mt19937 rng(7041776);
  std::vector<TermPtr> universe = ground_universe(3);
  int successes = 0;
  for (int round = 0; round < 300; ++round) {
    auto [a, b] = random_atom_pair(rng);
    auto forward = unify(a, b);
    auto backward = unify(b, a);
    CHECK(forward.has_value() == backward.has_value());

    if (forward) {
      ++successes;
      Atom ua = forward->apply(a);
      Atom ub = forward->apply(b);
      CHECK(oracle_atom_equal(ua, ub));
      // Applying again must not change anything: the result is idempotent.
      CHECK(oracle_atom_equal(forward->apply(ua), ua));
      // Ground instances found by enumeration all factor through the MGU.
      Atom witness;
      if (ground_common_instance_exists(a, b, universe, &witness)) {
        CHECK(match_ground(ua, witness));
      }
    } else {
      Atom witness;
      bool found = ground_common_instance_exists(a, b, universe, &witness);
      if (found) {
        CAPTURE(atom_to_string(a));
        CAPTURE(atom_to_string(b));
        CAPTURE(atom_to_string(witness));
        REQUIRE(!found);
      }
    }
  }
  CHECK(successes > 50);
  CHECK(successes < 300);
}

TEST_CASE("store facts compile to atoms with code constants") {
  FactStore store;
  PredicateRecord peter(Sort::person);
  peter.set("first_name", std::string("Peter"));
  peter.set("number", std::string("singular"));
  Code pc = store.insert(peter);
  PredicateRecord act(Sort::action);
  act.set("word", std::string("run away"));
  act.set("scale", std::string("HEALTH"));
  act.set("cod_sub", pc);
  act.set("res_state", std::int64_t{-100});
  store.insert(act);

  std::vector<Atom> facts = compile_facts(store);
  std::set<std::string> rendered;
  for (const Atom& a : facts) rendered.insert(atom_to_string(a));

  CHECK(rendered.count("person(c0)"));
  CHECK(rendered.count("first_name(c0, peter)"));
  CHECK(rendered.count("gram_number(c0, singular)"));
  CHECK(rendered.count("action(c1)"));
  CHECK(rendered.count("word(c1, run_away)"));
  CHECK(rendered.count("scale(c1, health)"));
  CHECK(rendered.count("cod_sub(c1, c0)"));
  CHECK(rendered.count("res_state(c1, -100)"));
  CHECK(!rendered.count("number(c0, singular)"));

  CHECK(term_to_string(code_constant(Code{17})) == "c17");
  CHECK(atom_to_string(sort_atom(Sort::animal, Code{3})) == "animal(c3)");
}
