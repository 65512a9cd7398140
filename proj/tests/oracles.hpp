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

// Reference implementations used to cross-check the engine. Everything here
// is written the slow, obvious way on purpose: bottom-up fixpoint instead of
// resolution, exhaustive ground enumeration instead of unification, and an
// explicit layer-by-layer closure for the primitives check.

#ifndef SEMNET_TESTS_ORACLES_HPP_
#define SEMNET_TESTS_ORACLES_HPP_

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "semnet/inference.hpp"
#include "semnet/kbase.hpp"

namespace semnet::testing {

using logic::Atom;
using logic::HornClause;
using logic::Program;
using logic::Term;
using logic::TermPtr;

// Structural equality, kept separate from the library's comparisons.
inline bool oracle_term_equal(const TermPtr& a, const TermPtr& b) {
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Term::Kind::variable:
      return a->name == b->name;
    case Term::Kind::constant:
      if (a->is_number != b->is_number) return false;
      return a->is_number ? a->number == b->number : a->name == b->name;
    case Term::Kind::compound:
      if (a->name != b->name || a->args.size() != b->args.size()) {
        return false;
      }
      for (std::size_t i = 0; i < a->args.size(); ++i) {
        if (!oracle_term_equal(a->args[i], b->args[i])) return false;
      }
      return true;
  }
  return false;
}

inline bool oracle_atom_equal(const Atom& a, const Atom& b) {
  if (a.predicate != b.predicate || a.args.size() != b.args.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    if (!oracle_term_equal(a.args[i], b.args[i])) return false;
  }
  return true;
}

using VarMap = std::map<std::string, TermPtr>;

inline TermPtr oracle_substitute(const TermPtr& t, const VarMap& map) {
  switch (t->kind) {
    case Term::Kind::variable: {
      auto it = map.find(t->name);
      return it == map.end() ? t : it->second;
    }
    case Term::Kind::constant:
      return t;
    case Term::Kind::compound: {
      std::vector<TermPtr> args;
      args.reserve(t->args.size());
      for (const TermPtr& a : t->args) {
        args.push_back(oracle_substitute(a, map));
      }
      return Term::compound(t->name, std::move(args));
    }
  }
  return t;
}

inline Atom oracle_substitute(const Atom& a, const VarMap& map) {
  Atom out;
  out.predicate = a.predicate;
  out.args.reserve(a.args.size());
  for (const TermPtr& t : a.args) out.args.push_back(oracle_substitute(t, map));
  return out;
}

inline void collect_variables(const TermPtr& t, std::set<std::string>* out) {
  if (t->kind == Term::Kind::variable) {
    out->insert(t->name);
  } else if (t->kind == Term::Kind::compound) {
    for (const TermPtr& a : t->args) collect_variables(a, out);
  }
}

inline void collect_variables(const Atom& a, std::set<std::string>* out) {
  for (const TermPtr& t : a.args) collect_variables(t, out);
}

// --- Datalog bottom-up fixpoint -------------------------------------------
//
// Naive evaluation: ground every clause over every assignment of its
// variables to the given constants and fire it whenever the body is already
// derived, until nothing new appears. Only meaningful for function-free,
// range-restricted programs.

inline std::set<std::string> datalog_fixpoint(
    const Program& program, const std::vector<TermPtr>& constants) {
  std::set<std::string> derived;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const HornClause& clause : program.clauses()) {
      std::set<std::string> vars;
      collect_variables(clause.head, &vars);
      for (const Atom& b : clause.body) collect_variables(b, &vars);
      std::vector<std::string> var_list(vars.begin(), vars.end());

      std::vector<std::size_t> pick(var_list.size(), 0);
      while (true) {
        VarMap map;
        for (std::size_t i = 0; i < var_list.size(); ++i) {
          map[var_list[i]] = constants[pick[i]];
        }
        bool body_holds = true;
        for (const Atom& b : clause.body) {
          Atom ground = oracle_substitute(b, map);
          if (!derived.count(atom_to_string(ground))) {
            body_holds = false;
            break;
          }
        }
        if (body_holds) {
          std::string head = atom_to_string(oracle_substitute(clause.head, map));
          if (derived.insert(head).second) changed = true;
        }
        std::size_t pos = 0;
        while (pos < pick.size() && ++pick[pos] == constants.size()) {
          pick[pos] = 0;
          ++pos;
        }
        if (pos == pick.size()) break;
      }
    }
  }
  return derived;
}

// --- Ground enumeration for unification -----------------------------------

inline int term_depth(const TermPtr& t) {
  if (t->kind != Term::Kind::compound) return 1;
  int deepest = 0;
  for (const TermPtr& a : t->args) deepest = std::max(deepest, term_depth(a));
  return deepest + 1;
}

// All ground terms up to the given nesting depth over two constant symbols
// and the functors f/1 and g/2 (the vocabulary the random atom generator
// draws from). Each round extends only combinations that reach the new
// depth, so no term is produced twice.
inline std::vector<TermPtr> ground_universe(int max_depth) {
  std::vector<TermPtr> all = {Term::atom("a"), Term::atom("b")};
  for (int depth = 2; depth <= max_depth; ++depth) {
    std::vector<TermPtr> grown;
    for (const TermPtr& t : all) {
      if (term_depth(t) == depth - 1) {
        grown.push_back(Term::compound("f", {t}));
      }
    }
    for (const TermPtr& s : all) {
      for (const TermPtr& t : all) {
        if (std::max(term_depth(s), term_depth(t)) == depth - 1) {
          grown.push_back(Term::compound("g", {s, t}));
        }
      }
    }
    all.insert(all.end(), grown.begin(), grown.end());
  }
  return all;
}

// True when some assignment of ground universe terms to the variables of
// both atoms makes them syntactically identical.
inline bool ground_common_instance_exists(const Atom& a, const Atom& b,
                                          const std::vector<TermPtr>& universe,
                                          Atom* witness = nullptr) {
  std::set<std::string> vars;
  collect_variables(a, &vars);
  collect_variables(b, &vars);
  std::vector<std::string> var_list(vars.begin(), vars.end());
  std::vector<std::size_t> pick(var_list.size(), 0);
  while (true) {
    VarMap map;
    for (std::size_t i = 0; i < var_list.size(); ++i) {
      map[var_list[i]] = universe[pick[i]];
    }
    Atom ga = oracle_substitute(a, map);
    Atom gb = oracle_substitute(b, map);
    if (oracle_atom_equal(ga, gb)) {
      if (witness) *witness = ga;
      return true;
    }
    if (var_list.empty()) return false;
    std::size_t pos = 0;
    while (pos < pick.size() && ++pick[pos] == universe.size()) {
      pick[pos] = 0;
      ++pos;
    }
    if (pos == pick.size()) return false;
  }
}

// --- Layered partition for the primitives check ----------------------------

struct LayeredResult {
  bool primitive = false;
  int layers = 0;
  std::set<std::string> unreached;
};

// Definition 1 spelled out: layer 0 is s0; each next layer admits every
// still-missing defined word whose definition lies entirely in earlier
// layers; the set is primitive when the layers exhaust the vocabulary.
inline LayeredResult layered_partition(const DefinitionGraph& graph,
                                       const std::set<std::string>& s0) {
  std::set<std::string> vocabulary = graph.words();
  for (const std::string& w : s0) vocabulary.insert(w);

  std::set<std::string> reached = s0;
  LayeredResult result;
  while (true) {
    std::vector<std::string> layer;
    for (const auto& [word, def] : graph.defs) {
      if (reached.count(word)) continue;
      bool ready = true;
      for (const std::string& d : def) {
        if (!reached.count(d)) {
          ready = false;
          break;
        }
      }
      if (ready) layer.push_back(word);
    }
    if (layer.empty()) break;
    ++result.layers;
    for (const std::string& w : layer) reached.insert(w);
  }
  for (const std::string& w : vocabulary) {
    if (!reached.count(w)) result.unreached.insert(w);
  }
  result.primitive = result.unreached.empty();
  return result;
}

// --- Random case generators -------------------------------------------------
//
// Deterministic under a caller-seeded engine so failures reproduce.

inline int pick(std::mt19937& rng, int bound) {
  return static_cast<int>(rng() % static_cast<unsigned>(bound));
}

// Function-free, range-restricted program: facts are ground, rule head
// variables all occur in the rule body.
inline Program random_datalog_program(std::mt19937& rng,
                                      std::vector<TermPtr>* constants_out,
                                      std::vector<std::string>* preds_out,
                                      std::vector<int>* arities_out) {
  static const char* kConstNames[] = {"a", "b", "c"};
  static const char* kVarNames[] = {"X", "Y", "Z", "W"};

  int n_consts = 1 + pick(rng, 3);
  std::vector<TermPtr> constants;
  for (int i = 0; i < n_consts; ++i) {
    constants.push_back(Term::atom(kConstNames[i]));
  }

  int n_preds = 1 + pick(rng, 8);
  std::vector<std::string> preds;
  std::vector<int> arities;
  for (int i = 0; i < n_preds; ++i) {
    preds.push_back("p" + std::to_string(i));
    arities.push_back(pick(rng, 3));
  }

  Program program;
  int n_clauses = 1 + pick(rng, 12);
  for (int c = 0; c < n_clauses; ++c) {
    HornClause clause;
    int head = pick(rng, n_preds);
    bool fact = pick(rng, 100) < 45;
    if (fact) {
      clause.head.predicate = preds[head];
      for (int i = 0; i < arities[head]; ++i) {
        clause.head.args.push_back(constants[pick(rng, n_consts)]);
      }
      program.add(std::move(clause));
      continue;
    }
    int body_len = 1 + pick(rng, 3);
    std::set<std::string> body_vars;
    for (int b = 0; b < body_len; ++b) {
      int p = pick(rng, n_preds);
      Atom atom;
      atom.predicate = preds[p];
      for (int i = 0; i < arities[p]; ++i) {
        if (pick(rng, 100) < 65) {
          const char* v = kVarNames[pick(rng, 4)];
          body_vars.insert(v);
          atom.args.push_back(Term::var(v));
        } else {
          atom.args.push_back(constants[pick(rng, n_consts)]);
        }
      }
      clause.body.push_back(std::move(atom));
    }
    std::vector<std::string> usable(body_vars.begin(), body_vars.end());
    clause.head.predicate = preds[head];
    for (int i = 0; i < arities[head]; ++i) {
      if (!usable.empty() && pick(rng, 100) < 70) {
        clause.head.args.push_back(
            Term::var(usable[pick(rng, static_cast<int>(usable.size()))]));
      } else {
        clause.head.args.push_back(constants[pick(rng, n_consts)]);
      }
    }
    program.add(std::move(clause));
  }

  if (constants_out) *constants_out = constants;
  if (preds_out) *preds_out = preds;
  if (arities_out) *arities_out = arities;
  return program;
}

// Every ground atom over the program's predicates and constants.
inline std::vector<Atom> herbrand_base(const std::vector<std::string>& preds,
                                       const std::vector<int>& arities,
                                       const std::vector<TermPtr>& constants) {
  std::vector<Atom> out;
  for (std::size_t p = 0; p < preds.size(); ++p) {
    std::vector<std::size_t> pick_args(arities[p], 0);
    while (true) {
      Atom atom;
      atom.predicate = preds[p];
      for (int i = 0; i < arities[p]; ++i) {
        atom.args.push_back(constants[pick_args[i]]);
      }
      out.push_back(std::move(atom));
      std::size_t pos = 0;
      while (pos < pick_args.size() &&
             ++pick_args[pos] == constants.size()) {
        pick_args[pos] = 0;
        ++pos;
      }
      if (pos == pick_args.size()) break;
    }
  }
  return out;
}

// Random term over variables {X, Y}, constants {a, b} and functors f/1,
// g/2, nested at most `depth` levels.
inline TermPtr random_term(std::mt19937& rng, int depth) {
  int roll = pick(rng, 100);
  if (depth <= 1 || roll < 45) {
    if (pick(rng, 100) < 45) {
      return Term::var(pick(rng, 2) == 0 ? "X" : "Y");
    }
    return Term::atom(pick(rng, 2) == 0 ? "a" : "b");
  }
  if (roll < 72) {
    return Term::compound("f", {random_term(rng, depth - 1)});
  }
  return Term::compound(
      "g", {random_term(rng, depth - 1), random_term(rng, depth - 1)});
}

// A pair of atoms sharing predicate and arity, the only pairs for which
// unification is non-trivial.
inline std::pair<Atom, Atom> random_atom_pair(std::mt19937& rng) {
  int arity = 1 + pick(rng, 2);
  Atom a;
  Atom b;
  a.predicate = b.predicate = "p";
  for (int i = 0; i < arity; ++i) {
    a.args.push_back(random_term(rng, 2));
    b.args.push_back(random_term(rng, 2));
  }
  return {std::move(a), std::move(b)};
}

// Random definition graph over w0..w(n-1): some words defined by a set of
// other words, the rest form the vocabulary s0 must cover.
inline DefinitionGraph random_definition_graph(std::mt19937& rng, int n_words,
                                               std::set<std::string>* s0_out) {
  DefinitionGraph graph;
  std::vector<std::string> words;
  for (int i = 0; i < n_words; ++i) {
    words.push_back("w" + std::to_string(i));
  }
  std::set<std::string> defined;
  for (int i = 0; i < n_words; ++i) {
    if (pick(rng, 100) < 60) {
      std::set<std::string> def;
      int len = 1 + pick(rng, 3);
      for (int d = 0; d < len; ++d) {
        int other = pick(rng, n_words);
        if (words[other] != words[i]) def.insert(words[other]);
      }
      if (!def.empty()) {
        graph.defs[words[i]] = def;
        defined.insert(words[i]);
      }
    }
  }
  std::set<std::string> s0;
  for (const std::string& w : graph.words()) {
    if (!defined.count(w)) s0.insert(w);
  }
  // Sometimes seed extra defined words too; s0 and definitions may overlap.
  for (const std::string& w : defined) {
    if (pick(rng, 100) < 15) s0.insert(w);
  }
  if (s0_out) *s0_out = s0;
  return graph;
}

}  // namespace semnet::testing

#endif  // SEMNET_TESTS_ORACLES_HPP_
