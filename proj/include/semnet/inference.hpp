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

#ifndef SEMNET_INFERENCE_HPP_
#define SEMNET_INFERENCE_HPP_

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "semnet/factbase.hpp"

namespace semnet::logic {

// First-order terms without evaluable functors. Variables are named,
// uppercase-initial in text form; constants are symbols or integers.
struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
  enum class Kind { variable, constant, compound } kind;
  std::string name;          // variable or constant symbol / functor
  std::int64_t number = 0;   // constant value when is_number
  bool is_number = false;
  std::vector<TermPtr> args;  // compound arguments

  static TermPtr var(std::string name);
  static TermPtr atom(std::string symbol);
  static TermPtr integer(std::int64_t value);
  static TermPtr compound(std::string functor, std::vector<TermPtr> args);
};

bool term_equal(const TermPtr& a, const TermPtr& b);
bool term_ground(const TermPtr& t);
std::string term_to_string(const TermPtr& t);

struct Atom {
  std::string predicate;
  std::vector<TermPtr> args;

  bool operator==(const Atom& other) const;
};

bool atom_ground(const Atom& a);
std::string atom_to_string(const Atom& a);

// Idempotent variable bindings. Applying a substitution replaces variables
// through chains until fixpoint.
class Substitution {
 public:
  void bind(const std::string& var, TermPtr term);
  std::optional<TermPtr> lookup(const std::string& var) const;
  TermPtr apply(const TermPtr& t) const;
  Atom apply(const Atom& a) const;
  bool empty() const { return bindings_.empty(); }
  const std::map<std::string, TermPtr>& bindings() const { return bindings_; }

 private:
  std::map<std::string, TermPtr> bindings_;
};

// Most general unifier with occurs check; nullopt when not unifiable.
std::optional<Substitution> unify(const Atom& a, const Atom& b);
std::optional<Substitution> unify_terms(const TermPtr& a, const TermPtr& b,
                                        Substitution seed);

// One-way match of `pattern` onto ground `target`; used to check that other
// unifiers factor through a computed MGU.
bool match_ground(const Atom& pattern, const Atom& target);

// Definite clause: head, possibly empty body. Facts are bodyless.
struct HornClause {
  Atom head;
  std::vector<Atom> body;

  bool is_fact() const { return body.empty(); }
  std::string to_string() const;
};

// Clause list with a predicate index. Clause order is significant: solve
// tries clauses in program order.
class Program {
 public:
  void add(HornClause clause);
  void add_all(const std::vector<HornClause>& clauses);
  const std::vector<HornClause>& clauses() const { return clauses_; }
  std::vector<int> candidates(const std::string& predicate) const;

 private:
  std::vector<HornClause> clauses_;
  std::unordered_map<std::string, std::vector<int>> by_predicate_;
};

// Parses the textual clause format: `head :- b1, b2.` or `fact.`, with
// uppercase-initial variables and `%` comments.
std::vector<HornClause> parse_clauses(const std::string& text);
HornClause parse_clause(const std::string& line);

struct Solution {
  Substitution bindings;             // restricted to goal variables
  std::vector<HornClause> trace;     // clauses in order of use
};

struct SolveResult {
  std::vector<Solution> solutions;
  bool depth_limit_reached = false;  // some branch was cut off
};

// SLD resolution: leftmost goal selection, program clause order,
// depth-first. `depth_limit` bounds proof nesting depth (a clause applied to
// a goal at depth d spawns its body at d + 1). Two loop guards keep cyclic
// programs from spinning without losing any derivable answer: a ground goal
// identical to a ground goal still open on its own proof path is pruned
// (minimal proofs never repeat a ground goal along a branch), and on
// function-free programs a goal that recurses into a variant of an open
// goal on its path is expanded by instantiating its free variables over the
// program constants, which is exhaustive for such programs. A ground goal
// binds nothing its continuation can see, so only its first proof is taken:
// redundant derivations of ground subgoals do not yield duplicate answers.
SolveResult solve(const std::vector<Atom>& goals, const Program& program,
                  int depth_limit, std::size_t max_solutions = SIZE_MAX);

enum class Truth { yes, no, unknown };

const char* truth_name(Truth t);

// Three-valued query: yes if derivable, no on finite failure (closed world),
// unknown when the only outcome was a depth cutoff.
Truth evaluate_ground(const Atom& atom, const Program& program,
                      int depth_limit);

// Store compilation: every record yields sort(code) plus slot(code, value)
// for each filled slot. Codes become constants c<N>; symbol values are
// lowercased symbols. The grammatical-number slot is emitted as gram_number
// so that no predicate symbol carries two arities.
std::vector<Atom> compile_facts(const FactStore& store);

Atom sort_atom(Sort sort, Code code);
TermPtr code_constant(Code code);

}  // namespace semnet::logic

#endif  // SEMNET_INFERENCE_HPP_
