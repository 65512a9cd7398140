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

#include "semnet/kbase.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "semnet/errors.hpp"

namespace semnet {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::string lower(const std::string& s) {
  std::string out = s;
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  return out;
}

// Trimmed line with one trailing sentence period removed; stored article
// strings stay period-free.
std::string strip_period(const std::string& s) {
  std::string out = trim(s);
  if (!out.empty() && out.back() == '.') out.pop_back();
  return trim(out);
}

bool article_word(const std::string& w) {
  return w == "to" || w == "a" || w == "an" || w == "the";
}

// Textual identifier of a phrase: lowercased words joined by underscores,
// articles and the infinitive marker dropped.
std::string id_of(const std::string& phrase) {
  std::string out;
  for (const Token& tok : tokenize(phrase)) {
    if (tok.kind == TokenKind::punct) continue;
    std::string w = lower(tok.surface);
    if (article_word(w)) continue;
    if (!out.empty()) out += '_';
    out += w;
  }
  if (out.empty()) {
    throw Error(ErrorKind::UncompilableLine, "empty identifier: " + phrase)
        .with_value(phrase);
  }
  return out;
}

std::string first_word(const std::string& s) {
  return s.substr(0, s.find(' '));
}

std::unique_ptr<Sentence> parse_line(const std::string& line,
                                     const Lexicon& lexicon) {
  return parse_sentence(tokenize(line), lexicon);
}

const NounGroup* bare_argument(const Clause& clause) {
  for (const auto& [prep, ng] : clause.arguments) {
    if (prep.empty()) return ng.get();
  }
  return nullptr;
}

}  // namespace

Article ingest_article(const std::vector<std::string>& lines,
                       const Lexicon& lexicon) {
  if (lines.empty()) {
    throw Error(ErrorKind::NotAnArticleHeader, "empty article");
  }
  Article article;
  article.header = parse_article_header(lines[0]);
  for (std::size_t n = 1; n < lines.size(); ++n) {
    std::string line = trim(lines[n]);
    if (line.empty() || line[0] == '#') continue;
    auto malformed = [&](const std::string& why) {
      return Error(ErrorKind::MalformedArticleLine, why + ": " + line)
          .with_value(line)
          .at_line(static_cast<int>(n + 1));
    };
    switch (article.header.kind) {
      case ArticleKind::noun: {
        std::unique_ptr<Sentence> sentence;
        try {
          sentence = parse_line(line, lexicon);
        } catch (const Error& e) {
          throw malformed(e.what());
        }
        if (sentence->kind != SentenceKind::simple) {
          throw malformed("expected one clause");
        }
        const Clause& clause = *sentence->clauses.front();
        if (clause.verb.base == "be" && article.genus.empty()) {
          const NounGroup* complement = bare_argument(clause);
          if (!complement) throw malformed("copula without complement");
          article.genus = first_word(complement->head_base);
        } else if (clause.verb.base == "consist") {
          for (const auto& [prep, ng] : clause.arguments) {
            if (prep == "of" || prep == "and") {
              article.structure.push_back(first_word(ng->head_base));
            }
          }
          if (article.structure.empty()) throw malformed("no parts listed");
        } else {
          article.functions.push_back(strip_period(line));
        }
        break;
      }
      case ArticleKind::verb: {
        std::string body = strip_period(line);
        std::size_t as = body.find(" as ");
        if (as != std::string::npos) {
          article.motives.emplace_back(trim(body.substr(0, as)),
                                       trim(body.substr(as + 4)));
        } else {
          article.definitions.push_back(body);
        }
        break;
      }
      case ArticleKind::operation: {
        std::string body = strip_period(line);
        if (lower(first_word(body)) != "alternative") {
          throw malformed("expected an `alternative N ;` stage");
        }
        std::size_t semi = body.find(';');
        if (semi == std::string::npos) {
          throw malformed("expected `;` after the alternative number");
        }
        std::string num = trim(body.substr(first_word(body).size(),
                                           semi - first_word(body).size()));
        if (num.empty() ||
            !std::all_of(num.begin(), num.end(), [](unsigned char c) {
              return std::isdigit(c);
            })) {
          throw malformed("bad alternative number");
        }
        Stage stage;
        stage.alternative = std::atoi(num.c_str());
        if (stage.alternative <= 0) throw malformed("bad alternative number");
        stage.index = 1;
        for (const Stage& prior : article.stages) {
          if (prior.alternative == stage.alternative) ++stage.index;
        }
        stage.action = trim(body.substr(semi + 1));
        if (stage.action.empty()) throw malformed("empty stage action");
        article.stages.push_back(std::move(stage));
        break;
      }
    }
  }
  return article;
}

namespace {

bool starts_with_vowel(const std::string& word) {
  if (word.empty()) return false;
  char c = static_cast<char>(std::tolower(static_cast<unsigned char>(word[0])));
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

std::string with_article(const std::string& word) {
  return (starts_with_vowel(word) ? "an " : "a ") + word;
}

std::string capitalize(std::string s) {
  if (!s.empty()) {
    s[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  }
  return s;
}

}  // namespace

std::vector<std::string> render_article(const Article& article) {
  std::vector<std::string> lines;
  switch (article.header.kind) {
    case ArticleKind::noun:
      lines.push_back("frame is " + with_article(article.header.term));
      if (!article.genus.empty()) {
        lines.push_back(capitalize(with_article(article.header.term)) +
                        " is " + with_article(article.genus) + ".");
      }
      for (const std::string& f : article.functions) lines.push_back(f + ".");
      if (!article.structure.empty()) {
        std::string line =
            capitalize(with_article(article.header.term)) + " consists of ";
        for (std::size_t i = 0; i < article.structure.size(); ++i) {
          if (i) line += " and ";
          line += with_article(article.structure[i]);
        }
        lines.push_back(line + ".");
      }
      break;
    case ArticleKind::verb:
      lines.push_back("frame is to " + article.header.term);
      for (const std::string& d : article.definitions) {
        lines.push_back(d + ".");
      }
      for (const auto& [action, cause] : article.motives) {
        lines.push_back(action + " as " + cause + ".");
      }
      break;
    case ArticleKind::operation:
      lines.push_back("frame is how to " + article.header.term);
      for (const Stage& stage : article.stages) {
        lines.push_back("alternative " + std::to_string(stage.alternative) +
                        " ; " + stage.action);
      }
      break;
  }
  return lines;
}

std::vector<logic::HornClause> compile_article(const Article& article,
                                               const Lexicon& lexicon) {
  using logic::Atom;
  using logic::HornClause;
  using logic::Term;
  std::vector<HornClause> out;
  std::string concept_id = id_of(article.header.term);

  auto subsumption = [&](const std::string& wider) {
    HornClause clause;
    clause.head = {"isa", {Term::var("X"), Term::atom(wider)}};
    clause.body.push_back({"isa", {Term::var("X"), Term::atom(concept_id)}});
    out.push_back(std::move(clause));
  };

  switch (article.header.kind) {
    case ArticleKind::noun: {
      if (!article.genus.empty()) subsumption(id_of(article.genus));
      for (const std::string& raw : article.functions) {
        std::unique_ptr<Sentence> sentence;
        try {
          sentence = parse_line(raw, lexicon);
        } catch (const Error& e) {
          throw Error(ErrorKind::UncompilableLine,
                      std::string(e.what()) + ": " + raw)
              .with_value(raw);
        }
        if (sentence->kind != SentenceKind::simple) {
          throw Error(ErrorKind::UncompilableLine, "expected one clause: " +
                          raw)
              .with_value(raw);
        }
        const Clause& clause = *sentence->clauses.front();
        if (clause.verb.base == "be") {
          const NounGroup* complement = bare_argument(clause);
          if (!complement) {
            throw Error(ErrorKind::UncompilableLine,
                        "copula without complement: " + raw)
                .with_value(raw);
          }
          subsumption(id_of(first_word(complement->head_base)));
          continue;
        }
        std::string verb = clause.verb.base;
        if (!clause.verb.particle.empty()) verb += "_" + clause.verb.particle;
        const NounGroup* object = bare_argument(clause);
        std::string object_class =
            object ? id_of(first_word(object->head_base)) : "none";
        HornClause rule;
        rule.head = {"can", {Term::var("X"), Term::atom(verb),
                             Term::atom(object_class)}};
        rule.body.push_back(
            {"isa", {Term::var("X"), Term::atom(concept_id)}});
        out.push_back(std::move(rule));
      }
      for (const std::string& part : article.structure) {
        HornClause fact;
        fact.head = {"part_of",
                     {Term::atom(id_of(part)), Term::atom(concept_id)}};
        out.push_back(std::move(fact));
      }
      break;
    }
    case ArticleKind::verb: {
      for (const std::string& def : article.definitions) {
        HornClause fact;
        fact.head = {"defines",
                     {Term::atom(concept_id), Term::atom(id_of(def))}};
        out.push_back(std::move(fact));
      }
      for (const auto& [action, cause] : article.motives) {
        std::unique_ptr<Sentence> sentence;
        try {
          sentence = parse_line(cause, lexicon);
        } catch (const Error& e) {
          throw Error(ErrorKind::UncompilableLine,
                      std::string(e.what()) + ": " + cause)
              .with_value(cause);
        }
        const Clause& clause = *sentence->clauses.front();
        const NounGroup* complement = bare_argument(clause);
        if (clause.verb.base != "be" || !complement) {
          throw Error(ErrorKind::UncompilableLine,
                      "motive condition must classify the subject: " + cause)
              .with_value(cause);
        }
        HornClause rule;
        rule.head = {"motive", {Term::var("S"), Term::atom(id_of(action)),
                                Term::atom(concept_id)}};
        rule.body.push_back(
            {"isa",
             {Term::var("S"),
              Term::atom(id_of(first_word(complement->head_base)))}});
        out.push_back(std::move(rule));
      }
      break;
    }
    case ArticleKind::operation: {
      for (const Stage& stage : article.stages) {
        HornClause fact;
        fact.head = {"step",
                     {Term::atom(concept_id),
                      Term::integer(stage.alternative),
                      Term::integer(stage.index),
                      Term::atom(id_of(stage.action))}};
        out.push_back(std::move(fact));
      }
      break;
    }
  }
  return out;
}

std::set<std::string> DefinitionGraph::words() const {
  std::set<std::string> out;
  for (const auto& [word, def] : defs) {
    out.insert(word);
    out.insert(def.begin(), def.end());
  }
  return out;
}

DefinitionGraph DefinitionGraph::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorKind::IoError, "cannot open " + path).with_value(path);
  }
  DefinitionGraph graph;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    std::size_t colon = line.find(':');
    if (colon == std::string::npos) {
      throw Error(ErrorKind::MalformedRecord, "expected `word: defs`: " + line)
          .at_line(number);
    }
    std::string word = lower(trim(line.substr(0, colon)));
    if (word.empty() || word.find(' ') != std::string::npos) {
      throw Error(ErrorKind::MalformedRecord, "bad defined word: " + line)
          .at_line(number);
    }
    if (graph.defs.count(word)) {
      throw Error(ErrorKind::MalformedRecord, "word defined twice: " + word)
          .at_line(number)
          .with_word(word);
    }
    std::set<std::string> def;
    std::istringstream rest(line.substr(colon + 1));
    std::string item;
    while (rest >> item) {
      item = lower(item);
      if (item == word) {
        throw Error(ErrorKind::MalformedRecord,
                    "word appears in its own definition: " + word)
            .at_line(number)
            .with_word(word);
      }
      def.insert(item);
    }
    graph.defs.emplace(std::move(word), std::move(def));
  }
  return graph;
}

namespace {

// Layered closure over definitions: admits a defined word once its whole
// definition set is admitted.
std::set<std::string> closure(const DefinitionGraph& graph,
                              const std::set<std::string>& seed,
                              int* layers = nullptr) {
  std::set<std::string> known = seed;
  int count = 0;
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::string> layer;
    for (const auto& [word, def] : graph.defs) {
      if (known.count(word)) continue;
      bool covered = true;
      for (const std::string& d : def) {
        if (!known.count(d)) {
          covered = false;
          break;
        }
      }
      if (covered) layer.push_back(word);
    }
    if (!layer.empty()) {
      known.insert(layer.begin(), layer.end());
      ++count;
      grew = true;
    }
  }
  if (layers) *layers = count;
  return known;
}

}  // namespace

PrimitiveCheck is_primitive_set(const DefinitionGraph& graph,
                                const std::set<std::string>& s0) {
  std::set<std::string> all = graph.words();
  for (const std::string& w : all) {
    if (!s0.count(w) && !graph.defs.count(w)) {
      throw Error(ErrorKind::UndefinedWord, "word has no definition: " + w)
          .with_word(w);
    }
  }
  PrimitiveCheck check;
  std::set<std::string> known = closure(graph, s0, &check.layers);
  for (const std::string& w : all) {
    if (!known.count(w)) check.unreached.push_back(w);
  }
  check.primitive = check.unreached.empty();
  return check;
}

std::vector<std::string> minimal_primitive_extension(
    const DefinitionGraph& graph, const std::set<std::string>& s0) {
  std::set<std::string> all = graph.words();
  std::set<std::string> base = s0;
  std::vector<std::string> added;

  // Words no definition can ever produce must be seeds.
  for (const std::string& w : all) {
    if (!base.count(w) && !graph.defs.count(w)) {
      base.insert(w);
      added.push_back(w);
    }
  }

  auto covered = [&](const std::set<std::string>& seed) {
    std::set<std::string> known = closure(graph, seed);
    for (const std::string& w : all) {
      if (!known.count(w)) return false;
    }
    return true;
  };

  while (!covered(base)) {
    std::set<std::string> known = closure(graph, base);
    std::string best;
    std::size_t best_gain = 0;
    for (const std::string& w : all) {
      if (known.count(w)) continue;
      std::set<std::string> trial = base;
      trial.insert(w);
      std::size_t gain = closure(graph, trial).size();
      if (gain > best_gain || (gain == best_gain && (best.empty() || w < best))) {
        best_gain = gain;
        best = w;
      }
    }
    base.insert(best);
    added.push_back(best);
  }

  // Irredundance: drop any added word whose removal keeps the cover.
  bool pruned = true;
  while (pruned) {
    pruned = false;
    for (std::size_t i = 0; i < added.size(); ++i) {
      std::set<std::string> trial = base;
      trial.erase(added[i]);
      if (covered(trial)) {
        base = std::move(trial);
        added.erase(added.begin() + static_cast<std::ptrdiff_t>(i));
        pruned = true;
        break;
      }
    }
  }

  std::sort(added.begin(), added.end());
  return added;
}

}  // namespace semnet
