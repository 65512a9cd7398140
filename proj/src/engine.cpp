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

#include "semnet/engine.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "semnet/kbase.hpp"
#include "semnet/parser.hpp"

namespace semnet {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorKind::IoError, "cannot open file").with_value(path);
  }
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::string trimmed(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

// Word list file: whitespace-separated words, `#` starts a comment.
std::set<std::string> read_word_set(const std::string& path) {
  std::set<std::string> words;
  std::istringstream in(read_file(path));
  std::string line;
  while (std::getline(in, line)) {
    if (std::size_t hash = line.find('#'); hash != std::string::npos) {
      line = line.substr(0, hash);
    }
    std::istringstream fields(line);
    std::string word;
    while (fields >> word) words.insert(word);
  }
  return words;
}

std::string describe(const Error& e) {
  std::string out = error_kind_name(e.kind);
  out += ": ";
  out += e.what();
  return out;
}

std::string join(const std::vector<std::string>& parts,
                 const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace

Engine::Engine(Lexicon lexicon) : lexicon_(std::move(lexicon)) {}

std::string Engine::ingest_text(const std::string& text) {
  std::size_t records_before = store_.size();
  int accepted = 0;
  std::vector<std::string> rejections;

  for (const std::vector<Token>& tokens : split_sentences(text)) {
    if (tokens.empty()) {
      context_.begin_fragment();
      continue;
    }
    FactStore store_backup = store_;
    DiscourseContext context_backup = context_;
    try {
      auto sentence = parse_sentence(tokens, lexicon_);
      Representation rep = represent(*sentence, context_, lexicon_, store_);
      for (const logic::HornClause& rule : rep.rules) kb_.add(rule);
      ++accepted;
    } catch (const Error& e) {
      store_ = std::move(store_backup);
      context_ = std::move(context_backup);
      rejections.push_back("rejected: " + describe(e));
    }
  }

  std::string out = "ingested " + std::to_string(accepted) + " sentences, " +
                    std::to_string(store_.size() - records_before) +
                    " records";
  for (const std::string& line : rejections) out += "\n" + line;
  return out;
}

std::string Engine::ingest_file(const std::string& path) {
  return ingest_text(read_file(path));
}

std::string Engine::ask(const std::string& question) {
  Question q = parse_question(question, lexicon_);

  if (q.kind == QuestionKind::simple_wh) {
    Answer direct = answer_simple(q, store_, lexicon_);
    if (direct.kind == AnswerKind::entities) {
      return "answer: " + join(direct.rendered, ", ");
    }
    Answer derived = answer_logical(q, store_, lexicon_, kb_, depth_limit_);
    if (derived.kind == AnswerKind::entities) {
      return "answer: " + join(derived.rendered, ", ");
    }
    return "answer: unknown";
  }

  Answer direct = answer_simple(q, store_, lexicon_);
  if (direct.kind == AnswerKind::yes) return "answer: yes";
  if (direct.kind == AnswerKind::no) return "answer: no";

  Answer derived = answer_logical(q, store_, lexicon_, kb_, depth_limit_);
  switch (derived.kind) {
    case AnswerKind::yes: {
      std::string out = "answer: yes";
      for (const logic::HornClause& clause : derived.proof) {
        out += "\nproof: " + clause.to_string();
      }
      return out;
    }
    case AnswerKind::no:
      return "answer: no";
    default:
      return "answer: unknown";
  }
}

std::string Engine::load_kb_file(const std::string& path) {
  std::istringstream in(read_file(path));
  std::string line;
  std::vector<std::vector<std::string>> blocks;
  std::vector<std::string> block;
  while (std::getline(in, line)) {
    std::string t = trimmed(line);
    if (t.empty()) {
      if (!block.empty()) blocks.push_back(std::move(block));
      block.clear();
      continue;
    }
    if (t.front() == '#') continue;
    block.push_back(t);
  }
  if (!block.empty()) blocks.push_back(std::move(block));

  int articles = 0;
  int clauses = 0;
  for (const std::vector<std::string>& lines : blocks) {
    Article article = ingest_article(lines, lexicon_);
    std::vector<logic::HornClause> compiled =
        compile_article(article, lexicon_);
    kb_.add_all(compiled);
    ++articles;
    clauses += static_cast<int>(compiled.size());
  }
  return "kb: " + std::to_string(articles) + " articles, " +
         std::to_string(clauses) + " clauses";
}

std::string Engine::primitives(const std::string& defs_path,
                               const std::string& s0_path) {
  DefinitionGraph graph = DefinitionGraph::load(defs_path);
  std::set<std::string> s0 = read_word_set(s0_path);
  PrimitiveCheck check = is_primitive_set(graph, s0);
  if (check.primitive) {
    return "yes: layers " + std::to_string(check.layers);
  }
  std::string out = "no: unreached " + join(check.unreached, " ");
  std::vector<std::string> extension = minimal_primitive_extension(graph, s0);
  out += "\nextension: " + join(extension, " ");
  return out;
}

void Engine::load_facts(const std::string& path) {
  store_ = FactStore::load(path);
}

void Engine::save_facts(const std::string& path) const { store_.save(path); }

std::string Engine::exec(const std::string& line, bool* quit) {
  std::string input = trimmed(line);
  if (input.empty()) return "";

  if (input.front() != ':') {
    if (input.back() == '?') return ask(input);
    return ingest_text(input);
  }

  std::istringstream fields(input);
  std::string command;
  fields >> command;
  std::string rest = trimmed(input.substr(command.size()));

  if (command == ":quit") {
    if (quit) *quit = true;
    return "bye";
  }
  if (command == ":ingest") {
    if (rest.empty()) return "usage: :ingest <file>";
    return ingest_file(rest);
  }
  if (command == ":ask") {
    if (rest.empty()) return "usage: :ask <question>";
    return ask(rest);
  }
  if (command == ":dump") return dump();
  if (command == ":kb") {
    if (rest.empty()) return "usage: :kb <file>";
    return load_kb_file(rest);
  }
  if (command == ":primitives") {
    std::string defs;
    std::string s0;
    fields >> defs >> s0;
    if (defs.empty() || s0.empty()) {
      return "usage: :primitives <defs-file> <s0-file>";
    }
    return primitives(defs, s0);
  }
  if (command == ":save") {
    std::string target = rest.empty() ? facts_path_ : rest;
    if (target.empty()) return "usage: :save <file>";
    save_facts(target);
    return "saved";
  }
  return "unknown command: " + command;
}

}  // namespace semnet
