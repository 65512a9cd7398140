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

#ifndef SEMNET_ENGINE_HPP_
#define SEMNET_ENGINE_HPP_

#include <string>

#include "semnet/factbase.hpp"
#include "semnet/inference.hpp"
#include "semnet/lexicon.hpp"
#include "semnet/qa.hpp"
#include "semnet/semrep.hpp"

namespace semnet {

// One understanding session: dictionaries, the growing net, compiled
// knowledge and the discourse context. All commands produce deterministic
// line output, shared verbatim by the REPL and the batch subcommands.
class Engine {
 public:
  explicit Engine(Lexicon lexicon);

  // Text ingestion, sentence by sentence. A rejected sentence leaves the
  // store untouched and contributes an error line instead.
  std::string ingest_text(const std::string& text);
  std::string ingest_file(const std::string& path);

  std::string ask(const std::string& question);
  std::string dump() const { return store_.dump(); }

  std::string load_kb_file(const std::string& path);
  std::string primitives(const std::string& defs_path,
                         const std::string& s0_path);

  void load_facts(const std::string& path);
  void save_facts(const std::string& path) const;
  void set_facts_path(std::string path) { facts_path_ = std::move(path); }
  void set_depth_limit(int limit) { depth_limit_ = limit; }
  int depth_limit() const { return depth_limit_; }

  // One REPL command line (:ingest, :ask, :dump, :kb, :primitives, :save,
  // :quit). Returns the command output; sets quit when the session ends.
  std::string exec(const std::string& line, bool* quit = nullptr);

  const Lexicon& lexicon() const { return lexicon_; }
  const FactStore& store() const { return store_; }
  FactStore& store() { return store_; }
  const logic::Program& kb() const { return kb_; }
  DiscourseContext& context() { return context_; }

 private:
  Lexicon lexicon_;
  FactStore store_;
  logic::Program kb_;
  DiscourseContext context_;
  std::string facts_path_;
  int depth_limit_ = 64;
};

}  // namespace semnet

#endif  // SEMNET_ENGINE_HPP_
