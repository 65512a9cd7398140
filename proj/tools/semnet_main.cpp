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

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "semnet.h"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitParse = 2;
constexpr int kExitRuntime = 3;

struct EngineGuard {
  semnet_engine_t* handle = nullptr;
  ~EngineGuard() {
    if (handle) semnet_engine_destroy(handle);
  }
};

int exit_code_for(int rc) {
  return rc == SEMNET_ERR_PARSE ? kExitParse : kExitRuntime;
}

int fail(semnet_engine_t* engine, const char* what, int rc) {
  std::cerr << "error: " << what;
  if (engine) {
    const char* detail = semnet_engine_last_error(engine);
    if (detail && *detail) std::cerr << ": " << detail;
  }
  std::cerr << "\n";
  return exit_code_for(rc);
}

// Runs one engine command and prints its output. Nonzero engine codes end
// the process with the matching exit code.
int run_command(semnet_engine_t* engine, const std::string& line, bool* quit) {
  char* output = nullptr;
  int stop = 0;
  int rc = semnet_engine_exec(engine, line.c_str(), &output, &stop);
  if (rc != SEMNET_OK) {
    semnet_string_free(output);
    return fail(engine, "command failed", rc);
  }
  if (output && *output) std::cout << output << "\n";
  semnet_string_free(output);
  if (quit) *quit = stop != 0;
  return 0;
}

// REPL variant: errors are reported on the same stream as answers and the
// session keeps accepting commands.
void run_repl_command(semnet_engine_t* engine, const std::string& line,
                      bool* quit) {
  char* output = nullptr;
  int stop = 0;
  int rc = semnet_engine_exec(engine, line.c_str(), &output, &stop);
  if (rc != SEMNET_OK) {
    const char* detail = semnet_engine_last_error(engine);
    std::cout << "error: " << (detail && *detail ? detail : "command failed")
              << "\n";
  } else if (output && *output) {
    std::cout << output << "\n";
  }
  semnet_string_free(output);
  if (quit) *quit = stop != 0;
}

bool file_exists(const std::string& path) {
  std::ifstream in(path);
  return in.good();
}

// A --kb argument may name a single article file or a directory of .kb
// files; directories expand to their .kb entries in name order.
std::vector<std::string> expand_kb_paths(const std::vector<std::string>& args) {
  std::vector<std::string> out;
  for (const std::string& arg : args) {
    std::error_code ec;
    if (std::filesystem::is_directory(arg, ec)) {
      std::vector<std::string> found;
      for (const auto& entry : std::filesystem::directory_iterator(arg)) {
        if (entry.is_regular_file() && entry.path().extension() == ".kb") {
          found.push_back(entry.path().string());
        }
      }
      std::sort(found.begin(), found.end());
      out.insert(out.end(), found.begin(), found.end());
    } else {
      out.push_back(arg);
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"semnet: a controlled-English text understanding engine"};
  app.require_subcommand(1);

  std::string lexicon_dir;
  std::string facts_path;
  std::vector<std::string> kb_paths;
  int depth_limit = 64;
  app.add_option("--lexicon", lexicon_dir,
                 "directory with paradigm.dic, noun.dic and verb.dic")
      ->required();
  app.add_option("--facts", facts_path,
                 "semantic net file, loaded if present and saved after "
                 "ingestion");
  app.add_option("--kb", kb_paths,
                 "knowledge article file or directory of .kb files, "
                 "repeatable");
  app.add_option("--depth", depth_limit, "inference depth limit");

  CLI::App* repl = app.add_subcommand("repl", "interactive session on stdin");
  CLI::App* ingest =
      app.add_subcommand("ingest", "read text files into the net");
  std::vector<std::string> input_files;
  ingest->add_option("files", input_files, "text files")->required();
  CLI::App* ask = app.add_subcommand("ask", "answer one question");
  std::string question;
  ask->add_option("question", question, "the question")->required();
  CLI::App* dump = app.add_subcommand("dump", "print every record");
  CLI::App* primitives = app.add_subcommand(
      "primitives", "check a definition graph against a base word set");
  std::string defs_path;
  std::string s0_path;
  primitives->add_option("defs", defs_path, "definition graph file")
      ->required();
  primitives->add_option("s0", s0_path, "base word list file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  EngineGuard guard;
  if (semnet_engine_create(&guard.handle, lexicon_dir.c_str()) != SEMNET_OK) {
    std::cerr << "error: cannot load dictionaries from " << lexicon_dir
              << "\n";
    return kExitRuntime;
  }
  semnet_engine_t* engine = guard.handle;
  semnet_engine_set_depth_limit(engine, depth_limit);

  if (!facts_path.empty()) {
    semnet_engine_set_facts_path(engine, facts_path.c_str());
    if (file_exists(facts_path)) {
      if (int rc = semnet_engine_load_facts(engine, facts_path.c_str());
          rc != SEMNET_OK) {
        return fail(engine, "cannot load facts", rc);
      }
    }
  }
  for (const std::string& kb : expand_kb_paths(kb_paths)) {
    if (int rc = semnet_engine_load_kb(engine, kb.c_str());
        rc != SEMNET_OK) {
      return fail(engine, "cannot load knowledge base", rc);
    }
  }

  if (repl->parsed()) {
    std::string line;
    bool quit = false;
    while (!quit && std::getline(std::cin, line)) {
      run_repl_command(engine, line, &quit);
    }
    return 0;
  }

  if (ingest->parsed()) {
    for (const std::string& file : input_files) {
      if (int rc = run_command(engine, ":ingest " + file, nullptr); rc != 0) {
        return rc;
      }
    }
    if (!facts_path.empty()) {
      if (int rc = semnet_engine_save_facts(engine, facts_path.c_str());
          rc != SEMNET_OK) {
        return fail(engine, "cannot save facts", rc);
      }
    }
    return 0;
  }

  if (ask->parsed()) {
    return run_command(engine, ":ask " + question, nullptr);
  }

  if (dump->parsed()) {
    char* output = nullptr;
    if (int rc = semnet_engine_dump(engine, &output); rc != SEMNET_OK) {
      semnet_string_free(output);
      return fail(engine, "dump failed", rc);
    }
    if (output && *output) std::cout << output;
    semnet_string_free(output);
    return 0;
  }

  if (primitives->parsed()) {
    return run_command(engine, ":primitives " + defs_path + " " + s0_path,
                       nullptr);
  }

  return kExitUsage;
}
