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

#include "semnet.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "semnet/engine.hpp"
#include "semnet/errors.hpp"

struct semnet_engine_struct {
  semnet::Engine engine;
  std::string last_error;

  explicit semnet_engine_struct(semnet::Lexicon lexicon)
      : engine(std::move(lexicon)) {}
};

namespace {

constexpr int kVersion = 10000;  // major * 10000 + minor * 100 + patch

int error_code(const semnet::Error& e) {
  using semnet::ErrorKind;
  switch (e.kind) {
    case ErrorKind::IoError:
      return SEMNET_ERR_IO;
    case ErrorKind::UnknownWord:
    case ErrorKind::SyntaxError:
    case ErrorKind::NotAnArticleHeader:
    case ErrorKind::NonsenseSentence:
    case ErrorKind::UnresolvedPronoun:
    case ErrorKind::UnknownNoun:
    case ErrorKind::IncompatibleNounCombination:
    case ErrorKind::MalformedArticleLine:
    case ErrorKind::UncompilableLine:
    case ErrorKind::UndefinedWord:
    case ErrorKind::UnsupportedQuestionForm:
      return SEMNET_ERR_PARSE;
    case ErrorKind::MalformedRecord:
    case ErrorKind::DuplicateCode:
    case ErrorKind::ConflictingIdentity:
    case ErrorKind::DanglingReference:
    case ErrorKind::UnknownSlot:
    case ErrorKind::CorruptStore:
      return SEMNET_ERR_STORE;
    default:
      return SEMNET_ERR_INTERNAL;
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Runs `body` against the handle, mapping exceptions to error codes and
// recording the message for semnet_engine_last_error.
template <typename Fn>
int guarded(semnet_engine_t* engine, Fn&& body) {
  if (!engine) return SEMNET_ERR_BAD_ARGUMENT;
  engine->last_error.clear();
  try {
    return body();
  } catch (const semnet::Error& e) {
    engine->last_error = std::string(semnet::error_kind_name(e.kind)) + ": " +
                         e.what();
    return error_code(e);
  } catch (const std::bad_alloc&) {
    engine->last_error = "out of memory";
    return SEMNET_ERR_INTERNAL;
  } catch (const std::exception& e) {
    engine->last_error = e.what();
    return SEMNET_ERR_INTERNAL;
  }
}

int emit(const std::string& text, char** output) {
  if (!output) return SEMNET_ERR_BAD_ARGUMENT;
  *output = copy_string(text);
  return *output ? SEMNET_OK : SEMNET_ERR_INTERNAL;
}

}  // namespace

extern "C" {

int semnet_engine_create(semnet_engine_t** engine, const char* lexicon_dir) {
  if (!engine || !lexicon_dir) return SEMNET_ERR_BAD_ARGUMENT;
  *engine = nullptr;
  try {
    std::string dir = lexicon_dir;
    if (!dir.empty() && dir.back() != '/') dir += '/';
    semnet::Lexicon lexicon = semnet::Lexicon::load(
        dir + "paradigm.dic", dir + "noun.dic", dir + "verb.dic");
    *engine = new semnet_engine_struct(std::move(lexicon));
    return SEMNET_OK;
  } catch (const semnet::Error& e) {
    return error_code(e);
  } catch (const std::exception&) {
    return SEMNET_ERR_INTERNAL;
  }
}

int semnet_engine_destroy(semnet_engine_t* engine) {
  if (!engine) return SEMNET_ERR_BAD_ARGUMENT;
  delete engine;
  return SEMNET_OK;
}

int semnet_engine_exec(semnet_engine_t* engine, const char* line,
                       char** output, int* quit) {
  if (!line) return SEMNET_ERR_BAD_ARGUMENT;
  return guarded(engine, [&] {
    bool stop = false;
    std::string result = engine->engine.exec(line, &stop);
    if (quit) *quit = stop ? 1 : 0;
    return emit(result, output);
  });
}

int semnet_engine_ingest_text(semnet_engine_t* engine, const char* text,
                              char** output) {
  if (!text) return SEMNET_ERR_BAD_ARGUMENT;
  return guarded(engine,
                 [&] { return emit(engine->engine.ingest_text(text), output); });
}

int semnet_engine_ask(semnet_engine_t* engine, const char* question,
                      char** output) {
  if (!question) return SEMNET_ERR_BAD_ARGUMENT;
  return guarded(engine,
                 [&] { return emit(engine->engine.ask(question), output); });
}

int semnet_engine_dump(semnet_engine_t* engine, char** output) {
  return guarded(engine, [&] { return emit(engine->engine.dump(), output); });
}

int semnet_engine_load_facts(semnet_engine_t* engine, const char* path) {
  if (!path) return SEMNET_ERR_BAD_ARGUMENT;
  return guarded(engine, [&] {
    engine->engine.load_facts(path);
    return SEMNET_OK;
  });
}

int semnet_engine_save_facts(semnet_engine_t* engine, const char* path) {
  if (!path) return SEMNET_ERR_BAD_ARGUMENT;
  return guarded(engine, [&] {
    engine->engine.save_facts(path);
    return SEMNET_OK;
  });
}

int semnet_engine_set_facts_path(semnet_engine_t* engine, const char* path) {
  if (!path) return SEMNET_ERR_BAD_ARGUMENT;
  return guarded(engine, [&] {
    engine->engine.set_facts_path(path);
    return SEMNET_OK;
  });
}

int semnet_engine_load_kb(semnet_engine_t* engine, const char* path) {
  if (!path) return SEMNET_ERR_BAD_ARGUMENT;
  return guarded(engine, [&] {
    engine->engine.load_kb_file(path);
    return SEMNET_OK;
  });
}

int semnet_engine_set_depth_limit(semnet_engine_t* engine, int depth) {
  return guarded(engine, [&] {
    engine->engine.set_depth_limit(depth);
    return SEMNET_OK;
  });
}

const char* semnet_engine_last_error(const semnet_engine_t* engine) {
  if (!engine) return "null engine";
  return engine->last_error.c_str();
}

void semnet_string_free(char* str) { std::free(str); }

int semnet_version(void) { return kVersion; }

}  // extern "C"
