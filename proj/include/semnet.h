/*
 * Copyright 2026 The Semnet Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface of the understanding engine. All functions return an error
 * code; output strings are heap-allocated UTF-8 owned by the caller and
 * released with semnet_string_free. Handles are opaque and single-threaded.
 */

#ifndef SEMNET_H_
#define SEMNET_H_

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined _WIN32 || defined __CYGWIN__
#define SEMNET_API __declspec(dllexport)
#else
#define SEMNET_API __attribute__((visibility("default")))
#endif

typedef struct semnet_engine_struct semnet_engine_t;

enum SEMNET_ERROR {
  SEMNET_OK = 0,
  SEMNET_ERR_BAD_ARGUMENT = 1,
  SEMNET_ERR_PARSE = 2,
  SEMNET_ERR_STORE = 3,
  SEMNET_ERR_IO = 4,
  SEMNET_ERR_INTERNAL = 5,
};

/* Creates an engine over the dictionaries paradigm.dic, noun.dic and
 * verb.dic found in lexicon_dir. */
SEMNET_API int semnet_engine_create(semnet_engine_t** engine,
                                    const char* lexicon_dir);

SEMNET_API int semnet_engine_destroy(semnet_engine_t* engine);

/* Runs one command line (:ingest, :ask, :dump, :kb, :primitives, :save,
 * :quit) and returns its output. *quit is set nonzero by :quit. */
SEMNET_API int semnet_engine_exec(semnet_engine_t* engine, const char* line,
                                  char** output, int* quit);

SEMNET_API int semnet_engine_ingest_text(semnet_engine_t* engine,
                                         const char* text, char** output);
SEMNET_API int semnet_engine_ask(semnet_engine_t* engine,
                                 const char* question, char** output);
SEMNET_API int semnet_engine_dump(semnet_engine_t* engine, char** output);

SEMNET_API int semnet_engine_load_facts(semnet_engine_t* engine,
                                        const char* path);
SEMNET_API int semnet_engine_save_facts(semnet_engine_t* engine,
                                        const char* path);
SEMNET_API int semnet_engine_set_facts_path(semnet_engine_t* engine,
                                            const char* path);
SEMNET_API int semnet_engine_load_kb(semnet_engine_t* engine,
                                     const char* path);
SEMNET_API int semnet_engine_set_depth_limit(semnet_engine_t* engine,
                                             int depth);

/* Message of the last failing call on this engine, valid until the next
 * call. Never NULL. */
SEMNET_API const char* semnet_engine_last_error(const semnet_engine_t* engine);

SEMNET_API void semnet_string_free(char* str);

SEMNET_API int semnet_version(void);

#ifdef __cplusplus
}
#endif

#endif /* SEMNET_H_ */
