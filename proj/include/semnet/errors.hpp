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

#ifndef SEMNET_ERRORS_HPP_
#define SEMNET_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace semnet {

enum class ErrorKind {
  MalformedRecord,
  DuplicateCode,
  UnknownSemanticCode,
  UnknownActionType,
  UnknownWord,
  SyntaxError,
  NotAnArticleHeader,
  NonsenseSentence,
  UnresolvedPronoun,
  UnknownNoun,
  IncompatibleNounCombination,
  ConflictingIdentity,
  DanglingReference,
  UnknownSlot,
  CorruptStore,
  MalformedArticleLine,
  UncompilableLine,
  UndefinedWord,
  UnsupportedQuestionForm,
  IoError,
};

const char* error_kind_name(ErrorKind kind);

// One exception type for the whole engine. `kind` discriminates, the string
// fields carry whatever the kind needs (documented at each raise site).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message)
      : std::runtime_error(std::move(message)), kind(kind) {}

  ErrorKind kind;
  std::string word;   // offending word / verb / slot value
  std::string slot;   // slot or field name
  std::string value;  // offending value (semantic code, token, ...)
  int line = -1;      // 1-based line in a file, when known
  int position = -1;  // character offset in a sentence, when known

  Error& with_word(std::string w) { word = std::move(w); return *this; }
  Error& with_slot(std::string s) { slot = std::move(s); return *this; }
  Error& with_value(std::string v) { value = std::move(v); return *this; }
  Error& at_line(int l) { line = l; return *this; }
  Error& at_position(int p) { position = p; return *this; }
};

}  // namespace semnet

#endif  // SEMNET_ERRORS_HPP_
