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

#include "semnet/errors.hpp"

namespace semnet {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedRecord: return "MalformedRecord";
    case ErrorKind::DuplicateCode: return "DuplicateCode";
    case ErrorKind::UnknownSemanticCode: return "UnknownSemanticCode";
    case ErrorKind::UnknownActionType: return "UnknownActionType";
    case ErrorKind::UnknownWord: return "UnknownWord";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::NotAnArticleHeader: return "NotAnArticleHeader";
    case ErrorKind::NonsenseSentence: return "NonsenseSentence";
    case ErrorKind::UnresolvedPronoun: return "UnresolvedPronoun";
    case ErrorKind::UnknownNoun: return "UnknownNoun";
    case ErrorKind::IncompatibleNounCombination:
      return "IncompatibleNounCombination";
    case ErrorKind::ConflictingIdentity: return "ConflictingIdentity";
    case ErrorKind::DanglingReference: return "DanglingReference";
    case ErrorKind::UnknownSlot: return "UnknownSlot";
    case ErrorKind::CorruptStore: return "CorruptStore";
    case ErrorKind::MalformedArticleLine: return "MalformedArticleLine";
    case ErrorKind::UncompilableLine: return "UncompilableLine";
    case ErrorKind::UndefinedWord: return "UndefinedWord";
    case ErrorKind::UnsupportedQuestionForm: return "UnsupportedQuestionForm";
    case ErrorKind::IoError: return "IoError";
  }
  return "Error";
}

}  // namespace semnet
