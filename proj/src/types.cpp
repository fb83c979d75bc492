// Copyright 2026 The cohqec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cohqec/types.hpp"

namespace cohqec {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kKindMismatch: return "kind mismatch";
    case ErrorCode::kTargetCollision: return "target collision";
    case ErrorCode::kArityMismatch: return "arity mismatch";
    case ErrorCode::kOutOfRange: return "out of range";
    case ErrorCode::kCompletenessViolation: return "completeness violation";
    case ErrorCode::kEmptyKeep: return "empty keep list";
    case ErrorCode::kDimensionMismatch: return "dimension mismatch";
    case ErrorCode::kNormalizationViolation: return "normalization violation";
    case ErrorCode::kNotUnitary: return "not unitary";
    case ErrorCode::kUnsupportedError: return "unsupported error model";
    case ErrorCode::kInvalidGrid: return "invalid grid";
    case ErrorCode::kOrderViolation: return "order violation";
    case ErrorCode::kIo: return "io error";
  }
  return "unknown";
}

}  // namespace cohqec
