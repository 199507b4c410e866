// Copyright 2026 The LexSumm Authors.
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

#include "lexsumm/error.h"

namespace lexsumm {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kValidation:
      return "validation_error";
    case ErrorCode::kNotFound:
      return "not_found";
    case ErrorCode::kConfiguration:
      return "configuration_error";
    case ErrorCode::kDecode:
      return "decode_error";
    case ErrorCode::kStorage:
      return "storage_error";
  }
  return "error";
}

}  // namespace lexsumm
