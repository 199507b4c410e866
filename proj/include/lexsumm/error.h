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

#ifndef LEXSUMM_ERROR_H_
#define LEXSUMM_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace lexsumm {

enum class ErrorCode {
  kValidation,
  kNotFound,
  kConfiguration,
  kDecode,
  kStorage,
};

// Machine-readable name used in API error bodies, e.g. "not_found".
std::string_view ErrorCodeName(ErrorCode code);

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string &message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string &message)
      : Error(ErrorCode::kValidation, message) {}
};

class NotFoundError : public Error {
 public:
  explicit NotFoundError(const std::string &message)
      : Error(ErrorCode::kNotFound, message) {}
};

// A request that is well-formed but cannot be served with the current
// configuration (missing model, feature version mismatch).
class ConfigurationError : public Error {
 public:
  explicit ConfigurationError(const std::string &message)
      : Error(ErrorCode::kConfiguration, message) {}
};

class DecodeError : public Error {
 public:
  explicit DecodeError(const std::string &message)
      : Error(ErrorCode::kDecode, message) {}
};

class StorageError : public Error {
 public:
  explicit StorageError(const std::string &message)
      : Error(ErrorCode::kStorage, message) {}
};

}  // namespace lexsumm

#endif  // LEXSUMM_ERROR_H_
