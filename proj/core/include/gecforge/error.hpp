// Copyright 2026 The gec-forge Authors.
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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gecforge {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad user input: malformed files, schema violations, invalid arguments.
/// The CLI maps this family to exit code 1.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Invalid UTF-8 byte sequence.
class DecodeError : public InputError {
 public:
  DecodeError(const std::string& what, std::size_t byte_offset)
      : InputError(what), byte_offset_(byte_offset) {}

  std::size_t byte_offset() const noexcept { return byte_offset_; }

 private:
  std::size_t byte_offset_;
};

/// A file parsed but does not have the expected shape (headers, sections).
class SchemaError : public InputError {
 public:
  using InputError::InputError;
};

/// Malformed CSV. `row` is the 0-based data row (header excluded) where
/// parsing failed.
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t row)
      : InputError(what), row_(row) {}

  std::size_t row() const noexcept { return row_; }

 private:
  std::size_t row_;
};

}  // namespace gecforge
