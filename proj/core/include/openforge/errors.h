// Copyright 2026 The OpenForge Authors.
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

#ifndef OPENFORGE_ERRORS_H_
#define OPENFORGE_ERRORS_H_

#include <stdexcept>
#include <string>

namespace openforge {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text (CoNLL-U column count, bad numbers, ...).
class ParseError : public Error {
 public:
  ParseError(const std::string &message, int line)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// A sentence whose head links do not form a single-rooted tree.
class StructureError : public Error {
 public:
  StructureError(const std::string &sentence_id, const std::string &message)
      : Error("sentence '" + sentence_id + "': " + message),
        sentence_id_(sentence_id) {}
  const std::string &sentence_id() const { return sentence_id_; }

 private:
  std::string sentence_id_;
};

// Seed lexicon or gold file line that does not follow the format.
class FormatError : public ParseError {
 public:
  using ParseError::ParseError;
};

class ConfigError : public Error {
 public:
  ConfigError(const std::string &key, const std::string &message)
      : Error("config key '" + key + "': " + message), key_(key) {}
  const std::string &key() const { return key_; }

 private:
  std::string key_;
};

class TrainingError : public Error {
 public:
  using Error::Error;
};

// Phrase or candidate missing from a table it is required to be in.
class LookupError : public Error {
 public:
  using Error::Error;
};

}  // namespace openforge

#endif  // OPENFORGE_ERRORS_H_
