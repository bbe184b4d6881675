// Copyright 2026 The drtq Authors.
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

#ifndef DRTQ_ERRORS_H_
#define DRTQ_ERRORS_H_

#include <stdexcept>
#include <string>

namespace drtq {

// Base class for all errors raised by the library. Errors raised while
// processing a discourse carry the index of the offending sentence.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string &message) : std::runtime_error(message) {}

  int sentence() const { return sentence_; }
  void set_sentence(int index) { sentence_ = index; }

 private:
  int sentence_ = -1;
};

// A DrsPath does not address a sub-DRS of the root it is applied to.
class PathError : public Error {
 public:
  using Error::Error;
};

// Malformed linear text (DRS, term, type or model syntax).
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string &message, int line, int column)
      : Error(message + " at " + std::to_string(line) + ":" +
              std::to_string(column)),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// Ill-typed lambda term.
class TypeError : public Error {
 public:
  using Error::Error;
};

// Functional composition found no route, not even through coercion.
class CompositionError : public Error {
 public:
  using Error::Error;
};

// Bad lexicon source or lexicon contents.
class LexiconError : public Error {
 public:
  using Error::Error;
};

// A token that has no lexical entry.
class UnknownWordError : public LexiconError {
 public:
  explicit UnknownWordError(const std::string &word)
      : LexiconError("unknown word '" + word + "'"), word_(word) {}

  const std::string &word() const { return word_; }

 private:
  std::string word_;
};

// The fragment grammar licenses no derivation for a sentence.
class ParseError : public Error {
 public:
  ParseError(const std::string &message, std::string parsed_prefix)
      : Error(message), parsed_prefix_(std::move(parsed_prefix)) {}

  const std::string &parsed_prefix() const { return parsed_prefix_; }

 private:
  std::string parsed_prefix_;
};

// Some alpha-DRS could be neither linked, bridged nor accommodated.
class ResolutionError : public Error {
 public:
  using Error::Error;
};

// Malformed model file.
class ModelError : public Error {
 public:
  using Error::Error;
};

}  // namespace drtq

#endif  // DRTQ_ERRORS_H_
