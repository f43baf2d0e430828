#pragma once

#include <stdexcept>
#include <string>

namespace emograd {

// Base for every error the toolkit raises on bad data or bad configuration.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input data: bad JSONL rows, unknown labels, lexicon lines.
class DataError : public Error {
 public:
  using Error::Error;
};

// Invalid run configuration (flag values out of range, missing paths).
class ConfigError : public Error {
 public:
  ConfigError(std::string field, const std::string& message)
      : Error(field + ": " + message), field_(std::move(field)) {}

  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

// A transition prefix that does not have the "<from> to <to>: " shape.
class PrefixParseError : public DataError {
 public:
  PrefixParseError(std::string token, const std::string& message)
      : DataError(message + " '" + token + "'"), token_(std::move(token)) {}

  const std::string& token() const { return token_; }

 private:
  std::string token_;
};

}  // namespace emograd
