#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace argfacets {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text. line() is 1-based; 0 when the error is not tied to a line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class UnknownArgument : public ParseError {
 public:
  UnknownArgument(std::size_t line, std::string name)
      : ParseError(line, "unknown argument '" + name + "'"), name_(std::move(name)) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

class DuplicateArgument : public ParseError {
 public:
  DuplicateArgument(std::size_t line, const std::string& name)
      : ParseError(line, "duplicate argument '" + name + "'") {}
};

class InvalidConstraints : public Error {
 public:
  using Error::Error;
};

class FrameworkTooLarge : public Error {
 public:
  FrameworkTooLarge(std::size_t size, std::size_t limit)
      : Error("framework has " + std::to_string(size) + " arguments, oracle limit is " +
              std::to_string(limit)) {}
};

// Raised when a literal's argument is not a facet of the space it is asked about.
class NotAFacet : public Error {
 public:
  explicit NotAFacet(const std::string& name) : Error("'" + name + "' is not a facet") {}
};

class EmptyHistory : public Error {
 public:
  EmptyHistory() : Error("nothing to undo") {}
};

// A search hit its wall-clock deadline before it could answer.
class DeadlineExceeded : public Error {
 public:
  DeadlineExceeded() : Error("deadline exceeded") {}
};

}  // namespace argfacets
