#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vrank {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class EndpointOutOfRange : public Error {
 public:
  using Error::Error;
};

class SelfLoop : public Error {
 public:
  using Error::Error;
};

class Disconnected : public Error {
 public:
  using Error::Error;
};

class ColoringIncomplete : public Error {
 public:
  using Error::Error;
};

// Validator path enumeration ran past its step limit.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// Exhaustive search (exact solver, tree predicates) ran past its node limit.
class SearchBudgetExceeded : public Error {
 public:
  using Error::Error;
};

// No valid coloring exists within the allowed number of colors.
class Infeasible : public Error {
 public:
  using Error::Error;
};

class SetsOverlap : public Error {
 public:
  using Error::Error;
};

class NoSeparatorFound : public Error {
 public:
  using Error::Error;
};

class NotATree : public Error {
 public:
  using Error::Error;
};

class SizeOverflow : public Error {
 public:
  using Error::Error;
};

// A file could not be opened.
class FileError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::string reason);

  std::size_t line() const noexcept { return line_; }
  const std::string& reason() const noexcept { return reason_; }

 private:
  std::size_t line_;
  std::string reason_;
};

}  // namespace vrank
