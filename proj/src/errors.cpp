#include "vrank/errors.hpp"

#include <utility>

namespace vrank {

ParseError::ParseError(std::size_t line, std::string reason)
    : Error("line " + std::to_string(line) + ": " + reason),
      line_(line),
      reason_(std::move(reason)) {}

}  // namespace vrank
