#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace oddcover {

// Precondition violations on caller-supplied values.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed graph6, edge-list or JSON input. `offset` is the byte offset of
// the first offending character.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// A construction produced something that does not verify, or one of its
// internal consistency checks failed. Always a bug or a false assumption.
class ConstructionFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace oddcover
