#pragma once

#include <stdexcept>
#include <string>

namespace oddcycle {

// Raised when an input is too large for the exact path that was requested.
class SizeLimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Raised when an operation's documented precondition does not hold,
// e.g. reducing a graph that contains an even cycle.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class ParseErrorKind {
  kMalformedHeader,
  kOrderOutOfRange,
  kTruncatedPayload,
  kMalformedPayload,
};

class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ParseErrorKind kind() const noexcept { return kind_; }

 private:
  ParseErrorKind kind_;
};

}  // namespace oddcycle
