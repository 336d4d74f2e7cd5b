#pragma once

#include <stdexcept>
#include <string>

namespace weyl {

// A caller broke an operation's precondition (zero input where a nonzero
// element is required, non-coprime direction, malformed text, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An internal consistency check failed. Seeing one of these means an
// arithmetic bug, never bad input.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ParseError : public PreconditionError {
 public:
  ParseError(const std::string& message, std::size_t position)
      : PreconditionError(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace weyl
