#pragma once

#include <stdexcept>

namespace runslab {

/// Input that violates an operation's preconditions: malformed permutation
/// text, an index outside [1, n], mismatched dimensions, and so on.
class InvalidInput : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Work refused because it exceeds a size cap. The message explains the
/// cost; callers may retry with the force option where one exists.
class CapExceeded : public InvalidInput {
public:
  using InvalidInput::InvalidInput;
};

/// A structural guarantee the computation relies on failed at runtime
/// (for example, a duplicate orbit member, or an orbit polynomial that is
/// not z^a(1+z)^m). Continuing past one of these would produce meaningless
/// results, so they are hard errors rather than recoverable conditions.
class InvariantViolation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

}  // namespace runslab
