#pragma once

#include <stdexcept>
#include <string>

namespace polydeg {

/// Thrown when a caller violates an operation's precondition (context
/// mismatch, malformed text, bad parameter range).
class UsageError : public std::invalid_argument {
public:
  explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

/// Thrown when an internal consistency assertion fails. Seeing one means
/// either a bug or a counterexample to a claimed identity.
class InternalInconsistency : public std::logic_error {
public:
  explicit InternalInconsistency(const std::string& what) : std::logic_error(what) {}
};

}  // namespace polydeg
