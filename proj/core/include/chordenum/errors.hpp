#pragma once

#include <stdexcept>
#include <string>

namespace chordenum {

// Malformed caller input: out-of-range vertices, self-loops, edges that are
// not part of the ground set, unreadable files.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// An operation was called on an argument outside its domain, e.g. asking for
// the canonical ordering of a completion that is not minimal.
class PreconditionError : public std::logic_error {
 public:
  explicit PreconditionError(const std::string& what) : std::logic_error(what) {}
};

// Something that the underlying theory guarantees did not hold. Seeing one of
// these means a bug in this library or in a user-supplied set system.
class InvariantError : public std::logic_error {
 public:
  explicit InvariantError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace chordenum
