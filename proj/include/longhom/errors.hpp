#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace longhom {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed ordinal expression, interval expression, or JSON document.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  explicit ParseError(const std::string& what) : Error(what), position_(npos) {}

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// A precondition on the mathematical input failed: universe mismatch,
// index out of range, non-limit universe, unnormalized length, ...
class DomainError : public Error {
 public:
  using Error::Error;
};

// Search bounds are too small or the instance is too large to enumerate.
class BoundError : public Error {
 public:
  using Error::Error;
};

// The preorder has a 2-cycle where an operation needs antisymmetry.
class CyclicPreorder : public Error {
 public:
  using Error::Error;
};

// A symbolic map violates a boundary consistency rule where a consistent
// map is required.
class InconsistentMap : public Error {
 public:
  using Error::Error;
};

}  // namespace longhom
