#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace credfusion {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidFrame : public Error {
 public:
  using Error::Error;
};

class InvalidMass : public Error {
 public:
  using Error::Error;
};

class FrameMismatch : public Error {
 public:
  FrameMismatch() : Error("mass functions are defined on different frames") {}
};

class LengthMismatch : public Error {
 public:
  LengthMismatch(std::size_t lhs, std::size_t rhs)
      : Error("length mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs)) {}
};

/// Dempster's rule is undefined when the conflict coefficient reaches 1.
class TotalConflict : public Error {
 public:
  explicit TotalConflict(double conflict)
      : Error("total conflict between evidence (K = " + std::to_string(conflict) + ")"),
        conflict_(conflict) {}
  double conflict() const noexcept { return conflict_; }

 private:
  double conflict_;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace credfusion
