#pragma once

#include <stdexcept>
#include <string>

namespace nmp {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (bad mass, rate, label...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Two values built over different frames were mixed.
class FrameMismatch : public Error {
 public:
  using Error::Error;
};

/// Dempster's rule is undefined: the combined conflict mass is 1.
class TotalConflict : public Error {
 public:
  explicit TotalConflict(const std::string& what, double conflict = 1.0)
      : Error(what), conflict_(conflict) {}

  double conflict() const noexcept { return conflict_; }

 private:
  double conflict_;
};

/// Structural problem in a rule network: dangling reference or cycle.
class NetworkError : public Error {
 public:
  using Error::Error;
};

/// Malformed knowledge-base or mass-file text. `line()` is 1-based.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace nmp
