#ifndef SDGRAPH_ERRORS_HPP_
#define SDGRAPH_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace sdgraph {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed textual input (edge lists, graph6). `line()` is 1-based, 0 when
// the input has no line structure.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

// Well-formed input that violates a structural invariant (self-loop,
// non-alternating walk, overlapping matching edges).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Operation called outside its domain (edge not present, even ear, matched
// gadget anchor, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Input exceeds a configured size bound.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// A mathematical guarantee failed to hold. Never expected in practice.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace sdgraph

#endif  // SDGRAPH_ERRORS_HPP_
