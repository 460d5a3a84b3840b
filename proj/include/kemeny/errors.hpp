#pragma once

#include <stdexcept>
#include <string>

namespace kemeny {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parameter lies outside the domain of a formula or family.
class DomainError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class DisconnectedGraphError : public Error {
 public:
  using Error::Error;
};

class DuplicateEdgeError : public Error {
 public:
  using Error::Error;
};

class VertexRangeError : public Error {
 public:
  using Error::Error;
};

/// Raised when an exact solve meets a zero pivot. For connected graphs this
/// indicates a bug, never bad input.
class SingularSystemError : public Error {
 public:
  using Error::Error;
};

/// An integer scan failed to find the sign change a lemma guarantees.
class BracketError : public Error {
 public:
  using Error::Error;
};

/// Internal invariant violated (e.g. a forest count that is not an integer).
class InvariantError : public Error {
 public:
  using Error::Error;
};

namespace detail {

template <class E = DomainError>
inline void require(bool ok, const std::string& what) {
  if (!ok) throw E(what);
}

}  // namespace detail
}  // namespace kemeny
