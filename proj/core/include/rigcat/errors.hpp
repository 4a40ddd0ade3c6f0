#pragma once

#include <stdexcept>
#include <string>

namespace rigcat {

/// Base class for all errors raised by the engine.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed textual input (shape grammar, witness grammar, JSON payloads).
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& msg) : Error(msg) {}
};

/// A witness term fails to typecheck (composition or copairing mismatch).
class TypeError : public Error {
 public:
  explicit TypeError(const std::string& msg) : Error(msg) {}
};

/// A shape variable is unbound, or an environment binding is invalid.
class EnvError : public Error {
 public:
  explicit EnvError(const std::string& msg) : Error(msg) {}
};

/// Asked to invert a term containing a non-invertible constructor.
class NotInvertibleError : public Error {
 public:
  explicit NotInvertibleError(const std::string& msg) : Error(msg) {}
};

/// A concrete morphism left the representable (partial-)monomial fragment,
/// or an inverse was requested of a non-bijection.
class BackendError : public Error {
 public:
  explicit BackendError(const std::string& msg) : Error(msg) {}
};

}  // namespace rigcat
