#pragma once

#include <stdexcept>
#include <string>

namespace minfill {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input documents (JSON, rationals, topology descriptions).
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(what) {}
};

/// Well-formed input that violates a domain invariant.
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what) : Error(what) {}
};

/// Boundary set larger than the configured enumeration limit.
class SizeLimitError : public Error {
 public:
  explicit SizeLimitError(const std::string& what) : Error(what) {}
};

/// The space violates the triangle inequality, so the equality mf = mf_minus
/// is not asserted for it.
class OutOfHypothesisError : public Error {
 public:
  explicit OutOfHypothesisError(const std::string& what) : Error(what) {}
};

/// Raised when the negative-edge removal loop cannot make progress.
class DenegativizeError : public Error {
 public:
  explicit DenegativizeError(const std::string& what) : Error(what) {}
};

}  // namespace minfill
