#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace aspnf {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// 1-based position in a source text.
struct SourceSpan {
  std::size_t line = 1;
  std::size_t column = 1;
};

/// Malformed input text (program, anti-chain, graph or trace file).
class SyntaxError : public Error {
 public:
  SyntaxError(SourceSpan span, const std::string& message)
      : Error(std::to_string(span.line) + ":" + std::to_string(span.column) +
              ": " + message),
        span_(span) {}

  const SourceSpan& span() const noexcept { return span_; }

 private:
  SourceSpan span_;
};

/// A user-supplied atom uses the `__` prefix reserved for generated atoms.
class ReservedAtomError : public Error {
 public:
  using Error::Error;
};

/// An atom name outside the permitted character set.
class InvalidAtomError : public Error {
 public:
  using Error::Error;
};

/// Exhaustive search refused: the atom universe exceeds the configured cap.
class CapExceededError : public Error {
 public:
  using Error::Error;
};

/// Cycle enumeration found more cycles than the configured cap.
class CycleCapError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its documented domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Random generation gave up after its retry budget.
class GenerationError : public Error {
 public:
  using Error::Error;
};

/// An interpretation could not be decoded into a domain object.
class DecodeError : public Error {
 public:
  using Error::Error;
};

}  // namespace aspnf
