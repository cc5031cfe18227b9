#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace thetaforge {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
  public:
    DivisionByZero() : Error("division by zero") {}
    explicit DivisionByZero(const std::string& msg) : Error(msg) {}
};

class DivisionNotExact : public Error {
  public:
    DivisionNotExact() : Error("polynomial division leaves a nonzero remainder") {}
    explicit DivisionNotExact(const std::string& msg) : Error(msg) {}
};

class TruncationTooShort : public Error {
  public:
    explicit TruncationTooShort(const std::string& msg) : Error(msg) {}
};

class OrderMismatch : public Error {
  public:
    explicit OrderMismatch(const std::string& msg) : Error(msg) {}
};

class ZeroInitialForm : public Error {
  public:
    ZeroInitialForm() : Error("initial linear form must be nonzero") {}
};

class ConditionViolated : public Error {
  public:
    explicit ConditionViolated(const std::string& msg) : Error(msg) {}
};

class ZeroScalar : public Error {
  public:
    ZeroScalar() : Error("scaling polynomial must be nonzero") {}
};

class ZeroDenominator : public Error {
  public:
    explicit ZeroDenominator(const std::string& msg) : Error(msg) {}
};

/// Parse failures carry the byte offset of the offending input position.
class ParseError : public Error {
  public:
    ParseError(const std::string& msg, std::size_t offset)
        : Error(msg + " (byte " + std::to_string(offset) + ")"), offset_(offset) {}
    std::size_t offset() const noexcept { return offset_; }

  private:
    std::size_t offset_;
};

class SyntaxError : public ParseError {
  public:
    using ParseError::ParseError;
};

class MixedBasis : public ParseError {
  public:
    explicit MixedBasis(std::size_t offset)
        : ParseError("operator expression mixes the D and T symbols", offset) {}
};

class NegativePower : public ParseError {
  public:
    explicit NegativePower(std::size_t offset)
        : ParseError("operator powers must be non-negative", offset) {}
};

class EmptyForm : public ParseError {
  public:
    explicit EmptyForm(std::size_t offset) : ParseError("linear form must not be empty", offset) {}
};

/// A theorem-backed guarantee failed at runtime. This signals a bug in the
/// library itself, never a mathematical outcome; the CLI maps it to exit 3.
class InvariantViolation : public Error {
  public:
    explicit InvariantViolation(const std::string& msg) : Error(msg) {}
};

} // namespace thetaforge
