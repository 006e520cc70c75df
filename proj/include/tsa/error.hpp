#pragma once

#include <stdexcept>
#include <string>

namespace tsa {

/// Base class for all library errors. CLI maps these to exit code 1.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Input shorter than the operation requires.
class LengthError : public Error {
public:
  using Error::Error;
};

/// Index or bound outside the valid range.
class RangeError : public Error {
public:
  using Error::Error;
};

/// Numerical breakdown (singular system, non-stationary polynomial, ...).
class NumericError : public Error {
public:
  using Error::Error;
};

/// Degenerate input, e.g. a zero-variance series.
class DegenerateError : public Error {
public:
  using Error::Error;
};

/// Malformed text (spec strings, model documents, CSV cells).
class ParseError : public Error {
public:
  using Error::Error;
};

/// Optimizer failed to converge; carries no iterate, the caller logs the message.
class FitError : public Error {
public:
  using Error::Error;
};

/// Structural problems in ingested data (gaps, duplicates, inconsistent totals).
class IngestError : public Error {
public:
  using Error::Error;
};

}  // namespace tsa
