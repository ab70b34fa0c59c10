#pragma once

#include <stdexcept>
#include <string>

namespace qcert {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// series
class NonUnitLeading : public Error { using Error::Error; };
class PrecisionExceeded : public Error { using Error::Error; };
class ZeroUpToPrecision : public Error { using Error::Error; };
class GridError : public Error { using Error::Error; };

// etaq / orders / prover
class InvalidProduct : public Error { using Error::Error; };
class NotModular : public Error { using Error::Error; };
class CaseError : public Error { using Error::Error; };
class NormalizationRequired : public Error { using Error::Error; };

// upalgebra / rank
class NonTerminating : public Error { using Error::Error; };
class ResidualNonzero : public Error { using Error::Error; };
class CertificationFailed : public Error { using Error::Error; };
class PrecisionExhausted : public Error { using Error::Error; };
class TableTooSmall : public Error { using Error::Error; };

/// Malformed identity-spec text; carries a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& message)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column),
        message_(message) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }
  const std::string& detail() const noexcept { return message_; }

 private:
  int line_;
  int column_;
  std::string message_;
};

}  // namespace qcert
