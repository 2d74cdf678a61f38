#ifndef CIRCDLP_ERRORS_HPP
#define CIRCDLP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace circdlp {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Two operands belong to different fields.
class FieldMismatchError : public Error {
 public:
  explicit FieldMismatchError(const std::string& what) : Error(what) {}
};

/// Inversion or division by zero in a field.
class DivisionByZeroError : public Error {
 public:
  explicit DivisionByZeroError(const std::string& what) : Error(what) {}
};

/// Dimension mismatch or an unsupported dimension (e.g. even d where odd is required).
class DimensionError : public Error {
 public:
  explicit DimensionError(const std::string& what) : Error(what) {}
};

/// A ring element has no inverse; carries a printable form of the offending gcd.
class NotInvertibleError : public Error {
 public:
  NotInvertibleError(const std::string& what, std::string gcd)
      : Error(what), gcd_(std::move(gcd)) {}
  /// The nontrivial gcd of the representer polynomial and x^d - 1.
  const std::string& gcd() const { return gcd_; }

 private:
  std::string gcd_;
};

/// gcd(d, q) != 1: the ring does not split as F[x]/(x-1) x F[x]/psi.
class InseparableModulusError : public Error {
 public:
  explicit InseparableModulusError(const std::string& what) : Error(what) {}
};

/// Message encoding/decoding failure (oversize, malformed header, bad padding).
class EncodingError : public Error {
 public:
  explicit EncodingError(const std::string& what) : Error(what) {}
};

/// Parameter generation exhausted its retry budget.
class GenerationError : public Error {
 public:
  explicit GenerationError(const std::string& what) : Error(what) {}
};

/// A discrete-log instance is internally inconsistent (e.g. target outside the group).
class InvalidInstanceError : public Error {
 public:
  explicit InvalidInstanceError(const std::string& what) : Error(what) {}
};

/// Malformed file, hex string, or wire bytes.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(what) {}
};

}  // namespace circdlp

#endif  // CIRCDLP_ERRORS_HPP
