#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mcong {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller violated a documented precondition (m < 2, i out of range, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class DivisionByZeroPoly : public Error {
 public:
  DivisionByZeroPoly() : Error("polynomial division by zero") {}
};

class DivisionByZeroRatFun : public Error {
 public:
  DivisionByZeroRatFun() : Error("rational function division by zero") {}
};

/// The result would have a denominator vanishing at q = 0, so it is not a
/// formal power series.
class NonSeriesResult : public Error {
 public:
  explicit NonSeriesResult(const std::string& what = "denominator vanishes at q = 0")
      : Error(what) {}
};

/// An internal consistency check failed. Always a bug.
class InternalInvariant : public Error {
 public:
  using Error::Error;
};

/// The question cannot be decided in the chosen representation. This is a
/// tooling limitation, not a mathematical verdict.
class RepresentationError : public Error {
 public:
  RepresentationError(std::string kind, const std::string& what)
      : Error(what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

class SectionVanishes : public RepresentationError {
 public:
  explicit SectionVanishes(const std::string& what)
      : RepresentationError("SectionVanishes", what) {}
};

class NonUnitDenominator : public RepresentationError {
 public:
  explicit NonUnitDenominator(const std::string& what)
      : RepresentationError("NonUnitDenominator", what) {}
};

class NonIntegralCoefficient : public RepresentationError {
 public:
  explicit NonIntegralCoefficient(const std::string& what)
      : RepresentationError("NonIntegralCoefficient", what) {}
};

class AmbiguousNormalization : public RepresentationError {
 public:
  explicit AmbiguousNormalization(const std::string& what)
      : RepresentationError("AmbiguousNormalization", what) {}
};

class ProductDiverges : public Error {
 public:
  ProductDiverges() : Error("infinite product needs R(0) = 1") {}
};

/// Parse failure; `position` is the 0-based offset of the offending token.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class UnboundM : public Error {
 public:
  explicit UnboundM(std::size_t position)
      : Error("identifier m used without a value at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace mcong
