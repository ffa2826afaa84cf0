#pragma once

#include <stdexcept>
#include <string>

namespace leibniz {

// Base class for every error thrown by the library.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct DivisionByZero : Error {
  DivisionByZero() : Error("division by zero") {}
};

// Dimension / shape mismatch between operands.
struct ShapeError : Error {
  explicit ShapeError(const std::string& what) : Error(what) {}
};

// Variable-list or arity mismatch (polynomials, n-ary products, orders).
struct ArityError : Error {
  explicit ArityError(const std::string& what) : Error(what) {}
};

struct ZeroPolynomial : Error {
  ZeroPolynomial() : Error("root finding on the zero polynomial") {}
};

// Characteristic polynomial does not split over Q; carries the residual factor.
struct NonSplitSpectrum : Error {
  explicit NonSplitSpectrum(std::string residual_poly)
      : Error("spectrum does not split over Q; residual factor " + residual_poly),
        residual(std::move(residual_poly)) {}
  std::string residual;
};

struct NotNilpotent : Error {
  explicit NotNilpotent(const std::string& what) : Error(what) {}
};

struct NotADerivation : Error {
  explicit NotADerivation(const std::string& what) : Error(what) {}
};

struct NotAnIdeal : Error {
  explicit NotAnIdeal(const std::string& what) : Error(what) {}
};

// File loading / string parsing problems; message carries path and field context.
struct ParseError : Error {
  explicit ParseError(const std::string& what) : Error(what) {}
};

// Structure constants violate the Leibniz identity; indices are 1-based.
struct IdentityViolation : Error {
  IdentityViolation(std::size_t i, std::size_t j, std::size_t k, const std::string& detail)
      : Error("Leibniz identity fails at basis triple (" + std::to_string(i) + "," +
              std::to_string(j) + "," + std::to_string(k) + "): " + detail),
        ti(i), tj(j), tk(k) {}
  std::size_t ti, tj, tk;
};

// Parameter outside the documented envelope (family index, order bound, ...).
struct RangeError : Error {
  explicit RangeError(const std::string& what) : Error(what) {}
};

}  // namespace leibniz
