#pragma once

#include <string>
#include <utility>
#include <vector>

#include "leibniz/rational.hpp"

namespace leibniz {

/// Univariate polynomial over Q, coefficients stored lowest-degree first.
/// Invariant: no trailing zero coefficients (the zero polynomial is the
/// empty coefficient list).
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
  static UniPoly constant(const Rat& r) { return UniPoly({r}); }
  // t^k
  static UniPoly monomial(std::size_t k, const Rat& coeff = Rat(1));

  bool is_zero() const { return c_.empty(); }
  // degree of the zero polynomial is reported as -1
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rat(0); }
  Rat lead() const { return c_.empty() ? Rat(0) : c_.back(); }

  Rat eval(const Rat& x) const;

  UniPoly operator-() const;
  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  UniPoly scaled(const Rat& s) const;

  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

  // Exact division by (t - r); requires r to be a root.
  UniPoly divide_linear(const Rat& r) const;

  std::string str(const std::string& var = "t") const;

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<Rat> c_;
};

/// All rational roots with multiplicities, sorted ascending by root.
/// Throws ZeroPolynomial on the zero polynomial. Uses the rational root
/// theorem on the integer-scaled polynomial; multiplicities by repeated
/// exact division.
std::vector<std::pair<Rat, std::size_t>> rational_roots(const UniPoly& p);

}  // namespace leibniz
