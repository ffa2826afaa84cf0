#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "leibniz/rational.hpp"

namespace leibniz {

/// Sparse multivariate polynomial over Q.
///
/// Terms live in a map keyed by dense exponent tuples under graded
/// lexicographic order, so iteration order (and hence serialization) is
/// deterministic. Invariants: no stored zero coefficients; every exponent
/// tuple has length vars().size(). Arithmetic requires both operands to
/// share one variable ordering and throws ArityError otherwise.
class MultiPoly {
 public:
  using Exponents = std::vector<unsigned>;

  struct GrlexLess {
    bool operator()(const Exponents& a, const Exponents& b) const;
  };
  using TermMap = std::map<Exponents, Rat, GrlexLess>;

  MultiPoly() = default;  // zero polynomial over no variables
  explicit MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

  static MultiPoly constant(std::vector<std::string> vars, const Rat& c);
  static MultiPoly variable(std::vector<std::string> vars, std::size_t index);

  const std::vector<std::string>& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rat constant_value() const;  // requires is_constant()
  std::size_t total_degree() const;

  MultiPoly operator-() const;
  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly scaled(const Rat& s) const;
  MultiPoly div_scalar(const Rat& s) const;  // throws DivisionByZero

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

  /// Full evaluation; point size must match the variable count (ArityError).
  Rat eval(const std::vector<Rat>& point) const;

  /// Substitute one variable by a constant; the variable list is unchanged
  /// (the variable simply no longer occurs).
  MultiPoly substitute(std::size_t var_index, const Rat& value) const;

  /// Exact division: *this must be divisible by d; throws Error otherwise.
  MultiPoly exact_div(const MultiPoly& d) const;

  void add_term(const Exponents& e, const Rat& c);

  /// Deterministic rendering, leading term first, e.g. "720*x1^6 - 2*x2*x3".
  std::string str() const;

 private:
  void require_same_vars(const MultiPoly& o) const;
  std::vector<std::string> vars_;
  TermMap terms_;
};

}  // namespace leibniz
