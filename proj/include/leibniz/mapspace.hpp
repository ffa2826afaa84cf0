#pragma once

#include <vector>

#include "leibniz/matrix.hpp"
#include "leibniz/multipoly.hpp"
#include "leibniz/subspace.hpp"

namespace leibniz {

/// Finite-dimensional space of linear maps on Q^n, held as a list of
/// linearly independent basis matrices. Flattening is row-major, matching
/// Matrix::flatten, so a MapSpace can be compared through as_subspace().
class MapSpace {
 public:
  MapSpace(std::size_t ambient, std::vector<Matrix> basis);

  static MapSpace from_flat_subspace(std::size_t ambient, const Subspace& s);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Matrix>& basis() const { return basis_; }

  Subspace as_subspace() const;
  bool contains(const Matrix& m) const;

  /// Sum of basis matrices weighted by fresh variables x1..xb.
  friend struct PolyMatrix;

 private:
  std::size_t ambient_;
  std::vector<Matrix> basis_;
};

/// Matrix over MultiPoly; all entries share one variable ordering.
struct PolyMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<std::string> vars;
  std::vector<MultiPoly> a;

  PolyMatrix() = default;
  PolyMatrix(std::size_t r, std::size_t c, std::vector<std::string> vs);

  MultiPoly& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const MultiPoly& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

  Matrix eval(const std::vector<Rat>& point) const;
  std::string str() const;
};

/// Generic element sum_i x_i B_i of a map space; variables are named
/// "x1".."xb" in basis order.
PolyMatrix generic_element(const MapSpace& s);

/// Exact determinant of a square polynomial matrix. Cofactor expansion with
/// minor memoization for dimension <= 6, fraction-free Bareiss elimination
/// (exact polynomial divisions) above that.
MultiPoly symbolic_det(const PolyMatrix& m);

/// Non-leading coefficients of det(tI - m): index k holds the coefficient
/// of t^k, for k = 0..dim-1. The leading coefficient is always 1.
std::vector<MultiPoly> symbolic_char_poly(const PolyMatrix& m);

}  // namespace leibniz
