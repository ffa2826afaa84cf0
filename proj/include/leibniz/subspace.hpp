#pragma once

#include <vector>

#include "leibniz/matrix.hpp"

namespace leibniz {

/// Subspace of Q^n held in canonical form: the basis matrix is the RREF of
/// whatever rows were supplied, zero rows dropped. Two Subspace values are
/// equal iff their basis matrices are identical, which by RREF uniqueness
/// is exactly subspace equality.
class Subspace {
 public:
  Subspace() : ambient_(0), basis_(0, 0) {}

  static Subspace zero(std::size_t ambient) { return Subspace(ambient, Matrix(0, ambient)); }
  static Subspace full(std::size_t ambient) {
    return Subspace(ambient, Matrix::identity(ambient));
  }
  static Subspace from_rows(std::size_t ambient, const std::vector<Vec>& rows);
  static Subspace from_matrix_rows(const Matrix& m);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_; }

  const Matrix& basis() const { return basis_; }
  Vec basis_row(std::size_t i) const { return basis_.row(i); }

  bool contains(const Vec& v) const;
  /// other is a subspace of *this
  bool includes(const Subspace& other) const;
  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

  std::string str() const;

 private:
  Subspace(std::size_t ambient, Matrix basis) : ambient_(ambient), basis_(std::move(basis)) {}
  std::size_t ambient_;
  Matrix basis_;
};

}  // namespace leibniz
