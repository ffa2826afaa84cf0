#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "leibniz/rational.hpp"
#include "leibniz/unipoly.hpp"

namespace leibniz {

using Vec = std::vector<Rat>;

bool vec_is_zero(const Vec& v);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scaled(const Vec& v, const Rat& s);
// a += s*b
void vec_axpy(Vec& a, const Rat& s, const Vec& b);
Vec basis_vec(std::size_t dim, std::size_t i);
std::string vec_str(const Vec& v);

/// Dense matrix over Q, row-major.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, Rat(0)) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vec>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rat& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Vec row(std::size_t i) const;
  Vec col(std::size_t j) const;

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  Matrix scaled(const Rat& s) const;
  Matrix transpose() const;
  Matrix pow(std::size_t e) const;
  Rat trace() const;

  Vec apply(const Vec& v) const;  // matrix * column vector

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  /// Flatten row-major into one vector of length rows*cols.
  Vec flatten() const { return a_; }
  static Matrix unflatten(std::size_t rows, std::size_t cols, const Vec& flat);

  std::string str() const;

 private:
  std::size_t rows_, cols_;
  std::vector<Rat> a_;
};

/// Reduced row echelon form; returns the canonical RREF and the pivot
/// column list. First-nonzero pivot choice makes the result deterministic.
struct RrefResult {
  Matrix mat;
  std::vector<std::size_t> pivot_cols;
  std::size_t rank() const { return pivot_cols.size(); }
};
RrefResult rref(const Matrix& m);

/// Canonical basis (as matrix rows, themselves in RREF) of {x : m x = 0}.
Matrix nullspace_rows(const Matrix& m);

Rat det(const Matrix& m);            // ShapeError unless square
Matrix inverse(const Matrix& m);     // Error if singular

/// Characteristic polynomial det(tI - m), monic, computed division-free in
/// the ring sense (Faddeev-LeVerrier; the only divisions are by integers).
UniPoly char_poly(const Matrix& m);

bool is_nilpotent_matrix(const Matrix& m);
bool is_invertible(const Matrix& m);

}  // namespace leibniz
