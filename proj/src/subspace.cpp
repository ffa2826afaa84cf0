#include "leibniz/subspace.hpp"

#include "leibniz/errors.hpp"

namespace leibniz {

Subspace Subspace::from_rows(std::size_t ambient, const std::vector<Vec>& rows) {
  for (const auto& r : rows)
    if (r.size() != ambient) throw ShapeError("subspace row length mismatch");
  if (rows.empty()) return zero(ambient);
  RrefResult rr = rref(Matrix::from_rows(rows));
  Matrix b(rr.rank(), ambient);
  for (std::size_t i = 0; i < rr.rank(); ++i)
    for (std::size_t j = 0; j < ambient; ++j) b.at(i, j) = rr.mat.at(i, j);
  return Subspace(ambient, std::move(b));
}

Subspace Subspace::from_matrix_rows(const Matrix& m) {
  std::vector<Vec> rows;
  rows.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
  Subspace s = from_rows(m.cols(), rows);
  return s;
}

bool Subspace::contains(const Vec& v) const {
  if (v.size() != ambient_) throw ShapeError("contains: vector length mismatch");
  // reduce v against the RREF basis
  Vec w(v);
  std::size_t col = 0;
  for (std::size_t r = 0; r < basis_.rows(); ++r) {
    while (col < ambient_ && basis_.at(r, col).is_zero()) ++col;
    if (col == ambient_) break;
    if (!w[col].is_zero()) {
      const Rat f = w[col];
      for (std::size_t j = col; j < ambient_; ++j)
        if (!basis_.at(r, j).is_zero()) w[j] -= f * basis_.at(r, j);
    }
  }
  return vec_is_zero(w);
}

bool Subspace::includes(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw ShapeError("ambient dimension mismatch");
  // rank test: rank(this) == rank(this stacked with other)
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < basis_.rows(); ++i) rows.push_back(basis_.row(i));
  for (std::size_t i = 0; i < other.basis_.rows(); ++i) rows.push_back(other.basis_.row(i));
  if (rows.empty()) return true;
  return rref(Matrix::from_rows(rows)).rank() == dim();
}

Subspace Subspace::sum(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw ShapeError("ambient dimension mismatch");
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < basis_.rows(); ++i) rows.push_back(basis_.row(i));
  for (std::size_t i = 0; i < other.basis_.rows(); ++i) rows.push_back(other.basis_.row(i));
  return from_rows(ambient_, rows);
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw ShapeError("ambient dimension mismatch");
  if (is_zero() || other.is_zero()) return zero(ambient_);
  // stacked-nullspace method: solutions of  sum_i x_i a_i - sum_j y_j b_j = 0
  const std::size_t ka = dim(), kb = other.dim();
  Matrix m(ambient_, ka + kb);
  for (std::size_t i = 0; i < ka; ++i)
    for (std::size_t j = 0; j < ambient_; ++j) m.at(j, i) = basis_.at(i, j);
  for (std::size_t i = 0; i < kb; ++i)
    for (std::size_t j = 0; j < ambient_; ++j) m.at(j, ka + i) = -other.basis_.at(i, j);
  const Matrix ker = nullspace_rows(m);
  std::vector<Vec> rows;
  for (std::size_t r = 0; r < ker.rows(); ++r) {
    Vec v(ambient_, Rat(0));
    for (std::size_t i = 0; i < ka; ++i) vec_axpy(v, ker.at(r, i), basis_.row(i));
    rows.push_back(std::move(v));
  }
  return from_rows(ambient_, rows);
}

std::string Subspace::str() const {
  std::string s = "dim " + std::to_string(dim()) + " in Q^" + std::to_string(ambient_) + "\n";
  s += basis_.str();
  return s;
}

}  // namespace leibniz
