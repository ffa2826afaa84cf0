#include "leibniz/matrix.hpp"

#include "leibniz/errors.hpp"

namespace leibniz {

bool vec_is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Vec vec_add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw ShapeError("vector size mismatch");
  Vec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw ShapeError("vector size mismatch");
  Vec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vec vec_scaled(const Vec& v, const Rat& s) {
  Vec r(v);
  for (auto& x : r) x *= s;
  return r;
}

void vec_axpy(Vec& a, const Rat& s, const Vec& b) {
  if (a.size() != b.size()) throw ShapeError("vector size mismatch");
  if (s.is_zero()) return;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!b[i].is_zero()) a[i] += s * b[i];
}

Vec basis_vec(std::size_t dim, std::size_t i) {
  Vec v(dim, Rat(0));
  v[i] = Rat(1);
  return v;
}

std::string vec_str(const Vec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].str();
  }
  return s + ")";
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rat(1);
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows) {
  if (rows.empty()) return Matrix(0, 0);
  Matrix m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw ShapeError("ragged rows");
    for (std::size_t j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

Vec Matrix::row(std::size_t i) const {
  Vec v(cols_);
  for (std::size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

Vec Matrix::col(std::size_t j) const {
  Vec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

bool Matrix::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ShapeError("matrix size mismatch");
  Matrix r(a);
  for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] += b.a_[i];
  return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ShapeError("matrix size mismatch");
  Matrix r(a);
  for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] -= b.a_[i];
  return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw ShapeError("matrix product shape mismatch");
  Matrix r(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rat& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Rat& bkj = b.at(k, j);
        if (!bkj.is_zero()) r.at(i, j) += aik * bkj;
      }
    }
  return r;
}

Matrix Matrix::scaled(const Rat& s) const {
  Matrix r(*this);
  for (auto& x : r.a_) x *= s;
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

Matrix Matrix::pow(std::size_t e) const {
  if (!is_square()) throw ShapeError("pow of non-square matrix");
  Matrix acc = identity(rows_);
  Matrix b(*this);
  while (e) {
    if (e & 1) acc = acc * b;
    b = b * b;
    e >>= 1;
  }
  return acc;
}

Rat Matrix::trace() const {
  if (!is_square()) throw ShapeError("trace of non-square matrix");
  Rat t(0);
  for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

Vec Matrix::apply(const Vec& v) const {
  if (v.size() != cols_) throw ShapeError("apply: vector length mismatch");
  Vec r(rows_, Rat(0));
  for (std::size_t j = 0; j < cols_; ++j) {
    if (v[j].is_zero()) continue;
    for (std::size_t i = 0; i < rows_; ++i) {
      const Rat& aij = at(i, j);
      if (!aij.is_zero()) r[i] += aij * v[j];
    }
  }
  return r;
}

Matrix Matrix::unflatten(std::size_t rows, std::size_t cols, const Vec& flat) {
  if (flat.size() != rows * cols) throw ShapeError("unflatten length mismatch");
  Matrix m(rows, cols);
  m.a_ = flat;
  return m;
}

std::string Matrix::str() const {
  std::string s;
  for (std::size_t i = 0; i < rows_; ++i) {
    s += "[ ";
    for (std::size_t j = 0; j < cols_; ++j) {
      s += at(i, j).str();
      s += " ";
    }
    s += "]\n";
  }
  return s;
}

RrefResult rref(const Matrix& m) {
  Matrix r(m);
  std::vector<std::size_t> pivots;
  std::size_t pr = 0;  // next pivot row
  for (std::size_t pc = 0; pc < r.cols() && pr < r.rows(); ++pc) {
    std::size_t sel = pr;
    while (sel < r.rows() && r.at(sel, pc).is_zero()) ++sel;
    if (sel == r.rows()) continue;
    if (sel != pr)
      for (std::size_t j = 0; j < r.cols(); ++j) std::swap(r.at(sel, j), r.at(pr, j));
    const Rat inv = r.at(pr, pc).inv();
    for (std::size_t j = pc; j < r.cols(); ++j) r.at(pr, j) *= inv;
    for (std::size_t i = 0; i < r.rows(); ++i) {
      if (i == pr) continue;
      const Rat f = r.at(i, pc);
      if (f.is_zero()) continue;
      for (std::size_t j = pc; j < r.cols(); ++j)
        if (!r.at(pr, j).is_zero()) r.at(i, j) -= f * r.at(pr, j);
    }
    pivots.push_back(pc);
    ++pr;
  }
  return {std::move(r), std::move(pivots)};
}

Matrix nullspace_rows(const Matrix& m) {
  const RrefResult rr = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : rr.pivot_cols) is_pivot[p] = true;

  std::vector<Vec> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vec v(n, Rat(0));
    v[f] = Rat(1);
    for (std::size_t r = 0; r < rr.pivot_cols.size(); ++r)
      v[rr.pivot_cols[r]] = -rr.mat.at(r, f);
    basis.push_back(std::move(v));
  }
  if (basis.empty()) return Matrix(0, n);
  // canonicalize the basis itself
  RrefResult canon = rref(Matrix::from_rows(basis));
  Matrix out(canon.rank(), n);
  for (std::size_t i = 0; i < canon.rank(); ++i)
    for (std::size_t j = 0; j < n; ++j) out.at(i, j) = canon.mat.at(i, j);
  return out;
}

Rat det(const Matrix& m) {
  if (!m.is_square()) throw ShapeError("det of non-square matrix");
  Matrix r(m);
  const std::size_t n = r.rows();
  Rat d(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t sel = c;
    while (sel < n && r.at(sel, c).is_zero()) ++sel;
    if (sel == n) return Rat(0);
    if (sel != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(r.at(sel, j), r.at(c, j));
      d = -d;
    }
    d *= r.at(c, c);
    const Rat inv = r.at(c, c).inv();
    for (std::size_t i = c + 1; i < n; ++i) {
      const Rat f = r.at(i, c) * inv;
      if (f.is_zero()) continue;
      for (std::size_t j = c; j < n; ++j)
        if (!r.at(c, j).is_zero()) r.at(i, j) -= f * r.at(c, j);
    }
  }
  return d;
}

Matrix inverse(const Matrix& m) {
  if (!m.is_square()) throw ShapeError("inverse of non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = Rat(1);
  }
  const RrefResult rr = rref(aug);
  for (std::size_t i = 0; i < n; ++i)
    if (i >= rr.pivot_cols.size() || rr.pivot_cols[i] != i)
      throw Error("inverse of singular matrix");
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = rr.mat.at(i, n + j);
  return inv;
}

UniPoly char_poly(const Matrix& m) {
  if (!m.is_square()) throw ShapeError("char_poly of non-square matrix");
  const std::size_t n = m.rows();
  std::vector<Rat> c(n + 1, Rat(0));
  c[n] = Rat(1);
  if (n == 0) return UniPoly(std::move(c));
  Matrix mk = m;
  for (std::size_t k = 1; k <= n; ++k) {
    if (k > 1) mk = m * mk;
    c[n - k] = -mk.trace() / Rat(static_cast<long>(k));
    if (k < n)
      for (std::size_t i = 0; i < n; ++i) mk.at(i, i) += c[n - k];
  }
  return UniPoly(std::move(c));
}

bool is_nilpotent_matrix(const Matrix& m) {
  const UniPoly cp = char_poly(m);
  for (std::size_t k = 0; k + 1 < cp.coeffs().size(); ++k)
    if (!cp.coeff(k).is_zero()) return false;
  return true;
}

bool is_invertible(const Matrix& m) { return !det(m).is_zero(); }

}  // namespace leibniz
