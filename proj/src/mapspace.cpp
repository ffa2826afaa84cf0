#include "leibniz/mapspace.hpp"

#include <map>

#include "leibniz/errors.hpp"

namespace leibniz {

MapSpace::MapSpace(std::size_t ambient, std::vector<Matrix> basis)
    : ambient_(ambient), basis_(std::move(basis)) {
  std::vector<Vec> rows;
  for (const auto& m : basis_) {
    if (m.rows() != ambient_ || m.cols() != ambient_)
      throw ShapeError("map space basis matrix has wrong shape");
    rows.push_back(m.flatten());
  }
  if (!rows.empty() && Subspace::from_rows(ambient_ * ambient_, rows).dim() != basis_.size())
    throw Error("map space basis is linearly dependent");
}

MapSpace MapSpace::from_flat_subspace(std::size_t ambient, const Subspace& s) {
  if (s.ambient_dim() != ambient * ambient)
    throw ShapeError("flat subspace has wrong ambient dimension");
  std::vector<Matrix> basis;
  for (std::size_t i = 0; i < s.dim(); ++i)
    basis.push_back(Matrix::unflatten(ambient, ambient, s.basis_row(i)));
  return MapSpace(ambient, std::move(basis));
}

Subspace MapSpace::as_subspace() const {
  std::vector<Vec> rows;
  for (const auto& m : basis_) rows.push_back(m.flatten());
  return Subspace::from_rows(ambient_ * ambient_, rows);
}

bool MapSpace::contains(const Matrix& m) const {
  if (m.rows() != ambient_ || m.cols() != ambient_) return false;
  return as_subspace().contains(m.flatten());
}

PolyMatrix::PolyMatrix(std::size_t r, std::size_t c, std::vector<std::string> vs)
    : rows(r), cols(c), vars(std::move(vs)) {
  a.assign(rows * cols, MultiPoly(vars));
}

Matrix PolyMatrix::eval(const std::vector<Rat>& point) const {
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = at(i, j).eval(point);
  return m;
}

std::string PolyMatrix::str() const {
  std::string s;
  for (std::size_t i = 0; i < rows; ++i) {
    s += "[ ";
    for (std::size_t j = 0; j < cols; ++j) {
      if (j) s += " | ";
      s += at(i, j).str();
    }
    s += " ]\n";
  }
  return s;
}

PolyMatrix generic_element(const MapSpace& s) {
  std::vector<std::string> vars;
  for (std::size_t i = 0; i < s.dim(); ++i) vars.push_back("x" + std::to_string(i + 1));
  PolyMatrix g(s.ambient_dim(), s.ambient_dim(), vars);
  for (std::size_t b = 0; b < s.dim(); ++b) {
    const Matrix& m = s.basis()[b];
    for (std::size_t i = 0; i < g.rows; ++i)
      for (std::size_t j = 0; j < g.cols; ++j) {
        const Rat& c = m.at(i, j);
        if (c.is_zero()) continue;
        MultiPoly::Exponents e(vars.size(), 0);
        e[b] = 1;
        g.at(i, j).add_term(e, c);
      }
  }
  return g;
}

namespace {

// cofactor expansion along the first remaining column, memoized on the
// row subset (columns are consumed left to right)
MultiPoly det_cofactor(const PolyMatrix& m, unsigned rows_mask, std::size_t col,
                       std::map<unsigned, MultiPoly>& memo) {
  auto it = memo.find(rows_mask);
  if (it != memo.end()) return it->second;
  MultiPoly result(m.vars);
  int sign = 1;
  for (std::size_t i = 0; i < m.rows; ++i) {
    if (!(rows_mask & (1u << i))) continue;
    const MultiPoly& entry = m.at(i, col);
    if (!entry.is_zero()) {
      const unsigned sub = rows_mask & ~(1u << i);
      MultiPoly minor = sub == 0 ? MultiPoly::constant(m.vars, Rat(1))
                                 : det_cofactor(m, sub, col + 1, memo);
      MultiPoly term = entry * minor;
      result += sign > 0 ? term : -term;
    }
    sign = -sign;  // flips once per row present in the mask
  }
  memo.emplace(rows_mask, result);
  return result;
}

MultiPoly det_bareiss(const PolyMatrix& m_in) {
  PolyMatrix m = m_in;
  const std::size_t n = m.rows;
  MultiPoly prev_pivot = MultiPoly::constant(m.vars, Rat(1));
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t sel = k;
    while (sel < n && m.at(sel, k).is_zero()) ++sel;
    if (sel == n) return MultiPoly(m.vars);  // zero column below: det = 0
    if (sel != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m.at(sel, j), m.at(k, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        MultiPoly num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        m.at(i, j) = num.exact_div(prev_pivot);
      }
      m.at(i, k) = MultiPoly(m.vars);
    }
    prev_pivot = m.at(k, k);
  }
  MultiPoly d = m.at(n - 1, n - 1);
  return sign > 0 ? d : -d;
}

}  // namespace

MultiPoly symbolic_det(const PolyMatrix& m) {
  if (m.rows != m.cols) throw ShapeError("symbolic_det of non-square matrix");
  if (m.rows == 0) return MultiPoly::constant(m.vars, Rat(1));
  if (m.rows <= 6) {
    std::map<unsigned, MultiPoly> memo;
    return det_cofactor(m, (1u << m.rows) - 1, 0, memo);
  }
  return det_bareiss(m);
}

std::vector<MultiPoly> symbolic_char_poly(const PolyMatrix& m) {
  if (m.rows != m.cols) throw ShapeError("symbolic_char_poly of non-square matrix");
  const std::size_t n = m.rows;
  std::vector<MultiPoly> c(n, MultiPoly(m.vars));
  if (n == 0) return c;
  PolyMatrix mk = m;
  for (std::size_t k = 1; k <= n; ++k) {
    if (k > 1) {
      // mk <- m * mk
      PolyMatrix next(n, n, m.vars);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < n; ++l) {
          const MultiPoly& mil = m.at(i, l);
          if (mil.is_zero()) continue;
          for (std::size_t j = 0; j < n; ++j) {
            if (mk.at(l, j).is_zero()) continue;
            next.at(i, j) += mil * mk.at(l, j);
          }
        }
      mk = std::move(next);
    }
    MultiPoly tr(m.vars);
    for (std::size_t i = 0; i < n; ++i) tr += mk.at(i, i);
    c[n - k] = (-tr).div_scalar(Rat(static_cast<long>(k)));
    if (k < n)
      for (std::size_t i = 0; i < n; ++i) mk.at(i, i) += c[n - k];
  }
  return c;
}

}  // namespace leibniz
