#include "leibniz/algebra.hpp"

#include <algorithm>
#include <map>

#include "leibniz/errors.hpp"

namespace leibniz {

namespace {

// advance a base-`base` odometer; false once every tuple has been visited
bool advance(std::vector<std::size_t>& idx, std::size_t base) {
  for (std::size_t p = idx.size(); p-- > 0;) {
    if (++idx[p] < base) return true;
    idx[p] = 0;
  }
  return false;
}

}  // namespace

LeibnizAlgebra LeibnizAlgebra::create(std::size_t dim, const std::vector<Entry>& entries,
                                      std::string name, bool unchecked) {
  if (dim == 0) throw RangeError("algebra dimension must be positive");
  LeibnizAlgebra L;
  L.dim_ = dim;
  L.name_ = std::move(name);
  L.unchecked_ = unchecked;
  L.c_.assign(dim * dim, {});

  std::map<std::pair<std::size_t, std::size_t>, std::map<std::size_t, Rat>> acc;
  for (const auto& e : entries) {
    if (e.i >= dim || e.j >= dim || e.k >= dim)
      throw RangeError("structure constant index out of range");
    if (e.coeff.is_zero()) continue;
    acc[{e.i, e.j}][e.k] += e.coeff;
  }
  for (auto& [ij, prods] : acc) {
    auto& slot = L.c_[ij.first * dim + ij.second];
    for (auto& [k, c] : prods)
      if (!c.is_zero()) slot.emplace_back(k, c);
  }

  if (!unchecked) {
    const IdentityReport rep = check_leibniz_identity(L);
    if (!rep.ok)
      throw IdentityViolation(rep.i + 1, rep.j + 1, rep.k + 1,
                              "lhs " + vec_str(rep.lhs) + " vs rhs " + vec_str(rep.rhs));
  }
  return L;
}

Vec LeibnizAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
  Vec v(dim_, Rat(0));
  for (const auto& [k, c] : table(i, j)) v[k] = c;
  return v;
}

Vec LeibnizAlgebra::bracket(const Vec& x, const Vec& y) const {
  if (x.size() != dim_ || y.size() != dim_) throw ShapeError("bracket: element dimension mismatch");
  Vec v(dim_, Rat(0));
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j].is_zero()) continue;
      const auto& prods = table(i, j);
      if (prods.empty()) continue;
      const Rat f = x[i] * y[j];
      for (const auto& [k, c] : prods) v[k] += f * c;
    }
  }
  return v;
}

Vec LeibnizAlgebra::right_apply(const Vec& w, std::size_t j) const {
  Vec v(dim_, Rat(0));
  for (std::size_t i = 0; i < dim_; ++i) {
    if (w[i].is_zero()) continue;
    for (const auto& [k, c] : table(i, j)) v[k] += w[i] * c;
  }
  return v;
}

Vec LeibnizAlgebra::left_apply(std::size_t i, const Vec& w) const {
  Vec v(dim_, Rat(0));
  for (std::size_t j = 0; j < dim_; ++j) {
    if (w[j].is_zero()) continue;
    for (const auto& [k, c] : table(i, j)) v[k] += w[j] * c;
  }
  return v;
}

Matrix LeibnizAlgebra::right_mult(const Vec& x) const {
  if (x.size() != dim_) throw ShapeError("right_mult: element dimension mismatch");
  Matrix m(dim_, dim_);
  for (std::size_t z = 0; z < dim_; ++z)
    for (std::size_t j = 0; j < dim_; ++j) {
      if (x[j].is_zero()) continue;
      for (const auto& [k, c] : table(z, j)) m.at(k, z) += x[j] * c;
    }
  return m;
}

Matrix LeibnizAlgebra::right_mult_basis(std::size_t i) const {
  return right_mult(basis_vec(dim_, i));
}

IdentityReport check_leibniz_identity(const LeibnizAlgebra& L) {
  const std::size_t d = L.dim();
  std::vector<Vec> B(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) B[i * d + j] = L.bracket_basis(i, j);

  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        const Vec lhs = L.left_apply(i, B[j * d + k]);
        const Vec rhs = vec_sub(L.right_apply(B[i * d + j], k), L.right_apply(B[i * d + k], j));
        if (lhs != rhs) {
          IdentityReport rep;
          rep.ok = false;
          rep.i = i;
          rep.j = j;
          rep.k = k;
          rep.lhs = lhs;
          rep.rhs = rhs;
          return rep;
        }
      }
  return {};
}

Vec n_ary_right(const LeibnizAlgebra& L, const std::vector<Vec>& xs) {
  if (xs.size() < 2) throw ArityError("n-ary product needs arity >= 2");
  Vec acc = L.bracket(xs[0], xs[1]);
  for (std::size_t m = 2; m < xs.size(); ++m) {
    if (vec_is_zero(acc)) return acc;
    acc = L.bracket(acc, xs[m]);
  }
  return acc;
}

Vec n_ary_left(const LeibnizAlgebra& L, const std::vector<Vec>& xs) {
  if (xs.size() < 2) throw ArityError("n-ary product needs arity >= 2");
  Vec acc = L.bracket(xs[xs.size() - 2], xs[xs.size() - 1]);
  for (std::size_t m = xs.size() - 2; m-- > 0;) {
    if (vec_is_zero(acc)) return acc;
    acc = L.bracket(xs[m], acc);
  }
  return acc;
}

Vec n_ary(const LeibnizAlgebra& L, const std::vector<Vec>& xs, ProductSide side) {
  return side == ProductSide::right ? n_ary_right(L, xs) : n_ary_left(L, xs);
}

NAlgebraIdentityReport check_n_algebra_identity(const LeibnizAlgebra& L, std::size_t n,
                                                ProductSide side) {
  if (n < 2) throw ArityError("n-algebra identity needs n >= 2");
  const std::size_t d = L.dim();

  std::vector<std::size_t> ys(n - 1, 0);
  do {
    // inner products [e_i, y2..yn], shared by every x-tuple at this y-tuple
    std::vector<Vec> inner(d);
    for (std::size_t i = 0; i < d; ++i) {
      std::vector<Vec> args(n);
      args[0] = basis_vec(d, i);
      for (std::size_t m = 0; m + 1 < n; ++m) args[m + 1] = basis_vec(d, ys[m]);
      inner[i] = n_ary(L, args, side);
    }

    std::vector<std::size_t> xs(n, 0);
    do {
      std::vector<Vec> xsv(n);
      for (std::size_t m = 0; m < n; ++m) xsv[m] = basis_vec(d, xs[m]);
      const Vec t = n_ary(L, xsv, side);

      std::vector<Vec> args(n);
      args[0] = t;
      for (std::size_t m = 0; m + 1 < n; ++m) args[m + 1] = basis_vec(d, ys[m]);
      const Vec lhs = n_ary(L, args, side);

      Vec rhs(d, Rat(0));
      for (std::size_t pos = 0; pos < n; ++pos) {
        std::vector<Vec> sub(xsv);
        sub[pos] = inner[xs[pos]];
        rhs = vec_add(rhs, n_ary(L, sub, side));
      }

      if (lhs != rhs) {
        NAlgebraIdentityReport rep;
        rep.ok = false;
        rep.xs = xs;
        rep.ys = ys;
        rep.lhs = lhs;
        rep.rhs = rhs;
        return rep;
      }
    } while (advance(xs, d));
  } while (advance(ys, d));
  return {};
}

}  // namespace leibniz
