#include "leibniz/series.hpp"

#include "leibniz/errors.hpp"
#include "leibniz/mapspace.hpp"

namespace leibniz {

Subspace product_subspace(const LeibnizAlgebra& L, const Subspace& A, const Subspace& B) {
  if (A.ambient_dim() != L.dim() || B.ambient_dim() != L.dim())
    throw ShapeError("product_subspace: ambient dimension mismatch");
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < A.dim(); ++i) {
    const Vec a = A.basis_row(i);
    for (std::size_t j = 0; j < B.dim(); ++j) {
      Vec p = L.bracket(a, B.basis_row(j));
      if (!vec_is_zero(p)) rows.push_back(std::move(p));
    }
  }
  return Subspace::from_rows(L.dim(), rows);
}

Subspace n_ary_product_subspace(const LeibnizAlgebra& L, const std::vector<Subspace>& factors) {
  if (factors.size() < 2) throw ArityError("n-ary subspace product needs arity >= 2");
  for (const auto& f : factors)
    if (f.ambient_dim() != L.dim()) throw ShapeError("n-ary product: ambient mismatch");
  for (const auto& f : factors)
    if (f.is_zero()) return Subspace::zero(L.dim());

  std::vector<Vec> rows;
  std::vector<std::size_t> idx(factors.size(), 0);
  while (true) {
    // right-normed fold over the selected basis rows
    Vec acc = L.bracket(factors[0].basis_row(idx[0]), factors[1].basis_row(idx[1]));
    for (std::size_t m = 2; m < factors.size() && !vec_is_zero(acc); ++m)
      acc = L.bracket(acc, factors[m].basis_row(idx[m]));
    if (!vec_is_zero(acc)) rows.push_back(std::move(acc));

    std::size_t p = factors.size();
    bool carry = true;
    while (p-- > 0) {
      if (++idx[p] < factors[p].dim()) {
        carry = false;
        break;
      }
      idx[p] = 0;
    }
    if (carry) break;
  }
  return Subspace::from_rows(L.dim(), rows);
}

std::string series_kind_name(SeriesKind k) {
  switch (k) {
    case SeriesKind::lower_central: return "lower-central";
    case SeriesKind::derived: return "derived";
    case SeriesKind::n_lower: return "n-lower";
    case SeriesKind::n_derived: return "n-derived";
  }
  return "?";
}

const Subspace& SeriesReport::term_at(std::size_t index1) const {
  if (index1 == 0) throw RangeError("series terms are 1-based");
  if (index1 <= terms.size()) return terms[index1 - 1];
  if (!stabilized) throw RangeError("series did not stabilize within the iteration cap");
  return terms.back();
}

std::size_t SeriesReport::zero_index() const {
  for (std::size_t i = 0; i < terms.size(); ++i)
    if (terms[i].is_zero()) return i + 1;
  throw RangeError("series never reaches zero");
}

SeriesReport series(const LeibnizAlgebra& L, const Subspace& M, SeriesKind kind,
                    std::size_t arity) {
  if ((kind == SeriesKind::n_lower || kind == SeriesKind::n_derived) && arity < 2)
    throw ArityError("n-ary series needs arity >= 2");
  if ((kind == SeriesKind::lower_central || kind == SeriesKind::derived) && arity != 2)
    throw ArityError("binary series has arity 2");
  if (M.ambient_dim() != L.dim()) throw ShapeError("series: ambient dimension mismatch");

  SeriesReport rep;
  rep.kind = kind;
  rep.arity = arity;
  rep.terms.push_back(M);

  // generous cap; the series used by the toolkit descend and stop long before
  const std::size_t cap = 4 * L.dim() + 8;
  while (rep.terms.size() < cap) {
    const Subspace& cur = rep.terms.back();
    Subspace next;
    switch (kind) {
      case SeriesKind::lower_central:
        next = product_subspace(L, cur, M);
        break;
      case SeriesKind::derived:
        next = product_subspace(L, cur, cur);
        break;
      case SeriesKind::n_lower: {
        std::vector<Subspace> factors(arity, M);
        factors[0] = cur;
        next = n_ary_product_subspace(L, factors);
        break;
      }
      case SeriesKind::n_derived: {
        std::vector<Subspace> factors(arity, cur);
        next = n_ary_product_subspace(L, factors);
        break;
      }
    }
    if (next == cur) {
      rep.stabilized = true;
      break;
    }
    rep.terms.push_back(std::move(next));
  }
  rep.terminal_dim = rep.terms.back().dim();
  return rep;
}

NilpotencyResult is_nilpotent(const LeibnizAlgebra& L) {
  return is_nilpotent(L, Subspace::full(L.dim()));
}

NilpotencyResult is_nilpotent(const LeibnizAlgebra& L, const Subspace& M) {
  const SeriesReport rep = series(L, M, SeriesKind::lower_central);
  if (!rep.reaches_zero()) return {false, 0};
  return {true, rep.zero_index()};
}

bool is_solvable(const LeibnizAlgebra& L) { return is_solvable(L, Subspace::full(L.dim())); }

bool is_solvable(const LeibnizAlgebra& L, const Subspace& M) {
  return series(L, M, SeriesKind::derived).reaches_zero();
}

NilpotencyResult is_n_nilpotent(const LeibnizAlgebra& L, std::size_t n) {
  return is_n_nilpotent(L, Subspace::full(L.dim()), n);
}

NilpotencyResult is_n_nilpotent(const LeibnizAlgebra& L, const Subspace& M, std::size_t n) {
  const SeriesReport rep = series(L, M, SeriesKind::n_lower, n);
  if (!rep.reaches_zero()) return {false, 0};
  return {true, rep.zero_index()};
}

bool is_n_solvable(const LeibnizAlgebra& L, std::size_t n) {
  return is_n_solvable(L, Subspace::full(L.dim()), n);
}

bool is_n_solvable(const LeibnizAlgebra& L, const Subspace& M, std::size_t n) {
  return series(L, M, SeriesKind::n_derived, n).reaches_zero();
}

bool is_subalgebra(const LeibnizAlgebra& L, const Subspace& M) {
  return M.includes(product_subspace(L, M, M));
}

bool is_ideal(const LeibnizAlgebra& L, const Subspace& I) {
  const Subspace full = Subspace::full(L.dim());
  return I.includes(product_subspace(L, I, full)) && I.includes(product_subspace(L, full, I));
}

bool is_n_ideal(const LeibnizAlgebra& L, const Subspace& I, std::size_t n) {
  if (n < 2) throw ArityError("n-ideal needs n >= 2");
  const Subspace full = Subspace::full(L.dim());
  Subspace acc = Subspace::zero(L.dim());
  for (std::size_t pos = 0; pos < n; ++pos) {
    std::vector<Subspace> factors(n, full);
    factors[pos] = I;
    acc = acc.sum(n_ary_product_subspace(L, factors));
  }
  return I.includes(acc);
}

bool engel_check(const LeibnizAlgebra& L) {
  const std::size_t d = L.dim();
  std::vector<Matrix> rmult;
  for (std::size_t i = 0; i < d; ++i) {
    rmult.push_back(L.right_mult_basis(i));
    if (!is_nilpotent_matrix(rmult.back())) return false;
  }

  // generic right multiplication over variables x1..xd
  std::vector<std::string> vars;
  for (std::size_t i = 0; i < d; ++i) vars.push_back("x" + std::to_string(i + 1));
  PolyMatrix g(d, d, vars);
  for (std::size_t b = 0; b < d; ++b)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        const Rat& c = rmult[b].at(i, j);
        if (c.is_zero()) continue;
        MultiPoly::Exponents e(vars.size(), 0);
        e[b] = 1;
        g.at(i, j).add_term(e, c);
      }
  for (const MultiPoly& coeff : symbolic_char_poly(g))
    if (!coeff.is_zero()) return false;
  return true;
}

}  // namespace leibniz
