#include "leibniz/eigen.hpp"

#include <algorithm>

#include "leibniz/errors.hpp"

namespace leibniz {

Subspace generalized_eigenspace(const Matrix& m, const Rat& lambda) {
  if (!m.is_square()) throw ShapeError("generalized_eigenspace of non-square matrix");
  Matrix shifted(m);
  for (std::size_t i = 0; i < m.rows(); ++i) shifted.at(i, i) -= lambda;
  return Subspace::from_matrix_rows(nullspace_rows(shifted.pow(m.rows())));
}

WeightDecomposition::WeightDecomposition(std::size_t ambient, std::vector<WeightPair> pairs)
    : ambient_(ambient), pairs_(std::move(pairs)) {
  std::sort(pairs_.begin(), pairs_.end(),
            [](const WeightPair& a, const WeightPair& b) { return a.eigenvalue < b.eigenvalue; });
  std::size_t total = 0;
  std::vector<Vec> stacked;
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    if (i > 0 && !(pairs_[i - 1].eigenvalue < pairs_[i].eigenvalue))
      throw Error("duplicate eigenvalue in weight decomposition");
    if (pairs_[i].space.ambient_dim() != ambient_)
      throw ShapeError("weight space ambient mismatch");
    total += pairs_[i].space.dim();
    for (std::size_t r = 0; r < pairs_[i].space.dim(); ++r)
      stacked.push_back(pairs_[i].space.basis_row(r));
  }
  if (total != ambient_) throw Error("weight spaces do not fill the ambient space");
  if (Subspace::from_rows(ambient_, stacked).dim() != ambient_)
    throw Error("weight spaces are not independent");
}

bool WeightDecomposition::has_eigenvalue(const Rat& v) const {
  for (const auto& p : pairs_)
    if (p.eigenvalue == v) return true;
  return false;
}

const Subspace& WeightDecomposition::space_of(const Rat& v) const {
  for (const auto& p : pairs_)
    if (p.eigenvalue == v) return p.space;
  throw Error("eigenvalue " + v.str() + " not in decomposition");
}

WeightDecomposition decompose(const Matrix& m) {
  if (!m.is_square()) throw ShapeError("decompose of non-square matrix");
  const UniPoly cp = char_poly(m);
  const auto roots = rational_roots(cp);

  std::size_t mult_total = 0;
  for (const auto& [r, k] : roots) mult_total += k;
  if (mult_total != m.rows()) {
    UniPoly residual = cp;
    for (const auto& [r, k] : roots)
      for (std::size_t i = 0; i < k; ++i) residual = residual.divide_linear(r);
    throw NonSplitSpectrum(residual.str());
  }

  std::vector<WeightPair> pairs;
  for (const auto& [r, k] : roots) pairs.push_back({r, generalized_eigenspace(m, r)});
  return WeightDecomposition(m.rows(), std::move(pairs));
}

}  // namespace leibniz
