#pragma once

#include <vector>

#include "leibniz/matrix.hpp"
#include "leibniz/subspace.hpp"

namespace leibniz {

/// Generalized eigenspace for eigenvalue lambda: ker (m - lambda I)^dim.
/// The ambient dimension is always used as the exponent.
Subspace generalized_eigenspace(const Matrix& m, const Rat& lambda);

struct WeightPair {
  Rat eigenvalue;
  Subspace space;
};

/// Direct-sum decomposition into generalized eigenspaces of a map whose
/// spectrum lies in Q. Pairs are sorted ascending by eigenvalue, eigenvalues
/// distinct, and the constructor checks the spaces really sum directly to
/// the whole ambient space.
class WeightDecomposition {
 public:
  WeightDecomposition(std::size_t ambient, std::vector<WeightPair> pairs);

  std::size_t ambient_dim() const { return ambient_; }
  const std::vector<WeightPair>& pairs() const { return pairs_; }
  bool has_eigenvalue(const Rat& v) const;
  const Subspace& space_of(const Rat& v) const;  // Error if absent

 private:
  std::size_t ambient_;
  std::vector<WeightPair> pairs_;
};

/// Throws NonSplitSpectrum (carrying the residual factor of the
/// characteristic polynomial) when the spectrum is not rational.
WeightDecomposition decompose(const Matrix& m);

}  // namespace leibniz
