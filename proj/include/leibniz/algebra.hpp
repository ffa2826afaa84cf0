#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "leibniz/matrix.hpp"

namespace leibniz {

enum class ProductSide { right, left };

/// Finite-dimensional algebra over Q given by structure constants
/// [e_i, e_j] = sum_k c_{ij}^k e_k. Indices are 0-based internally and
/// 1-based in files and reports. Construction validates the Leibniz
/// identity [x,[y,z]] = [[x,y],z] - [[x,z],y] on all basis triples unless
/// the unchecked flag is set.
class LeibnizAlgebra {
 public:
  struct Entry {
    std::size_t i, j, k;  // 0-based
    Rat coeff;
  };

  static LeibnizAlgebra create(std::size_t dim, const std::vector<Entry>& entries,
                               std::string name, bool unchecked = false);

  std::size_t dim() const { return dim_; }
  const std::string& name() const { return name_; }
  bool unchecked() const { return unchecked_; }

  /// Sparse product list for [e_i, e_j], pairs (k, coeff), sorted by k.
  const std::vector<std::pair<std::size_t, Rat>>& table(std::size_t i, std::size_t j) const {
    return c_[i * dim_ + j];
  }

  Vec bracket_basis(std::size_t i, std::size_t j) const;
  Vec bracket(const Vec& x, const Vec& y) const;
  /// [w, e_j] and [e_i, w]; cheap sparse paths used by the fold helpers.
  Vec right_apply(const Vec& w, std::size_t j) const;
  Vec left_apply(std::size_t i, const Vec& w) const;

  /// Matrix of z -> [z, x].
  Matrix right_mult(const Vec& x) const;
  Matrix right_mult_basis(std::size_t i) const;

 private:
  LeibnizAlgebra() = default;
  std::size_t dim_ = 0;
  std::string name_;
  bool unchecked_ = false;
  std::vector<std::vector<std::pair<std::size_t, Rat>>> c_;
};

struct IdentityReport {
  bool ok = true;
  // 0-based indices of the first violating triple, with both sides
  std::size_t i = 0, j = 0, k = 0;
  Vec lhs, rhs;
};

/// Exhaustive check of the Leibniz identity over all basis triples.
IdentityReport check_leibniz_identity(const LeibnizAlgebra& L);

/// Right-normed product [[..[x1,x2],x3]..,xn] and left-nested product
/// [x1,[x2,[..[x_{n-1},xn]..]]]. Arity must be >= 2 (ArityError).
Vec n_ary_right(const LeibnizAlgebra& L, const std::vector<Vec>& xs);
Vec n_ary_left(const LeibnizAlgebra& L, const std::vector<Vec>& xs);
Vec n_ary(const LeibnizAlgebra& L, const std::vector<Vec>& xs, ProductSide side);

struct NAlgebraIdentityReport {
  bool ok = true;
  std::vector<std::size_t> xs, ys;  // 0-based basis indices of first violation
  Vec lhs, rhs;
};

/// Checks the n-algebra fundamental identity
///   [[x1..xn], y2..yn] = sum_i [x1,..,[x_i,y2..yn],..,xn]
/// for the chosen n-ary product on all basis tuples.
NAlgebraIdentityReport check_n_algebra_identity(const LeibnizAlgebra& L, std::size_t n,
                                                ProductSide side = ProductSide::right);

}  // namespace leibniz
