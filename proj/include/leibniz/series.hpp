#pragma once

#include <string>
#include <vector>

#include "leibniz/algebra.hpp"
#include "leibniz/subspace.hpp"

namespace leibniz {

/// Span of {[a,b] : a in basis(A), b in basis(B)}.
Subspace product_subspace(const LeibnizAlgebra& L, const Subspace& A, const Subspace& B);

/// Span of right-normed products over all basis tuples of the factors.
Subspace n_ary_product_subspace(const LeibnizAlgebra& L, const std::vector<Subspace>& factors);

enum class SeriesKind { lower_central, derived, n_lower, n_derived };

std::string series_kind_name(SeriesKind k);

/// Terms of a descending series, 1-based indexing in reports:
///   lower_central: M^1 = M,      M^{k+1} = [M^k, M]
///   derived:       M^[1] = M,    M^[s+1] = [M^[s], M^[s]]
///   n_lower:       T^1 = M,      T^{k+1} = [T^k, M, .., M]_r  (arity factors)
///   n_derived:     T^[1] = M,    T^[s+1] = [T^[s], .., T^[s]]_r
/// Computation stops once a term repeats (stabilization; reaching 0 is the
/// stabilized-at-zero case). term_at(i) is valid for every i >= 1 because a
/// stabilized tail is constant.
struct SeriesReport {
  SeriesKind kind = SeriesKind::lower_central;
  std::size_t arity = 2;
  std::vector<Subspace> terms;
  bool stabilized = false;
  std::size_t terminal_dim = 0;

  const Subspace& term_at(std::size_t index1) const;
  bool reaches_zero() const { return terminal_dim == 0; }
  /// 1-based index of the first zero term; only valid if reaches_zero().
  std::size_t zero_index() const;
};

SeriesReport series(const LeibnizAlgebra& L, const Subspace& M, SeriesKind kind,
                    std::size_t arity = 2);

struct NilpotencyResult {
  bool nilpotent = false;
  std::size_t nilindex = 0;  // minimal p with M^p = 0; meaningful iff nilpotent
};

NilpotencyResult is_nilpotent(const LeibnizAlgebra& L);
NilpotencyResult is_nilpotent(const LeibnizAlgebra& L, const Subspace& M);
bool is_solvable(const LeibnizAlgebra& L);
bool is_solvable(const LeibnizAlgebra& L, const Subspace& M);
NilpotencyResult is_n_nilpotent(const LeibnizAlgebra& L, std::size_t n);
NilpotencyResult is_n_nilpotent(const LeibnizAlgebra& L, const Subspace& M, std::size_t n);
bool is_n_solvable(const LeibnizAlgebra& L, std::size_t n);
bool is_n_solvable(const LeibnizAlgebra& L, const Subspace& M, std::size_t n);

bool is_subalgebra(const LeibnizAlgebra& L, const Subspace& M);
bool is_ideal(const LeibnizAlgebra& L, const Subspace& I);
/// n-ideal: sum over positions of [L,..,I,..,L]_r stays inside I.
bool is_n_ideal(const LeibnizAlgebra& L, const Subspace& I, std::size_t n);

/// Nilpotency via right-multiplication operators: every R_{e_i} nilpotent
/// and the generic element sum_i x_i R_{e_i} has characteristic polynomial
/// t^dim (so R_x is nilpotent for every x, not just basis elements).
bool engel_check(const LeibnizAlgebra& L);

}  // namespace leibniz
