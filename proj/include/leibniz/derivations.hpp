#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "leibniz/algebra.hpp"
#include "leibniz/eigen.hpp"
#include "leibniz/mapspace.hpp"
#include "leibniz/series.hpp"

namespace leibniz {

struct DerivationQuery {
  std::size_t order = 2;
  ProductSide side = ProductSide::right;
};

/// Solution space of the order-n Leibniz-derivation condition
///   d([x1..xn]) = sum_i [x1,..,d(x_i),..,xn]
/// for the right-normed (or left-nested) product, as the nullspace of the
/// exact linear system over the dim^2 matrix unknowns. Constraint rows are
/// emitted in lexicographic basis-tuple order; the returned basis is the
/// canonical nullspace basis, so results are deterministic. Order 2 on
/// either side is the classical derivation space.
MapSpace derivation_space(const LeibnizAlgebra& L, const DerivationQuery& q,
                          std::size_t order_limit = 5);

/// Membership test by direct constraint evaluation on all basis tuples;
/// independent of the derivation_space solver.
bool is_derivation(const LeibnizAlgebra& L, const Matrix& D, const DerivationQuery& q);

/// Inclusion of right-sided spaces: order s+1 inside order t+1; requires s | t.
bool order_inclusion_check(const LeibnizAlgebra& L, std::size_t s, std::size_t t);

/// Iterated-power rule for d in the right order-n space:
///   d^k([x1..xn]_r) = sum_{a1+..+an=k} k!/(a1!..an!) [d^{a1}x1,..,d^{an}xn]_r
/// checked on all basis tuples with independently computed sides.
bool power_rule_check(const LeibnizAlgebra& L, const Matrix& D, std::size_t n, std::size_t k);

/// Every element of the space is nilpotent, certified symbolically: all
/// non-leading coefficients of the generic element's characteristic
/// polynomial vanish identically.
bool all_nilpotent(const MapSpace& s);

struct InvertibleResult {
  bool exists = false;
  std::optional<Matrix> witness;          // invertible element when exists
  std::optional<std::vector<Rat>> point;  // its coordinates in the space basis
};

/// Some element of the space is invertible iff the symbolic determinant of
/// the generic element is not the zero polynomial; the witness is the
/// lexicographically first point of the integer grid {0..dim}^b where the
/// determinant does not vanish.
InvertibleResult exists_invertible(const MapSpace& s);

struct ClassificationReport {
  NilpotencyResult nilp;
  bool char_nilpotent = false;      // nilpotent with every derivation nilpotent
  bool strongly_nilpotent = false;  // nilpotent with every order-3 map nilpotent
  std::size_t der_dim = 0;
  std::size_t preder_dim = 0;
  // order -> invertible witness (nullopt when no invertible element exists)
  std::vector<std::pair<std::size_t, std::optional<Matrix>>> invertible_orders;
  std::size_t max_order_scanned = 0;
};

/// max_order = 0 picks the default bound: floor(nilindex/2)+1 when nilpotent,
/// otherwise LEIBNIZ_MAX_ORDER from the environment, falling back to 4.
ClassificationReport classify(const LeibnizAlgebra& L, std::size_t max_order = 0);

struct ScalingDerivation {
  Matrix P;
  std::size_t order = 0;
};

/// For nilpotent L with nilindex s and q = floor(s/2)+1: the map that is the
/// identity on a complement of the q-th lower-central term and q times the
/// identity on that term. Always an invertible right Leibniz-derivation of
/// order q; verified before returning. Throws NotNilpotent otherwise.
ScalingDerivation construct_invertible_derivation(const LeibnizAlgebra& L);

struct WeightProductItem {
  std::vector<Rat> weights;
  Rat weight_sum;
  bool sum_in_spectrum = false;
  bool contained = false;  // product inside the target space (or zero if off-spectrum)
  bool equals = false;     // observed equality with the target space
};

struct WeightProductReport {
  bool containment_ok = true;
  std::vector<WeightProductItem> items;
};

/// For d in the right order-n space with rational split spectrum: products
/// of generalized weight spaces land in the weight space of the summed
/// weight (or vanish when the sum is outside the spectrum). Containment is
/// asserted; equality is only observed and reported.
WeightProductReport weight_product_check(const LeibnizAlgebra& L, const Matrix& D, std::size_t n);

/// Every map in the order-q space (given side) preserves the ideal I.
bool invariance_check(const LeibnizAlgebra& L, const Subspace& I, const DerivationQuery& q);

struct TheoremReport {
  bool nilpotent = false;
  std::size_t nilindex = 0;
  bool ok = false;
  // nilpotent branch
  std::size_t constructed_order = 0;
  bool construction_valid = false;
  bool space_has_invertible = false;
  // non-nilpotent branch: per-order existence results
  std::vector<std::pair<std::size_t, bool>> order_results;
  std::size_t max_order_scanned = 0;
  std::string detail;
};

/// Nilpotency characterization: a nilpotent algebra must carry an invertible
/// right Leibniz-derivation (the constructed one, and the solved space must
/// agree); a non-nilpotent algebra must admit none at any order in the
/// scanned range 2..max_order. max_order = 0 resolves as in classify.
TheoremReport theorem_check(const LeibnizAlgebra& L, std::size_t max_order = 0);

/// Independent order-2 constraint builder used as a cross-check oracle: it
/// assembles the full constraint matrix directly from structure constants
/// (no product folds, no incremental elimination) and calls the generic
/// nullspace routine.
MapSpace naive_derivation_space(const LeibnizAlgebra& L);

}  // namespace leibniz
