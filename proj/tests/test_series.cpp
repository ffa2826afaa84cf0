#include <doctest.h>

#include <vector>

#include "leibniz/corpus.hpp"
#include "leibniz/series.hpp"

using namespace leibniz;

namespace {

std::vector<std::size_t> dims_upto(const SeriesReport& rep, std::size_t count) {
  std::vector<std::size_t> out;
  for (std::size_t i = 1; i <= count; ++i) out.push_back(rep.term_at(i).dim());
  return out;
}

}  // namespace

TEST_CASE("lower central series of the nilpotent chain family") {
  const LeibnizAlgebra L = make_charnil(6);
  const SeriesReport rep = series(L, Subspace::full(6), SeriesKind::lower_central);
  CHECK(dims_upto(rep, 6) == std::vector<std::size_t>{6, 4, 3, 2, 1, 0});
  CHECK(rep.reaches_zero());
  CHECK(rep.zero_index() == 6);
  CHECK(rep.stabilized);
  CHECK(rep.terminal_dim == 0);
  // a stabilized tail is constant
  CHECK(rep.term_at(17).dim() == 0);
}

TEST_CASE("derived series of the nilpotent chain family") {
  const LeibnizAlgebra L = make_charnil(6);
  const SeriesReport rep = series(L, Subspace::full(6), SeriesKind::derived);
  // the square is abelian: nothing multiplies from the right by e3..e6
  CHECK(dims_upto(rep, 3) == std::vector<std::size_t>{6, 4, 0});
  CHECK(rep.zero_index() == 3);
}

TEST_CASE("series of the solvable family stabilize where expected") {
  const LeibnizAlgebra L = make_solvable_ex31(6, {Rat(0), Rat(0)});
  const SeriesReport lcs = series(L, Subspace::full(7), SeriesKind::lower_central);
  CHECK(lcs.term_at(1).dim() == 7);
  CHECK(lcs.term_at(2).dim() == 5);
  CHECK(lcs.term_at(3).dim() == 5);
  CHECK(lcs.stabilized);
  CHECK_FALSE(lcs.reaches_zero());
  CHECK(lcs.terminal_dim == 5);

  const SeriesReport der = series(L, Subspace::full(7), SeriesKind::derived);
  CHECK(der.term_at(2).dim() == 5);
  CHECK(der.reaches_zero());
  CHECK(der.zero_index() == 3);

  CHECK(is_solvable(L));
  CHECK_FALSE(is_nilpotent(L).nilpotent);
}

TEST_CASE("n-ary series") {
  // ternary lower-central terms interleave the binary ones:
  // term k+1 equals the binary term 2k+1
  const LeibnizAlgebra L = make_charnil(6);
  const SeriesReport t3 = series(L, Subspace::full(6), SeriesKind::n_lower, 3);
  const SeriesReport bin = series(L, Subspace::full(6), SeriesKind::lower_central);
  CHECK(dims_upto(t3, 4) == std::vector<std::size_t>{6, 3, 1, 0});
  for (std::size_t k = 1; k <= 4; ++k) CHECK(t3.term_at(k + 1) == bin.term_at(2 * k + 1));

  const LeibnizAlgebra C = make_cas_ex33(5);
  const SeriesReport d3 = series(C, Subspace::full(6), SeriesKind::n_derived, 3);
  CHECK(dims_upto(d3, 4) == std::vector<std::size_t>{6, 5, 3, 0});
  CHECK(d3.reaches_zero());
}

TEST_CASE("series of a subspace use the subspace as the recursion seed") {
  const LeibnizAlgebra L = make_charnil(6);
  const Subspace sq = series(L, Subspace::full(6), SeriesKind::lower_central).term_at(2);
  const SeriesReport rep = series(L, sq, SeriesKind::lower_central);
  // [L^2, L^2] = 0 for this family
  CHECK(dims_upto(rep, 2) == std::vector<std::size_t>{4, 0});
}

TEST_CASE("nilpotency and solvability predicates") {
  CHECK(is_nilpotent(make_charnil(6)).nilindex == 6);
  CHECK(is_nilpotent(make_charnil(8)).nilindex == 8);
  CHECK(is_nilpotent(make_ex7()).nilindex == 7);
  CHECK(is_nilpotent(make_ex8()).nilindex == 8);
  CHECK(is_nilpotent(make_abelian(3)).nilindex == 2);
  CHECK(is_nilpotent(make_lie_heisenberg()).nilindex == 3);
  CHECK_FALSE(is_nilpotent(make_cas_ex33(5)).nilpotent);
  CHECK(is_solvable(make_cas_ex33(5)));
  const LeibnizAlgebra sum = direct_sum(make_charnil(4), make_cas_ex33(3), "sum");
  CHECK_FALSE(is_nilpotent(sum).nilpotent);
  CHECK(is_solvable(sum));
}

TEST_CASE("n-ary nilpotency and solvability predicates") {
  const LeibnizAlgebra L = make_charnil(6);
  CHECK(is_n_nilpotent(L, 3).nilpotent);
  CHECK(is_n_nilpotent(L, 3).nilindex == 4);
  const LeibnizAlgebra C = make_cas_ex33(5);
  CHECK(is_n_solvable(C, 3));
  CHECK_FALSE(is_n_nilpotent(C, 3).nilpotent);
}

TEST_CASE("engel criterion matches the series notion") {
  CHECK(engel_check(make_charnil(7)));
  CHECK(engel_check(make_abelian(2)));
  CHECK_FALSE(engel_check(make_cas_ex33(4)));
  CHECK_FALSE(engel_check(make_solvable_ex31(6, {Rat(1), Rat(2)})));
}
