#include <doctest.h>

#include <random>
#include <vector>

#include "leibniz/algebra.hpp"
#include "leibniz/corpus.hpp"
#include "leibniz/errors.hpp"
#include "leibniz/series.hpp"

using namespace leibniz;

namespace {

Vec rand_vec(std::size_t d, std::mt19937_64& rng) {
  Vec v(d, Rat(0));
  for (auto& x : v) x = Rat(static_cast<long>(rng() % 7) - 3);
  return v;
}

LeibnizAlgebra make_sl2() {
  // [e,f]=h, [f,e]=-h, [h,e]=2e, [e,h]=-2e, [h,f]=-2f, [f,h]=2f
  return LeibnizAlgebra::create(3,
                                {{0, 1, 2, Rat(1)},
                                 {1, 0, 2, Rat(-1)},
                                 {2, 0, 0, Rat(2)},
                                 {0, 2, 0, Rat(-2)},
                                 {2, 1, 1, Rat(-2)},
                                 {1, 2, 1, Rat(2)}},
                                "sl2");
}

}  // namespace

TEST_CASE("structure constant storage and lookup") {
  const LeibnizAlgebra L = make_charnil(6);
  CHECK(L.dim() == 6);
  CHECK(L.name() == "charnil6");
  // chain rows and shift rows of the family table
  CHECK(L.bracket_basis(4, 0) == basis_vec(6, 5));  // [e5,e1] = e6
  CHECK(L.bracket_basis(3, 1) == basis_vec(6, 5));  // [e4,e2] = e6
  CHECK(L.bracket_basis(0, 0) == basis_vec(6, 2));  // [e1,e1] = e3
  CHECK(vec_is_zero(L.bracket_basis(0, 2)));
  CHECK(vec_is_zero(L.bracket_basis(5, 0)));
}

TEST_CASE("creation validates the identity unless unchecked") {
  // [e1,e1] = e1 breaks the identity at the triple (1,1,1)
  const std::vector<LeibnizAlgebra::Entry> bad = {{0, 0, 0, Rat(1)}};
  CHECK_THROWS_AS(LeibnizAlgebra::create(2, bad, "bad"), IdentityViolation);
  const LeibnizAlgebra L = LeibnizAlgebra::create(2, bad, "bad", true);
  CHECK(L.unchecked());
  CHECK_FALSE(check_leibniz_identity(L).ok);

  CHECK_THROWS_AS(LeibnizAlgebra::create(2, {{0, 0, 2, Rat(1)}}, "oob"), Error);
}

TEST_CASE("bracket is bilinear") {
  const LeibnizAlgebra L = make_charnil(6);
  std::mt19937_64 rng(43);
  for (int t = 0; t < 30; ++t) {
    const Vec x = rand_vec(6, rng), y = rand_vec(6, rng), z = rand_vec(6, rng);
    const Rat s(static_cast<long>(rng() % 7) - 3);
    CHECK(L.bracket(vec_add(x, vec_scaled(y, s)), z) ==
          vec_add(L.bracket(x, z), vec_scaled(L.bracket(y, z), s)));
    CHECK(L.bracket(z, vec_add(x, vec_scaled(y, s))) ==
          vec_add(L.bracket(z, x), vec_scaled(L.bracket(z, y), s)));
  }
}

TEST_CASE("right multiplication operators satisfy the commutator identity") {
  std::mt19937_64 rng(47);
  for (const LeibnizAlgebra& L :
       {make_charnil(6), make_cas_ex33(4), make_solvable_ex31(6, {Rat(0), Rat(0)}), make_ex7()}) {
    for (int t = 0; t < 40; ++t) {
      const Vec x = rand_vec(L.dim(), rng), y = rand_vec(L.dim(), rng);
      const Matrix rx = L.right_mult(x), ry = L.right_mult(y);
      CHECK(rx * ry - ry * rx == L.right_mult(L.bracket(y, x)));
    }
  }
}

TEST_CASE("n-ary folds") {
  const LeibnizAlgebra L = make_charnil(6);
  std::mt19937_64 rng(53);
  const Vec x = rand_vec(6, rng), y = rand_vec(6, rng), z = rand_vec(6, rng),
            w = rand_vec(6, rng);
  CHECK(n_ary_right(L, {x, y, z}) == L.bracket(L.bracket(x, y), z));
  CHECK(n_ary_left(L, {x, y, z}) == L.bracket(x, L.bracket(y, z)));
  CHECK(n_ary_right(L, {x, y, z, w}) == L.bracket(L.bracket(L.bracket(x, y), z), w));
  CHECK(n_ary(L, {x, y}, ProductSide::right) == L.bracket(x, y));
  CHECK_THROWS_AS(n_ary_right(L, {x}), ArityError);
}

TEST_CASE("left and right folds agree up to sign on Lie algebras") {
  std::mt19937_64 rng(59);
  for (const LeibnizAlgebra& L : {make_sl2(), make_lie_heisenberg()}) {
    for (std::size_t n : {std::size_t{3}, std::size_t{4}}) {
      for (int t = 0; t < 20; ++t) {
        std::vector<Vec> xs;
        for (std::size_t i = 0; i < n; ++i) xs.push_back(rand_vec(L.dim(), rng));
        std::vector<Vec> rev(xs.rbegin(), xs.rend());
        const Rat sign = (n % 2 == 0) ? Rat(-1) : Rat(1);
        CHECK(n_ary_left(L, xs) == vec_scaled(n_ary_right(L, rev), sign));
      }
    }
  }
}

TEST_CASE("ternary identity holds when all triple products vanish") {
  const NAlgebraIdentityReport rep = check_n_algebra_identity(make_lie_heisenberg(), 3);
  CHECK(rep.ok);
  CHECK(check_n_algebra_identity(make_abelian(3), 4).ok);
}

TEST_CASE("product subspaces") {
  const LeibnizAlgebra L = make_charnil(6);
  const Subspace full = Subspace::full(6);
  const Subspace sq = product_subspace(L, full, full);
  CHECK(sq.dim() == 4);
  for (std::size_t k = 2; k < 6; ++k) CHECK(sq.contains(basis_vec(6, k)));
  CHECK_FALSE(sq.contains(basis_vec(6, 0)));

  // arity-3 products of the whole cas algebra
  const LeibnizAlgebra C = make_cas_ex33(5);
  const Subspace c3 = n_ary_product_subspace(C, {Subspace::full(6), Subspace::full(6),
                                                 Subspace::full(6)});
  CHECK(c3.dim() == 5);
}

TEST_CASE("subalgebra and ideal predicates") {
  const LeibnizAlgebra L = make_charnil(6);
  const Subspace sq = product_subspace(L, Subspace::full(6), Subspace::full(6));
  CHECK(is_subalgebra(L, sq));
  CHECK(is_ideal(L, sq));
  const Subspace e1 = Subspace::from_rows(6, {basis_vec(6, 0)});
  CHECK_FALSE(is_subalgebra(L, e1));
  CHECK_FALSE(is_ideal(L, e1));
  CHECK(is_ideal(L, Subspace::zero(6)));
  CHECK(is_ideal(L, Subspace::full(6)));
  CHECK(is_n_ideal(L, sq, 3));
}

TEST_CASE("direct sums multiply componentwise") {
  const LeibnizAlgebra A = make_charnil(4);
  const LeibnizAlgebra B = make_cas_ex33(3);
  const LeibnizAlgebra S = direct_sum(A, B, "sum");
  CHECK(S.dim() == A.dim() + B.dim());
  CHECK(check_leibniz_identity(S).ok);
  // cross products vanish, block products match the factors
  for (std::size_t i = 0; i < A.dim(); ++i)
    for (std::size_t j = 0; j < B.dim(); ++j) {
      CHECK(vec_is_zero(S.bracket_basis(i, A.dim() + j)));
      CHECK(vec_is_zero(S.bracket_basis(A.dim() + j, i)));
    }
  const Vec ab = S.bracket_basis(0, 0);
  const Vec aa = A.bracket_basis(0, 0);
  for (std::size_t k = 0; k < A.dim(); ++k) CHECK(ab[k] == aa[k]);
}

TEST_CASE("family constructors reject out of range parameters") {
  CHECK_THROWS_AS(make_charnil(3), RangeError);
  CHECK_THROWS_AS(make_cas_ex33(1), RangeError);
  CHECK_THROWS_AS(make_solvable_ex31(3, {}), RangeError);
  CHECK_THROWS_AS(make_solvable_ex31(6, {}), RangeError);
  // alpha list length must be n-4
  CHECK_THROWS_AS(make_solvable_ex31(6, {Rat(1)}), RangeError);
  CHECK(make_solvable_ex31(6, {Rat(1), Rat(2)}).name() == "solvable_ex31_n6_alpha");
}

TEST_CASE("every corpus entry passes the identity") {
  for (const auto& ent : corpus_manifest()) {
    const IdentityReport rep = check_leibniz_identity(ent.doc.algebra);
    CHECK(rep.ok);
  }
  CHECK_FALSE(check_leibniz_identity(corpus_bad_table().algebra).ok);
}
