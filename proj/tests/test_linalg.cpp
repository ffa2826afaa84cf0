#include <doctest.h>

#include <random>
#include <vector>

#include "leibniz/eigen.hpp"
#include "leibniz/errors.hpp"
#include "leibniz/mapspace.hpp"
#include "leibniz/matrix.hpp"
#include "leibniz/subspace.hpp"

using namespace leibniz;

namespace {

Matrix rand_matrix(std::size_t r, std::size_t c, std::mt19937_64& rng) {
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      m.at(i, j) = Rat(static_cast<long>(rng() % 11) - 5);
  return m;
}

}  // namespace

TEST_CASE("matrix basics") {
  std::mt19937_64 rng(17);
  const Matrix a = rand_matrix(3, 3, rng);
  const Matrix b = rand_matrix(3, 3, rng);
  const Matrix c = rand_matrix(3, 3, rng);
  CHECK((a * b) * c == a * (b * c));
  CHECK(a * Matrix::identity(3) == a);
  CHECK(Matrix::identity(3) * a == a);
  CHECK(a.pow(0) == Matrix::identity(3));
  CHECK(a.pow(3) == a * a * a);
  CHECK(a.transpose().transpose() == a);
  CHECK(Matrix::unflatten(3, 3, a.flatten()) == a);

  const Vec v = {Rat(1), Rat(-2), Rat(3)};
  CHECK((a * b).apply(v) == a.apply(b.apply(v)));
}

TEST_CASE("rref is canonical and idempotent") {
  std::mt19937_64 rng(19);
  for (int t = 0; t < 20; ++t) {
    const Matrix m = rand_matrix(4, 6, rng);
    const RrefResult r = rref(m);
    CHECK(rref(r.mat).mat == r.mat);
    // pivot columns carry a lone 1
    for (std::size_t k = 0; k < r.pivot_cols.size(); ++k) {
      const std::size_t pc = r.pivot_cols[k];
      CHECK(r.mat.at(k, pc) == Rat(1));
      for (std::size_t i = 0; i < r.mat.rows(); ++i)
        if (i != k) CHECK(r.mat.at(i, pc).is_zero());
    }
  }
}

TEST_CASE("nullspace rows annihilate and fill the rank gap") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 20; ++t) {
    const Matrix m = rand_matrix(4, 5, rng);
    const Matrix ns = nullspace_rows(m);
    CHECK(ns.rows() == 5 - rref(m).rank());
    for (std::size_t i = 0; i < ns.rows(); ++i)
      CHECK(vec_is_zero(m.apply(ns.row(i))));
    // canonical: the nullspace basis is its own RREF
    CHECK(rref(ns).mat == ns);
  }
}

TEST_CASE("determinant and inverse") {
  Matrix m(3, 3);
  const long vals[3][3] = {{2, 0, 1}, {1, 3, 2}, {-1, 1, 4}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m.at(i, j) = Rat(vals[i][j]);
  CHECK(det(m) == Rat(24));
  CHECK(is_invertible(m));
  CHECK(m * inverse(m) == Matrix::identity(3));
  CHECK(inverse(m) * m == Matrix::identity(3));

  std::mt19937_64 rng(29);
  for (int t = 0; t < 20; ++t) {
    const Matrix a = rand_matrix(4, 4, rng);
    const Matrix b = rand_matrix(4, 4, rng);
    CHECK(det(a * b) == det(a) * det(b));
    CHECK(is_invertible(a) == !det(a).is_zero());
  }

  Matrix sing(2, 2);
  sing.at(0, 0) = Rat(1);
  sing.at(0, 1) = Rat(2);
  sing.at(1, 0) = Rat(2);
  sing.at(1, 1) = Rat(4);
  CHECK(det(sing) == Rat(0));
  CHECK_THROWS_AS(inverse(sing), Error);
  CHECK_THROWS_AS(det(Matrix(2, 3)), ShapeError);
}

TEST_CASE("characteristic polynomial") {
  // companion matrix of t^3 - 2t + 5
  Matrix comp(3, 3);
  comp.at(0, 2) = Rat(-5);
  comp.at(1, 0) = Rat(1);
  comp.at(1, 2) = Rat(2);
  comp.at(2, 1) = Rat(1);
  CHECK(char_poly(comp) == UniPoly({Rat(5), Rat(-2), Rat(0), Rat(1)}));

  std::mt19937_64 rng(31);
  for (int t = 0; t < 10; ++t) {
    const Matrix a = rand_matrix(4, 4, rng);
    const UniPoly p = char_poly(a);
    CHECK(p.lead() == Rat(1));
    CHECK(p.coeff(3) == -a.trace());
    // det(0 I - a) = (-1)^4 det(a)
    CHECK(p.eval(Rat(0)) == det(a));
    // Cayley-Hamilton
    Matrix acc(4, 4);
    for (std::size_t k = 0; k < p.coeffs().size(); ++k)
      acc = acc + a.pow(k).scaled(p.coeff(k));
    CHECK(acc.is_zero());
  }
}

TEST_CASE("nilpotence test") {
  Matrix n(3, 3);
  n.at(0, 1) = Rat(5);
  n.at(1, 2) = Rat(-2);
  n.at(0, 2) = Rat(7);
  CHECK(is_nilpotent_matrix(n));
  CHECK_FALSE(is_nilpotent_matrix(Matrix::identity(3)));
  CHECK(is_nilpotent_matrix(Matrix(0, 0)));
}

TEST_CASE("subspace canonical form and lattice") {
  const std::size_t amb = 4;
  const Subspace u = Subspace::from_rows(
      amb, {{Rat(1), Rat(1), Rat(0), Rat(0)}, {Rat(0), Rat(0), Rat(1), Rat(1)}});
  const Subspace u2 = Subspace::from_rows(
      amb, {{Rat(2), Rat(2), Rat(3), Rat(3)}, {Rat(0), Rat(0), Rat(-1), Rat(-1)},
            {Rat(1), Rat(1), Rat(1), Rat(1)}});
  CHECK(u == u2);  // same span, different generators
  CHECK(u.dim() == 2);
  CHECK(u.contains({Rat(3), Rat(3), Rat(-1), Rat(-1)}));
  CHECK_FALSE(u.contains({Rat(1), Rat(0), Rat(0), Rat(0)}));

  const Subspace w = Subspace::from_rows(
      amb, {{Rat(1), Rat(0), Rat(0), Rat(0)}, {Rat(1), Rat(1), Rat(0), Rat(0)}});
  const Subspace s = u.sum(w);
  const Subspace i = u.intersect(w);
  CHECK(s.dim() + i.dim() == u.dim() + w.dim());
  CHECK(s.includes(u));
  CHECK(s.includes(w));
  CHECK(u.includes(i));
  CHECK(w.includes(i));
  CHECK(Subspace::full(amb).includes(u));
  CHECK(u.includes(Subspace::zero(amb)));
}

TEST_CASE("generalized eigenspaces") {
  Matrix m(3, 3);
  m.at(0, 0) = Rat(1);
  m.at(1, 1) = Rat(1);
  m.at(0, 1) = Rat(1);  // Jordan block J2(1) plus a 4
  m.at(2, 2) = Rat(4);
  CHECK(generalized_eigenspace(m, Rat(1)).dim() == 2);
  CHECK(generalized_eigenspace(m, Rat(4)).dim() == 1);
  CHECK(generalized_eigenspace(m, Rat(0)).dim() == 0);

  const WeightDecomposition dec = decompose(m);
  REQUIRE(dec.pairs().size() == 2);
  CHECK(dec.pairs()[0].eigenvalue == Rat(1));
  CHECK(dec.pairs()[0].space.dim() == 2);
  CHECK(dec.pairs()[1].eigenvalue == Rat(4));
  CHECK(dec.has_eigenvalue(Rat(4)));
  CHECK_FALSE(dec.has_eigenvalue(Rat(2)));
}

TEST_CASE("non split spectrum is reported with its residual") {
  Matrix rot(2, 2);
  rot.at(0, 1) = Rat(-1);
  rot.at(1, 0) = Rat(1);
  CHECK_THROWS_AS(decompose(rot), NonSplitSpectrum);
  try {
    decompose(rot);
  } catch (const NonSplitSpectrum& e) {
    CHECK(e.residual == "t^2 + 1");
  }
}

TEST_CASE("map space flattening round trip") {
  Matrix a(3, 3), b(3, 3);
  a.at(0, 1) = Rat(1);
  a.at(2, 0) = Rat(-2);
  b.at(1, 1) = Rat(3);
  const MapSpace s(3, {a, b});
  CHECK(s.dim() == 2);
  CHECK(s.contains(a));
  CHECK(s.contains(a.scaled(Rat(5)) + b.scaled(Rat(-1, 2))));
  CHECK_FALSE(s.contains(Matrix::identity(3)));
  CHECK(MapSpace::from_flat_subspace(3, s.as_subspace()).as_subspace() == s.as_subspace());
  // a dependent list is rejected, not silently reduced
  CHECK_THROWS_AS(MapSpace(3, {a, b, a + b}), Error);
}

TEST_CASE("symbolic determinant matches pointwise evaluation") {
  std::mt19937_64 rng(41);
  const MapSpace s(3, {rand_matrix(3, 3, rng), rand_matrix(3, 3, rng), rand_matrix(3, 3, rng)});
  const PolyMatrix ge = generic_element(s);
  const MultiPoly d = symbolic_det(ge);
  const std::vector<MultiPoly> cp = symbolic_char_poly(ge);
  REQUIRE(cp.size() == 3);
  for (int t = 0; t < 25; ++t) {
    std::vector<Rat> pt;
    for (std::size_t k = 0; k < s.dim(); ++k)
      pt.push_back(Rat(static_cast<long>(rng() % 7) - 3));
    const Matrix m = ge.eval(pt);
    CHECK(d.eval(pt) == det(m));
    const UniPoly p = char_poly(m);
    for (std::size_t k = 0; k < 3; ++k) CHECK(cp[k].eval(pt) == p.coeff(k));
  }
}

TEST_CASE("symbolic determinant on a diagonal pattern space") {
  Matrix e11(2, 2), e22(2, 2);
  e11.at(0, 0) = Rat(1);
  e22.at(1, 1) = Rat(1);
  const MapSpace s(2, {e11, e22});
  CHECK(symbolic_det(generic_element(s)).str() == "x1*x2");
}
