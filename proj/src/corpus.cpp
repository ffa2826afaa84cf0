#include "leibniz/corpus.hpp"

#include <utility>

#include "leibniz/errors.hpp"

namespace leibniz {

namespace {

using Entry = LeibnizAlgebra::Entry;

Subspace span_first(std::size_t ambient, std::size_t count) {
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < count; ++i) rows.push_back(basis_vec(ambient, i));
  return Subspace::from_rows(ambient, rows);
}

}  // namespace

LeibnizAlgebra make_charnil(std::size_t n) {
  if (n < 4) throw RangeError("charnil family needs dim >= 4");
  std::vector<Entry> e;
  e.push_back({0, 0, 2, Rat(1)});
  for (std::size_t i = 2; i <= n - 1; ++i) e.push_back({i - 1, 0, i, Rat(1)});
  e.push_back({0, 1, 3, Rat(1)});
  for (std::size_t i = 2; i <= n - 2; ++i) e.push_back({i - 1, 1, i + 1, Rat(1)});
  return LeibnizAlgebra::create(n, e, "charnil" + std::to_string(n));
}

LeibnizAlgebra make_solvable_ex31(std::size_t n, const std::vector<Rat>& alpha) {
  if (n < 4) throw RangeError("solvable_ex31 family needs n >= 4");
  if (alpha.size() != n - 4)
    throw RangeError("solvable_ex31 with n = " + std::to_string(n) + " takes exactly " +
                     std::to_string(n - 4) + " parameters");
  const auto a = [&](std::size_t sub) { return alpha[sub - 4]; };  // a_4..a_{n-1}
  std::vector<Entry> e;
  e.push_back({0, 0, 2, Rat(1)});
  for (std::size_t i = 2; i <= n - 1; ++i) e.push_back({i - 1, 0, i, Rat(1)});
  for (std::size_t row : {std::size_t{0}, std::size_t{1}}) {
    e.push_back({row, n, 1, Rat(1)});
    for (std::size_t i = 4; i <= n - 1; ++i)
      if (!a(i).is_zero()) e.push_back({row, n, i - 1, a(i)});
  }
  for (std::size_t i = 3; i <= n; ++i) {
    e.push_back({i - 1, n, i - 1, Rat(1)});
    for (std::size_t j = i + 2; j <= n; ++j)
      if (!a(j - i + 2).is_zero()) e.push_back({i - 1, n, j - 1, a(j - i + 2)});
  }
  std::string name = "solvable_ex31_n" + std::to_string(n);
  bool plain = true;
  for (const Rat& x : alpha) plain = plain && x.is_zero();
  if (!plain) name += "_alpha";
  return LeibnizAlgebra::create(n + 1, e, name);
}

LeibnizAlgebra make_cas_ex33(std::size_t n) {
  if (n < 2) throw RangeError("cas_ex33 family needs n >= 2");
  std::vector<Entry> e;
  for (std::size_t i = 1; i <= n - 1; ++i) e.push_back({i - 1, 0, i, Rat(1)});
  e.push_back({n, 0, 0, Rat(1)});
  for (std::size_t i = 1; i <= n; ++i)
    e.push_back({i - 1, n, i - 1, Rat(-static_cast<long>(i))});
  return LeibnizAlgebra::create(n + 1, e, "cas_ex33_n" + std::to_string(n));
}

LeibnizAlgebra make_ex7() {
  std::vector<Entry> e;
  e.push_back({0, 0, 2, Rat(1)});
  for (std::size_t i = 2; i <= 6; ++i) e.push_back({i - 1, 0, i, Rat(1)});
  e.push_back({0, 1, 3, Rat(1)});
  e.push_back({0, 1, 4, Rat(-2)});
  for (std::size_t i = 2; i <= 4; ++i) {
    e.push_back({i - 1, 1, i + 1, Rat(1)});
    e.push_back({i - 1, 1, i + 2, Rat(-2)});
  }
  e.push_back({4, 1, 6, Rat(1)});
  return LeibnizAlgebra::create(7, e, "ex7");
}

LeibnizAlgebra make_ex8() {
  std::vector<Entry> e;
  e.push_back({0, 0, 2, Rat(1)});
  // the shift row must run through i = 7: with [e7,e1] = 0 the identity
  // breaks at the triple (5,2,1), so the filiform chain reaches e8
  for (std::size_t i = 2; i <= 7; ++i) e.push_back({i - 1, 0, i, Rat(1)});
  e.push_back({0, 1, 3, Rat(1)});
  e.push_back({0, 1, 4, Rat(-2)});
  e.push_back({0, 1, 5, Rat(5)});
  for (std::size_t i = 2; i <= 4; ++i) {
    e.push_back({i - 1, 1, i + 1, Rat(1)});
    e.push_back({i - 1, 1, i + 2, Rat(-2)});
    e.push_back({i - 1, 1, i + 3, Rat(5)});
  }
  e.push_back({4, 1, 6, Rat(1)});
  e.push_back({4, 1, 7, Rat(-2)});
  e.push_back({5, 1, 7, Rat(1)});
  return LeibnizAlgebra::create(8, e, "ex8");
}

LeibnizAlgebra make_abelian(std::size_t n) {
  if (n < 1) throw RangeError("abelian family needs dim >= 1");
  return LeibnizAlgebra::create(n, {}, "abelian" + std::to_string(n));
}

LeibnizAlgebra make_lie_heisenberg() {
  std::vector<Entry> e = {{0, 1, 2, Rat(1)}, {1, 0, 2, Rat(-1)}};
  return LeibnizAlgebra::create(3, e, "lie_heisenberg");
}

LeibnizAlgebra direct_sum(const LeibnizAlgebra& a, const LeibnizAlgebra& b,
                          const std::string& name) {
  const std::size_t da = a.dim();
  std::vector<Entry> e;
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j)
      for (const auto& [k, c] : a.table(i, j)) e.push_back({i, j, k, c});
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j)
      for (const auto& [k, c] : b.table(i, j)) e.push_back({i + da, j + da, k + da, c});
  return LeibnizAlgebra::create(da + b.dim(), e, name);
}

std::vector<CorpusEntry> corpus_manifest() {
  std::vector<CorpusEntry> out;
  auto bare = [&](LeibnizAlgebra L) {
    const std::string file = L.name() + ".json";
    out.push_back({file, AlgebraDoc{std::move(L), {}, {}, {}}});
  };

  bare(make_charnil(6));
  bare(make_charnil(7));
  bare(make_charnil(8));

  {
    LeibnizAlgebra L = make_solvable_ex31(6, {Rat(0), Rat(0)});
    AlgebraDoc doc{std::move(L), Subspace::full(7), span_first(7, 6), {}};
    out.push_back({doc.algebra.name() + ".json", std::move(doc)});
  }
  {
    LeibnizAlgebra L = make_solvable_ex31(6, {Rat(1), Rat(2)});
    AlgebraDoc doc{std::move(L), Subspace::full(7), span_first(7, 6), {}};
    out.push_back({doc.algebra.name() + ".json", std::move(doc)});
  }
  {
    LeibnizAlgebra L = make_cas_ex33(5);
    AlgebraDoc doc{std::move(L), Subspace::full(6), span_first(6, 5), {}};
    out.push_back({doc.algebra.name() + ".json", std::move(doc)});
  }

  bare(make_ex7());
  bare(make_ex8());
  bare(make_abelian(3));

  {
    LeibnizAlgebra L = make_lie_heisenberg();
    AlgebraDoc doc{std::move(L), {}, {}, true};
    out.push_back({doc.algebra.name() + ".json", std::move(doc)});
  }
  {
    LeibnizAlgebra L = direct_sum(make_charnil(4), make_cas_ex33(3), "sum_charnil4_cas3");
    AlgebraDoc doc{std::move(L), Subspace::full(8), span_first(8, 7), {}};
    out.push_back({doc.algebra.name() + ".json", std::move(doc)});
  }
  return out;
}

AlgebraDoc corpus_bad_table() {
  LeibnizAlgebra L =
      LeibnizAlgebra::create(2, {{0, 0, 0, Rat(1)}}, "bad_table", /*unchecked=*/true);
  return AlgebraDoc{std::move(L), {}, {}, {}};
}

}  // namespace leibniz
