#include <doctest.h>

#include <random>
#include <vector>

#include "leibniz/errors.hpp"
#include "leibniz/multipoly.hpp"
#include "leibniz/rational.hpp"
#include "leibniz/unipoly.hpp"

using namespace leibniz;

namespace {

Rat rand_rat(std::mt19937_64& rng) {
  const long n = static_cast<long>(rng() % 41) - 20;
  const long d = static_cast<long>(rng() % 9) + 1;
  return Rat(n, d);
}

}  // namespace

TEST_CASE("rational canonical form") {
  CHECK(Rat(2, 4).str() == "1/2");
  CHECK(Rat(-3, -6).str() == "1/2");
  CHECK(Rat(3, -6).str() == "-1/2");
  CHECK(Rat(0, 5).str() == "0");
  CHECK(Rat(7).str() == "7");
  CHECK(Rat(-9, 3).str() == "-3");
  CHECK(Rat(2, 4) == Rat(1, 2));
  CHECK(Rat(2, 4).den() == 2);
  CHECK_THROWS_AS(Rat(1, 0), DivisionByZero);
}

TEST_CASE("rational parse round trip") {
  for (const char* s : {"0", "1", "-1", "1/2", "-22/7", "355/113", "123456789123456789"}) {
    const Rat r = Rat::parse(s);
    CHECK(r.str() == s);
    CHECK(Rat::parse(r.str()) == r);
  }
  CHECK(Rat::parse("+3/6") == Rat(1, 2));
  CHECK_THROWS_AS(Rat::parse(""), Error);
  CHECK_THROWS_AS(Rat::parse("1/"), Error);
  CHECK_THROWS_AS(Rat::parse("a"), Error);
  CHECK_THROWS_AS(Rat::parse("1/0"), Error);
  CHECK_THROWS_AS(Rat::parse("1.5"), Error);
}

TEST_CASE("rational field laws on samples") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    const Rat a = rand_rat(rng), b = rand_rat(rng), c = rand_rat(rng);
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + Rat(0) == a);
    CHECK(a * Rat(1) == a);
    CHECK(a - a == Rat(0));
    if (!a.is_zero()) {
      CHECK(a * a.inv() == Rat(1));
      CHECK(b / a == b * a.inv());
    }
  }
  CHECK_THROWS_AS(Rat(1) / Rat(0), DivisionByZero);
  CHECK_THROWS_AS(Rat(0).inv(), DivisionByZero);
}

TEST_CASE("rational power") {
  CHECK(pow(Rat(2, 3), 0) == Rat(1));
  CHECK(pow(Rat(2, 3), 3) == Rat(8, 27));
  CHECK(pow(Rat(-2), 5) == Rat(-32));
}

TEST_CASE("unipoly arithmetic and evaluation") {
  // p = t^2 + t - 6 = (t - 2)(t + 3)
  const UniPoly p({Rat(-6), Rat(1), Rat(1)});
  const UniPoly q({Rat(1), Rat(0), Rat(2)});  // 2t^2 + 1
  CHECK(p.degree() == 2);
  CHECK(p.eval(Rat(2)) == Rat(0));
  CHECK(p.eval(Rat(-3)) == Rat(0));
  CHECK(p.eval(Rat(1, 2)) == Rat(-21, 4));

  std::mt19937_64 rng(11);
  for (int t = 0; t < 50; ++t) {
    const Rat x = rand_rat(rng);
    CHECK((p + q).eval(x) == p.eval(x) + q.eval(x));
    CHECK((p - q).eval(x) == p.eval(x) - q.eval(x));
    CHECK((p * q).eval(x) == p.eval(x) * q.eval(x));
  }

  CHECK(p.divide_linear(Rat(2)) == UniPoly({Rat(3), Rat(1)}));
  CHECK((p - p).is_zero());
  CHECK(UniPoly({Rat(1), Rat(2)}).str() == "2*t + 1");
  CHECK(UniPoly({Rat(1), Rat(0), Rat(1)}).str() == "t^2 + 1");
}

TEST_CASE("unipoly rational roots") {
  // 3 (t - 1)^2 (t + 5/2) = 3t^3 + 3/2 t^2 - 12 t + 15/2
  const UniPoly lin1({Rat(-1), Rat(1)});
  const UniPoly lin2({Rat(5, 2), Rat(1)});
  const UniPoly p = (lin1 * lin1 * lin2).scaled(Rat(3));
  const auto roots = rational_roots(p);
  REQUIRE(roots.size() == 2);
  CHECK(roots[0].first == Rat(-5, 2));
  CHECK(roots[0].second == 1);
  CHECK(roots[1].first == Rat(1));
  CHECK(roots[1].second == 2);

  // t^2 + 1 has no rational roots
  CHECK(rational_roots(UniPoly({Rat(1), Rat(0), Rat(1)})).empty());
  CHECK_THROWS_AS(rational_roots(UniPoly()), ZeroPolynomial);
}

TEST_CASE("multipoly arithmetic agrees with evaluation") {
  const std::vector<std::string> vars = {"x1", "x2", "x3"};
  const MultiPoly x = MultiPoly::variable(vars, 0);
  const MultiPoly y = MultiPoly::variable(vars, 1);
  const MultiPoly z = MultiPoly::variable(vars, 2);
  const MultiPoly p = x * x + y.scaled(Rat(2)) - MultiPoly::constant(vars, Rat(5));
  const MultiPoly q = x * y * z - z.scaled(Rat(1, 3));

  std::mt19937_64 rng(13);
  for (int t = 0; t < 50; ++t) {
    const std::vector<Rat> pt = {rand_rat(rng), rand_rat(rng), rand_rat(rng)};
    CHECK((p + q).eval(pt) == p.eval(pt) + q.eval(pt));
    CHECK((p * q).eval(pt) == p.eval(pt) * q.eval(pt));
    CHECK((-p).eval(pt) == -p.eval(pt));
  }
  CHECK_THROWS_AS(p.eval({Rat(1)}), ArityError);

  const MultiPoly other = MultiPoly::variable({"y1"}, 0);
  CHECK_THROWS_AS(p + other, ArityError);
}

TEST_CASE("multipoly substitute keeps the variable list") {
  const std::vector<std::string> vars = {"x1", "x2"};
  const MultiPoly x = MultiPoly::variable(vars, 0);
  const MultiPoly y = MultiPoly::variable(vars, 1);
  const MultiPoly p = x * y + x.scaled(Rat(3));

  const MultiPoly sub = p.substitute(0, Rat(2));
  CHECK(sub.vars() == vars);
  // 2 x2 + 6, still a polynomial in the remaining variable
  CHECK(sub.eval({Rat(99), Rat(1)}) == Rat(8));
  CHECK(sub.eval({Rat(0), Rat(5)}) == Rat(16));

  const MultiPoly fully = sub.substitute(1, Rat(-1));
  CHECK(fully.is_constant());
  CHECK(fully.constant_value() == Rat(4));
}

TEST_CASE("multipoly exact division") {
  const std::vector<std::string> vars = {"x1", "x2"};
  const MultiPoly x = MultiPoly::variable(vars, 0);
  const MultiPoly y = MultiPoly::variable(vars, 1);
  CHECK((x * x - y * y).exact_div(x - y) == x + y);
  CHECK_THROWS_AS((x * x + y).exact_div(x - y), Error);
}

TEST_CASE("multipoly deterministic rendering") {
  const std::vector<std::string> vars = {"x1", "x2"};
  const MultiPoly x = MultiPoly::variable(vars, 0);
  const MultiPoly y = MultiPoly::variable(vars, 1);
  const MultiPoly p = (x + y) * (x + y);
  CHECK(p.str() == "x1^2 + 2*x1*x2 + x2^2");
  CHECK((x * y.scaled(Rat(-2)) + MultiPoly::constant(vars, Rat(1))).str() == "-2*x1*x2 + 1");
  CHECK(MultiPoly(vars).str() == "0");
}
