#include "leibniz/unipoly.hpp"

#include <algorithm>

#include "leibniz/errors.hpp"

namespace leibniz {

UniPoly UniPoly::monomial(std::size_t k, const Rat& coeff) {
  std::vector<Rat> c(k + 1, Rat(0));
  c[k] = coeff;
  return UniPoly(std::move(c));
}

Rat UniPoly::eval(const Rat& x) const {
  Rat acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UniPoly UniPoly::operator-() const {
  std::vector<Rat> c(c_);
  for (auto& v : c) v = -v;
  return UniPoly(std::move(c));
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()), Rat(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return UniPoly(std::move(c));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly();
  std::vector<Rat> c(a.c_.size() + b.c_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return UniPoly(std::move(c));
}

UniPoly UniPoly::scaled(const Rat& s) const {
  std::vector<Rat> c(c_);
  for (auto& v : c) v *= s;
  return UniPoly(std::move(c));
}

UniPoly UniPoly::divide_linear(const Rat& r) const {
  // synthetic division by (t - r); the remainder must vanish
  if (is_zero()) throw ZeroPolynomial();
  std::vector<Rat> q(c_.size() - 1, Rat(0));
  Rat carry(0);
  for (std::size_t i = c_.size(); i-- > 1;) {
    carry = c_[i] + carry * r;
    q[i - 1] = carry;
  }
  Rat rem = c_[0] + carry * r;
  if (!rem.is_zero()) throw Error("divide_linear: " + r.str() + " is not a root");
  return UniPoly(std::move(q));
}

std::string UniPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i].is_zero()) continue;
    Rat a = c_[i];
    if (out.empty()) {
      if (a.sign() < 0) {
        out += "-";
        a = -a;
      }
    } else {
      out += a.sign() < 0 ? " - " : " + ";
      if (a.sign() < 0) a = -a;
    }
    const bool unit = a.is_one() && i > 0;
    if (!unit) out += a.str();
    if (i > 0) {
      if (!unit) out += "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

namespace {

// positive divisors by trial division
std::vector<mpz_class> divisors(const mpz_class& n_in) {
  mpz_class n = ::abs(n_in);
  std::vector<mpz_class> small, large;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

std::vector<std::pair<Rat, std::size_t>> rational_roots(const UniPoly& p) {
  if (p.is_zero()) throw ZeroPolynomial();

  std::vector<std::pair<Rat, std::size_t>> roots;
  UniPoly q = p;

  // split off t^m
  std::size_t m = 0;
  while (q.coeff(0).is_zero() && !q.is_zero()) {
    q = q.divide_linear(Rat(0));
    ++m;
  }
  if (m > 0) roots.emplace_back(Rat(0), m);
  if (q.degree() <= 0) {
    std::sort(roots.begin(), roots.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return roots;
  }

  // scale to integer coefficients
  mpz_class lcm_den(1);
  for (const auto& c : q.coeffs()) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), lcm_den.get_mpz_t(), c.den().get_mpz_t());
    lcm_den = lcm_den / g * c.den();
  }
  UniPoly zi = q.scaled(Rat(lcm_den));
  const mpz_class a0 = zi.coeff(0).num();
  const mpz_class ad = zi.lead().num();

  for (const auto& pn : divisors(a0)) {
    for (const auto& qd : divisors(ad)) {
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), pn.get_mpz_t(), qd.get_mpz_t());
      if (g != 1) continue;
      for (int s = 0; s < 2; ++s) {
        const Rat cand = s == 0 ? Rat(pn, qd) : Rat(-pn, qd);
        if (!q.eval(cand).is_zero()) continue;
        std::size_t mult = 0;
        while (q.eval(cand).is_zero()) {
          q = q.divide_linear(cand);
          ++mult;
        }
        roots.emplace_back(cand, mult);
      }
    }
  }

  std::sort(roots.begin(), roots.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return roots;
}

}  // namespace leibniz
