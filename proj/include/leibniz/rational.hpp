#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

#include "leibniz/errors.hpp"

namespace leibniz {

/// Arbitrary-precision rational number over GMP.
///
/// Invariants (enforced on every construction path):
///   - stored in lowest terms, denominator > 0
///   - zero is canonically 0/1
/// str() emits "p/q", or just "p" when the denominator is 1; parse() accepts
/// the same forms with an optional sign.
class Rat {
 public:
  Rat() : v_(0) {}
  Rat(long n) : v_(n) {}  // NOLINT: implicit on purpose, mirrors integer literals
  Rat(long n, long d) {
    if (d == 0) throw DivisionByZero();
    v_ = mpq_class(n, d);
    v_.canonicalize();
  }
  explicit Rat(const mpz_class& n) : v_(n) {}
  Rat(const mpz_class& n, const mpz_class& d) {
    if (d == 0) throw DivisionByZero();
    v_ = mpq_class(n, d);
    v_.canonicalize();
  }

  static Rat parse(const std::string& s);

  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  std::string str() const;

  Rat operator-() const {
    Rat r;
    r.v_ = -v_;
    return r;
  }
  Rat& operator+=(const Rat& o) {
    v_ += o.v_;
    return *this;
  }
  Rat& operator-=(const Rat& o) {
    v_ -= o.v_;
    return *this;
  }
  Rat& operator*=(const Rat& o) {
    v_ *= o.v_;
    return *this;
  }
  Rat& operator/=(const Rat& o) {
    if (o.is_zero()) throw DivisionByZero();
    v_ /= o.v_;
    return *this;
  }

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  Rat inv() const {
    if (is_zero()) throw DivisionByZero();
    Rat r;
    r.v_ = 1 / v_;
    return r;
  }
  Rat abs() const {
    Rat r;
    r.v_ = ::abs(v_);
    return r;
  }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r);

 private:
  mpq_class v_;
};

Rat pow(const Rat& base, unsigned long e);

}  // namespace leibniz
