#include "leibniz/multipoly.hpp"

#include <numeric>

#include "leibniz/errors.hpp"

namespace leibniz {

bool MultiPoly::GrlexLess::operator()(const Exponents& a, const Exponents& b) const {
  unsigned da = std::accumulate(a.begin(), a.end(), 0u);
  unsigned db = std::accumulate(b.begin(), b.end(), 0u);
  if (da != db) return da < db;
  return a < b;
}

MultiPoly MultiPoly::constant(std::vector<std::string> vars, const Rat& c) {
  MultiPoly p(std::move(vars));
  if (!c.is_zero()) p.terms_.emplace(Exponents(p.vars_.size(), 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::vector<std::string> vars, std::size_t index) {
  MultiPoly p(std::move(vars));
  if (index >= p.vars_.size()) throw ArityError("variable index out of range");
  Exponents e(p.vars_.size(), 0);
  e[index] = 1;
  p.terms_.emplace(std::move(e), Rat(1));
  return p;
}

bool MultiPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  for (unsigned x : e)
    if (x) return false;
  return true;
}

Rat MultiPoly::constant_value() const {
  if (terms_.empty()) return Rat(0);
  if (!is_constant()) throw Error("constant_value on a non-constant polynomial");
  return terms_.begin()->second;
}

std::size_t MultiPoly::total_degree() const {
  if (terms_.empty()) return 0;
  const auto& e = terms_.rbegin()->first;  // grlex: last term has maximal degree
  return std::accumulate(e.begin(), e.end(), 0u);
}

void MultiPoly::require_same_vars(const MultiPoly& o) const {
  if (vars_ != o.vars_) throw ArityError("polynomial variable orderings differ");
}

void MultiPoly::add_term(const Exponents& e, const Rat& c) {
  if (e.size() != vars_.size()) throw ArityError("exponent tuple length mismatch");
  if (c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(vars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  require_same_vars(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  require_same_vars(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r(a);
  r += b;
  return r;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r(a);
  r -= b;
  return r;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.require_same_vars(b);
  MultiPoly r(a.vars_);
  MultiPoly::Exponents e(a.vars_.size());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

MultiPoly MultiPoly::scaled(const Rat& s) const {
  MultiPoly r(vars_);
  if (s.is_zero()) return r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, c * s);
  return r;
}

MultiPoly MultiPoly::div_scalar(const Rat& s) const {
  if (s.is_zero()) throw DivisionByZero();
  return scaled(s.inv());
}

Rat MultiPoly::eval(const std::vector<Rat>& point) const {
  if (point.size() != vars_.size()) throw ArityError("evaluation point arity mismatch");
  Rat acc(0);
  for (const auto& [e, c] : terms_) {
    Rat t = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) t *= pow(point[i], e[i]);
    acc += t;
  }
  return acc;
}

MultiPoly MultiPoly::substitute(std::size_t var_index, const Rat& value) const {
  if (var_index >= vars_.size()) throw ArityError("substitute index out of range");
  MultiPoly r(vars_);
  Exponents e(vars_.size());
  for (const auto& [et, c] : terms_) {
    e = et;
    Rat nc = c;
    if (e[var_index]) {
      nc *= pow(value, e[var_index]);
      e[var_index] = 0;
    }
    r.add_term(e, nc);
  }
  return r;
}

MultiPoly MultiPoly::exact_div(const MultiPoly& d) const {
  require_same_vars(d);
  if (d.is_zero()) throw DivisionByZero();
  MultiPoly rem(*this);
  MultiPoly quot(vars_);
  const auto& dlead = *d.terms_.rbegin();
  while (!rem.is_zero()) {
    const auto& rlead = *rem.terms_.rbegin();
    Exponents q(vars_.size());
    for (std::size_t i = 0; i < q.size(); ++i) {
      if (rlead.first[i] < dlead.first[i]) throw Error("exact_div: not divisible");
      q[i] = rlead.first[i] - dlead.first[i];
    }
    const Rat qc = rlead.second / dlead.second;
    MultiPoly mono(vars_);
    mono.terms_.emplace(q, qc);
    quot.add_term(q, qc);
    rem -= mono * d;
  }
  return quot;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rat a = c;
    if (out.empty()) {
      if (a.sign() < 0) {
        out += "-";
        a = -a;
      }
    } else {
      out += a.sign() < 0 ? " - " : " + ";
      if (a.sign() < 0) a = -a;
    }
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += vars_[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out += a.str();
    } else if (a.is_one()) {
      out += mono;
    } else {
      out += a.str() + "*" + mono;
    }
  }
  return out;
}

}  // namespace leibniz
