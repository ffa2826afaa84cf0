#include "leibniz/rational.hpp"

#include <cctype>
#include <ostream>

namespace leibniz {

namespace {

bool valid_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

// GMP's string constructor rejects an explicit plus sign.
std::string strip_plus(const std::string& s) {
  return s[0] == '+' ? s.substr(1) : s;
}

}  // namespace

Rat Rat::parse(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) {
    if (!valid_integer_token(s)) throw ParseError("bad rational literal '" + s + "'");
    return Rat(mpz_class(strip_plus(s)));
  }
  const std::string ns = s.substr(0, slash);
  const std::string ds = s.substr(slash + 1);
  if (!valid_integer_token(ns) || !valid_integer_token(ds))
    throw ParseError("bad rational literal '" + s + "'");
  mpz_class den(strip_plus(ds));
  if (den == 0) throw ParseError("zero denominator in '" + s + "'");
  return Rat(mpz_class(strip_plus(ns)), den);
}

std::string Rat::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

Rat pow(const Rat& base, unsigned long e) {
  Rat acc(1);
  Rat b = base;
  while (e) {
    if (e & 1) acc *= b;
    b *= b;
    e >>= 1;
  }
  return acc;
}

}  // namespace leibniz
