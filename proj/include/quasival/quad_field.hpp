#pragma once

#include <stdexcept>
#include <string>

#include "quasival/rational.hpp"

namespace qv {

/// a + b*sqrt(d) with exact rational a, b; d is a fixed nonzero squarefree
/// integer tagging the field Q(sqrt(d)).
struct QuadElem {
  Rat a;
  Rat b;
  Int d;

  bool is_zero() const { return a == 0 && b == 0; }
  friend bool operator==(const QuadElem& x, const QuadElem& y) {
    return x.d == y.d && x.a == y.a && x.b == y.b;
  }
};

inline void check_same_field(const QuadElem& x, const QuadElem& y) {
  if (x.d != y.d) throw std::invalid_argument("QuadElem: mixed field tags");
}

inline QuadElem quad(const Rat& a, const Rat& b, const Int& d) { return QuadElem{a, b, d}; }

inline QuadElem add(const QuadElem& x, const QuadElem& y) {
  check_same_field(x, y);
  return QuadElem{x.a + y.a, x.b + y.b, x.d};
}
inline QuadElem neg(const QuadElem& x) { return QuadElem{-x.a, -x.b, x.d}; }
inline QuadElem sub(const QuadElem& x, const QuadElem& y) { return add(x, neg(y)); }
inline QuadElem mul(const QuadElem& x, const QuadElem& y) {
  check_same_field(x, y);
  return QuadElem{x.a * y.a + Rat(x.d) * x.b * y.b, x.a * y.b + x.b * y.a, x.d};
}
inline QuadElem conjugate(const QuadElem& x) { return QuadElem{x.a, -x.b, x.d}; }
inline Rat norm(const QuadElem& x) { return x.a * x.a - Rat(x.d) * x.b * x.b; }
inline QuadElem inverse(const QuadElem& x) {
  const Rat n = norm(x);
  if (n == 0) throw std::domain_error("QuadElem: inverse of zero");
  return QuadElem{x.a / n, -x.b / n, x.d};
}

inline std::string to_string(const QuadElem& x) {
  const std::string sym = x.d == -1 ? "i" : "s";
  if (x.b == 0) return x.a.get_str();
  std::string s;
  if (x.a != 0) s = x.a.get_str();
  if (x.b == 1)
    s += s.empty() ? sym : "+" + sym;
  else if (x.b == -1)
    s += "-" + sym;
  else
    s += (s.empty() || x.b < 0 ? "" : "+") + x.b.get_str() + sym;
  return s;
}

}  // namespace qv
