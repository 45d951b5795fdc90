#pragma once

#include <stdexcept>
#include <string>
#include <variant>

#include "quasival/laurent.hpp"
#include "quasival/quad_field.hpp"
#include "quasival/rational.hpp"

namespace qv {

inline Rat add(const Rat& a, const Rat& b) { return Rat(a + b); }
inline Rat mul(const Rat& a, const Rat& b) { return Rat(a * b); }
inline Rat neg(const Rat& a) { return Rat(-a); }

/// One element of whichever exact field a valuation domain lives in.
using FieldElem = std::variant<Rat, QuadElem, RankTwoElem>;

enum class FieldKind { Q, QuadQ, Qt };

/// Domain of a (quasi-)valuation: the carrier field plus restrictions
/// narrowing it to a subring (integers, O_v, a quadratic order, ...).
struct Domain {
  FieldKind field = FieldKind::Q;
  Int d = 0;        // QuadQ field tag
  long p = 0;       // restriction parameter where one applies
  std::string restriction;  // "", "Z", "Ov", "quad_order", "quotient", "localization"
};

inline FieldElem fe_add(const FieldElem& x, const FieldElem& y) {
  if (x.index() != y.index()) throw std::invalid_argument("FieldElem: mixed kinds");
  return std::visit(
      [&](const auto& a) -> FieldElem { return add(a, std::get<std::decay_t<decltype(a)>>(y)); }, x);
}

inline FieldElem fe_mul(const FieldElem& x, const FieldElem& y) {
  if (x.index() != y.index()) throw std::invalid_argument("FieldElem: mixed kinds");
  return std::visit(
      [&](const auto& a) -> FieldElem { return mul(a, std::get<std::decay_t<decltype(a)>>(y)); }, x);
}

inline FieldElem fe_neg(const FieldElem& x) {
  return std::visit([](const auto& a) -> FieldElem { return neg(a); }, x);
}

inline FieldElem fe_sub(const FieldElem& x, const FieldElem& y) { return fe_add(x, fe_neg(y)); }

inline bool fe_is_zero(const FieldElem& x) {
  return std::visit(
      [](const auto& a) {
        if constexpr (std::is_same_v<std::decay_t<decltype(a)>, Rat>) return a == 0;
        else return a.is_zero();
      },
      x);
}

inline FieldElem fe_inverse(const FieldElem& x) {
  if (fe_is_zero(x)) throw std::domain_error("FieldElem: inverse of zero");
  return std::visit(
      [](const auto& a) -> FieldElem {
        if constexpr (std::is_same_v<std::decay_t<decltype(a)>, Rat>) return Rat(1 / a);
        else return inverse(a);
      },
      x);
}

inline FieldElem fe_pow(FieldElem x, long n) {
  if (n < 0) {
    x = fe_inverse(x);
    n = -n;
  }
  FieldElem acc = std::visit(
      [](const auto& a) -> FieldElem {
        using T = std::decay_t<decltype(a)>;
        if constexpr (std::is_same_v<T, Rat>) return Rat(1);
        else if constexpr (std::is_same_v<T, QuadElem>) return QuadElem{Rat(1), Rat(0), a.d};
        else return RankTwoElem::from_rat(Rat(1));
      },
      x);
  for (long i = 0; i < n; ++i) acc = fe_mul(acc, x);
  return acc;
}

inline bool fe_equal(const FieldElem& x, const FieldElem& y) {
  if (x.index() != y.index()) return false;
  return std::visit(
      [&](const auto& a) { return a == std::get<std::decay_t<decltype(a)>>(y); }, x);
}

inline FieldElem fe_zero(const Domain& dom) {
  switch (dom.field) {
    case FieldKind::Q: return Rat(0);
    case FieldKind::QuadQ: return QuadElem{Rat(0), Rat(0), dom.d};
    case FieldKind::Qt: return RankTwoElem();
  }
  throw std::logic_error("fe_zero: bad field kind");
}

inline FieldElem fe_one(const Domain& dom) {
  switch (dom.field) {
    case FieldKind::Q: return Rat(1);
    case FieldKind::QuadQ: return QuadElem{Rat(1), Rat(0), dom.d};
    case FieldKind::Qt: return RankTwoElem::from_rat(Rat(1));
  }
  throw std::logic_error("fe_one: bad field kind");
}

/// Scalar multiplication by a base-field rational.
inline FieldElem fe_scale(const Rat& c, const FieldElem& x) {
  return std::visit(
      [&](const auto& a) -> FieldElem {
        using T = std::decay_t<decltype(a)>;
        if constexpr (std::is_same_v<T, Rat>) return Rat(c * a);
        else if constexpr (std::is_same_v<T, QuadElem>) return QuadElem{c * a.a, c * a.b, a.d};
        else return mul(RankTwoElem::from_rat(c), a);
      },
      x);
}

inline std::string to_string(const FieldElem& x) {
  return std::visit([](const auto& a) { return to_string(a); }, x);
}

}  // namespace qv
