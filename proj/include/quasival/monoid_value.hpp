#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <variant>

#include "quasival/cut_monoid.hpp"
#include "quasival/ordered_group.hpp"

namespace qv {

enum class CodomainTag { Div, Cut, LexMax };

/// Codomain descriptor of a quasi-valuation: which totally ordered abelian
/// monoid the finite values live in.
struct Codomain {
  CodomainTag tag = CodomainTag::Div;
  int rank = 1;         // Div / Cut: rank of the underlying lattice
  long chain_size = 0;  // LexMax: size of the max-chain, 0 for N u {0}
  friend bool operator==(const Codomain&, const Codomain&) = default;
};

/// A value in M u {inf}. Finite values never mix tag families; Infinity is
/// shared, absorbing and maximal. A CutValue stored here is never the cut
/// monoid's adjoined Infinity (that normalizes to MonoidValue infinity).
class MonoidValue {
 public:
  struct Inf {
    friend bool operator==(const Inf&, const Inf&) = default;
  };

  MonoidValue(DivElem v) : v_(std::move(v)) {}
  MonoidValue(CutValue v) : v_(std::move(v)) {
    if (std::get<CutValue>(v_).is_infinity()) v_ = Inf{};
  }
  MonoidValue(LexProductElem v) : v_(std::move(v)) {}
  static MonoidValue infinity() { return MonoidValue(Inf{}); }

  bool is_inf() const { return std::holds_alternative<Inf>(v_); }
  bool is_div() const { return std::holds_alternative<DivElem>(v_); }
  bool is_cut() const { return std::holds_alternative<CutValue>(v_); }
  bool is_lexmax() const { return std::holds_alternative<LexProductElem>(v_); }

  const DivElem& div() const { return std::get<DivElem>(v_); }
  const CutValue& cut() const { return std::get<CutValue>(v_); }
  const LexProductElem& lexmax() const { return std::get<LexProductElem>(v_); }

  friend bool operator==(const MonoidValue& a, const MonoidValue& b) { return a.v_ == b.v_; }

 private:
  explicit MonoidValue(Inf i) : v_(i) {}
  std::variant<DivElem, CutValue, LexProductElem, Inf> v_;
};

inline std::strong_ordering mv_cmp(const MonoidValue& a, const MonoidValue& b) {
  if (a.is_inf() || b.is_inf()) {
    if (a.is_inf() && b.is_inf()) return std::strong_ordering::equal;
    return a.is_inf() ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  if (a.is_div() && b.is_div()) return lex_compare(a.div(), b.div());
  if (a.is_cut() && b.is_cut()) return cut_cmp(a.cut(), b.cut());
  if (a.is_lexmax() && b.is_lexmax()) return lex_compare(a.lexmax(), b.lexmax());
  throw std::invalid_argument("mv_cmp: mixed codomain tags");
}

inline MonoidValue mv_add(const MonoidValue& a, const MonoidValue& b) {
  if (a.is_inf() || b.is_inf()) return MonoidValue::infinity();
  if (a.is_div() && b.is_div()) return MonoidValue(add(a.div(), b.div()));
  if (a.is_cut() && b.is_cut()) return MonoidValue(cut_add(a.cut(), b.cut()));
  if (a.is_lexmax() && b.is_lexmax()) return MonoidValue(add(a.lexmax(), b.lexmax()));
  throw std::invalid_argument("mv_add: mixed codomain tags");
}

inline MonoidValue mv_scalar(const Int& n, const MonoidValue& a) {
  if (a.is_inf()) return a;
  if (a.is_div()) return MonoidValue(scalar_mul(n, a.div()));
  if (a.is_cut()) return MonoidValue(cut_scalar(n, a.cut()));
  return MonoidValue(scalar_mul(n, a.lexmax()));
}

inline MonoidValue mv_min(const MonoidValue& a, const MonoidValue& b) {
  return mv_cmp(a, b) == std::strong_ordering::greater ? b : a;
}

/// Shift by the negative of a lattice element (used by cut and div values).
inline MonoidValue mv_sub_group(const MonoidValue& a, const DivElem& alpha) {
  if (a.is_inf()) return a;
  if (a.is_div()) return MonoidValue(sub(a.div(), alpha));
  if (a.is_cut()) return MonoidValue(cut_sub_group(a.cut(), to_group(alpha)));
  throw std::invalid_argument("mv_sub_group: unsupported codomain");
}

inline MonoidValue codomain_zero(const Codomain& c) {
  switch (c.tag) {
    case CodomainTag::Div: return MonoidValue(DivElem::zero(c.rank));
    case CodomainTag::Cut: return MonoidValue(CutValue::zero(c.rank));
    case CodomainTag::LexMax: return MonoidValue(LexProductElem{Int(0), MaxElem{0}});
  }
  throw std::logic_error("codomain_zero: bad tag");
}

inline std::string to_string(const MonoidValue& a) {
  if (a.is_inf()) return "inf";
  if (a.is_div()) {
    if (a.div().rank() == 1) return a.div()[0].get_str();
    return to_string(a.div());
  }
  if (a.is_cut()) return to_string(a.cut());
  return to_string(a.lexmax());
}

}  // namespace qv
