#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "quasival/field_elem.hpp"
#include "quasival/ordered_group.hpp"

namespace qv {

/// Value of a valuation: an element of the divisible hull, or infinity.
using ValValue = std::optional<DivElem>;  // nullopt encodes infinity

inline bool val_is_inf(const ValValue& v) { return !v.has_value(); }

inline std::string to_string(const ValValue& v) { return v ? to_string(*v) : "inf"; }

/// Exact valuation v with values in Q^k (all codomains embed in the
/// divisible hull); satisfies A1, A1', A2, A3 on its domain.
struct Valuation {
  std::string name;
  int rank = 1;
  Domain domain;
  std::function<ValValue(const FieldElem&)> eval;

  ValValue operator()(const FieldElem& x) const { return eval(x); }
};

/// The p-adic valuation on Q.
Valuation padic_valuation(const Int& p);

/// The trivial (rank-0) valuation on Q.
Valuation trivial_valuation();

/// Rank-2 composite valuation on Q(t): v(f) = (ord_t f, v_p of the lowest
/// coefficient), lexicographically ordered.
Valuation composite_valuation(const Int& p);

enum class PrimeClass { Split, Inert, Ramified };

std::string to_string(PrimeClass c);

/// Splitting behaviour of p in Q(sqrt(d)). p = 2 is supported only when
/// ramified (2 | d).
PrimeClass classify_prime(const Int& p, const Int& d);

/// Residue r with r^2 = d (mod p^m), lifted from the smallest base root in
/// [1, p-1]; requires p odd, p not dividing d, and d a residue mod p.
Int hensel_sqrt(const Int& d, const Int& p, unsigned long m);

/// All extensions of v_p to Q(sqrt(d)): one for inert/ramified p (values
/// v_p(N(x))/2), two for split p (Hensel-labelled u1 and its conjugate u2).
std::vector<Valuation> extend_valuation(const Int& p, const Int& d);

}  // namespace qv
