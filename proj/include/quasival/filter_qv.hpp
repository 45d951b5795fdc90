#pragma once

#include <variant>

#include "quasival/quasi_valuation.hpp"

namespace qv {

/// R = O_v + O_v*(c*sqrt(d)) inside Q(sqrt(d)), with v = v_p, v(c) >= 0 and
/// v(d) >= 0 so R is a ring. Coordinates of x = alpha + beta*(c*sqrt(d)).
struct QuadOrder {
  Int p;
  Int d;
  Rat c;
};

/// R = O_v / I for v = v_p, where I = {x : v(x) >= ideal_min} is determined
/// by the final subset [ideal_min, inf) of the value set. Elements are
/// represented by O_v representatives.
struct QuotientAlg {
  Int p;
  Int ideal_min;  // >= 1 keeps R nonzero
};

/// R = S^{-1} O_v over the rank-2 composite valuation on Q(t), where
/// S = O_v minus the prime corresponding to the isolated subgroup H_level.
struct LocalizationAlg {
  Int p;
  int h_level = 1;  // 1 <= level < 2
};

using OvAlgebra = std::variant<QuadOrder, QuotientAlg, LocalizationAlg>;

/// The base valuation an algebra is built over.
Valuation base_valuation(const OvAlgebra& r);

/// Membership of a field element in R (QuadOrder / LocalizationAlg) or in
/// O_v for QuotientAlg representatives.
bool in_algebra(const OvAlgebra& r, const FieldElem& x);

/// R-coordinates (alpha, beta) of x = alpha + beta*(c*sqrt(d)).
std::pair<Rat, Rat> quad_order_coords(const QuadOrder& r, const QuadElem& x);

/// w(x) = v(S_x)+ where S_x = {a in O_v : xR inside aR}: the closed-form
/// support cut of the shape. Rejects elements outside R.
CutValue support_cut(const OvAlgebra& r, const FieldElem& x);

/// Candidate values v(a) in the nonnegative window used by the support oracle.
std::vector<GroupElem> support_candidates(const OvAlgebra& r, long window);

/// Brute-force support: the subset of candidates delta with x in aR for
/// v(a) = delta, decided by explicit membership tests. Validates support_cut.
std::vector<GroupElem> support_values_bruteforce(const OvAlgebra& r, const FieldElem& x,
                                                 long window);

/// The filter quasi-valuation x -> v(S_x)+ on R.
QuasiValuation filter_qv(const OvAlgebra& r);

/// Extension W(r/beta) = w(r) - v(beta) to the fraction field of a
/// QuadOrder; W extends v and O_W = R.
QuasiValuation filter_qv_extend(const QuadOrder& r);

/// Sampler for elements of R.
DomainSampler algebra_sampler(const OvAlgebra& r);

/// filter_qv_extend(QuadOrder(c,d)) equals kummer(gamma = v(c)) under the
/// identification of principal cuts with their values.
CheckReport kummer_equivalence(const Int& p, const Int& d, const Rat& c, Sampler& rng, long count);

/// I_W = I_v R via the coordinate criterion v(alpha) > 0 and v(beta) > 0.
CheckReport iw_equals_IvR(const QuadOrder& r, Sampler& rng, long count);

/// The filter quasi-valuation is the coarsest: w(x) < w(y) implies
/// other(x) < other(y), after confirming O_other = R on samples.
CheckReport coarsest_check(const QuadOrder& r, const QuasiValuation& other, Sampler& rng,
                           long count);

/// Localization compatibility: the quotient-composed filter value equals
/// the directly computed filter value of the localized pair.
///   instance 0: rank-1 base, P = I_v (trivial localization, QuadOrder);
///   instance 1: rank-2 base, R = O_v, H = 0 x Z;
///   instance 2: rank-1 base, P = 0 (trivial-group cut monoid).
CheckReport localization_compat(int instance, Sampler& rng, long count);

}  // namespace qv
