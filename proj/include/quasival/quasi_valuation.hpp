#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "quasival/monoid_value.hpp"
#include "quasival/report.hpp"
#include "quasival/sampler.hpp"
#include "quasival/valuation.hpp"

namespace qv {

/// w : R -> M u {inf} with w(0) = inf, w(xy) >= w(x) + w(y) and
/// w(x+y) >= min{w(x), w(y)}. The axioms are enforced by the checker
/// suite, not by construction.
struct QuasiValuation {
  std::string name;
  Codomain codomain;
  Domain domain;
  std::function<MonoidValue(const FieldElem&)> eval;

  MonoidValue operator()(const FieldElem& x) const { return eval(x); }
};

/// View a valuation as a quasi-valuation with Div codomain.
QuasiValuation to_quasi(const Valuation& v);

/// The n-adic quasi-valuation on Q: the unique e with x = n^e a/b, n not
/// dividing a, gcd(n,b) = gcd(a,b) = 1.
QuasiValuation nadic(const Int& n);

/// Pointwise minimum of quasi-valuations sharing a codomain.
QuasiValuation min_family(std::vector<QuasiValuation> ws);

/// w(a + be) = min{v(a), v(b) - gamma} on Q(sqrt(d)) extending v_p;
/// requires gamma >= 0 and v_p(d) >= 0.
QuasiValuation kummer(const Int& p, const Int& d, const Rat& gamma);

/// w(x) = v_p(x)^2 on Z (not extendable to Q).
QuasiValuation squared(const Int& p);

/// w(x) = v(x) when v(x) < alpha, inf otherwise; domain restricted to O_v.
QuasiValuation truncated(const Int& p, const Rat& alpha);

/// The four-case quasi-valuation on Q(sqrt(p)) into Z x {a0 < a1} with max.
QuasiValuation lexmax_demo(const Int& p);

/// Deliberately broken evaluator w := -v_p; fails B2. Diagnostic only.
QuasiValuation negated_padic(const Int& p);

/// Projection onto the quotient by hull(H): drops the H-coordinates of a
/// Div-codomain quasi-valuation (the localized quasi-valuation).
QuasiValuation quotient_qv(const QuasiValuation& w, IsolatedSubgroup h);

/// Draws elements of a quasi-valuation domain.
using DomainSampler = std::function<FieldElem(Sampler&)>;

/// Default sampler for a domain descriptor (bounded-height elements).
DomainSampler domain_sampler(const Domain& dom);

/// B1 once, B2/B3 on `count` sampled pairs, exact comparisons.
CheckReport check_axioms(const QuasiValuation& w, const DomainSampler& sample, Sampler& rng,
                         long count);

/// A1/A1'/A2/A3 for valuations (A2 is an equality).
CheckReport check_valuation_axioms(const Valuation& v, const DomainSampler& sample, Sampler& rng,
                                   long count);

/// w(x^n) = n w(x) for 2 <= n <= n_max (or n = 2 only).
CheckReport check_exponential(const QuasiValuation& w, const DomainSampler& sample, Sampler& rng,
                              long count, long n_max, bool square_only = false);

/// w(cx) = w(c) + w(x) on sampled x.
CheckReport check_stable(const QuasiValuation& w, const FieldElem& c, const DomainSampler& sample,
                         Sampler& rng, long count);

bool in_Ow(const QuasiValuation& w, const FieldElem& x);
bool in_Iw(const QuasiValuation& w, const FieldElem& x);

/// Number of distinct classes of w(x) modulo the integral lattice Z^k among
/// nonzero samples; requires a Div codomain.
long coset_count(const QuasiValuation& w, const DomainSampler& sample, Sampler& rng, long count);

/// Least 1 <= t <= t_max with w(b^t) in Z^k; nullopt when none is found.
std::optional<long> coset_period(const QuasiValuation& w, const FieldElem& b, long t_max);

}  // namespace qv
