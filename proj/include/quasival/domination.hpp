#pragma once

#include <vector>

#include "quasival/quasi_valuation.hpp"

namespace qv {

/// One element of the amalgamated order on M u Gamma_div, for the two
/// supported monoid kinds (cut monoid of Z^k, Z x chain with max).
struct AmalgamElem {
  static AmalgamElem from_monoid(MonoidValue m) { return AmalgamElem{true, std::move(m), DivElem::zero(0)}; }
  static AmalgamElem from_div(DivElem g) {
    return AmalgamElem{false, MonoidValue::infinity(), std::move(g)};
  }

  bool from_m;
  MonoidValue m;  // finite monoid value when from_m
  DivElem g;      // divisible-hull element otherwise
};

/// Singularity per Def: x is singular when its class under the denominator
/// clearing map is a singleton. Principal cuts and integral divisible-hull
/// elements pair up; everything else is singular.
bool is_singular(const AmalgamElem& x);

/// Total order on the amalgam. Two singular elements from different sides
/// have no defined comparison and are rejected.
std::strong_ordering amalgam_cmp(const AmalgamElem& x, const AmalgamElem& y);

/// O_u contains O_w on samples, then w(x) <= u(x) in the amalgamated order.
/// A containment failure is reported as a precondition failure.
CheckReport check_dominates(const Valuation& u, const QuasiValuation& w,
                            const DomainSampler& sample, Sampler& rng, long count);

struct DecomposeResult {
  std::vector<std::size_t> kept;  // indices into the candidate list
  bool ok = false;
  std::string witness;  // residual mismatch when !ok
};

/// Minimal candidate subset with w = min(subset) on samples; greedy
/// elimination. Reports a residual witness when no subset matches.
DecomposeResult decompose_exponential(const QuasiValuation& w, const std::vector<Valuation>& candidates,
                                      const DomainSampler& sample, Sampler& rng, long count);

/// Number of pairwise-distinct (on samples) min-of-subset quasi-valuations
/// over nonempty candidate subsets.
long count_exponentials(const std::vector<Valuation>& candidates, const DomainSampler& sample,
                        Sampler& rng, long count);

struct CensusReport {
  long max_ideals = 0;  // distinct K_i = {x in O_w : u_i(x) > 0}, by witness search
  CheckReport radical;  // sampled sqrt(I_w) = J_w equivalence
  std::vector<std::string> witnesses;
};

/// Maximal-ideal census of O_w for w = min(extensions).
CensusReport max_ideal_census(const std::vector<Valuation>& extensions, const DomainSampler& sample,
                              Sampler& rng, long count);

/// Exponential w: sampled algebraic integers over O_v land in O_w.
/// Non-exponential probe: the adjoined root stays outside O_w.
CheckReport integrality_probe(const QuasiValuation& w, const Int& p, const Int& d, bool exponential,
                              Sampler& rng, long count);

}  // namespace qv
