#pragma once

#include <compare>
#include <optional>
#include <vector>

#include "quasival/rational.hpp"

namespace qv {

/// Witness for a failed monoid law check.
template <class Elem>
struct LawWitness {
  Elem a;
  Elem b;
  long n = 0;
};

/// Checks a+b = a => b = 0 (weak cancellation) over all sampled pairs.
/// Returns nullopt when the law holds, otherwise the violating pair.
template <class Elem, class AddFn, class CmpFn>
std::optional<LawWitness<Elem>> weak_cancellation_violation(const std::vector<Elem>& samples,
                                                            AddFn add_fn, CmpFn cmp_fn,
                                                            const Elem& zero) {
  for (const Elem& a : samples) {
    for (const Elem& b : samples) {
      if (cmp_fn(add_fn(a, b), a) == std::strong_ordering::equal &&
          cmp_fn(b, zero) != std::strong_ordering::equal) {
        return LawWitness<Elem>{a, b};
      }
    }
  }
  return std::nullopt;
}

/// Checks a < b => na < nb for all sampled pairs and 1 <= n <= n_max.
template <class Elem, class AddFn, class CmpFn>
std::optional<LawWitness<Elem>> n_strict_order_violation(const std::vector<Elem>& samples,
                                                         AddFn add_fn, CmpFn cmp_fn, long n_max) {
  for (const Elem& a : samples) {
    for (const Elem& b : samples) {
      if (cmp_fn(a, b) != std::strong_ordering::less) continue;
      Elem na = a;
      Elem nb = b;
      for (long n = 2; n <= n_max; ++n) {
        na = add_fn(na, a);
        nb = add_fn(nb, b);
        if (cmp_fn(na, nb) != std::strong_ordering::less) return LawWitness<Elem>{a, b, n};
      }
    }
  }
  return std::nullopt;
}

/// Total-order laws (antisymmetry and transitivity) over sampled triples.
template <class Elem, class CmpFn>
std::optional<LawWitness<Elem>> total_order_violation(const std::vector<Elem>& samples,
                                                      CmpFn cmp_fn) {
  for (const Elem& a : samples) {
    for (const Elem& b : samples) {
      auto ab = cmp_fn(a, b);
      auto ba = cmp_fn(b, a);
      if (ab == std::strong_ordering::less && ba != std::strong_ordering::greater)
        return LawWitness<Elem>{a, b};
      if (ab == std::strong_ordering::equal && ba != std::strong_ordering::equal)
        return LawWitness<Elem>{a, b};
      for (const Elem& c : samples) {
        if (ab != std::strong_ordering::greater && cmp_fn(b, c) != std::strong_ordering::greater &&
            cmp_fn(a, c) == std::strong_ordering::greater)
          return LawWitness<Elem>{a, c};
      }
    }
  }
  return std::nullopt;
}

/// Order-compatibility of addition: a <= b => a+c <= b+c over sampled triples.
template <class Elem, class AddFn, class CmpFn>
std::optional<LawWitness<Elem>> order_compat_violation(const std::vector<Elem>& samples,
                                                       AddFn add_fn, CmpFn cmp_fn) {
  for (const Elem& a : samples) {
    for (const Elem& b : samples) {
      if (cmp_fn(a, b) == std::strong_ordering::greater) continue;
      for (const Elem& c : samples) {
        if (cmp_fn(add_fn(a, c), add_fn(b, c)) == std::strong_ordering::greater)
          return LawWitness<Elem>{a, c};
      }
    }
  }
  return std::nullopt;
}

/// n*m = 0 with n >= 1 forces m = 0, checked exhaustively on samples.
template <class Elem, class AddFn, class CmpFn>
std::optional<LawWitness<Elem>> torsion_free_violation(const std::vector<Elem>& samples,
                                                       AddFn add_fn, CmpFn cmp_fn, const Elem& zero,
                                                       long n_max) {
  for (const Elem& m : samples) {
    if (cmp_fn(m, zero) == std::strong_ordering::equal) continue;
    Elem nm = m;
    for (long n = 1; n <= n_max; ++n) {
      if (n > 1) nm = add_fn(nm, m);
      if (cmp_fn(nm, zero) == std::strong_ordering::equal) return LawWitness<Elem>{m, m, n};
    }
  }
  return std::nullopt;
}

}  // namespace qv
