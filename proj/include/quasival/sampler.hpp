#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "quasival/cut_monoid.hpp"
#include "quasival/field_elem.hpp"
#include "quasival/ordered_group.hpp"

namespace qv {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

/// Sub-seed derivation: splitmix64(seed xor fnv1a64(name)). Fixing the seed
/// fixes every sample a suite draws.
inline std::uint64_t derive_seed(std::uint64_t seed, const std::string& name) {
  return splitmix64(seed ^ fnv1a64(name));
}

/// Deterministic generator of bounded-height exact elements. All draws go
/// through mt19937_64 so a seed reproduces the exact sample stream.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed), seed_(seed) {}

  std::uint64_t seed() const { return seed_; }

  long uniform(long lo, long hi) {  // inclusive bounds
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(rng_() % span);
  }

  bool coin(unsigned denom = 2) { return rng_() % denom == 0; }

  Int int_elem(long bound) { return Int(uniform(-bound, bound)); }

  /// Rational with |num| <= max_num, 1 <= den <= max_den; zero allowed.
  Rat rat(long max_num = 10000, long max_den = 10000) {
    return make_rat(Int(uniform(-max_num, max_num)), Int(uniform(1, max_den)));
  }

  Rat nonzero_rat(long max_num = 10000, long max_den = 10000) {
    for (;;) {
      Rat r = rat(max_num, max_den);
      if (r != 0) return r;
    }
  }

  /// Rational with v_p >= 0 (denominator prime to p).
  Rat ov_rat(const Int& p, long max_num = 10000, long max_den = 10000) {
    for (;;) {
      Rat r = rat(max_num, max_den);
      if (r == 0 || *vp_rat(p, r) >= 0) return r;
    }
  }

  Rat nonzero_ov_rat(const Int& p, long max_num = 10000, long max_den = 10000) {
    for (;;) {
      Rat r = ov_rat(p, max_num, max_den);
      if (r != 0) return r;
    }
  }

  QuadElem quad(const Int& d, long max_num = 10000, long max_den = 10000) {
    return QuadElem{rat(max_num, max_den), rat(max_num, max_den), d};
  }

  /// Sparse Laurent fraction: few terms, small exponents and coefficients.
  RankTwoElem laurent(long max_coef = 200) {
    auto poly = [&](bool force_nonzero) {
      std::vector<Rat> c(static_cast<std::size_t>(uniform(1, 5)));
      const int terms = static_cast<int>(uniform(1, 3));
      for (int i = 0; i < terms; ++i)
        c[static_cast<std::size_t>(uniform(0, static_cast<long>(c.size()) - 1))] = rat(max_coef, 40);
      if (force_nonzero) {
        bool all_zero = true;
        for (const Rat& x : c)
          if (x != 0) all_zero = false;
        if (all_zero) c[0] = Rat(1 + uniform(0, max_coef));
      }
      return Poly(std::move(c));
    };
    Poly num = poly(false);
    Poly den = poly(true);
    return RankTwoElem(std::move(num), std::move(den), static_cast<int>(uniform(-3, 3)));
  }

  GroupElem group_elem(int rank, long bound) {
    std::vector<Int> c;
    c.reserve(static_cast<std::size_t>(rank));
    for (int i = 0; i < rank; ++i) c.emplace_back(uniform(-bound, bound));
    return GroupElem(std::move(c));
  }

  DivElem div_elem(int rank, long bound, long max_den = 6) {
    std::vector<Rat> c;
    c.reserve(static_cast<std::size_t>(rank));
    for (int i = 0; i < rank; ++i)
      c.push_back(make_rat(Int(uniform(-bound, bound)), Int(uniform(1, max_den))));
    return DivElem(std::move(c));
  }

  /// Finite or extreme cut of Z^rank-lex with canonical gamma in [-bound, bound]^k.
  CutValue cut(int rank, long bound) {
    const long pick = uniform(0, 12);
    if (pick == 0) return CutValue::minus_inf(rank);
    if (pick == 1) return CutValue::plus_inf(rank);
    const int level = static_cast<int>(uniform(0, rank - 1));
    return CutValue::finite(group_elem(rank, bound), IsolatedSubgroup{level, rank});
  }

  Sampler fork(const std::string& name) { return Sampler(derive_seed(seed_, name)); }

 private:
  std::mt19937_64 rng_;
  std::uint64_t seed_;
};

}  // namespace qv
