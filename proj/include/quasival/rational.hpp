#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace qv {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline Rat rat_from_string(const std::string& s) {
  Rat q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("rat_from_string: bad rational '" + s + "'");
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline std::string to_string(const Rat& q) { return q.get_str(); }
inline std::string to_string(const Int& z) { return z.get_str(); }

/// Multiplicity of the prime p in z; nullopt encodes infinity (z == 0).
inline std::optional<Int> vp_int(const Int& p, const Int& z) {
  if (z == 0) return std::nullopt;
  Int rest;
  mp_bitcnt_t e = mpz_remove(rest.get_mpz_t(), z.get_mpz_t(), p.get_mpz_t());
  return Int(static_cast<unsigned long>(e));
}

/// p-adic valuation of a rational; nullopt encodes infinity.
inline std::optional<Int> vp_rat(const Int& p, const Rat& x) {
  if (x == 0) return std::nullopt;
  return *vp_int(p, x.get_num()) - *vp_int(p, x.get_den());
}

inline bool is_prime(const Int& p) {
  if (p < 2) return false;
  return mpz_probab_prime_p(p.get_mpz_t(), 30) != 0;
}

inline bool is_squarefree(const Int& d) {
  if (d == 0) return false;
  Int n = abs(d);
  if (n % 4 == 0) return false;
  for (Int q = 3; q * q <= n; q += 2) {
    if (n % (q * q) == 0) return false;
  }
  return true;
}

inline Int pow_int(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Rat pow_rat(const Rat& base, long e) {
  if (e == 0) return Rat(1);
  Rat r;
  unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num().get_mpz_t(), a);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den().get_mpz_t(), a);
  r.canonicalize();
  if (e < 0) {
    if (r == 0) throw std::domain_error("pow_rat: negative power of zero");
    return Rat(1) / r;
  }
  return r;
}

}  // namespace qv
