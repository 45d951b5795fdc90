#pragma once

#include <compare>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "quasival/rational.hpp"

namespace qv {

namespace detail {
template <class T>
std::strong_ordering lex_compare_vec(const std::vector<T>& a, const std::vector<T>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("lex_compare: rank mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return std::strong_ordering::less;
    if (a[i] > b[i]) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}
}  // namespace detail

/// Element of Z^k under the left-to-right lexicographic order.
class GroupElem {
 public:
  explicit GroupElem(std::vector<Int> coords) : coords_(std::move(coords)) {}
  static GroupElem zero(int rank) { return GroupElem(std::vector<Int>(static_cast<std::size_t>(rank))); }

  int rank() const { return static_cast<int>(coords_.size()); }
  const Int& operator[](int i) const { return coords_[static_cast<std::size_t>(i)]; }
  const std::vector<Int>& coords() const { return coords_; }

  bool is_zero() const {
    for (const Int& c : coords_)
      if (c != 0) return false;
    return true;
  }

  friend bool operator==(const GroupElem& a, const GroupElem& b) { return a.coords_ == b.coords_; }

 private:
  std::vector<Int> coords_;
};

/// Element of Q^k: the divisible hull of Z^k, stored canonically as rational coordinates.
class DivElem {
 public:
  explicit DivElem(std::vector<Rat> coords) : coords_(std::move(coords)) {}
  static DivElem zero(int rank) { return DivElem(std::vector<Rat>(static_cast<std::size_t>(rank))); }

  int rank() const { return static_cast<int>(coords_.size()); }
  const Rat& operator[](int i) const { return coords_[static_cast<std::size_t>(i)]; }
  const std::vector<Rat>& coords() const { return coords_; }

  bool is_zero() const {
    for (const Rat& c : coords_)
      if (c != 0) return false;
    return true;
  }
  bool is_integral() const {
    for (const Rat& c : coords_)
      if (!is_integer(c)) return false;
    return true;
  }

  friend bool operator==(const DivElem& a, const DivElem& b) { return a.coords_ == b.coords_; }

 private:
  std::vector<Rat> coords_;
};

inline std::strong_ordering lex_compare(const GroupElem& a, const GroupElem& b) {
  return detail::lex_compare_vec(a.coords(), b.coords());
}
inline std::strong_ordering lex_compare(const DivElem& a, const DivElem& b) {
  return detail::lex_compare_vec(a.coords(), b.coords());
}

inline GroupElem add(const GroupElem& a, const GroupElem& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("add: rank mismatch");
  std::vector<Int> c(a.coords());
  for (int i = 0; i < b.rank(); ++i) c[static_cast<std::size_t>(i)] += b[i];
  return GroupElem(std::move(c));
}
inline DivElem add(const DivElem& a, const DivElem& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("add: rank mismatch");
  std::vector<Rat> c(a.coords());
  for (int i = 0; i < b.rank(); ++i) c[static_cast<std::size_t>(i)] += b[i];
  return DivElem(std::move(c));
}

inline GroupElem neg(const GroupElem& a) {
  std::vector<Int> c(a.coords());
  for (Int& x : c) x = -x;
  return GroupElem(std::move(c));
}
inline DivElem neg(const DivElem& a) {
  std::vector<Rat> c(a.coords());
  for (Rat& x : c) x = -x;
  return DivElem(std::move(c));
}

inline GroupElem scalar_mul(const Int& n, const GroupElem& a) {
  std::vector<Int> c(a.coords());
  for (Int& x : c) x *= n;
  return GroupElem(std::move(c));
}
inline DivElem scalar_mul(const Int& n, const DivElem& a) {
  std::vector<Rat> c(a.coords());
  for (Rat& x : c) x *= n;
  return DivElem(std::move(c));
}

inline GroupElem sub(const GroupElem& a, const GroupElem& b) { return add(a, neg(b)); }
inline DivElem sub(const DivElem& a, const DivElem& b) { return add(a, neg(b)); }

inline DivElem embed(const GroupElem& g) {
  std::vector<Rat> c;
  c.reserve(static_cast<std::size_t>(g.rank()));
  for (const Int& x : g.coords()) c.emplace_back(x);
  return DivElem(std::move(c));
}

/// Least n >= 1 with n*m integral (lcm of coordinate denominators).
inline Int torsion_witness(const DivElem& m) {
  Int n = 1;
  for (const Rat& c : m.coords()) mpz_lcm(n.get_mpz_t(), n.get_mpz_t(), c.get_den().get_mpz_t());
  return n;
}

/// Exact quotient m -> Z^k; throws when m is not integral.
inline GroupElem to_group(const DivElem& m) {
  std::vector<Int> c;
  c.reserve(static_cast<std::size_t>(m.rank()));
  for (const Rat& x : m.coords()) {
    if (!is_integer(x)) throw std::domain_error("to_group: non-integral coordinate");
    c.push_back(x.get_num());
  }
  return GroupElem(std::move(c));
}

/// Element of a chain monoid under the maximum operation; identity is 0.
struct MaxElem {
  long v = 0;
  friend bool operator==(const MaxElem&, const MaxElem&) = default;
};
inline std::strong_ordering lex_compare(const MaxElem& a, const MaxElem& b) { return a.v <=> b.v; }
inline MaxElem add(const MaxElem& a, const MaxElem& b) { return MaxElem{a.v > b.v ? a.v : b.v}; }
inline MaxElem scalar_mul(const Int&, const MaxElem& a) { return a; }

/// Z x (chain, max) with componentwise addition and left-to-right lexicographic order.
struct LexProductElem {
  Int z;
  MaxElem m;
  friend bool operator==(const LexProductElem&, const LexProductElem&) = default;
};
inline std::strong_ordering lex_compare(const LexProductElem& a, const LexProductElem& b) {
  if (a.z < b.z) return std::strong_ordering::less;
  if (a.z > b.z) return std::strong_ordering::greater;
  return a.m.v <=> b.m.v;
}
inline LexProductElem add(const LexProductElem& a, const LexProductElem& b) {
  return LexProductElem{a.z + b.z, add(a.m, b.m)};
}
inline LexProductElem scalar_mul(const Int& n, const LexProductElem& a) {
  return LexProductElem{n * a.z, a.m};
}

inline std::string to_string(const GroupElem& g) {
  std::string s = "(";
  for (int i = 0; i < g.rank(); ++i) {
    if (i) s += ",";
    s += g[i].get_str();
  }
  return s + ")";
}
inline std::string to_string(const DivElem& g) {
  std::string s = "(";
  for (int i = 0; i < g.rank(); ++i) {
    if (i) s += ",";
    s += g[i].get_str();
  }
  return s + ")";
}
inline std::string to_string(const LexProductElem& x) {
  return "(" + x.z.get_str() + ",a" + std::to_string(x.m.v) + ")";
}

}  // namespace qv
