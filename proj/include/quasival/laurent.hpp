#pragma once

#include <string>
#include <vector>

#include "quasival/rational.hpp"

namespace qv {

/// Polynomial over Q in one variable, dense ascending coefficients.
/// Zero is the empty vector; otherwise the leading coefficient is nonzero.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
  static Poly constant(const Rat& r) { return r == 0 ? Poly() : Poly({r}); }
  static Poly monomial(const Rat& r, int deg);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  int order() const;                                              // lowest nonzero exponent
  const Rat& coeff(int i) const;
  const std::vector<Rat>& coeffs() const { return c_; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

 private:
  void trim();
  std::vector<Rat> c_;
};

Poly add(const Poly& a, const Poly& b);
Poly neg(const Poly& a);
Poly mul(const Poly& a, const Poly& b);
Poly mul(const Poly& a, const Rat& r);
/// Euclidean division; returns quotient, remainder via out-parameter.
Poly divrem(const Poly& a, const Poly& b, Poly& rem);
Poly poly_gcd(Poly a, Poly b);
/// Divides out t^order; requires a nonzero.
Poly shift_down(const Poly& a, int by);

/// Element of Q(t) as t^shift * num/den with num, den having nonzero
/// constant terms, gcd(num, den) = 1 and den normalized to constant term 1.
/// Carrier of the rank-2 composite valuation.
class RankTwoElem {
 public:
  RankTwoElem() : num_(), den_(Poly::constant(1)), shift_(0) {}
  RankTwoElem(Poly num, Poly den, int shift);
  static RankTwoElem from_rat(const Rat& r) { return RankTwoElem(Poly::constant(r), Poly::constant(1), 0); }
  static RankTwoElem t_power(int k) { return RankTwoElem(Poly::constant(1), Poly::constant(1), k); }

  bool is_zero() const { return num_.is_zero(); }
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  int shift() const { return shift_; }

  friend bool operator==(const RankTwoElem& a, const RankTwoElem& b) {
    return a.shift_ == b.shift_ && a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  Poly num_;
  Poly den_;
  int shift_;
};

RankTwoElem add(const RankTwoElem& a, const RankTwoElem& b);
RankTwoElem neg(const RankTwoElem& a);
RankTwoElem sub(const RankTwoElem& a, const RankTwoElem& b);
RankTwoElem mul(const RankTwoElem& a, const RankTwoElem& b);
RankTwoElem inverse(const RankTwoElem& a);

std::string to_string(const RankTwoElem& a);

}  // namespace qv
