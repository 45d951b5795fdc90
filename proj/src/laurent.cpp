#include "quasival/laurent.hpp"

#include <stdexcept>

namespace qv {

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::monomial(const Rat& r, int deg) {
  if (r == 0) return Poly();
  if (deg < 0) throw std::invalid_argument("Poly::monomial: negative degree");
  std::vector<Rat> c(static_cast<std::size_t>(deg) + 1);
  c.back() = r;
  return Poly(std::move(c));
}

int Poly::order() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) return static_cast<int>(i);
  throw std::domain_error("Poly::order of zero polynomial");
}

const Rat& Poly::coeff(int i) const {
  static const Rat zero(0);
  if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
  return c_[static_cast<std::size_t>(i)];
}

Poly add(const Poly& a, const Poly& b) {
  std::vector<Rat> c(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
  return Poly(std::move(c));
}

Poly neg(const Poly& a) {
  std::vector<Rat> c(a.coeffs());
  for (Rat& x : c) x = -x;
  return Poly(std::move(c));
}

Poly mul(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rat> c(a.coeffs().size() + b.coeffs().size() - 1);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i)
    for (std::size_t j = 0; j < b.coeffs().size(); ++j)
      c[i + j] += a.coeffs()[i] * b.coeffs()[j];
  return Poly(std::move(c));
}

Poly mul(const Poly& a, const Rat& r) {
  if (r == 0) return Poly();
  std::vector<Rat> c(a.coeffs());
  for (Rat& x : c) x *= r;
  return Poly(std::move(c));
}

Poly divrem(const Poly& a, const Poly& b, Poly& rem) {
  if (b.is_zero()) throw std::domain_error("Poly: division by zero");
  std::vector<Rat> r(a.coeffs());
  std::vector<Rat> q;
  const int db = b.degree();
  if (static_cast<int>(r.size()) - 1 >= db) q.assign(r.size() - static_cast<std::size_t>(db), Rat(0));
  const Rat& lead = b.coeffs().back();
  for (int i = static_cast<int>(r.size()) - 1; i >= db; --i) {
    const std::size_t ui = static_cast<std::size_t>(i);
    if (r[ui] == 0) continue;
    const Rat f = r[ui] / lead;
    q[static_cast<std::size_t>(i - db)] = f;
    for (int j = 0; j <= db; ++j)
      r[static_cast<std::size_t>(i - db + j)] -= f * b.coeff(j);
  }
  rem = Poly(std::move(r));
  return Poly(std::move(q));
}

Poly poly_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly rem;
    divrem(a, b, rem);
    a = std::move(b);
    b = std::move(rem);
  }
  if (a.is_zero()) return a;
  return mul(a, Rat(1) / a.coeffs().back());  // monic
}

Poly shift_down(const Poly& a, int by) {
  if (a.is_zero()) return a;
  if (by == 0) return a;
  if (by < 0 || by > a.degree()) throw std::invalid_argument("shift_down: bad shift");
  std::vector<Rat> c(a.coeffs().begin() + by, a.coeffs().end());
  return Poly(std::move(c));
}

RankTwoElem::RankTwoElem(Poly num, Poly den, int shift) : num_(std::move(num)), den_(std::move(den)), shift_(shift) {
  if (den_.is_zero()) throw std::domain_error("RankTwoElem: zero denominator");
  if (num_.is_zero()) {
    den_ = Poly::constant(1);
    shift_ = 0;
    return;
  }
  const int on = num_.order();
  const int od = den_.order();
  shift_ += on - od;
  num_ = shift_down(num_, on);
  den_ = shift_down(den_, od);
  const Poly g = poly_gcd(num_, den_);
  if (g.degree() > 0) {
    Poly rem;
    num_ = divrem(num_, g, rem);
    den_ = divrem(den_, g, rem);
  }
  const Rat c0 = den_.coeff(0);
  if (c0 != 1) {
    num_ = mul(num_, Rat(1) / c0);
    den_ = mul(den_, Rat(1) / c0);
  }
}

RankTwoElem add(const RankTwoElem& a, const RankTwoElem& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const int s = std::min(a.shift(), b.shift());
  auto lift = [&](const RankTwoElem& x, const Poly& other_den) {
    Poly p = mul(x.num(), other_den);
    const int up = x.shift() - s;
    if (up > 0) {
      std::vector<Rat> c(p.coeffs().size() + static_cast<std::size_t>(up));
      for (std::size_t i = 0; i < p.coeffs().size(); ++i) c[i + static_cast<std::size_t>(up)] = p.coeffs()[i];
      p = Poly(std::move(c));
    }
    return p;
  };
  Poly num = add(lift(a, b.den()), lift(b, a.den()));
  return RankTwoElem(std::move(num), mul(a.den(), b.den()), s);
}

RankTwoElem neg(const RankTwoElem& a) { return RankTwoElem(neg(a.num()), a.den(), a.shift()); }

RankTwoElem sub(const RankTwoElem& a, const RankTwoElem& b) { return add(a, neg(b)); }

RankTwoElem mul(const RankTwoElem& a, const RankTwoElem& b) {
  if (a.is_zero() || b.is_zero()) return RankTwoElem();
  return RankTwoElem(mul(a.num(), b.num()), mul(a.den(), b.den()), a.shift() + b.shift());
}

RankTwoElem inverse(const RankTwoElem& a) {
  if (a.is_zero()) throw std::domain_error("RankTwoElem: inverse of zero");
  return RankTwoElem(a.den(), a.num(), -a.shift());
}

std::string to_string(const RankTwoElem& a) {
  if (a.is_zero()) return "0";
  auto poly_str = [](const Poly& p) {
    std::string s;
    bool first = true;
    for (int i = 0; i <= p.degree(); ++i) {
      const Rat& c = p.coeff(i);
      if (c == 0) continue;
      if (!first) s += c > 0 ? "+" : "";
      s += c.get_str();
      if (i > 0) s += "t^" + std::to_string(i);
      first = false;
    }
    return p.degree() > 0 ? "(" + s + ")" : s;
  };
  std::string s = poly_str(a.num());
  if (!(a.den().degree() == 0)) s += "/" + poly_str(a.den());
  if (a.shift() != 0) s += "*t^" + std::to_string(a.shift());
  return s;
}

}  // namespace qv
