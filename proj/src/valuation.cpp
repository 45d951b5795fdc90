#include "quasival/valuation.hpp"

#include <stdexcept>

namespace qv {

namespace {

DivElem div1(const Rat& x) { return DivElem({x}); }

const Rat& as_rat(const FieldElem& x, const char* who) {
  if (!std::holds_alternative<Rat>(x)) throw std::invalid_argument(std::string(who) + ": expected a rational");
  return std::get<Rat>(x);
}

const QuadElem& as_quad(const FieldElem& x, const Int& d, const char* who) {
  if (!std::holds_alternative<QuadElem>(x))
    throw std::invalid_argument(std::string(who) + ": expected a quadratic field element");
  const QuadElem& q = std::get<QuadElem>(x);
  if (q.d != d) throw std::invalid_argument(std::string(who) + ": wrong field tag");
  return q;
}

}  // namespace

Valuation padic_valuation(const Int& p) {
  if (!is_prime(p)) throw std::invalid_argument("padic_valuation: p must be prime");
  Valuation v;
  v.name = "v" + p.get_str();
  v.rank = 1;
  v.domain = Domain{FieldKind::Q, 0, 0, ""};
  v.eval = [p](const FieldElem& x) -> ValValue {
    const auto e = vp_rat(p, as_rat(x, "padic"));
    if (!e) return std::nullopt;
    return div1(Rat(*e));
  };
  return v;
}

Valuation trivial_valuation() {
  Valuation v;
  v.name = "trivial";
  v.rank = 0;
  v.domain = Domain{FieldKind::Q, 0, 0, ""};
  v.eval = [](const FieldElem& x) -> ValValue {
    if (fe_is_zero(x)) return std::nullopt;
    return DivElem::zero(0);
  };
  return v;
}

Valuation composite_valuation(const Int& p) {
  if (!is_prime(p)) throw std::invalid_argument("composite_valuation: p must be prime");
  Valuation v;
  v.name = "v_t," + p.get_str();
  v.rank = 2;
  v.domain = Domain{FieldKind::Qt, 0, 0, ""};
  v.eval = [p](const FieldElem& x) -> ValValue {
    if (!std::holds_alternative<RankTwoElem>(x))
      throw std::invalid_argument("composite: expected a rational function in t");
    const RankTwoElem& f = std::get<RankTwoElem>(x);
    if (f.is_zero()) return std::nullopt;
    const Rat lead = f.num().coeff(0) / f.den().coeff(0);
    return DivElem({Rat(f.shift()), Rat(*vp_rat(p, lead))});
  };
  return v;
}

std::string to_string(PrimeClass c) {
  switch (c) {
    case PrimeClass::Split: return "split";
    case PrimeClass::Inert: return "inert";
    case PrimeClass::Ramified: return "ramified";
  }
  return "?";
}

PrimeClass classify_prime(const Int& p, const Int& d) {
  if (!is_prime(p)) throw std::invalid_argument("classify_prime: p must be prime");
  if (!is_squarefree(d)) throw std::invalid_argument("classify_prime: d must be squarefree");
  if (d % p == 0) return PrimeClass::Ramified;
  if (p == 2) throw std::invalid_argument("classify_prime: p = 2 split/inert is unsupported");
  Int e = (p - 1) / 2;
  Int r;
  Int base = ((d % p) + p) % p;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
  return r == 1 ? PrimeClass::Split : PrimeClass::Inert;
}

Int hensel_sqrt(const Int& d, const Int& p, unsigned long m) {
  if (p <= 2 || !is_prime(p)) throw std::invalid_argument("hensel_sqrt: p must be an odd prime");
  if (m == 0) throw std::invalid_argument("hensel_sqrt: m must be >= 1");
  if (d % p == 0) throw std::invalid_argument("hensel_sqrt: p divides d");
  const Int dp = ((d % p) + p) % p;
  Int base = 0;
  for (Int r = 1; r < p; ++r) {
    if ((r * r) % p == dp) {
      base = r;
      break;
    }
  }
  if (base == 0) throw std::domain_error("hensel_sqrt: d is not a quadratic residue mod p");
  // Newton iteration r <- r - (r^2 - d) / (2r), doubling the precision.
  Int mod = p;
  unsigned long prec = 1;
  Int r = base;
  while (prec < m) {
    prec = std::min(2 * prec, m);
    mod = pow_int(p, prec);
    Int two_r_inv;
    Int two_r = (2 * r) % mod;
    if (mpz_invert(two_r_inv.get_mpz_t(), two_r.get_mpz_t(), mod.get_mpz_t()) == 0)
      throw std::logic_error("hensel_sqrt: 2r not invertible");
    r = (r - ((r * r - d) % mod) * two_r_inv) % mod;
    r = ((r % mod) + mod) % mod;
  }
  return r % pow_int(p, m);
}

namespace {

/// u1 on the split prime: v_p(a + b*rho) for the Hensel root rho with the
/// smallest base residue, computed at escalating finite precision.
Int split_u1_value(const Int& p, const Int& d, const QuadElem& x) {
  Rat a = x.a, b = x.b;
  if (b == 0) return *vp_rat(p, a);
  if (a == 0) return *vp_rat(p, b);  // the root is a p-adic unit
  // Normalize to min(v(a), v(b)) = 0 so the remaining value is finite and >= 0.
  const Int va = *vp_rat(p, a);
  const Int vb = *vp_rat(p, b);
  const Int e = va < vb ? va : vb;
  if (e != 0) {
    const Rat scale = pow_rat(Rat(p), -e.get_si());
    a *= scale;
    b *= scale;
  }
  const Rat n = a * a - Rat(d) * b * b;
  const Int bound = *vp_rat(p, n);
  unsigned long m = static_cast<unsigned long>(bound.get_ui()) + 2;
  for (;;) {
    const Int r = hensel_sqrt(d, p, m);
    const Rat s = a + b * Rat(r);
    const auto vs = vp_rat(p, s);
    if (vs && *vs < Int(static_cast<long>(m))) return e + *vs;
    m *= 2;
    if (m > 1u << 20) throw std::logic_error("split_u1_value: precision runaway");
  }
}

}  // namespace

std::vector<Valuation> extend_valuation(const Int& p, const Int& d) {
  const PrimeClass cls = classify_prime(p, d);
  const Domain dom{FieldKind::QuadQ, d, 0, ""};
  std::vector<Valuation> out;
  if (cls == PrimeClass::Split) {
    for (int which = 0; which < 2; ++which) {
      Valuation u;
      u.name = "u" + std::to_string(which + 1) + "(p=" + p.get_str() + ",d=" + d.get_str() + ")";
      u.rank = 1;
      u.domain = dom;
      u.eval = [p, d, which](const FieldElem& xe) -> ValValue {
        const QuadElem& x = as_quad(xe, d, "split extension");
        if (x.is_zero()) return std::nullopt;
        const QuadElem y = which == 0 ? x : conjugate(x);
        return DivElem({Rat(split_u1_value(p, d, y))});
      };
      out.push_back(std::move(u));
    }
    return out;
  }
  Valuation u;
  u.name = std::string("u(") + (cls == PrimeClass::Inert ? "inert" : "ramified") + ",p=" + p.get_str() +
           ",d=" + d.get_str() + ")";
  u.rank = 1;
  u.domain = dom;
  u.eval = [p, d](const FieldElem& xe) -> ValValue {
    const QuadElem& x = as_quad(xe, d, "norm extension");
    if (x.is_zero()) return std::nullopt;
    return DivElem({Rat(*vp_rat(p, norm(x))) / 2});
  };
  out.push_back(std::move(u));
  return out;
}

}  // namespace qv
