#include "quasival/quasi_valuation.hpp"

#include <stdexcept>

namespace qv {

namespace {

DivElem div1(const Rat& x) { return DivElem({x}); }

const Rat& as_rat(const FieldElem& x, const char* who) {
  if (!std::holds_alternative<Rat>(x)) throw std::invalid_argument(std::string(who) + ": expected a rational");
  return std::get<Rat>(x);
}

}  // namespace

QuasiValuation to_quasi(const Valuation& v) {
  QuasiValuation w;
  w.name = v.name;
  w.codomain = Codomain{CodomainTag::Div, v.rank, 0};
  w.domain = v.domain;
  auto ev = v.eval;
  w.eval = [ev](const FieldElem& x) -> MonoidValue {
    const ValValue r = ev(x);
    if (!r) return MonoidValue::infinity();
    return MonoidValue(*r);
  };
  return w;
}

QuasiValuation nadic(const Int& n) {
  if (n < 2) throw std::invalid_argument("nadic: n must be >= 2");
  QuasiValuation w;
  w.name = "w" + n.get_str();
  w.codomain = Codomain{CodomainTag::Div, 1, 0};
  w.domain = Domain{FieldKind::Q, 0, 0, ""};
  w.eval = [n](const FieldElem& xe) -> MonoidValue {
    const Rat& x = as_rat(xe, "nadic");
    if (x == 0) return MonoidValue::infinity();
    // Strip n-powers until x = n^e a/b with gcd(n,b) = 1 and n not dividing a.
    Rat y = x;
    Int e = 0;
    Int g;
    mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), y.get_den().get_mpz_t());
    if (g == 1) {
      while (y.get_num() % n == 0) {
        y /= n;
        ++e;
      }
    } else {
      while (g != 1) {
        y *= n;
        --e;
        mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), y.get_den().get_mpz_t());
      }
    }
    if (y.get_num() % n == 0) throw std::logic_error("nadic: decomposition failed");
    return MonoidValue(div1(Rat(e)));
  };
  return w;
}

QuasiValuation min_family(std::vector<QuasiValuation> ws) {
  if (ws.empty()) throw std::invalid_argument("min_family: empty list");
  for (const auto& w : ws)
    if (!(w.codomain == ws.front().codomain))
      throw std::invalid_argument("min_family: codomain mismatch");
  QuasiValuation out;
  out.name = "min{";
  for (std::size_t i = 0; i < ws.size(); ++i) out.name += (i ? "," : "") + ws[i].name;
  out.name += "}";
  out.codomain = ws.front().codomain;
  out.domain = ws.front().domain;
  out.eval = [ws](const FieldElem& x) -> MonoidValue {
    MonoidValue m = ws.front()(x);
    for (std::size_t i = 1; i < ws.size(); ++i) m = mv_min(m, ws[i](x));
    return m;
  };
  return out;
}

QuasiValuation kummer(const Int& p, const Int& d, const Rat& gamma) {
  if (gamma < 0) throw std::invalid_argument("kummer: gamma must be >= 0");
  const auto vd = vp_rat(p, Rat(d));
  if (!vd || *vd < 0) throw std::invalid_argument("kummer: needs v(d) >= 0");
  const Valuation v = padic_valuation(p);
  QuasiValuation w;
  w.name = "kummer(p=" + p.get_str() + ",d=" + d.get_str() + ",g=" + gamma.get_str() + ")";
  w.codomain = Codomain{CodomainTag::Div, 1, 0};
  w.domain = Domain{FieldKind::QuadQ, d, 0, ""};
  w.eval = [p, d, gamma](const FieldElem& xe) -> MonoidValue {
    if (!std::holds_alternative<QuadElem>(xe))
      throw std::invalid_argument("kummer: expected a quadratic field element");
    const QuadElem& x = std::get<QuadElem>(xe);
    if (x.d != d) throw std::invalid_argument("kummer: wrong field tag");
    if (x.is_zero()) return MonoidValue::infinity();
    const auto va = vp_rat(p, x.a);
    const auto vb = vp_rat(p, x.b);
    if (!va) return MonoidValue(div1(Rat(Rat(*vb) - gamma)));
    if (!vb) return MonoidValue(div1(Rat(*va)));
    const Rat left(*va);
    const Rat right(Rat(*vb) - gamma);
    return MonoidValue(div1(left < right ? left : right));
  };
  return w;
}

QuasiValuation squared(const Int& p) {
  QuasiValuation w;
  w.name = "sq(v" + p.get_str() + ")";
  w.codomain = Codomain{CodomainTag::Div, 1, 0};
  w.domain = Domain{FieldKind::Q, 0, p.get_si(), "Z"};
  w.eval = [p](const FieldElem& xe) -> MonoidValue {
    const Rat& x = as_rat(xe, "squared");
    if (!is_integer(x)) throw std::invalid_argument("squared: domain is Z");
    if (x == 0) return MonoidValue::infinity();
    const Int e = *vp_int(p, x.get_num());
    return MonoidValue(div1(Rat(e * e)));
  };
  return w;
}

QuasiValuation truncated(const Int& p, const Rat& alpha) {
  if (alpha <= 0) throw std::invalid_argument("truncated: alpha must be > 0");
  QuasiValuation w;
  w.name = "trunc(v" + p.get_str() + "," + alpha.get_str() + ")";
  w.codomain = Codomain{CodomainTag::Div, 1, 0};
  w.domain = Domain{FieldKind::Q, 0, p.get_si(), "Ov"};
  w.eval = [p, alpha](const FieldElem& xe) -> MonoidValue {
    const Rat& x = as_rat(xe, "truncated");
    if (x == 0) return MonoidValue::infinity();
    const Int e = *vp_rat(p, x);
    if (e < 0) throw std::invalid_argument("truncated: element outside O_v");
    if (Rat(e) < alpha) return MonoidValue(div1(Rat(e)));
    return MonoidValue::infinity();
  };
  return w;
}

QuasiValuation lexmax_demo(const Int& p) {
  if (!is_prime(p)) throw std::invalid_argument("lexmax_demo: p must be prime");
  QuasiValuation w;
  w.name = "lexmax(p=" + p.get_str() + ")";
  w.codomain = Codomain{CodomainTag::LexMax, 1, 2};
  w.domain = Domain{FieldKind::QuadQ, p, p.get_si(), ""};
  w.eval = [p](const FieldElem& xe) -> MonoidValue {
    if (!std::holds_alternative<QuadElem>(xe))
      throw std::invalid_argument("lexmax_demo: expected a quadratic field element");
    const QuadElem& x = std::get<QuadElem>(xe);
    if (x.d != p) throw std::invalid_argument("lexmax_demo: wrong field tag");
    if (x.is_zero()) return MonoidValue::infinity();
    const auto va = vp_rat(p, x.a);
    const auto vb = vp_rat(p, x.b);
    if (x.a == 0) return MonoidValue(LexProductElem{*vb, MaxElem{1}});
    if (x.b == 0) return MonoidValue(LexProductElem{*va, MaxElem{0}});
    const LexProductElem ca{*va, MaxElem{0}};
    const LexProductElem cb{*vb, MaxElem{1}};
    return MonoidValue(lex_compare(ca, cb) == std::strong_ordering::greater ? cb : ca);
  };
  return w;
}

QuasiValuation negated_padic(const Int& p) {
  QuasiValuation w = to_quasi(padic_valuation(p));
  w.name = "neg(v" + p.get_str() + ")";
  auto base = w.eval;
  w.eval = [base](const FieldElem& x) -> MonoidValue {
    const MonoidValue m = base(x);
    if (m.is_inf()) return m;
    return MonoidValue(neg(m.div()));
  };
  return w;
}

QuasiValuation quotient_qv(const QuasiValuation& w, IsolatedSubgroup h) {
  if (w.codomain.tag != CodomainTag::Div)
    throw std::invalid_argument("quotient_qv: needs a Div codomain");
  if (h.rank != w.codomain.rank || h.level < 0 || h.level > h.rank)
    throw std::invalid_argument("quotient_qv: bad subgroup");
  const int keep = h.rank - h.level;
  QuasiValuation out;
  out.name = w.name + "/H" + std::to_string(h.level);
  out.codomain = Codomain{CodomainTag::Div, keep, 0};
  out.domain = w.domain;
  auto base = w.eval;
  out.eval = [base, keep](const FieldElem& x) -> MonoidValue {
    const MonoidValue m = base(x);
    if (m.is_inf()) return m;
    std::vector<Rat> c(m.div().coords().begin(), m.div().coords().begin() + keep);
    return MonoidValue(DivElem(std::move(c)));
  };
  return out;
}

DomainSampler domain_sampler(const Domain& dom) {
  switch (dom.field) {
    case FieldKind::Q: {
      if (dom.restriction == "Z")
        return [](Sampler& s) -> FieldElem { return Rat(s.int_elem(10000)); };
      if (dom.restriction == "Ov") {
        const Int p(dom.p);
        return [p](Sampler& s) -> FieldElem { return s.ov_rat(p); };
      }
      return [](Sampler& s) -> FieldElem { return s.rat(); };
    }
    case FieldKind::QuadQ: {
      const Int d = dom.d;
      return [d](Sampler& s) -> FieldElem { return s.quad(d); };
    }
    case FieldKind::Qt:
      return [](Sampler& s) -> FieldElem { return s.laurent(); };
  }
  throw std::logic_error("domain_sampler: bad field kind");
}

CheckReport check_axioms(const QuasiValuation& w, const DomainSampler& sample, Sampler& rng,
                         long count) {
  CheckReport rep;
  rep.check = "axioms:" + w.name;
  rep.law = "w(0)=inf; w(xy)>=w(x)+w(y); w(x+y)>=min{w(x),w(y)}";
  rep.seed = rng.seed();
  rep.count(w(fe_zero(w.domain)).is_inf(), "w(0) != inf");
  for (long i = 0; i < count; ++i) {
    const FieldElem x = sample(rng);
    const FieldElem y = sample(rng);
    const MonoidValue wx = w(x);
    const MonoidValue wy = w(y);
    const bool b2 = mv_cmp(w(fe_mul(x, y)), mv_add(wx, wy)) != std::strong_ordering::less;
    rep.count(b2, "B2 at x=" + to_string(x) + " y=" + to_string(y));
    const bool b3 = mv_cmp(w(fe_add(x, y)), mv_min(wx, wy)) != std::strong_ordering::less;
    rep.count(b3, "B3 at x=" + to_string(x) + " y=" + to_string(y));
  }
  return rep;
}

CheckReport check_valuation_axioms(const Valuation& v, const DomainSampler& sample, Sampler& rng,
                                   long count) {
  CheckReport rep;
  rep.check = "valuation-axioms:" + v.name;
  rep.law = "v(0)=inf; v(x)!=inf for x!=0; v(xy)=v(x)+v(y); v(x+y)>=min";
  rep.seed = rng.seed();
  rep.count(val_is_inf(v(fe_zero(v.domain))), "v(0) != inf");
  for (long i = 0; i < count; ++i) {
    const FieldElem x = sample(rng);
    const FieldElem y = sample(rng);
    const ValValue vx = v(x);
    const ValValue vy = v(y);
    if (!fe_is_zero(x)) rep.count(!val_is_inf(vx), "A1' at x=" + to_string(x));
    const ValValue vxy = v(fe_mul(x, y));
    if (val_is_inf(vx) || val_is_inf(vy)) {
      rep.count(val_is_inf(vxy), "A2 at zero operand");
    } else {
      rep.count(vxy && *vxy == add(*vx, *vy), "A2 at x=" + to_string(x) + " y=" + to_string(y));
    }
    const ValValue vsum = v(fe_add(x, y));
    bool a3 = true;
    if (!val_is_inf(vx) || !val_is_inf(vy)) {
      const DivElem m = val_is_inf(vx)   ? *vy
                        : val_is_inf(vy) ? *vx
                        : (lex_compare(*vx, *vy) == std::strong_ordering::greater ? *vy : *vx);
      a3 = val_is_inf(vsum) || lex_compare(*vsum, m) != std::strong_ordering::less;
    }
    rep.count(a3, "A3 at x=" + to_string(x) + " y=" + to_string(y));
  }
  return rep;
}

CheckReport check_exponential(const QuasiValuation& w, const DomainSampler& sample, Sampler& rng,
                              long count, long n_max, bool square_only) {
  CheckReport rep;
  rep.check = std::string(square_only ? "square" : "exponential") + ":" + w.name;
  rep.law = square_only ? "w(x^2)=2w(x)" : "w(x^n)=nw(x)";
  rep.seed = rng.seed();
  for (long i = 0; i < count; ++i) {
    const FieldElem x = sample(rng);
    const MonoidValue wx = w(x);
    FieldElem xn = x;
    for (long n = 2; n <= (square_only ? 2 : n_max); ++n) {
      xn = fe_mul(xn, x);
      const bool ok = w(xn) == mv_scalar(Int(n), wx);
      rep.count(ok, "x=" + to_string(x) + " n=" + std::to_string(n));
      if (!ok) break;
    }
  }
  return rep;
}

CheckReport check_stable(const QuasiValuation& w, const FieldElem& c, const DomainSampler& sample,
                         Sampler& rng, long count) {
  CheckReport rep;
  rep.check = "stable:" + w.name;
  rep.law = "w(cx)=w(c)+w(x), c=" + to_string(c);
  rep.seed = rng.seed();
  const MonoidValue wc = w(c);
  for (long i = 0; i < count; ++i) {
    const FieldElem x = sample(rng);
    rep.count(w(fe_mul(c, x)) == mv_add(wc, w(x)), "x=" + to_string(x));
  }
  return rep;
}

bool in_Ow(const QuasiValuation& w, const FieldElem& x) {
  return mv_cmp(w(x), codomain_zero(w.codomain)) != std::strong_ordering::less;
}

bool in_Iw(const QuasiValuation& w, const FieldElem& x) {
  return mv_cmp(w(x), codomain_zero(w.codomain)) == std::strong_ordering::greater;
}

long coset_count(const QuasiValuation& w, const DomainSampler& sample, Sampler& rng, long count) {
  if (w.codomain.tag != CodomainTag::Div)
    throw std::invalid_argument("coset_count: needs a Div codomain");
  std::vector<DivElem> reps;
  for (long i = 0; i < count; ++i) {
    const FieldElem x = sample(rng);
    if (fe_is_zero(x)) continue;
    const MonoidValue m = w(x);
    if (m.is_inf()) continue;
    bool fresh = true;
    for (const DivElem& r : reps) {
      if (sub(m.div(), r).is_integral()) {
        fresh = false;
        break;
      }
    }
    if (fresh) reps.push_back(m.div());
  }
  return static_cast<long>(reps.size());
}

std::optional<long> coset_period(const QuasiValuation& w, const FieldElem& b, long t_max) {
  if (w.codomain.tag != CodomainTag::Div)
    throw std::invalid_argument("coset_period: needs a Div codomain");
  FieldElem bt = b;
  for (long t = 1; t <= t_max; ++t) {
    if (t > 1) bt = fe_mul(bt, b);
    const MonoidValue m = w(bt);
    if (!m.is_inf() && m.div().is_integral()) return t;
  }
  return std::nullopt;
}

}  // namespace qv
