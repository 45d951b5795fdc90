#include "quasival/cut_monoid.hpp"

#include <algorithm>
#include <stdexcept>

namespace qv {

std::vector<IsolatedSubgroup> isolated_subgroups(int rank) {
  if (rank < 0) throw std::invalid_argument("isolated_subgroups: negative rank");
  std::vector<IsolatedSubgroup> out;
  out.reserve(static_cast<std::size_t>(rank) + 1);
  for (int j = 0; j <= rank; ++j) out.push_back(IsolatedSubgroup{j, rank});
  return out;
}

CutValue CutValue::finite(GroupElem gamma, IsolatedSubgroup h) {
  const int k = gamma.rank();
  if (h.rank != k) throw std::invalid_argument("CutValue::finite: rank mismatch");
  if (h.level < 0 || h.level > k) throw std::invalid_argument("CutValue::finite: bad level");
  if (h.level == k) return plus_inf(k);  // (-inf, gamma] + Gamma^{>=0} is the whole group
  std::vector<Int> coords(gamma.coords());
  for (int i = k - h.level; i < k; ++i) coords[static_cast<std::size_t>(i)] = 0;
  CutValue c(Kind::Finite, k);
  c.gamma_ = GroupElem(std::move(coords));
  c.h_level_ = h.level;
  return c;
}

CutValue CutValue::principal(GroupElem gamma) {
  const int k = gamma.rank();
  return finite(std::move(gamma), IsolatedSubgroup{0, k});
}

CutValue CutValue::h_plus(IsolatedSubgroup h) {
  return finite(GroupElem::zero(h.rank), h);
}

const GroupElem& CutValue::gamma() const {
  if (kind_ != Kind::Finite) throw std::logic_error("CutValue::gamma on non-finite cut");
  return gamma_;
}

int CutValue::h_level() const {
  if (kind_ != Kind::Finite) throw std::logic_error("CutValue::h_level on non-finite cut");
  return h_level_;
}

bool operator==(const CutValue& a, const CutValue& b) {
  if (a.rank_ != b.rank_ || a.kind_ != b.kind_) return false;
  if (a.kind_ != CutValue::Kind::Finite) return true;
  return a.h_level_ == b.h_level_ && a.gamma_ == b.gamma_;
}

CutValue cut_add(const CutValue& a, const CutValue& b) {
  using K = CutValue::Kind;
  if (a.rank() != b.rank()) throw std::invalid_argument("cut_add: rank mismatch");
  const int k = a.rank();
  if (a.kind() == K::Infinity || b.kind() == K::Infinity) return CutValue::infinity(k);
  const bool aminus = a.kind() == K::MinusInf, bminus = b.kind() == K::MinusInf;
  const bool aplus = a.kind() == K::PlusInf, bplus = b.kind() == K::PlusInf;
  if ((aminus && bplus) || (aplus && bminus))
    throw std::domain_error("cut_add: (empty,G) + (G,empty) is undefined");
  if (aminus || bminus) return CutValue::minus_inf(k);
  if (aplus || bplus) return CutValue::plus_inf(k);
  const int level = std::max(a.h_level(), b.h_level());
  return CutValue::finite(add(a.gamma(), b.gamma()), IsolatedSubgroup{level, k});
}

CutValue cut_scalar(const Int& n, const CutValue& a) {
  if (n < 1) throw std::invalid_argument("cut_scalar: n must be >= 1");
  if (!a.is_finite()) return a;
  return CutValue::finite(scalar_mul(n, a.gamma()), a.subgroup());
}

std::strong_ordering cut_cmp(const CutValue& a, const CutValue& b) {
  using K = CutValue::Kind;
  if (a.rank() != b.rank()) throw std::invalid_argument("cut_cmp: rank mismatch");
  auto severity = [](K k) {
    switch (k) {
      case K::MinusInf: return 0;
      case K::Finite: return 1;
      case K::PlusInf: return 2;
      case K::Infinity: return 3;
    }
    return 3;
  };
  if (a.kind() != K::Finite || b.kind() != K::Finite) {
    if (a.kind() == b.kind()) return std::strong_ordering::equal;
    return severity(a.kind()) <=> severity(b.kind());
  }
  // Left-set inclusion: compare the coordinates outside the larger subgroup,
  // then let the larger subgroup win ties.
  const int k = a.rank();
  const int prefix = k - std::max(a.h_level(), b.h_level());
  for (int i = 0; i < prefix; ++i) {
    if (a.gamma()[i] < b.gamma()[i]) return std::strong_ordering::less;
    if (a.gamma()[i] > b.gamma()[i]) return std::strong_ordering::greater;
  }
  return a.h_level() <=> b.h_level();
}

CutValue cut_sub_group(const CutValue& a, const GroupElem& alpha) {
  if (a.is_infinity()) return a;
  return cut_add(a, CutValue::principal(neg(alpha)));
}

bool left_set_contains(const CutValue& cut, const GroupElem& gamma) {
  using K = CutValue::Kind;
  if (cut.rank() != gamma.rank()) throw std::invalid_argument("left_set_contains: rank mismatch");
  switch (cut.kind()) {
    case K::MinusInf: return false;
    case K::PlusInf: return true;
    case K::Infinity: throw std::domain_error("left_set_contains: Infinity is not a cut");
    case K::Finite: break;
  }
  const int prefix = cut.rank() - cut.h_level();
  for (int i = 0; i < prefix; ++i) {
    if (gamma[i] < cut.gamma()[i]) return true;
    if (gamma[i] > cut.gamma()[i]) return false;
  }
  return true;  // equal prefix: gamma itself, or absorbed by the H tail
}

std::string to_string(const CutValue& a) {
  switch (a.kind()) {
    case CutValue::Kind::MinusInf: return "-inf_cut";
    case CutValue::Kind::PlusInf: return "+inf_cut";
    case CutValue::Kind::Infinity: return "inf";
    case CutValue::Kind::Finite: break;
  }
  std::string s = to_string(a.gamma()) + "+";
  if (a.h_level() > 0) s += "[H" + std::to_string(a.h_level()) + "]";
  return s;
}

bool pim_membership(const CutValue& m, const PimDescriptor& pim) {
  if (m.is_infinity()) throw std::domain_error("pim_membership: Infinity is not a monoid element");
  const CutValue zero = CutValue::zero(pim.h.rank);
  if (cut_cmp(m, zero) == std::strong_ordering::less)
    throw std::domain_error("pim_membership: cut below 0+");
  const CutValue top = pim.h.level == pim.h.rank ? CutValue::plus_inf(pim.h.rank)
                                                 : CutValue::h_plus(pim.h);
  const auto c = cut_cmp(m, top);
  if (pim.closed || pim.h.level == 0) return c != std::strong_ordering::greater;
  return c == std::strong_ordering::less;
}

PimList pims_over(IsolatedSubgroup h, MonoidKind kind, long chain_size, long bound) {
  PimList out;
  if (kind == MonoidKind::CutMonoid) {
    out.cut_pims.push_back(PimDescriptor{h, false});
    if (h.level != 0) out.cut_pims.push_back(PimDescriptor{h, true});
    return out;
  }
  if (h.level != 0)
    throw std::invalid_argument("pims_over: lex-max enumeration is supported over {0} only");
  if (bound < 0) throw std::invalid_argument("pims_over: negative bound");
  long last = bound;
  if (chain_size > 0 && chain_size - 1 < bound) last = chain_size - 1;
  for (long j = 0; j <= last; ++j) out.lexmax_bounds.push_back(j);
  out.truncated = (chain_size == 0) || (chain_size - 1 > bound);
  return out;
}

bool lexmax_pim_membership(const LexProductElem& x, long bound) {
  return x.z == 0 && x.m.v >= 0 && x.m.v <= bound;
}

}  // namespace qv
