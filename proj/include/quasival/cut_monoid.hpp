#pragma once

#include <compare>
#include <string>
#include <vector>

#include "quasival/ordered_group.hpp"

namespace qv {

/// Isolated (convex) subgroup H_j of Z^k-lex: elements whose first k-j
/// coordinates vanish. Level 0 is {0}, level k is the whole group.
struct IsolatedSubgroup {
  int level = 0;
  int rank = 1;
  friend bool operator==(const IsolatedSubgroup&, const IsolatedSubgroup&) = default;
};

/// The k+1 isolated subgroups of Z^k-lex, ascending by inclusion.
std::vector<IsolatedSubgroup> isolated_subgroups(int rank);

/// A cut of Z^k-lex in canonical finite form, with the adjoined top element.
///
/// Finite cuts have left set (-inf, gamma] + H^{>=0}; the coordinates of
/// gamma inside H are zeroed, so equality is structural. The left set of a
/// level-k cut is the whole group, which canonicalizes to PlusInf.
class CutValue {
 public:
  enum class Kind { MinusInf, Finite, PlusInf, Infinity };

  static CutValue minus_inf(int rank) { return CutValue(Kind::MinusInf, rank); }
  static CutValue plus_inf(int rank) { return CutValue(Kind::PlusInf, rank); }
  static CutValue infinity(int rank) { return CutValue(Kind::Infinity, rank); }
  static CutValue finite(GroupElem gamma, IsolatedSubgroup h);
  /// The principal cut gamma+ with left set (-inf, gamma].
  static CutValue principal(GroupElem gamma);
  /// The cut H+ with left set (-inf, 0] + H^{>=0}.
  static CutValue h_plus(IsolatedSubgroup h);
  static CutValue zero(int rank) { return principal(GroupElem::zero(rank)); }

  Kind kind() const { return kind_; }
  int rank() const { return rank_; }
  bool is_finite() const { return kind_ == Kind::Finite; }
  bool is_infinity() const { return kind_ == Kind::Infinity; }
  const GroupElem& gamma() const;
  int h_level() const;
  IsolatedSubgroup subgroup() const { return IsolatedSubgroup{h_level(), rank_}; }

  friend bool operator==(const CutValue& a, const CutValue& b);

 private:
  CutValue(Kind k, int rank) : kind_(k), rank_(rank), gamma_(GroupElem::zero(rank)) {}
  Kind kind_;
  int rank_;
  GroupElem gamma_;
  int h_level_ = 0;
};

/// Left sum of cuts, (A+B)^L = A^L + B^L. Infinity absorbs; the pair
/// (MinusInf, PlusInf) is rejected as undefined.
CutValue cut_add(const CutValue& a, const CutValue& b);

/// n-fold left sum, (nA)^L = nA^L; requires n >= 1.
CutValue cut_scalar(const Int& n, const CutValue& a);

/// Total order by left-set inclusion, with Infinity on top.
std::strong_ordering cut_cmp(const CutValue& a, const CutValue& b);

/// B - alpha, the cut B + (-alpha)+; Infinity - alpha = Infinity.
CutValue cut_sub_group(const CutValue& a, const GroupElem& alpha);

/// Decides membership of gamma in the left set of a finite cut.
bool left_set_contains(const CutValue& cut, const GroupElem& gamma);

std::string to_string(const CutValue& a);

/// hull_M(H^{>=0}) or its closure in the cut monoid of Z^k-lex.
struct PimDescriptor {
  IsolatedSubgroup h;
  bool closed = false;  // false: hull, true: closure
  friend bool operator==(const PimDescriptor&, const PimDescriptor&) = default;
};

/// Membership of a nonnegative cut in a PIM; rejects m < 0+.
bool pim_membership(const CutValue& m, const PimDescriptor& pim);

enum class MonoidKind { CutMonoid, LexMax };

struct PimList {
  std::vector<PimDescriptor> cut_pims;  // CutMonoid results
  std::vector<long> lexmax_bounds;      // LexMax results: PIM {(0,i) : i <= j} per bound j
  bool truncated = false;
  std::size_t count() const { return cut_pims.size() + lexmax_bounds.size(); }
};

/// PIMs lying over H^{>=0}. For the cut monoid this is the hull, plus its
/// closure when the two differ. For Z x (chain, max) over H = {0} it is the
/// family {(0,i) : i <= j}, enumerated up to the bound; chain_size 0 means
/// the unbounded chain N u {0}.
PimList pims_over(IsolatedSubgroup h, MonoidKind kind, long chain_size, long bound);

/// Membership of (z,m) in the lex-max PIM {(0,i) : i <= j}.
bool lexmax_pim_membership(const LexProductElem& x, long bound);

}  // namespace qv
