#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "absorb/green.hpp"
#include "absorb/semigroup.hpp"

namespace absorb {

/// The lattice of two-sided ideals, represented as downsets of the J-class
/// poset. Every two-sided ideal is a union of principal two-sided ideals of
/// its members, hence a union of whole J-classes closed downwards under the
/// J-preorder; conversely every such union is an ideal. The family therefore
/// yields each ideal exactly once, always including the empty set.
///
/// Note on "properly contain" in the A-minimal definition: an ideal E counts
/// against minimality of D only when E is a strict subset of D; the
/// non-strict reading would leave no minimal ideals at all.
class IdealFamily {
 public:
  /// Builds the family; throws TooManyJClasses when the J-class count
  /// exceeds 24 (the downset iteration guard).
  static IdealFamily of(const FiniteSemigroup& s, const GreenSummary& g);
  static IdealFamily of(const FiniteSemigroup& s);

  std::size_t j_class_count() const { return class_elems_.size(); }

  /// Streams every ideal exactly once (single consumer). Return false from
  /// the callback to stop early.
  void for_each(const std::function<bool(const ElemSet&)>& fn) const;

  std::vector<ElemSet> all() const;
  std::size_t count() const;

 private:
  IdealFamily(std::size_t n) : universe_(n) {}
  std::size_t universe_;
  std::vector<ElemSet> class_elems_;       // elements of each J-class
  std::vector<std::uint32_t> down_mask_;   // classes required below each class
};

/// D is A-minimal: D is not contained in A and every ideal strictly below D
/// is a subset of A. Fast path: D not within A and W(u) == D for every
/// u in D\A. Both arguments must be ideals (NotAnIdeal names the offender).
bool is_A_minimal(const FiniteSemigroup& s, const GreenSummary& g, const ElemSet& d,
                  const ElemSet& a);
/// Same predicate decided by scanning the enumerated ideal family.
bool is_A_minimal_brute(const FiniteSemigroup& s, const IdealFamily& family, const ElemSet& d,
                        const ElemSet& a);

/// (W,+) is A-simple: the only ideals are W and subsets of A. Requires A to
/// be a proper ideal (ANotProper otherwise).
bool is_A_simple(const FiniteSemigroup& s, const GreenSummary& g, const ElemSet& a);
bool is_A_simple_brute(const FiniteSemigroup& s, const IdealFamily& family, const ElemSet& a);

/// A is a bottleneck ideal: every ideal D satisfies D <= A or A <= D.
bool is_bottleneck(const FiniteSemigroup& s, const GreenSummary& g, const ElemSet& a);
bool is_bottleneck_brute(const FiniteSemigroup& s, const IdealFamily& family, const ElemSet& a);

/// Abrhan minimality of D with respect to a non-empty subset B: D meets B
/// and no ideal strictly inside D meets B.
bool is_abrhan_minimal(const FiniteSemigroup& s, const IdealFamily& family, const ElemSet& d,
                       const ElemSet& b);

}  // namespace absorb
