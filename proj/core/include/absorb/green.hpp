#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "absorb/semigroup.hpp"

namespace absorb {

/// Principal ideals and Green's class partitions of a semigroup, computed
/// once and shared by the ideal and quasi-absorbing machinery.
///
/// For each element u:
///   left_ideal[u]  = W_L(u) = (W + {u}) u {u}
///   right_ideal[u] = W_R(u) = ({u} + W) u {u}
///   two_sided[u]   = W(u)   = (W_L(u) + W) u W_L(u)
/// Classes group elements by equal principal ideals; the J-preorder compares
/// J-classes by containment of their principal two-sided ideals.
struct GreenSummary {
  std::vector<ElemSet> left_ideal;
  std::vector<ElemSet> right_ideal;
  std::vector<ElemSet> two_sided;

  std::vector<std::uint32_t> l_class;
  std::vector<std::uint32_t> r_class;
  std::vector<std::uint32_t> h_class;
  std::vector<std::uint32_t> j_class;

  std::vector<ElemSet> l_members;
  std::vector<ElemSet> r_members;
  std::vector<ElemSet> h_members;
  std::vector<ElemSet> j_members;

  /// j_leq[a][b] is true when W(u) <= W(v) for u in class a, v in class b.
  std::vector<std::vector<bool>> j_leq;

  const ElemSet& l_of(std::size_t u) const { return l_members[l_class[u]]; }
  const ElemSet& r_of(std::size_t u) const { return r_members[r_class[u]]; }
  const ElemSet& h_of(std::size_t u) const { return h_members[h_class[u]]; }
  const ElemSet& j_of(std::size_t u) const { return j_members[j_class[u]]; }

  nlohmann::ordered_json to_json() const;
};

ElemSet principal_left(const FiniteSemigroup& s, std::size_t u);
ElemSet principal_right(const FiniteSemigroup& s, std::size_t u);
ElemSet principal_two_sided(const FiniteSemigroup& s, std::size_t u);

GreenSummary green_classes(const FiniteSemigroup& s);

/// W + X <= X. The empty set is an ideal by convention.
bool is_left_ideal(const FiniteSemigroup& s, const ElemSet& x);
/// X + W <= X.
bool is_right_ideal(const FiniteSemigroup& s, const ElemSet& x);
bool is_ideal(const FiniteSemigroup& s, const ElemSet& x);

/// True when X is closed under +, has a two-sided identity within X, and
/// every member has a two-sided inverse in X. Empty X is not a group.
bool is_group(const FiniteSemigroup& s, const ElemSet& x);

struct HTheoremVerdict {
  bool h_eq_we_minus_a;  // H(e) == W(e) \ A
  bool group;            // (W(e) \ A, +) is a group
};

/// Evaluates both sides of the statement "H(e) = W(e)\A iff (W(e)\A,+) is a
/// group" independently. Requires e idempotent outside A and A a two-sided
/// ideal; throws PreconditionViolated otherwise.
HTheoremVerdict h_theorem_verdict(const FiniteSemigroup& s, const GreenSummary& g, std::size_t e,
                                  const ElemSet& a);
HTheoremVerdict h_theorem_verdict(const FiniteSemigroup& s, std::size_t e, const ElemSet& a);

}  // namespace absorb
