#pragma once

#include <cstdint>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "absorb/green.hpp"
#include "absorb/semigroup.hpp"

namespace absorb {

/// Rees order on idempotents: e <= f iff e + f = f + e = e.
/// Throws NotIdempotent unless both arguments are idempotent.
bool rees_leq(const FiniteSemigroup& s, std::size_t e, std::size_t f);

/// E<=(e): idempotents dominated by e in the Rees order (always contains e).
ElemSet e_below(const FiniteSemigroup& s, std::size_t e);

/// E^lin(W): idempotents whose E<=(e) is totally ordered by the Rees order.
ElemSet e_lin(const FiniteSemigroup& s);

struct StepwiseResult {
  ElemSet set;                                     // A_s(W)
  std::vector<std::vector<std::uint32_t>> stages;  // the full stage sets A_1, A_2, ...
};

/// Successively removes the absorbing elements of what remains: stage n is
/// the set of a with w + a = a + w = a for every remaining w. The stages are
/// provably singletons, but each is computed in full so the invariant can be
/// checked rather than assumed; iteration stops at the first empty stage.
StepwiseResult stepwise_quasi_absorbing(const FiniteSemigroup& s);

/// A_fin(W): elements of E^lin whose E<=(a) is finite (trivially so here,
/// the clause is kept so the symbolic chain analyzer can share the predicate
/// text) and which absorb everything outside E<=(a).
ElemSet a_fin(const FiniteSemigroup& s);

/// A(W): the quasi-absorbing elements; same predicate without the
/// finiteness clause. Equals a_fin and the stepwise set on finite tables.
ElemSet a_w(const FiniteSemigroup& s);

/// P(A): idempotents e outside the ideal A such that every idempotent
/// strictly below e lies in A. Throws NotAnIdeal.
ElemSet primitives(const FiniteSemigroup& s, const ElemSet& a);

/// Everything the analyze command reports about quasi-absorbing structure.
struct QuasiReport {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> rees_order;  // pairs e <= f, e != f
  ElemSet e_lin;
  ElemSet a_s;
  std::vector<std::vector<std::uint32_t>> stages;
  ElemSet a_fin;
  ElemSet a_w;
  ElemSet primitives_a_w;  // P(A(W))

  /// {"A_s":[...],"stages":[[...]],"A_fin":[...],"A":[...],"E_lin":[...],
  ///  "primitives":{"A(W)":[...]}} with elements rendered through labels.
  nlohmann::ordered_json to_json(const FiniteSemigroup& s) const;
};

QuasiReport quasi_report(const FiniteSemigroup& s);

}  // namespace absorb
