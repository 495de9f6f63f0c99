#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "absorb/semigroup.hpp"

namespace absorb {

enum class Family {
  LeftZero,               // left_zero(n): i + j = i
  RightZero,              // right_zero(n): i + j = j
  MinChain,               // min_chain(n): semilattice, min of indices
  MaxChain,               // max_chain(n)
  Cyclic,                 // cyclic(n): addition mod n
  AdjoinZero,             // adjoin_zero(S): S plus a fresh absorbing element
  AdjoinIdentity,         // adjoin_identity(S): S plus a fresh identity
  PaperExampleLeftZero,   // the 2x2 left-zero table over {e,f}
  PaperExampleBottleneck, // the 4x4 table over {u,v,w,alpha}
  PaperExampleEfGadget,   // ef_gadget(k): {1,1/2,...,1/k} with min, plus twin top {e,f}
  TwoOmegaTruncation,     // two_omega_truncation(k): {1+1/n} u {1-1/n} under max, k per block
  InfAdditionToy,         // 3-chain {+inf,-inf,0} modeling inf-addition of the infinities
};

struct GeneratorSpec {
  Family family;
  long long param = 0;                        // n or k where applicable
  std::shared_ptr<const GeneratorSpec> base;  // for adjoin_zero / adjoin_identity
};

/// Parses "min_chain:3", "paper_example_bottleneck", "adjoin_zero:cyclic:4", ...
GeneratorSpec parse_generator_spec(const std::string& text);
std::string family_name(Family family);

/// Builds the requested family. Every result passes table validation; labels
/// carry the customary symbols where the family has them.
FiniteSemigroup generate_family(const GeneratorSpec& spec);

/// Closure of self-maps of {0,...,degree-1} under composition, with
/// a + b = a o b (right-to-left application: (a+b)(x) = a(b(x))).
/// Element order is generator order followed by first-discovery order of
/// products. Throws SizeExplosion past 10000 elements.
FiniteSemigroup transformation_closure(std::size_t degree,
                                       const std::vector<std::vector<std::uint8_t>>& generators);

/// Draws num_generators random self-maps with SplitMix64(seed) (generator by
/// generator, point by point, each value next() mod degree) and closes them.
/// Preconditions: 1 <= degree <= 6, 1 <= num_generators <= 5.
FiniteSemigroup random_transformation_semigroup(std::size_t degree, std::size_t num_generators,
                                                std::uint64_t seed);

/// Calls fn for every associative n x n table exactly once (raw tables, not
/// up to isomorphism), filling cells in row-major order and pruning on any
/// completed associativity triple. Requires 1 <= n <= 4.
void for_each_semigroup(std::size_t n, const std::function<void(const FiniteSemigroup&)>& fn);

/// Same search with an explicit cell-fill order (a permutation of all n*n
/// cells); used to cross-check counts between independent orders.
void for_each_semigroup_order(std::size_t n,
                              const std::vector<std::pair<std::size_t, std::size_t>>& order,
                              const std::function<void(const FiniteSemigroup&)>& fn);

std::size_t count_semigroups(std::size_t n);

}  // namespace absorb
