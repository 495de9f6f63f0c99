#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "absorb/semigroup.hpp"
#include "absorb/splitmix64.hpp"

namespace absorb {

/// Kinds of blocks in a countable totally Rees-ordered chain of idempotents.
///   Fin(m)    a finite chain of m elements
///   Omega     order type w: a Rees-least element, no greatest
///   OmegaStar order type w*: a Rees-greatest element, no least
enum class BlockKind { Fin, Omega, OmegaStar };

struct Block {
  BlockKind kind;
  std::size_t size = 0;  // used by Fin only
};

/// A chain element is addressed by its block and an offset counted from the
/// block's existing endpoint: offset 0 is the Rees-least element for Fin and
/// Omega blocks and the Rees-greatest element for OmegaStar blocks.
struct ChainAddr {
  std::size_t block;
  std::size_t offset;
  bool operator==(const ChainAddr&) const = default;
};

/// A symbolic countable commutative semigroup of idempotents: finitely many
/// blocks stacked bottom (Rees-least) to top, with x + y the Rees-meet, plus
/// an optional twin-top gadget {E,F} above the chain with E+E=E, F+F=F and
/// E+F = F+E = the greatest element of the top block (which must therefore
/// exist: the top block has to be Fin or OmegaStar). Models the standard
/// infinite examples: (N, max), {1 +- 1/n} with max, D u {e,f}, D1 u D2.
class ChainSemigroup {
 public:
  ChainSemigroup(std::vector<Block> blocks, bool twin_top);

  const std::vector<Block>& blocks() const { return blocks_; }
  bool twin_top() const { return twin_top_; }
  bool top_block_has_greatest() const;

  /// Rees comparison of chain addresses: negative, zero, or positive as
  /// a <, ==, > b (total order on the chain part).
  int rees_compare(ChainAddr a, ChainAddr b) const;

  std::string render_elem(ChainAddr a) const;

 private:
  std::vector<Block> blocks_;
  bool twin_top_;
};

/// A decidable subset of a ChainSemigroup in normal form: per block either
/// the whole block or a finite set of offsets, plus membership flags for the
/// gadget elements. Uniqueness of the normal form (finite Fin blocks that
/// are fully covered normalize to "whole") makes == set equality.
class SymbolicSet {
 public:
  SymbolicSet() = default;
  explicit SymbolicSet(const ChainSemigroup& chain);

  static SymbolicSet empty_set(const ChainSemigroup& chain);
  static SymbolicSet all_set(const ChainSemigroup& chain);

  void set_block_whole(std::size_t block);
  void add_offset(const ChainSemigroup& chain, ChainAddr addr);
  void set_gadget(bool e, bool f);

  bool contains(ChainAddr addr) const;
  bool contains_e() const { return has_e_; }
  bool contains_f() const { return has_f_; }
  bool block_whole(std::size_t block) const { return parts_[block].whole; }

  bool is_empty() const;
  bool is_all(const ChainSemigroup& chain) const;
  /// The chain members when the set is finite (whole Fin blocks expand to
  /// their addresses); nullopt when a whole infinite block is included.
  /// Gadget membership is reported by contains_e/contains_f as usual.
  std::optional<std::vector<ChainAddr>> finite_chain_members(const ChainSemigroup& chain) const;
  bool is_subset_of(const SymbolicSet& other) const;
  bool operator==(const SymbolicSet& other) const;
  bool operator!=(const SymbolicSet& other) const { return !(*this == other); }

  /// "EMPTY", "ALL", or a union like "b0[*] u b2[0] u {E,F}".
  std::string render(const ChainSemigroup& chain) const;

 private:
  struct BlockPart {
    bool whole = false;
    std::vector<std::size_t> offsets;  // sorted, unique; empty when whole
  };
  std::vector<BlockPart> parts_;
  bool has_e_ = false;
  bool has_f_ = false;
};

/// A(W) in closed form: the whole chain part; gadget elements are excluded
/// because E+F lands strictly below both. ALL when there is no gadget.
SymbolicSet symbolic_a_w(const ChainSemigroup& chain);

/// A_fin(W) in closed form: a chain element qualifies when every block
/// strictly below it is Fin and it has only finitely many Rees-predecessors
/// within its own block (all positions of Fin and Omega blocks, none of an
/// OmegaStar block). Gadget elements never qualify.
SymbolicSet symbolic_a_fin(const ChainSemigroup& chain);

/// A_s(W) by symbolic stage iteration: repeatedly remove the Rees-least
/// remaining element while one exists; a whole Omega block is consumed
/// across finite stages, and nothing above the first Omega or OmegaStar
/// block is ever reached. Always equals symbolic_a_fin.
SymbolicSet symbolic_a_s(const ChainSemigroup& chain);

enum class WhichIdeal { AFin, AW };

/// P(A) for A = A_fin(W) or A(W): the Rees-least element of the chain
/// remainder if it exists, the gadget pair when the remainder is exactly the
/// gadget, and EMPTY when the remainder has no least element.
SymbolicSet symbolic_primitives(const ChainSemigroup& chain, WhichIdeal which);

/// A finite window of the chain: all elements of each Fin block and the k
/// elements nearest the addressable endpoint of each infinite block, plus
/// the gadget. Indices run block by block in offset order, gadget last.
struct Truncation {
  FiniteSemigroup table;
  std::vector<ChainAddr> chain_addrs;     // index -> chain address
  std::optional<std::size_t> e_index;
  std::optional<std::size_t> f_index;

  std::size_t chain_count() const { return chain_addrs.size(); }
  ElemSet chain_part() const;
  /// The members of a symbolic set that survived the truncation.
  ElemSet restrict(const SymbolicSet& set) const;
};

Truncation truncate(const ChainSemigroup& chain, std::size_t k);

/// Agreement report between the symbolic answers and the finite analyzer on
/// a truncation. Divergences the truncation itself explains (it creates
/// minima the infinite chain lacks, so extra elements become stepwise
/// absorbing) are EXPECTED_DIVERGENCE; anything else is a failure.
struct CrossCheckReport {
  enum class Status { Agree, ExpectedDivergence, Fail };
  struct Row {
    std::string quantity;
    std::string symbolic;
    std::string finite;
    Status status;
  };
  std::vector<Row> rows;
  bool ok() const {
    for (const auto& r : rows) {
      if (r.status == Status::Fail) return false;
    }
    return true;
  }
};

CrossCheckReport cross_check(const ChainSemigroup& chain, std::size_t k);

/// Text form: "blocks = [omega_star, fin:3, omega]; gadget = twin_top".
ChainSemigroup parse_chain_text(const std::string& text);
std::string write_chain_text(const ChainSemigroup& chain);

/// JSON mirror: {"blocks":["omega_star","fin:3"],"gadget":"twin_top"} with
/// the gadget key omitted when absent.
ChainSemigroup parse_chain_json(const std::string& text);
std::string write_chain_json(const ChainSemigroup& chain);

ChainSemigroup parse_chain_auto(const std::string& text);
ChainSemigroup load_chain_file(const std::string& path);

/// Seeded random chain spec: 1-4 blocks, Fin sizes 1-4, a twin top half the
/// time when the top block allows one.
ChainSemigroup random_chain(SplitMix64& rng);

}  // namespace absorb
