#include "doctest.h"

#include "absorb/chains.hpp"
#include "absorb/generators.hpp"
#include "absorb/quasi.hpp"

using namespace absorb;

namespace {

ChainSemigroup nat_max() { return ChainSemigroup({{BlockKind::OmegaStar}}, false); }

ChainSemigroup one_pm() {
  return ChainSemigroup({{BlockKind::Omega}, {BlockKind::OmegaStar}}, false);
}

ChainSemigroup d_ef() { return ChainSemigroup({{BlockKind::OmegaStar}}, true); }

ChainSemigroup d1_d2() { return ChainSemigroup({{BlockKind::Omega}, {BlockKind::Omega}}, false); }

}  // namespace

TEST_CASE("construction guards") {
  CHECK_THROWS_AS(ChainSemigroup({}, false), BadParameter);
  CHECK_THROWS_AS(ChainSemigroup({{BlockKind::Fin, 0}}, false), BadParameter);
  // a twin top needs a greatest chain element below it
  CHECK_THROWS_AS(ChainSemigroup({{BlockKind::Omega}}, true), BadParameter);
  CHECK_NOTHROW(ChainSemigroup({{BlockKind::Omega}, {BlockKind::Fin, 2}}, true));
}

TEST_CASE("natural numbers with max") {
  ChainSemigroup c = nat_max();
  CHECK(symbolic_a_s(c).is_empty());
  CHECK(symbolic_a_fin(c).is_empty());
  CHECK(symbolic_a_w(c).is_all(c));
  CHECK(symbolic_primitives(c, WhichIdeal::AFin).is_empty());
  CHECK(symbolic_primitives(c, WhichIdeal::AW).is_empty());
}

TEST_CASE("the two-limit chain 1 +- 1/n") {
  ChainSemigroup c = one_pm();
  SymbolicSet fin = symbolic_a_fin(c);
  CHECK(fin.block_whole(0));
  CHECK_FALSE(fin.block_whole(1));
  CHECK(fin == symbolic_a_s(c));
  SymbolicSet aw = symbolic_a_w(c);
  CHECK(aw.is_all(c));
  CHECK(fin != aw);
  CHECK(fin.is_subset_of(aw));
  CHECK(symbolic_primitives(c, WhichIdeal::AFin).is_empty());
}

TEST_CASE("D with the twin top") {
  ChainSemigroup c = d_ef();
  CHECK(symbolic_a_fin(c).is_empty());
  CHECK(symbolic_a_s(c).is_empty());
  SymbolicSet aw = symbolic_a_w(c);
  CHECK(aw.block_whole(0));
  CHECK_FALSE(aw.contains_e());
  CHECK_FALSE(aw.is_all(c));  // the gadget stays outside
  SymbolicSet p = symbolic_primitives(c, WhichIdeal::AW);
  CHECK(p.contains_e());
  CHECK(p.contains_f());
  CHECK_FALSE(p.contains({0, 0}));
  CHECK(symbolic_primitives(c, WhichIdeal::AFin).is_empty());
}

TEST_CASE("two omega blocks stacked") {
  ChainSemigroup c = d1_d2();
  SymbolicSet fin = symbolic_a_fin(c);
  CHECK(fin.block_whole(0));
  CHECK_FALSE(fin.block_whole(1));
  SymbolicSet p_fin = symbolic_primitives(c, WhichIdeal::AFin);
  CHECK(p_fin.contains({1, 0}));       // the least element of the second block
  CHECK_FALSE(p_fin.contains({1, 1}));
  CHECK(symbolic_a_w(c).is_all(c));
  CHECK(symbolic_primitives(c, WhichIdeal::AW).is_empty());
}

TEST_CASE("truncations reproduce the finite families") {
  CHECK(truncate(d_ef(), 3).table == generate_family({Family::PaperExampleEfGadget, 3}));
  CHECK(truncate(ChainSemigroup({{BlockKind::Fin, 3}}, false), 10).table ==
        generate_family({Family::MinChain, 3}));
  CHECK(truncate(nat_max(), 4).table == generate_family({Family::MaxChain, 4}));
  CHECK(truncate(ChainSemigroup({{BlockKind::Omega}}, false), 4).table ==
        generate_family({Family::MinChain, 4}));
  CHECK(truncate(one_pm(), 2).table == generate_family({Family::TwoOmegaTruncation, 2}));
  CHECK_THROWS_AS(truncate(nat_max(), 0), BadK);
}

TEST_CASE("cross-check: gadget chain agrees for k = 1..6") {
  for (std::size_t k = 1; k <= 6; ++k) {
    CrossCheckReport rep = cross_check(d_ef(), k);
    CAPTURE(k);
    CHECK(rep.ok());
    for (const auto& row : rep.rows) {
      if (row.quantity == "E_lin gadget" || row.quantity == "P(chain ideal)") {
        CHECK(row.status == CrossCheckReport::Status::Agree);
      }
    }
  }
}

TEST_CASE("cross-check: pure omega-star truncation diverges as expected on A_s") {
  CrossCheckReport rep = cross_check(nat_max(), 5);
  CHECK(rep.ok());
  bool diverged = false;
  for (const auto& row : rep.rows) {
    if (row.quantity == "A_s") {
      CHECK(row.status == CrossCheckReport::Status::ExpectedDivergence);
      diverged = true;
    }
  }
  CHECK(diverged);
}

TEST_CASE("cross-check: finite chains agree on every quantity") {
  for (std::size_t k : {1, 3, 7}) {
    CrossCheckReport rep = cross_check(ChainSemigroup({{BlockKind::Fin, 3}}, true), k);
    CAPTURE(k);
    for (const auto& row : rep.rows) {
      CAPTURE(row.quantity);
      CHECK(row.status == CrossCheckReport::Status::Agree);
    }
  }
}

TEST_CASE("chain spec text and json round-trip") {
  ChainSemigroup c = parse_chain_text("blocks = [omega_star, fin:3, omega]");
  CHECK(c.blocks().size() == 3);
  CHECK(c.blocks()[1].kind == BlockKind::Fin);
  CHECK(c.blocks()[1].size == 3);
  CHECK_FALSE(c.twin_top());
  CHECK(write_chain_text(c) == "blocks = [omega_star, fin:3, omega]\n");

  ChainSemigroup g = parse_chain_text("blocks = [omega, fin:2]; gadget = twin_top");
  CHECK(g.twin_top());
  CHECK(write_chain_text(g) == "blocks = [omega, fin:2]; gadget = twin_top\n");

  std::string json = write_chain_json(g);
  ChainSemigroup g2 = parse_chain_json(json);
  CHECK(write_chain_json(g2) == json);
  CHECK(parse_chain_auto(json).twin_top());

  CHECK_THROWS_AS(parse_chain_text("blocks = [albatross]"), BadParameter);
  CHECK_THROWS_AS(parse_chain_text("gadget = twin_top"), BadParameter);
  CHECK_THROWS_AS(parse_chain_text("blocks = [omega]; gadget = twin_top"), BadParameter);
}

TEST_CASE("random chains satisfy the symbolic theorems") {
  SplitMix64 rng(7);
  for (int i = 0; i < 100; ++i) {
    ChainSemigroup c = random_chain(rng);
    SymbolicSet a_s = symbolic_a_s(c);
    SymbolicSet fin = symbolic_a_fin(c);
    SymbolicSet aw = symbolic_a_w(c);
    CHECK(a_s == fin);
    CHECK(fin.is_subset_of(aw));
    if (fin != aw) {
      // trivial primitives: P(A_fin) empty or a singleton inside A(W)
      SymbolicSet p = symbolic_primitives(c, WhichIdeal::AFin);
      if (!p.is_empty()) {
        CHECK_FALSE(p.contains_e());
        CHECK_FALSE(p.contains_f());
        auto members = p.finite_chain_members(c);
        REQUIRE(members.has_value());
        REQUIRE(members->size() == 1);
        CHECK(aw.contains((*members)[0]));
      }
    }
  }
}

TEST_CASE("random chain truncations pass the cross-check") {
  SplitMix64 rng(11);
  for (int i = 0; i < 40; ++i) {
    ChainSemigroup c = random_chain(rng);
    for (std::size_t k = 1; k <= 3; ++k) {
      CrossCheckReport rep = cross_check(c, k);
      CHECK(rep.ok());
    }
  }
}
