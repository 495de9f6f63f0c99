#include "doctest.h"

#include "absorb/generators.hpp"
#include "absorb/semigroup.hpp"
#include "absorb/splitmix64.hpp"

using namespace absorb;

namespace {

using Grid = std::vector<std::vector<long long>>;

// Independent oracle: first lexicographic triple violating associativity.
std::optional<std::array<std::size_t, 3>> first_bad_triple(const Grid& g) {
  std::size_t n = g.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        auto ij = static_cast<std::size_t>(g[i][j]);
        auto jk = static_cast<std::size_t>(g[j][k]);
        if (g[ij][k] != g[i][jk]) return std::array<std::size_t, 3>{i, j, k};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("validate accepts the singleton table") {
  FiniteSemigroup s = FiniteSemigroup::validate({{0}});
  CHECK(s.size() == 1);
  CHECK(s.sum(0, 0) == 0);
  CHECK(is_commutative(s));
}

TEST_CASE("validate accepts the left-zero table and sees non-commutativity") {
  FiniteSemigroup s = FiniteSemigroup::validate({{0, 0}, {1, 1}}, {{"e", "f"}});
  CHECK(s.size() == 2);
  CHECK_FALSE(is_commutative(s));
  CHECK(s.label(0) == "e");
}

TEST_CASE("validate reports the first failing associativity triple") {
  Grid bad = {{1, 0}, {0, 0}};
  // oracle first: scan all 8 triples
  auto triple = first_bad_triple(bad);
  REQUIRE(triple.has_value());
  CHECK((*triple)[0] == 0);
  CHECK((*triple)[1] == 0);
  CHECK((*triple)[2] == 1);
  try {
    FiniteSemigroup::validate(bad);
    FAIL("expected AssociativityViolation");
  } catch (const AssociativityViolation& e) {
    CHECK(e.i == (*triple)[0]);
    CHECK(e.j == (*triple)[1]);
    CHECK(e.k == (*triple)[2]);
  }
}

TEST_CASE("validate rejects out-of-range entries with the cell") {
  try {
    FiniteSemigroup::validate({{0, 2}, {1, 1}});
    FAIL("expected OutOfRangeEntry");
  } catch (const OutOfRangeEntry& e) {
    CHECK(e.row == 0);
    CHECK(e.col == 1);
  }
  CHECK_THROWS_AS(FiniteSemigroup::validate({{0, 0}, {1, 1}, {0, 0}}), BadParameter);
  CHECK_THROWS_AS(FiniteSemigroup::validate({}), BadParameter);
}

TEST_CASE("idempotents of the worked tables") {
  FiniteSemigroup left_zero = generate_family({Family::PaperExampleLeftZero});
  CHECK(idempotents(left_zero) == ElemSet::full(2));

  // a two-element null semigroup: every product is the zero
  FiniteSemigroup null2 = FiniteSemigroup::validate({{1, 1}, {1, 1}});
  CHECK(idempotents(null2) == ElemSet::of(2, {1}));

  FiniteSemigroup bottleneck = generate_family({Family::PaperExampleBottleneck});
  CHECK(idempotents(bottleneck) == ElemSet::of(4, {0, 3}));
  CHECK(is_commutative(bottleneck));
}

TEST_CASE("absorbing element detection honors the two-element convention") {
  CHECK_FALSE(absorbing_element(FiniteSemigroup::validate({{0}})).has_value());
  FiniteSemigroup bottleneck = generate_family({Family::PaperExampleBottleneck});
  CHECK(absorbing_element(bottleneck) == std::size_t{3});
  FiniteSemigroup left_zero = generate_family({Family::LeftZero, 2});
  CHECK_FALSE(absorbing_element(left_zero).has_value());
}

TEST_CASE("subsemigroup restriction") {
  FiniteSemigroup bottleneck = generate_family({Family::PaperExampleBottleneck});
  auto [sub, to_old] = subsemigroup(bottleneck, ElemSet::of(4, {2, 3}));
  CHECK(sub.size() == 2);
  CHECK(to_old == std::vector<std::size_t>{2, 3});
  CHECK(sub.sum(0, 0) == 1);  // w + w = alpha
  CHECK(sub.sum(1, 1) == 1);
  CHECK_THROWS_AS(subsemigroup(bottleneck, ElemSet::of(4, {1})), NotClosed);  // v+v = u outside
}

TEST_CASE("ElemSet algebra properties on random masks") {
  SplitMix64 rng(2024);
  for (int round = 0; round < 200; ++round) {
    std::size_t n = 1 + rng.below(130);
    ElemSet a(n), b(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (rng.below(2)) a.add(i);
      if (rng.below(2)) b.add(i);
    }
    CHECK((a & b).is_subset_of(a));
    CHECK(a.is_subset_of(a | b));
    CHECK(((a | b) - b) == (a - b));
    // De Morgan
    CHECK((a | b).complement() == (a.complement() & b.complement()));
    CHECK(a.complement().complement() == a);
    CHECK((a - b) == (a & b.complement()));
    CHECK(a.count() + a.complement().count() == n);
    ElemSet c = a;
    CHECK(c == a);
    if (!a.empty()) {
      std::size_t m = a.min();
      CHECK(a.contains(m));
      c.remove(m);
      CHECK(c.count() + 1 == a.count());
    }
  }
}

TEST_CASE("ElemSet universe mismatch throws") {
  ElemSet a(3), b(4);
  CHECK_THROWS_AS(a |= b, UniverseMismatch);
  CHECK_THROWS_AS(a.contains(7), IndexOutOfRange);
}
