#include "doctest.h"

#include <set>

#include "absorb/generators.hpp"
#include "absorb/table_io.hpp"

using namespace absorb;

namespace {

// Oracle: scan all n^(n*n) tables for associativity. Usable for n <= 3.
std::size_t brute_force_count(std::size_t n) {
  std::size_t cells = n * n;
  std::size_t total = 1;
  for (std::size_t i = 0; i < cells; ++i) total *= n;
  std::size_t count = 0;
  std::vector<std::size_t> t(cells);
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code;
    for (std::size_t i = 0; i < cells; ++i) {
      t[i] = c % n;
      c /= n;
    }
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      for (std::size_t j = 0; j < n && ok; ++j) {
        for (std::size_t k = 0; k < n && ok; ++k) {
          ok = t[t[i * n + j] * n + k] == t[i * n + t[j * n + k]];
        }
      }
    }
    if (ok) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("chain and cyclic families") {
  FiniteSemigroup min3 = generate_family({Family::MinChain, 3});
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) CHECK(min3.sum(i, j) == std::min(i, j));
  }
  CHECK(is_commutative(min3));
  CHECK(idempotents(min3) == ElemSet::full(3));

  CHECK(is_commutative(generate_family({Family::MaxChain, 4})));
  CHECK(is_commutative(generate_family({Family::Cyclic, 5})));
  CHECK_FALSE(is_commutative(generate_family({Family::LeftZero, 2})));
  CHECK_FALSE(is_commutative(generate_family({Family::RightZero, 3})));
}

TEST_CASE("paper bottleneck table is exactly the printed one") {
  FiniteSemigroup s = generate_family({Family::PaperExampleBottleneck});
  std::vector<std::vector<FiniteSemigroup::elem>> expect = {
      {0, 1, 2, 3}, {1, 0, 2, 3}, {2, 2, 3, 3}, {3, 3, 3, 3}};
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) CHECK(s.sum(i, j) == expect[i][j]);
  }
  REQUIRE(s.has_labels());
  CHECK((*s.labels())[0] == "u");
  CHECK((*s.labels())[3] == "\xce\xb1");
}

TEST_CASE("ef gadget truncation table") {
  FiniteSemigroup s = generate_family({Family::PaperExampleEfGadget, 3});
  REQUIRE(s.size() == 5);
  // indices: 0 = 1, 1 = 1/2, 2 = 1/3, 3 = e, 4 = f
  std::vector<std::vector<FiniteSemigroup::elem>> expect = {{0, 1, 2, 0, 0},
                                                            {1, 1, 2, 1, 1},
                                                            {2, 2, 2, 2, 2},
                                                            {0, 1, 2, 3, 0},
                                                            {0, 1, 2, 0, 4}};
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = 0; j < 5; ++j) CHECK(s.sum(i, j) == expect[i][j]);
  }
  CHECK(*s.labels() == std::vector<std::string>{"1", "1/2", "1/3", "e", "f"});

  FiniteSemigroup tiny = generate_family({Family::PaperExampleEfGadget, 1});
  CHECK(tiny.size() == 3);
  CHECK(tiny.sum(1, 2) == 0);  // e + f = 1
}

TEST_CASE("two omega truncation") {
  FiniteSemigroup s = generate_family({Family::TwoOmegaTruncation, 2});
  REQUIRE(s.size() == 4);
  // indices 0,1 = 1+1/1, 1+1/2 (meet = smaller index);
  // indices 2,3 = 1-1/1, 1-1/2 (meet = larger index); across, the first block wins
  std::vector<std::vector<FiniteSemigroup::elem>> expect = {
      {0, 0, 0, 0}, {0, 1, 1, 1}, {0, 1, 2, 3}, {0, 1, 3, 3}};
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) CHECK(s.sum(i, j) == expect[i][j]);
  }
  CHECK((*s.labels())[0] == "1+1/1");
  CHECK((*s.labels())[3] == "1-1/2");
  CHECK(is_commutative(s));
}

TEST_CASE("inf addition toy is the three chain with the infinities") {
  FiniteSemigroup s = generate_family({Family::InfAdditionToy});
  REQUIRE(s.size() == 3);
  CHECK(*s.labels() == std::vector<std::string>{"+inf", "-inf", "0"});
  CHECK(s.sum(0, 1) == 0);  // (+inf) + (-inf) = +inf
  CHECK(absorbing_element(s) == std::size_t{0});
}

TEST_CASE("adjoin zero and identity") {
  FiniteSemigroup z = generate_family(parse_generator_spec("adjoin_zero:cyclic:3"));
  CHECK(z.size() == 4);
  CHECK(absorbing_element(z) == std::size_t{3});

  FiniteSemigroup one = generate_family(parse_generator_spec("adjoin_identity:left_zero:2"));
  CHECK(one.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(one.sum(2, i) == i);
    CHECK(one.sum(i, 2) == i);
  }
}

TEST_CASE("generator spec parsing") {
  CHECK(parse_generator_spec("min_chain:3").family == Family::MinChain);
  CHECK(parse_generator_spec("paper_example_bottleneck").family == Family::PaperExampleBottleneck);
  CHECK_THROWS_AS(parse_generator_spec("nope:3"), UnknownFamily);
  CHECK_THROWS_AS(parse_generator_spec("min_chain"), BadParameter);
  CHECK_THROWS_AS(parse_generator_spec("min_chain:x"), BadParameter);
  CHECK_THROWS_AS(parse_generator_spec("paper_example_bottleneck:2"), BadParameter);
  CHECK_THROWS_AS(generate_family({Family::MinChain, 0}), BadParameter);
  CHECK_THROWS_AS(generate_family({Family::AdjoinZero, 0}), BadParameter);
}

TEST_CASE("composition convention: two constant maps close to the left-zero table") {
  // (a+b)(x) = a(b(x)); composing constants c0, c1 gives c0+c1 = c0
  FiniteSemigroup s = transformation_closure(2, {{0, 0}, {1, 1}});
  REQUIRE(s.size() == 2);
  CHECK(s.sum(0, 1) == 0);
  CHECK(s.sum(1, 0) == 1);
  CHECK(s == generate_family({Family::LeftZero, 2}));
}

TEST_CASE("transformation closures") {
  CHECK(random_transformation_semigroup(1, 3, 99).size() == 1);

  FiniteSemigroup s = random_transformation_semigroup(3, 2, 42);
  CHECK_FALSE(idempotents(s).empty());

  // the full cycle, a transposition, and a rank-5 idempotent generate all of
  // T_6, which blows past the closure cap
  CHECK_THROWS_AS(transformation_closure(
                      6, {{1, 2, 3, 4, 5, 0}, {1, 0, 2, 3, 4, 5}, {0, 0, 2, 3, 4, 5}}),
                  SizeExplosion);

  CHECK_THROWS_AS(random_transformation_semigroup(7, 1, 1), BadParameter);
  CHECK_THROWS_AS(random_transformation_semigroup(3, 6, 1), BadParameter);
}

TEST_CASE("enumeration counts for small orders") {
  CHECK(count_semigroups(1) == 1);
  CHECK(count_semigroups(2) == 8);
  CHECK(brute_force_count(2) == 8);
  CHECK(count_semigroups(3) == brute_force_count(3));
  CHECK(count_semigroups(3) == 113);
  CHECK_THROWS_AS(count_semigroups(5), NTooLarge);
  CHECK_THROWS_AS(count_semigroups(0), BadParameter);
}

TEST_CASE("enumeration yields the named family members") {
  FiniteSemigroup left_zero = generate_family({Family::LeftZero, 2});
  bool found = false;
  std::set<std::vector<FiniteSemigroup::elem>> seen;
  for_each_semigroup(2, [&](const FiniteSemigroup& s) {
    CHECK(seen.insert(s.table()).second);  // exactly once
    if (s == left_zero) found = true;
  });
  CHECK(found);
  CHECK(seen.size() == 8);
}
