#include "doctest.h"

#include "absorb/generators.hpp"
#include "absorb/quasi.hpp"
#include "absorb/suite.hpp"

#include <nlohmann/json.hpp>

using namespace absorb;

namespace {

FiniteSemigroup antichain_with_top() {
  // meet semilattice on {bot, a, b, top}: a ^ b = bot, top above everything
  return FiniteSemigroup::validate({{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 0, 2, 2}, {0, 1, 2, 3}});
}

}  // namespace

TEST_CASE("rees order basics") {
  FiniteSemigroup chain = generate_family({Family::MinChain, 3});
  CHECK(rees_leq(chain, 1, 1));
  CHECK(rees_leq(chain, 0, 2));
  CHECK_FALSE(rees_leq(chain, 2, 0));

  FiniteSemigroup cyc = generate_family({Family::Cyclic, 4});
  CHECK_THROWS_AS(rees_leq(cyc, 1, 0), NotIdempotent);
}

TEST_CASE("e_below on worked instances") {
  FiniteSemigroup bn = generate_family({Family::PaperExampleBottleneck});
  CHECK(e_below(bn, 3) == ElemSet::of(4, {3}));
  CHECK(e_below(bn, 0) == ElemSet::of(4, {0, 3}));

  FiniteSemigroup chain = generate_family({Family::MinChain, 3});
  CHECK(e_below(chain, 1) == ElemSet::of(3, {0, 1}));
}

TEST_CASE("e_lin separates chains from antichains") {
  FiniteSemigroup anti = antichain_with_top();
  ElemSet lin = e_lin(anti);
  CHECK(lin.contains(0));
  CHECK(lin.contains(1));
  CHECK(lin.contains(2));
  CHECK_FALSE(lin.contains(3));  // below the top, a and b are incomparable

  FiniteSemigroup lz = generate_family({Family::PaperExampleLeftZero});
  CHECK(e_lin(lz) == ElemSet::full(2));  // E<=(e) = {e} on both sides
}

TEST_CASE("stepwise removal on worked instances") {
  FiniteSemigroup cyc = generate_family({Family::Cyclic, 4});
  auto none = stepwise_quasi_absorbing(cyc);
  CHECK(none.set.empty());
  CHECK(none.stages.empty());

  FiniteSemigroup chain = generate_family({Family::MinChain, 3});
  auto chain_res = stepwise_quasi_absorbing(chain);
  CHECK(chain_res.stages == std::vector<std::vector<std::uint32_t>>{{0}, {1}, {2}});
  CHECK(chain_res.set == ElemSet::full(3));

  // ef gadget: the D part is removed bottom-up, then e and f block each other
  FiniteSemigroup ef = generate_family({Family::PaperExampleEfGadget, 3});
  auto ef_res = stepwise_quasi_absorbing(ef);
  CHECK(ef_res.stages == std::vector<std::vector<std::uint32_t>>{{2}, {1}, {0}});
  CHECK(ef_res.set == ElemSet::of(5, {0, 1, 2}));

  FiniteSemigroup toy = generate_family({Family::InfAdditionToy});
  auto toy_res = stepwise_quasi_absorbing(toy);
  CHECK(toy_res.stages == std::vector<std::vector<std::uint32_t>>{{0}, {1}, {2}});
}

TEST_CASE("the three quasi-absorbing definitions coincide on finite tables") {
  for (const char* spec :
       {"min_chain:4", "max_chain:3", "cyclic:5", "left_zero:3", "paper_example_bottleneck",
        "paper_example_ef_gadget:3", "two_omega_truncation:3", "inf_addition_toy"}) {
    FiniteSemigroup s = generate_family(parse_generator_spec(spec));
    CAPTURE(spec);
    ElemSet fin = a_fin(s);
    CHECK(fin == a_w(s));
    CHECK(fin == stepwise_quasi_absorbing(s).set);
  }
}

TEST_CASE("bottleneck example quasi-absorbing set") {
  FiniteSemigroup bn = generate_family({Family::PaperExampleBottleneck});
  CHECK(a_w(bn) == ElemSet::of(4, {3}));  // A(W) = {alpha}
}

TEST_CASE("primitives on worked instances") {
  FiniteSemigroup chain = generate_family({Family::MinChain, 3});
  CHECK(primitives(chain, ElemSet::of(3, {0})) == ElemSet::of(3, {1}));

  FiniteSemigroup ef = generate_family({Family::PaperExampleEfGadget, 3});
  ElemSet d_part = ElemSet::of(5, {0, 1, 2});
  CHECK(a_w(ef) == d_part);
  CHECK(primitives(ef, d_part) == ElemSet::of(5, {3, 4}));  // P(A(W)) = {e, f}

  CHECK_THROWS_AS(primitives(ef, ElemSet::of(5, {1})), NotAnIdeal);
}

TEST_CASE("quasi report JSON uses labels") {
  FiniteSemigroup bn = generate_family({Family::PaperExampleBottleneck});
  nlohmann::json j = quasi_report(bn).to_json(bn);
  CHECK(j["A"] == nlohmann::json::array({"\xce\xb1"}));
  CHECK(j["A_s"] == j["A_fin"]);
  CHECK(j.contains("stages"));
  CHECK(j["primitives"].contains("A(W)"));
  // u is primitive over A(W) = {alpha}
  CHECK(j["primitives"]["A(W)"] == nlohmann::json::array({"u"}));
}

TEST_CASE("theorem suite passes on the generator families") {
  for (const char* spec :
       {"min_chain:4", "cyclic:6", "left_zero:3", "right_zero:2", "paper_example_bottleneck",
        "paper_example_ef_gadget:4", "two_omega_truncation:2", "inf_addition_toy"}) {
    FiniteSemigroup s = generate_family(parse_generator_spec(spec));
    SuiteReport rep = verify_theorem_suite(s, {}, spec);
    CAPTURE(spec);
    for (const auto& r : rep.results) {
      CAPTURE(r.name);
      CAPTURE(r.counterexample);
      CHECK(r.pass);
    }
  }
}

TEST_CASE("theorem suite passes on the order-2 and order-3 enumerations") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for_each_semigroup(n, [&](const FiniteSemigroup& s) {
      SuiteReport rep = verify_theorem_suite(s);
      if (!rep.all_pass()) {
        for (const auto* f : rep.failures()) {
          CAPTURE(f->name);
          CAPTURE(f->counterexample);
          CHECK(false);
        }
      }
    });
  }
}
