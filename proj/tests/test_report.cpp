#include "doctest.h"

#include "absorb/generators.hpp"
#include "absorb/report.hpp"

#include <nlohmann/json.hpp>

using namespace absorb;

TEST_CASE("analysis report for the bottleneck table") {
  FiniteSemigroup s = generate_family({Family::PaperExampleBottleneck});
  AnalysisReport rep = analyze(s);
  nlohmann::json j = rep.to_json(s);
  CHECK(j["schema"] == "absorb-lab/1");
  CHECK(j["commutative"] == true);
  CHECK(j["quasi"]["A"] == nlohmann::json::array({"\xce\xb1"}));
  // the bottleneck census includes {w, alpha}
  bool found = false;
  for (const auto& b : j["ideals"]["bottlenecks"]) {
    if (b == nlohmann::json::array({"w", "\xce\xb1"})) found = true;
  }
  CHECK(found);
  CHECK(j["suite"]["all_pass"] == true);

  // byte-stable across runs
  AnalysisReport rep2 = analyze(s);
  CHECK(rep.to_json(s).dump() == rep2.to_json(s).dump());
}

TEST_CASE("analysis report flags the non-commutative witness") {
  FiniteSemigroup s = generate_family({Family::PaperExampleLeftZero});
  AnalysisReport rep = analyze(s);
  CHECK_FALSE(rep.commutative);
  REQUIRE(rep.w_minus_h_witness.has_value());
  nlohmann::json j = rep.to_json(s);
  CHECK(j.contains("w_minus_h_non_ideal_witness"));
  CHECK(j["suite"]["all_pass"] == true);
}

TEST_CASE("singleton report carries the absorbing-element note") {
  FiniteSemigroup s = FiniteSemigroup::validate({{0}});
  AnalysisReport rep = analyze(s);
  CHECK_FALSE(rep.absorbing.has_value());
  CHECK_FALSE(rep.absorbing_note.empty());
  nlohmann::json j = rep.to_json(s);
  CHECK(j["absorbing"].is_null());
}

TEST_CASE("report options prune work") {
  FiniteSemigroup s = generate_family({Family::MinChain, 4});
  AnalyzeOptions opts;
  opts.with_ideals = false;
  opts.with_suite = false;
  AnalysisReport rep = analyze(s, opts);
  CHECK_FALSE(rep.ideals_included);
  CHECK(rep.suite.results.empty());
  CHECK_FALSE(rep.human_text(s).empty());
}
