#pragma once

#include <optional>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "absorb/quasi.hpp"
#include "absorb/suite.hpp"

namespace absorb {

/// Everything the analyze command knows about one semigroup. The JSON form
/// is schema-versioned ("absorb-lab/1") with a fixed field order, so equal
/// inputs produce byte-equal reports.
struct AnalysisReport {
  std::size_t n = 0;
  bool commutative = false;
  /// Index of the absorbing element. A singleton semigroup reports none:
  /// the convention requires at least two elements, and the report carries
  /// a note instead of silently deciding.
  std::optional<std::size_t> absorbing;
  std::string absorbing_note;

  GreenSummary green;
  QuasiReport quasi;

  bool ideals_included = false;
  std::size_t ideal_count = 0;
  std::vector<ElemSet> bottlenecks;
  std::vector<ElemSet> quasi_minimal;  // A(W)-minimal ideals
  std::string ideals_note;             // set when the census was skipped

  /// For non-commutative inputs: an element e whose W(e)\H(e) fails to be
  /// an ideal, when one exists.
  std::optional<std::size_t> w_minus_h_witness;

  SuiteReport suite;

  nlohmann::ordered_json to_json(const FiniteSemigroup& s) const;
  std::string human_text(const FiniteSemigroup& s) const;
};

struct AnalyzeOptions {
  bool with_ideals = true;
  bool with_suite = true;
  SuiteOptions suite;
};

AnalysisReport analyze(const FiniteSemigroup& s, const AnalyzeOptions& options = {});

}  // namespace absorb
