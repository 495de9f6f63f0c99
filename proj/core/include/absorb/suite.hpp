#pragma once

#include <string>
#include <vector>

#include "absorb/semigroup.hpp"

namespace absorb {

struct StatementResult {
  std::string name;
  bool pass;
  std::string counterexample;  // empty when the statement holds
};

struct SuiteReport {
  std::string context;  // what was analyzed, for failure messages
  std::vector<StatementResult> results;

  bool all_pass() const {
    for (const auto& r : results) {
      if (!r.pass) return false;
    }
    return true;
  }
  std::vector<const StatementResult*> failures() const {
    std::vector<const StatementResult*> out;
    for (const auto& r : results) {
      if (!r.pass) out.push_back(&r);
    }
    return out;
  }
};

struct SuiteOptions {
  bool green = true;
  bool quasi = true;
  bool ideals = true;
  /// Quantifiers over "all ideals" use at most this many ideals. Small
  /// inputs are always covered exhaustively (16 ideals at order 4); large
  /// random inputs fall back to a deterministic sample that always includes
  /// the empty set, W, A(W), and every principal two-sided ideal.
  std::size_t ideal_budget = 4096;
};

/// Runs every statement of the verification suite that applies to s and
/// reports one pass/fail entry per statement, with a counterexample payload
/// on failure. A failure on any corpus input is a bug, either in the
/// analyzer or in the input's construction.
SuiteReport verify_theorem_suite(const FiniteSemigroup& s, const SuiteOptions& options = {},
                                 const std::string& context = "");

}  // namespace absorb
