#include "absorb/report.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

#include "absorb/ideals.hpp"

namespace absorb {

AnalysisReport analyze(const FiniteSemigroup& s, const AnalyzeOptions& options) {
  AnalysisReport rep;
  rep.n = s.size();
  rep.commutative = is_commutative(s);
  rep.absorbing = absorbing_element(s);
  if (!rep.absorbing && s.size() == 1) {
    rep.absorbing_note =
        "singleton semigroup: the unique element is not reported as absorbing "
        "(an absorbing element requires at least two elements)";
  }
  rep.green = green_classes(s);
  rep.quasi = quasi_report(s);

  if (options.with_ideals) {
    try {
      IdealFamily family = IdealFamily::of(s, rep.green);
      rep.ideals_included = true;
      family.for_each([&](const ElemSet& ideal) {
        ++rep.ideal_count;
        if (is_bottleneck(s, rep.green, ideal)) rep.bottlenecks.push_back(ideal);
        if (is_A_minimal(s, rep.green, ideal, rep.quasi.a_w)) rep.quasi_minimal.push_back(ideal);
        return true;
      });
    } catch (const TooManyJClasses& e) {
      rep.ideals_note = e.what();
    }
  }

  if (!rep.commutative) {
    for (std::size_t u = 0; u < s.size(); ++u) {
      if (!is_ideal(s, rep.green.two_sided[u] - rep.green.h_of(u))) {
        rep.w_minus_h_witness = u;
        break;
      }
    }
  }

  if (options.with_suite) {
    rep.suite = verify_theorem_suite(s, options.suite);
  }
  return rep;
}

nlohmann::ordered_json AnalysisReport::to_json(const FiniteSemigroup& s) const {
  nlohmann::ordered_json j;
  j["schema"] = "absorb-lab/1";
  j["n"] = n;
  j["commutative"] = commutative;
  if (s.has_labels()) j["labels"] = *s.labels();
  if (absorbing) {
    j["absorbing"] = s.label(*absorbing);
  } else {
    j["absorbing"] = nullptr;
    if (!absorbing_note.empty()) j["absorbing_note"] = absorbing_note;
  }
  j["green"] = green.to_json();
  j["quasi"] = quasi.to_json(s);

  if (ideals_included) {
    nlohmann::ordered_json ideals;
    ideals["count"] = ideal_count;
    auto labeled = [&](const std::vector<ElemSet>& sets) {
      std::vector<std::vector<std::string>> out;
      for (const auto& x : sets) {
        std::vector<std::string> names;
        x.for_each([&](std::size_t e) { names.push_back(s.label(e)); });
        out.push_back(std::move(names));
      }
      return out;
    };
    ideals["bottlenecks"] = labeled(bottlenecks);
    ideals["quasi_minimal"] = labeled(quasi_minimal);
    j["ideals"] = ideals;
  } else if (!ideals_note.empty()) {
    j["ideals_note"] = ideals_note;
  }

  if (w_minus_h_witness) {
    nlohmann::ordered_json witness;
    witness["e"] = s.label(*w_minus_h_witness);
    std::vector<std::string> names;
    (green.two_sided[*w_minus_h_witness] - green.h_of(*w_minus_h_witness))
        .for_each([&](std::size_t x) { names.push_back(s.label(x)); });
    witness["W(e)\\H(e)"] = names;
    j["w_minus_h_non_ideal_witness"] = witness;
  }

  if (!suite.results.empty()) {
    nlohmann::ordered_json suite_json;
    suite_json["all_pass"] = suite.all_pass();
    std::vector<nlohmann::ordered_json> rows;
    for (const auto& r : suite.results) {
      nlohmann::ordered_json row;
      row["name"] = r.name;
      row["pass"] = r.pass;
      if (!r.pass) row["counterexample"] = r.counterexample;
      rows.push_back(std::move(row));
    }
    suite_json["statements"] = rows;
    j["suite"] = suite_json;
  }
  return j;
}

std::string AnalysisReport::human_text(const FiniteSemigroup& s) const {
  std::ostringstream out;
  out << "n = " << n << (commutative ? ", commutative" : ", non-commutative") << "\n";
  if (absorbing) {
    out << "absorbing element: " << s.label(*absorbing) << "\n";
  } else {
    out << "absorbing element: none";
    if (!absorbing_note.empty()) out << "  (" << absorbing_note << ")";
    out << "\n";
  }
  out << "E(W) count: " << idempotents(s).count() << "\n";
  out << "L/R/H/J classes: " << green.l_members.size() << "/" << green.r_members.size() << "/"
      << green.h_members.size() << "/" << green.j_members.size() << "\n";
  out << "A_s = A_fin = A(W): " << s.label_set(quasi.a_w) << "\n";
  out << "stage order:";
  for (const auto& stage : quasi.stages) {
    for (auto e : stage) out << " " << s.label(e);
  }
  out << "\n";
  out << "E_lin: " << s.label_set(quasi.e_lin) << "\n";
  out << "P(A(W)): " << s.label_set(quasi.primitives_a_w) << "\n";
  if (ideals_included) {
    out << "ideals: " << ideal_count << "\n";
    out << "bottleneck ideals:";
    for (const auto& b : bottlenecks) out << " " << s.label_set(b);
    out << "\n";
    out << "quasi-minimal ideals:";
    for (const auto& d : quasi_minimal) out << " " << s.label_set(d);
    out << "\n";
  } else if (!ideals_note.empty()) {
    out << "ideal census skipped: " << ideals_note << "\n";
  }
  if (w_minus_h_witness) {
    std::size_t e = *w_minus_h_witness;
    out << "non-commutative witness: W(" << s.label(e) << ")\\H(" << s.label(e) << ") = "
        << s.label_set(green.two_sided[e] - green.h_of(e)) << " is not an ideal\n";
  }
  if (!suite.results.empty()) {
    auto fails = suite.failures();
    out << "theorem suite: " << (suite.results.size() - fails.size()) << "/"
        << suite.results.size() << " statements pass\n";
    for (const auto* f : fails) {
      out << "  FAIL " << f->name << ": " << f->counterexample << "\n";
    }
  }
  return out.str();
}

}  // namespace absorb
