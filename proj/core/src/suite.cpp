#include "absorb/suite.hpp"

#include <sstream>
#include <unordered_set>

#include "absorb/ideals.hpp"
#include "absorb/quasi.hpp"

namespace absorb {

namespace {

struct ElemSetHash {
  std::size_t operator()(const ElemSet& s) const { return s.hash(); }
};

struct IdealCollection {
  std::vector<ElemSet> ideals;
  bool complete = false;  // true when this is the whole ideal lattice
};

IdealCollection collect_ideals(const FiniteSemigroup& s, const GreenSummary& g, const ElemSet& aw,
                               std::size_t budget) {
  IdealCollection out;
  bool overflowed = false;
  try {
    IdealFamily family = IdealFamily::of(s, g);
    family.for_each([&](const ElemSet& x) {
      if (out.ideals.size() >= budget) {
        overflowed = true;
        return false;
      }
      out.ideals.push_back(x);
      return true;
    });
    out.complete = !overflowed;
  } catch (const TooManyJClasses&) {
    overflowed = true;
  }
  if (overflowed) {
    out.complete = false;
    std::unordered_set<ElemSet, ElemSetHash> seen(out.ideals.begin(), out.ideals.end());
    auto put = [&](const ElemSet& x) {
      if (seen.insert(x).second) out.ideals.push_back(x);
    };
    put(s.empty_set());
    put(s.full_set());
    put(aw);
    for (std::size_t u = 0; u < s.size(); ++u) put(g.two_sided[u]);
  }
  return out;
}

class Runner {
 public:
  explicit Runner(SuiteReport& report) : report_(report) {}

  // Runs one statement: check() returns an empty string when the statement
  // holds and a counterexample description otherwise.
  template <typename F>
  void statement(const std::string& name, F&& check) {
    report_.results.push_back({name, true, {}});
    std::string cx = check();
    if (!cx.empty()) {
      report_.results.back().pass = false;
      report_.results.back().counterexample = cx;
    }
  }

 private:
  SuiteReport& report_;
};

std::string set_str(const FiniteSemigroup& s, const ElemSet& x) { return s.label_set(x); }

}  // namespace

SuiteReport verify_theorem_suite(const FiniteSemigroup& s, const SuiteOptions& options,
                                 const std::string& context) {
  SuiteReport report;
  report.context = context;
  Runner run(report);

  const std::size_t n = s.size();
  const GreenSummary g = green_classes(s);
  const bool commutative = is_commutative(s);
  const ElemSet idems = idempotents(s);
  const std::vector<std::size_t> idem_list = idems.elements();

  const StepwiseResult stepwise = stepwise_quasi_absorbing(s);
  const ElemSet afin = a_fin(s);
  const ElemSet aw = a_w(s);

  IdealCollection coll = collect_ideals(s, g, aw, options.ideal_budget);
  const std::vector<ElemSet>& ideal_list = coll.ideals;

  // Cached E<=(e) for the idempotents.
  std::vector<ElemSet> below(n, ElemSet(n));
  for (std::size_t e : idem_list) below[e] = e_below(s, e);

  auto rees = [&](std::size_t e, std::size_t f) { return s.sum(e, f) == e && s.sum(f, e) == e; };

  if (options.green) {
    run.statement("green/principal_membership_iff_containment", [&]() -> std::string {
      for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = 0; v < n; ++v) {
          if (g.left_ideal[u].contains(v) != g.left_ideal[v].is_subset_of(g.left_ideal[u]))
            return "L relation at u=" + s.label(u) + " v=" + s.label(v);
          if (g.right_ideal[u].contains(v) != g.right_ideal[v].is_subset_of(g.right_ideal[u]))
            return "R relation at u=" + s.label(u) + " v=" + s.label(v);
          if (g.two_sided[u].contains(v) != g.two_sided[v].is_subset_of(g.two_sided[u]))
            return "J relation at u=" + s.label(u) + " v=" + s.label(v);
        }
      }
      return {};
    });

    run.statement("green/one_sided_ideal_class_chain", [&]() -> std::string {
      // left ideals: every principal left ideal plus every two-sided ideal
      auto check_left = [&](const ElemSet& a) -> std::string {
        for (std::size_t u = 0; u < n; ++u) {
          if (a.contains(u)) continue;
          ElemSet wl_minus = g.left_ideal[u] - a;
          ElemSet w_minus = g.two_sided[u] - a;
          if (!g.h_of(u).is_subset_of(g.l_of(u)) || !g.l_of(u).is_subset_of(wl_minus) ||
              !wl_minus.is_subset_of(w_minus)) {
            return "left ideal A=" + set_str(s, a) + " u=" + s.label(u);
          }
        }
        return {};
      };
      auto check_right = [&](const ElemSet& a) -> std::string {
        for (std::size_t u = 0; u < n; ++u) {
          if (a.contains(u)) continue;
          ElemSet wr_minus = g.right_ideal[u] - a;
          ElemSet w_minus = g.two_sided[u] - a;
          if (!g.h_of(u).is_subset_of(g.r_of(u)) || !g.r_of(u).is_subset_of(wr_minus) ||
              !wr_minus.is_subset_of(w_minus)) {
            return "right ideal A=" + set_str(s, a) + " u=" + s.label(u);
          }
        }
        return {};
      };
      for (std::size_t x = 0; x < n; ++x) {
        if (auto cx = check_left(g.left_ideal[x]); !cx.empty()) return cx;
        if (auto cx = check_right(g.right_ideal[x]); !cx.empty()) return cx;
      }
      for (const ElemSet& a : ideal_list) {
        if (auto cx = check_left(a); !cx.empty()) return cx;
        if (auto cx = check_right(a); !cx.empty()) return cx;
      }
      return {};
    });

    run.statement("green/idempotent_principal_forms", [&]() -> std::string {
      for (std::size_t e : idem_list) {
        ElemSet we(n);
        ElemSet ew(n);
        for (std::size_t w = 0; w < n; ++w) {
          we.add(s.sum(w, e));
          ew.add(s.sum(e, w));
        }
        if (g.left_ideal[e] != we) return "W_L(e) != W+{e} at e=" + s.label(e);
        if (g.right_ideal[e] != ew) return "W_R(e) != {e}+W at e=" + s.label(e);
        for (std::size_t u = 0; u < n; ++u) {
          if (g.left_ideal[e].contains(u) != (s.sum(u, e) == u))
            return "u in W_L(e) iff u+e=u fails at e=" + s.label(e) + " u=" + s.label(u);
          if (g.right_ideal[e].contains(u) != (s.sum(e, u) == u))
            return "u in W_R(e) iff e+u=u fails at e=" + s.label(e) + " u=" + s.label(u);
        }
        ElemSet sum(n);
        g.left_ideal[e].for_each([&](std::size_t a) {
          g.right_ideal[e].for_each([&](std::size_t b) { sum.add(s.sum(a, b)); });
        });
        if (g.two_sided[e] != sum) return "W(e) != W_L(e)+W_R(e) at e=" + s.label(e);
      }
      return {};
    });

    run.statement("green/two_sided_dual_formula", [&]() -> std::string {
      for (std::size_t u = 0; u < n; ++u) {
        ElemSet rhs = g.right_ideal[u];
        g.right_ideal[u].for_each([&](std::size_t v) {
          for (std::size_t w = 0; w < n; ++w) rhs.add(s.sum(w, v));
        });
        if (g.two_sided[u] != rhs) return "u=" + s.label(u);
      }
      return {};
    });

    run.statement("green/wl_minus_l_is_one_sided_ideal", [&]() -> std::string {
      for (std::size_t u = 0; u < n; ++u) {
        if (!is_left_ideal(s, g.left_ideal[u] - g.l_of(u)))
          return "W_L(u)\\L(u) not a left ideal at u=" + s.label(u);
        if (!is_right_ideal(s, g.right_ideal[u] - g.r_of(u)))
          return "W_R(u)\\R(u) not a right ideal at u=" + s.label(u);
      }
      return {};
    });

    if (commutative) {
      run.statement("green/w_minus_h_is_ideal_commutative", [&]() -> std::string {
        for (std::size_t u = 0; u < n; ++u) {
          if (!is_ideal(s, g.two_sided[u] - g.h_of(u))) return "u=" + s.label(u);
        }
        return {};
      });
    }

    run.statement("green/h_equals_w_minus_a_iff_group", [&]() -> std::string {
      for (const ElemSet& a : ideal_list) {
        for (std::size_t e : idem_list) {
          if (a.contains(e)) continue;
          HTheoremVerdict v = h_theorem_verdict(s, g, e, a);
          if (v.h_eq_we_minus_a != v.group) {
            return "A=" + set_str(s, a) + " e=" + s.label(e) + " H-eq=" +
                   std::to_string(v.h_eq_we_minus_a) + " group=" + std::to_string(v.group);
          }
        }
      }
      return {};
    });
  }

  if (options.quasi) {
    run.statement("quasi/rees_is_partial_order", [&]() -> std::string {
      for (std::size_t e : idem_list) {
        if (!rees(e, e)) return "not reflexive at e=" + s.label(e);
        for (std::size_t f : idem_list) {
          if (rees(e, f) && rees(f, e) && e != f)
            return "not antisymmetric at e=" + s.label(e) + " f=" + s.label(f);
          for (std::size_t h : idem_list) {
            if (rees(e, f) && rees(f, h) && !rees(e, h))
              return "not transitive at e=" + s.label(e) + " f=" + s.label(f) + " h=" + s.label(h);
          }
        }
      }
      return {};
    });

    run.statement("quasi/stepwise_equals_afin_equals_aw", [&]() -> std::string {
      if (stepwise.set != afin)
        return "A_s=" + set_str(s, stepwise.set) + " A_fin=" + set_str(s, afin);
      if (afin != aw) return "A_fin=" + set_str(s, afin) + " A=" + set_str(s, aw);
      return {};
    });

    run.statement("quasi/stages_are_singletons", [&]() -> std::string {
      for (std::size_t i = 0; i < stepwise.stages.size(); ++i) {
        if (stepwise.stages[i].size() != 1)
          return "stage " + std::to_string(i + 1) + " has " +
                 std::to_string(stepwise.stages[i].size()) + " elements";
      }
      return {};
    });

    run.statement("quasi/aw_pairwise_absorption", [&]() -> std::string {
      std::string cx;
      aw.for_each([&](std::size_t a) {
        aw.for_each([&](std::size_t b) {
          if (!cx.empty()) return;
          std::size_t ab = s.sum(a, b);
          if (ab != s.sum(b, a) || (ab != a && ab != b))
            cx = "a=" + s.label(a) + " b=" + s.label(b);
        });
      });
      return cx;
    });

    run.statement("quasi/aw_is_ideal_of_idempotents", [&]() -> std::string {
      if (!aw.is_subset_of(idems)) return "A(W) contains a non-idempotent";
      if (!is_ideal(s, aw)) return "A(W)=" + set_str(s, aw) + " is not an ideal";
      return {};
    });

    run.statement("quasi/aw_within_all_principal_ideals", [&]() -> std::string {
      for (std::size_t u = 0; u < n; ++u) {
        if (aw.contains(u)) continue;
        if (!aw.is_subset_of(g.left_ideal[u]) || !aw.is_subset_of(g.right_ideal[u]))
          return "u=" + s.label(u);
      }
      return {};
    });

    run.statement("quasi/afin_downward_characterization", [&]() -> std::string {
      for (std::size_t beta = 0; beta < n; ++beta) {
        bool rhs = false;
        afin.for_each([&](std::size_t alpha) {
          if (!rhs && below[alpha].contains(beta)) rhs = true;
        });
        if (afin.contains(beta) != rhs) return "beta=" + s.label(beta);
      }
      return {};
    });

    run.statement("quasi/primitive_h_formula", [&]() -> std::string {
      for (const ElemSet& a : ideal_list) {
        ElemSet p = primitives(s, a);
        ElemSet excluded(n);
        p.for_each([&](std::size_t f) {
          excluded |= (g.left_ideal[f] & g.right_ideal[f]) - g.h_of(f);
        });
        std::string cx;
        p.for_each([&](std::size_t e) {
          if (!cx.empty()) return;
          ElemSet expect = (g.left_ideal[e] & g.right_ideal[e]) - excluded;
          if (g.h_of(e) != expect) cx = "A=" + set_str(s, a) + " e=" + s.label(e);
        });
        if (!cx.empty()) return cx;
      }
      return {};
    });

    if (commutative) {
      run.statement("quasi/primitive_h_formula_commutative", [&]() -> std::string {
        for (const ElemSet& a : ideal_list) {
          ElemSet p = primitives(s, a);
          ElemSet excluded(n);
          p.for_each([&](std::size_t f) { excluded |= g.two_sided[f] - g.h_of(f); });
          std::string cx;
          p.for_each([&](std::size_t e) {
            if (!cx.empty()) return;
            if (g.h_of(e) != g.two_sided[e] - excluded)
              cx = "A=" + set_str(s, a) + " e=" + s.label(e);
          });
          if (!cx.empty()) return cx;
        }
        return {};
      });

      run.statement("quasi/primitive_union_is_ideal_commutative", [&]() -> std::string {
        for (const ElemSet& a : ideal_list) {
          ElemSet p = primitives(s, a);
          ElemSet un(n);
          p.for_each([&](std::size_t f) { un |= g.two_sided[f] - g.h_of(f); });
          if (!is_ideal(s, un)) return "A=" + set_str(s, a) + " union=" + set_str(s, un);
        }
        return {};
      });

      run.statement("quasi/idempotents_form_subsemigroup_commutative", [&]() -> std::string {
        for (std::size_t e : idem_list) {
          for (std::size_t f : idem_list) {
            std::size_t ef = s.sum(e, f);
            if (s.sum(ef, ef) != ef) return "e=" + s.label(e) + " f=" + s.label(f);
          }
        }
        return {};
      });
    }

    run.statement("quasi/idempotents_nonempty", [&]() -> std::string {
      return idems.empty() ? "E(W) is empty" : "";
    });

    run.statement("quasi/e_below_of_quasi_absorbing_is_bottleneck", [&]() -> std::string {
      std::string cx;
      aw.for_each([&](std::size_t a) {
        if (!cx.empty()) return;
        if (!is_ideal(s, below[a]))
          cx = "E<=(a) not an ideal at a=" + s.label(a);
        else if (!is_bottleneck(s, g, below[a]))
          cx = "E<=(a) not bottleneck at a=" + s.label(a);
      });
      return cx;
    });
  }

  if (options.ideals) {
    run.statement("ideals/aw_and_as_are_bottleneck", [&]() -> std::string {
      if (!is_bottleneck(s, g, aw)) return "A(W)=" + set_str(s, aw);
      if (!is_bottleneck(s, g, stepwise.set)) return "A_s=" + set_str(s, stepwise.set);
      return {};
    });

    run.statement("ideals/bottleneck_implies_strictly_inside_principals", [&]() -> std::string {
      for (const ElemSet& a : ideal_list) {
        if (!is_bottleneck(s, g, a)) continue;
        for (std::size_t e : idem_list) {
          if (a.contains(e)) continue;
          if (!a.is_subset_of(g.two_sided[e]) || a == g.two_sided[e])
            return "A=" + set_str(s, a) + " e=" + s.label(e);
        }
      }
      return {};
    });

    if (coll.complete && ideal_list.size() <= 128) {
      IdealFamily family = IdealFamily::of(s, g);

      run.statement("ideals/fast_brute_agreement", [&]() -> std::string {
        for (const ElemSet& a : ideal_list) {
          if (is_bottleneck(s, g, a) != is_bottleneck_brute(s, family, a))
            return "bottleneck disagrees at A=" + set_str(s, a);
          if (a != s.full_set() &&
              is_A_simple(s, g, a) != is_A_simple_brute(s, family, a))
            return "A-simple disagrees at A=" + set_str(s, a);
          for (const ElemSet& d : ideal_list) {
            if (is_A_minimal(s, g, d, a) != is_A_minimal_brute(s, family, d, a))
              return "A-minimal disagrees at D=" + set_str(s, d) + " A=" + set_str(s, a);
          }
        }
        return {};
      });

      run.statement("ideals/abrhan_one_directional", [&]() -> std::string {
        for (const ElemSet& a : ideal_list) {
          if (a == s.full_set()) continue;
          ElemSet b = a.complement();
          for (const ElemSet& d : ideal_list) {
            if (is_A_minimal(s, g, d, a) && !is_abrhan_minimal(s, family, d, b))
              return "D=" + set_str(s, d) + " A=" + set_str(s, a);
          }
        }
        return {};
      });

      run.statement("ideals/abrhan_equivalence_under_bottleneck", [&]() -> std::string {
        for (const ElemSet& a : ideal_list) {
          if (a == s.full_set() || !is_bottleneck(s, g, a)) continue;
          ElemSet b = a.complement();
          for (const ElemSet& d : ideal_list) {
            if (is_A_minimal(s, g, d, a) != is_abrhan_minimal(s, family, d, b))
              return "D=" + set_str(s, d) + " A=" + set_str(s, a);
          }
        }
        return {};
      });

      run.statement("ideals/subsemigroup_simplicity_implies_minimality", [&]() -> std::string {
        for (const ElemSet& a : ideal_list) {
          for (const ElemSet& d : ideal_list) {
            ElemSet meet = a & d;
            if (meet == d || d.empty()) continue;  // need A n D strictly inside D
            auto [sub, to_old] = subsemigroup(s, d);
            ElemSet sub_a(sub.size());
            for (std::size_t i = 0; i < to_old.size(); ++i) {
              if (meet.contains(to_old[i])) sub_a.add(i);
            }
            GreenSummary sub_g = green_classes(sub);
            if (is_A_simple(sub, sub_g, sub_a) && !is_A_minimal(s, g, d, a))
              return "D=" + set_str(s, d) + " A=" + set_str(s, a);
          }
        }
        return {};
      });
    }

    if (commutative) {
      run.statement("ideals/four_equivalences_commutative", [&]() -> std::string {
        for (const ElemSet& a : ideal_list) {
          for (std::size_t e : idem_list) {
            if (a.contains(e)) continue;
            ElemSet we = g.two_sided[e];
            ElemSet candidate = we - a;
            bool b1 = g.h_of(e) == candidate;
            bool b2 = is_group(s, candidate);
            bool b3 = is_A_minimal(s, g, we, a);
            auto [sub, to_old] = subsemigroup(s, we);
            ElemSet sub_a(sub.size());
            for (std::size_t i = 0; i < to_old.size(); ++i) {
              if (a.contains(to_old[i])) sub_a.add(i);
            }
            bool b4 = is_A_simple(sub, green_classes(sub), sub_a);
            if (b1 != b2 || b2 != b3 || b3 != b4) {
              std::ostringstream cx;
              cx << "A=" << set_str(s, a) << " e=" << s.label(e) << " (" << b1 << "," << b2
                 << "," << b3 << "," << b4 << ")";
              return cx.str();
            }
          }
        }
        return {};
      });

      run.statement("ideals/group_iff_trace_condition_commutative", [&]() -> std::string {
        for (const ElemSet& a : ideal_list) {
          ElemSet p = primitives(s, a);
          ElemSet un(n);
          p.for_each([&](std::size_t f) { un |= g.two_sided[f] - g.h_of(f); });
          std::string cx;
          p.for_each([&](std::size_t e) {
            if (!cx.empty()) return;
            bool grp = is_group(s, g.two_sided[e] - a);
            bool trace = (g.two_sided[e] & a) == (g.two_sided[e] & un);
            if (grp != trace) cx = "A=" + set_str(s, a) + " e=" + s.label(e);
          });
          if (!cx.empty()) return cx;
        }
        return {};
      });
    }
  }

  return report;
}

}  // namespace absorb
