// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failed criteria. Every tolerance and corpus is pinned here.

#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "absorb/chains.hpp"
#include "absorb/generators.hpp"
#include "absorb/ideals.hpp"
#include "absorb/parallel.hpp"
#include "absorb/quasi.hpp"
#include "absorb/setopt.hpp"
#include "absorb/suite.hpp"
#include "absorb/table_io.hpp"

using namespace absorb;

namespace {

using Clock = std::chrono::steady_clock;

int failures = 0;

void run_criterion(int number, const std::string& title, double budget_seconds,
                   const std::function<std::optional<std::string>()>& body) {
  auto start = Clock::now();
  std::optional<std::string> failure;
  try {
    failure = body();
  } catch (const std::exception& e) {
    failure = std::string("exception: ") + e.what();
  }
  double seconds = std::chrono::duration<double>(Clock::now() - start).count();
  if (!failure && budget_seconds > 0 && seconds > budget_seconds) {
    std::ostringstream msg;
    msg << "runtime " << seconds << " s exceeds the " << budget_seconds << " s budget";
    failure = msg.str();
  }
  if (failure) {
    ++failures;
    std::printf("FAIL criterion %d: %s (%.1f s) -- %s\n", number, title.c_str(), seconds,
                failure->c_str());
  } else {
    std::printf("PASS criterion %d: %s (%.1f s)\n", number, title.c_str(), seconds);
  }
  std::fflush(stdout);
}

// ---- criterion 1 ------------------------------------------------------

// Oracle for n <= 3: scan every n^(n*n) table.
std::size_t brute_force_count(std::size_t n) {
  std::size_t cells = n * n, total = 1;
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

std::optional<std::string> criterion_counts() {
  const std::size_t expected[] = {1, 8, 113, 3492};
  for (std::size_t n = 1; n <= 4; ++n) {
    std::size_t got = count_semigroups(n);
    if (got != expected[n - 1]) {
      return "row-major count(" + std::to_string(n) + ") = " + std::to_string(got);
    }
    if (n <= 3 && brute_force_count(n) != expected[n - 1]) {
      return "brute-force oracle disagrees at n = " + std::to_string(n);
    }
  }
  // independent cell order: column-major
  std::vector<std::pair<std::size_t, std::size_t>> order;
  for (std::size_t c = 0; c < 4; ++c) {
    for (std::size_t r = 0; r < 4; ++r) order.emplace_back(r, c);
  }
  std::size_t col_major = 0;
  for_each_semigroup_order(4, order, [&](const FiniteSemigroup&) { ++col_major; });
  if (col_major != 3492) return "column-major count(4) = " + std::to_string(col_major);
  return std::nullopt;
}

// ---- criterion 2 ------------------------------------------------------

std::vector<std::string> family_corpus() {
  std::vector<std::string> specs = {"paper_example_left_zero",
                                    "paper_example_bottleneck",
                                    "inf_addition_toy",
                                    "adjoin_zero:cyclic:4",
                                    "adjoin_identity:left_zero:2",
                                    "adjoin_zero:paper_example_left_zero",
                                    "adjoin_identity:min_chain:3"};
  for (int n = 1; n <= 4; ++n) {
    specs.push_back("left_zero:" + std::to_string(n));
    specs.push_back("right_zero:" + std::to_string(n));
    specs.push_back("two_omega_truncation:" + std::to_string(n));
  }
  for (int n = 1; n <= 6; ++n) {
    specs.push_back("min_chain:" + std::to_string(n));
    specs.push_back("max_chain:" + std::to_string(n));
    specs.push_back("paper_example_ef_gadget:" + std::to_string(n));
  }
  for (int n = 1; n <= 8; ++n) specs.push_back("cyclic:" + std::to_string(n));
  return specs;
}

std::optional<std::string> criterion_theorem_suite() {
  std::optional<std::string> failure;
  std::mutex failure_mutex;
  auto record = [&](const std::string& context, const SuiteReport& rep) {
    if (rep.all_pass()) return;
    std::lock_guard<std::mutex> lock(failure_mutex);
    if (!failure) {
      const StatementResult* f = rep.failures().front();
      failure = context + ": " + f->name + " [" + f->counterexample + "]";
    }
  };

  // every enumerated table of order <= 4, ideals and idempotents exhaustive
  for (std::size_t n = 1; n <= 4; ++n) {
    std::vector<FiniteSemigroup> tables;
    for_each_semigroup(n, [&](const FiniteSemigroup& s) { tables.push_back(s); });
    std::atomic<bool> stop{false};
    parallel_for(tables.size(), [&](std::size_t i) {
      if (stop.load()) return;
      SuiteReport rep = verify_theorem_suite(tables[i]);
      if (!rep.all_pass()) {
        record("order-" + std::to_string(n) + " table #" + std::to_string(i), rep);
        stop.store(true);
      }
    });
    if (failure) return failure;
  }

  // 1000 seeded random transformation semigroups, degree <= 4
  SuiteOptions random_options;
  random_options.ideal_budget = 256;
  std::atomic<bool> stop{false};
  parallel_for(1000, [&](std::size_t i) {
    if (stop.load()) return;
    std::uint64_t seed = i + 1;
    std::size_t degree = 2 + (i % 3);
    std::size_t gens = 1 + (i % 3);
    FiniteSemigroup s = random_transformation_semigroup(degree, gens, seed);
    SuiteReport rep = verify_theorem_suite(s, random_options);
    if (!rep.all_pass()) {
      record("trans(degree=" + std::to_string(degree) + ",gens=" + std::to_string(gens) +
                 ",seed=" + std::to_string(seed) + ")",
             rep);
      stop.store(true);
    }
  });
  if (failure) return failure;

  for (const std::string& spec : family_corpus()) {
    SuiteReport rep = verify_theorem_suite(generate_family(parse_generator_spec(spec)));
    record(spec, rep);
    if (failure) return failure;
  }
  return failure;
}

// ---- criterion 3 ------------------------------------------------------

std::optional<std::string> criterion_paper_examples() {
  // left-zero: W_L(x) = W(x) = W, W_R(x) = H(x) = {x}, W(e)\H(e) not an ideal
  FiniteSemigroup lz = generate_family({Family::PaperExampleLeftZero});
  GreenSummary g = green_classes(lz);
  for (std::size_t x = 0; x < 2; ++x) {
    if (g.left_ideal[x] != lz.full_set() || g.two_sided[x] != lz.full_set())
      return "left-zero principal left/two-sided ideals";
    if (g.right_ideal[x] != ElemSet::of(2, {x}) || g.h_of(x) != ElemSet::of(2, {x}))
      return "left-zero W_R/H";
  }
  if (is_ideal(lz, g.two_sided[0] - g.h_of(0))) return "W(e)\\H(e) unexpectedly an ideal";

  // bottleneck table: A(W) = {alpha}, {w, alpha} is a bottleneck ideal
  FiniteSemigroup bn = generate_family({Family::PaperExampleBottleneck});
  if (a_w(bn) != ElemSet::of(4, {3})) return "bottleneck table A(W)";
  if (!is_bottleneck(bn, green_classes(bn), ElemSet::of(4, {2, 3})))
    return "bottleneck table {w,alpha}";

  // ef gadget truncations: P(chain ideal) = {e, f} for k = 1..6
  for (std::size_t k = 1; k <= 6; ++k) {
    FiniteSemigroup ef = generate_family({Family::PaperExampleEfGadget, (long long)k});
    ElemSet chain_part(ef.size());
    for (std::size_t i = 0; i < k; ++i) chain_part.add(i);
    if (primitives(ef, chain_part) != ElemSet::of(ef.size(), {k, k + 1}))
      return "ef gadget primitives at k = " + std::to_string(k);
  }
  return std::nullopt;
}

// ---- criteria 4 and 5 -------------------------------------------------

std::optional<std::string> criterion_chain_examples() {
  // (N, max): A_s empty, A = ALL
  ChainSemigroup nat({{BlockKind::OmegaStar}}, false);
  if (!symbolic_a_s(nat).is_empty() || !symbolic_a_w(nat).is_all(nat)) return "(N, max)";

  // {1 +- 1/n}: A_fin = the omega block, strictly inside A = ALL, P(A_fin) empty
  ChainSemigroup pm({{BlockKind::Omega}, {BlockKind::OmegaStar}}, false);
  SymbolicSet fin = symbolic_a_fin(pm);
  if (!fin.block_whole(0) || fin.block_whole(1)) return "{1 +- 1/n} A_fin";
  if (!symbolic_a_w(pm).is_all(pm) || fin == symbolic_a_w(pm)) return "{1 +- 1/n} A";
  if (!symbolic_primitives(pm, WhichIdeal::AFin).is_empty()) return "{1 +- 1/n} P(A_fin)";

  // D u {e,f}: A_fin empty, A = D, P(A(W)) = {E, F}
  ChainSemigroup def({{BlockKind::OmegaStar}}, true);
  if (!symbolic_a_fin(def).is_empty()) return "D u {e,f} A_fin";
  SymbolicSet aw = symbolic_a_w(def);
  if (!aw.block_whole(0) || aw.contains_e() || aw.contains_f()) return "D u {e,f} A";
  SymbolicSet p = symbolic_primitives(def, WhichIdeal::AW);
  if (!p.contains_e() || !p.contains_f() || p.contains({0, 0})) return "D u {e,f} P(A(W))";

  // D1 u D2: P(A_fin) a singleton inside A(W), P(A(W)) empty
  ChainSemigroup dd({{BlockKind::Omega}, {BlockKind::Omega}}, false);
  SymbolicSet pfin = symbolic_primitives(dd, WhichIdeal::AFin);
  if (!pfin.contains({1, 0}) || pfin.contains({1, 1}) || pfin.contains({0, 0}))
    return "D1 u D2 P(A_fin)";
  if (!symbolic_a_w(dd).contains({1, 0})) return "D1 u D2 singleton not in A(W)";
  if (!symbolic_primitives(dd, WhichIdeal::AW).is_empty()) return "D1 u D2 P(A(W))";

  // 100 randomized specs: the stepwise and finite-chain definitions coincide
  SplitMix64 rng(20260809);
  for (int i = 0; i < 100; ++i) {
    ChainSemigroup c = random_chain(rng);
    if (!(symbolic_a_s(c) == symbolic_a_fin(c)))
      return "A_s != A_fin on random spec #" + std::to_string(i);
  }
  return std::nullopt;
}

std::optional<std::string> criterion_trivial_primitives() {
  SplitMix64 rng(424242);
  for (int i = 0; i < 100; ++i) {
    ChainSemigroup c = random_chain(rng);
    SymbolicSet fin = symbolic_a_fin(c);
    SymbolicSet aw = symbolic_a_w(c);
    if (fin == aw) continue;
    SymbolicSet p = symbolic_primitives(c, WhichIdeal::AFin);
    if (p.is_empty()) continue;
    if (p.contains_e() || p.contains_f())
      return "gadget element primitive over A_fin on spec #" + std::to_string(i);
    auto members = p.finite_chain_members(c);
    if (!members || members->size() != 1 || !aw.contains((*members)[0]))
      return "P(A_fin) not a singleton inside A(W) on spec #" + std::to_string(i);
  }
  return std::nullopt;
}

// ---- criterion 6 ------------------------------------------------------

std::optional<std::string> criterion_setopt_random() {
  using namespace absorb::setopt;
  SplitMix64 rng(1234);
  for (int i = 0; i < 200; ++i) {
    Cone c = random_ambient_cone(rng);
    ConlinearElem a = random_poly(rng, c);
    RatVec y = random_dual_normal(rng, c);
    RatVec z = unit_pairing(y);
    if (!halfspace_oplus(a, c, y, z).verdict)
      return "halfspace sum verdict false on instance #" + std::to_string(i);
  }

  Cone q = Cone::from_generators({RatVec(Rat(1), Rat(0)), RatVec(Rat(0), Rat(1))});
  std::vector<Rat> grid = {Rat(-2), Rat(-1), Rat(0), Rat(1), Rat(2)};
  if (!translate_group_check(q, RatVec(Rat(1), Rat(1)), RatVec(Rat(1, 2), Rat(1, 2)), grid))
    return "translate group identities";

  SplitMix64 rng2(5678);
  int done = 0;
  while (done < 100) {
    Cone c = random_ambient_cone(rng2);
    ConlinearElem a = random_poly(rng2, c);
    if (a.kind() != ConlinearElem::Kind::Poly) continue;  // an extra ray made it the plane
    DualityResult r = duality_reconstruct(a, c);
    if (!r.normals_in_dual) return "support normal escaped C+ on duality #" + std::to_string(done);
    if (!r.verdict) return "duality reconstruction failed on #" + std::to_string(done);
    ++done;
  }
  return std::nullopt;
}

// ---- criterion 7 ------------------------------------------------------

std::optional<std::string> criterion_bridge() {
  using namespace absorb::setopt;
  Cone q = Cone::from_generators({RatVec(Rat(1), Rat(0)), RatVec(Rat(0), Rat(1))});
  std::vector<ConlinearElem> elems = {
      ConlinearElem::empty_set(), ConlinearElem::full_space(),
      ConlinearElem::poly({RatVec(Rat(0), Rat(0))}, q.generators()),
      halfspace_elem(q, RatVec(Rat(1), Rat(0))), halfspace_elem(q, RatVec(Rat(0), Rat(1)))};
  FiniteSemigroup s = materialize(elems);

  ElemSet aw = a_w(s);
  if (aw != ElemSet::of(5, {0, 1})) return "A(W) != {empty, plane}: " + s.label_set(aw);
  if (primitives(s, aw) != ElemSet::of(5, {3, 4}))
    return "P(A(W)) != {h1, h2}: " + s.label_set(primitives(s, aw));

  GreenSummary g = green_classes(s);
  ElemSet w_h1 = g.two_sided[3];
  if (w_h1 != ElemSet::of(5, {0, 1, 3})) return "W(h1) = " + s.label_set(w_h1);
  if (!is_A_minimal(s, g, w_h1, aw)) return "W(h1) not quasi-minimal";

  auto [sub, to_old] = subsemigroup(s, w_h1);
  ElemSet sub_a(sub.size());
  for (std::size_t i = 0; i < to_old.size(); ++i) {
    if (aw.contains(to_old[i])) sub_a.add(i);
  }
  if (!is_A_simple(sub, green_classes(sub), sub_a)) return "(W(h1), +) not quasi-simple";

  // the materialized table itself satisfies the whole suite
  SuiteReport rep = verify_theorem_suite(s);
  if (!rep.all_pass()) {
    const StatementResult* f = rep.failures().front();
    return "suite on the materialized table: " + f->name;
  }
  return std::nullopt;
}

// ---- criterion 8 ------------------------------------------------------

std::optional<std::string> criterion_predicate_equivalences() {
  std::optional<std::string> failure;
  for (std::size_t n = 1; n <= 4 && !failure; ++n) {
    std::vector<FiniteSemigroup> tables;
    for_each_semigroup(n, [&](const FiniteSemigroup& s) { tables.push_back(s); });
    std::atomic<bool> stop{false};
    std::mutex mutex;
    parallel_for(tables.size(), [&](std::size_t idx) {
      if (stop.load()) return;
      const FiniteSemigroup& s = tables[idx];
      GreenSummary g = green_classes(s);
      IdealFamily fam = IdealFamily::of(s, g);
      std::vector<ElemSet> ideals = fam.all();
      std::string local;
      for (const ElemSet& a : ideals) {
        if (is_bottleneck(s, g, a) != is_bottleneck_brute(s, fam, a)) {
          local = "bottleneck disagreement";
          break;
        }
        if (a != s.full_set() && is_A_simple(s, g, a) != is_A_simple_brute(s, fam, a)) {
          local = "A-simple disagreement";
          break;
        }
        bool a_bottleneck = is_bottleneck(s, g, a);
        for (const ElemSet& d : ideals) {
          bool fast = is_A_minimal(s, g, d, a);
          if (fast != is_A_minimal_brute(s, fam, d, a)) {
            local = "A-minimal disagreement";
            break;
          }
          if (a != s.full_set()) {
            bool abrhan = is_abrhan_minimal(s, fam, d, a.complement());
            if (fast && !abrhan) {
              local = "A-minimal without Abrhan minimality";
              break;
            }
            if (a_bottleneck && fast != abrhan) {
              local = "Abrhan equivalence fails under a bottleneck ideal";
              break;
            }
          }
        }
        if (!local.empty()) break;
      }
      if (!local.empty()) {
        std::lock_guard<std::mutex> lock(mutex);
        if (!failure) failure = local + " at order-" + std::to_string(n) + " table #" +
                                std::to_string(idx);
        stop.store(true);
      }
    });
  }
  return failure;
}

}  // namespace

int main() {
  run_criterion(1, "enumeration counts 1, 8, 113, 3492 with independent oracles", 60,
                criterion_counts);
  run_criterion(2, "theorem suite over enumerated, random, and family corpora", 600,
                criterion_theorem_suite);
  run_criterion(3, "exact reproduction of the worked finite examples", 0, criterion_paper_examples);
  run_criterion(4, "symbolic chains reproduce the four infinite examples", 0,
                criterion_chain_examples);
  run_criterion(5, "trivial primitives whenever A_fin is strictly inside A(W)", 0,
                criterion_trivial_primitives);
  run_criterion(6, "halfspace sums, translate group, duality reconstruction", 60,
                criterion_setopt_random);
  run_criterion(7, "materialized cone family matches the finite analyzer", 0, criterion_bridge);
  run_criterion(8, "fast/brute predicate agreement and the Abrhan equivalence", 0,
                criterion_predicate_equivalences);
  if (failures == 0) {
    std::printf("all acceptance criteria pass\n");
  } else {
    std::printf("%d acceptance criteria FAILED\n", failures);
  }
  return failures;
}
