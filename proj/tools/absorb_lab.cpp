// absorb-lab: semigroup structure analyzer.
//
// Subcommands: analyze, check, ideals, chains, setopt, gen.
// Exit codes: 0 success, 1 property failure, 2 input error.
// ABSORB_LAB_THREADS caps corpus parallelism; output order is by input
// index, never by completion time.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "absorb/chains.hpp"
#include "absorb/generators.hpp"
#include "absorb/ideals.hpp"
#include "absorb/parallel.hpp"
#include "absorb/report.hpp"
#include "absorb/setopt.hpp"
#include "absorb/table_io.hpp"

namespace {

using namespace absorb;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RandomSpec {
  std::size_t degree = 0;
  std::size_t gens = 0;
  std::uint64_t seed = 0;
};

// "trans:4:2:seed=7"
RandomSpec parse_random_spec(const std::string& text) {
  RandomSpec spec;
  std::stringstream in(text);
  std::string tok;
  std::vector<std::string> parts;
  while (std::getline(in, tok, ':')) parts.push_back(tok);
  if (parts.size() != 4 || parts[0] != "trans" || parts[3].rfind("seed=", 0) != 0) {
    throw InputError("random spec must look like trans:<degree>:<gens>:seed=<n>, got: " + text);
  }
  try {
    spec.degree = std::stoul(parts[1]);
    spec.gens = std::stoul(parts[2]);
    spec.seed = std::stoull(parts[3].substr(5));
  } catch (const std::exception&) {
    throw InputError("bad number in random spec: " + text);
  }
  return spec;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write file: " + path);
  out << content;
}

SuiteOptions suite_options_for(const std::string& which) {
  SuiteOptions opts;
  if (which == "all") return opts;
  opts.green = which == "green";
  opts.quasi = which == "quasi";
  opts.ideals = which == "ideals";
  if (!opts.green && !opts.quasi && !opts.ideals) {
    throw InputError("unknown suite: " + which + " (expected all|green|quasi|ideals)");
  }
  return opts;
}

int report_suite(const std::string& context, const SuiteReport& rep) {
  auto fails = rep.failures();
  if (fails.empty()) {
    std::cout << context << ": " << rep.results.size() << " statements pass\n";
    return 0;
  }
  for (const auto* f : fails) {
    std::cout << context << ": FAIL " << f->name << "  [" << f->counterexample << "]\n";
  }
  return 1;
}

// ---- analyze ----------------------------------------------------------

int cmd_analyze(const std::string& path, bool as_json, bool no_ideals) {
  FiniteSemigroup s = load_table_file(path);
  AnalyzeOptions opts;
  opts.with_ideals = !no_ideals;
  AnalysisReport rep = analyze(s, opts);
  if (as_json) {
    std::cout << rep.to_json(s).dump(2) << "\n";
  } else {
    std::cout << rep.human_text(s);
  }
  return rep.suite.all_pass() ? 0 : 1;
}

// ---- check ------------------------------------------------------------

int cmd_check(const std::optional<std::string>& path, const std::optional<std::string>& family,
              std::optional<std::size_t> enumerate_n, const std::optional<std::string>& random,
              const std::string& suite) {
  SuiteOptions opts = suite_options_for(suite);
  int given = int(path.has_value()) + int(family.has_value()) + int(enumerate_n.has_value()) +
              int(random.has_value());
  if (given != 1) {
    throw InputError("check needs exactly one of: <path>, --family, --enumerate, --random");
  }

  if (path) {
    return report_suite(*path, verify_theorem_suite(load_table_file(*path), opts, *path));
  }
  if (family) {
    FiniteSemigroup s = generate_family(parse_generator_spec(*family));
    return report_suite(*family, verify_theorem_suite(s, opts, *family));
  }
  if (random) {
    RandomSpec spec = parse_random_spec(*random);
    FiniteSemigroup s = random_transformation_semigroup(spec.degree, spec.gens, spec.seed);
    std::string context = "trans degree=" + std::to_string(spec.degree) +
                          " gens=" + std::to_string(spec.gens) +
                          " seed=" + std::to_string(spec.seed) + " (n=" +
                          std::to_string(s.size()) + ")";
    return report_suite(context, verify_theorem_suite(s, opts, context));
  }

  // --enumerate n: run the whole corpus, reporting in input order
  std::vector<FiniteSemigroup> tables;
  for_each_semigroup(*enumerate_n, [&](const FiniteSemigroup& s) { tables.push_back(s); });
  std::vector<std::string> failures(tables.size());
  parallel_for(tables.size(), [&](std::size_t i) {
    SuiteReport rep = verify_theorem_suite(tables[i], opts);
    if (!rep.all_pass()) {
      const StatementResult* f = rep.failures().front();
      failures[i] = f->name + "  [" + f->counterexample + "]";
    }
  });
  int bad = 0;
  for (std::size_t i = 0; i < tables.size(); ++i) {
    if (!failures[i].empty()) {
      ++bad;
      std::cout << "table #" << i << ": FAIL " << failures[i] << "\n";
    }
  }
  std::cout << "enumerate n=" << *enumerate_n << ": " << tables.size() << " tables, " << bad
            << " failures\n";
  return bad == 0 ? 0 : 1;
}

// ---- ideals -----------------------------------------------------------

int cmd_ideals(const std::optional<std::string>& path, const std::optional<std::string>& family,
               bool as_json) {
  if (int(path.has_value()) + int(family.has_value()) != 1) {
    throw InputError("ideals needs exactly one of: <path>, --family");
  }
  FiniteSemigroup s =
      path ? load_table_file(*path) : generate_family(parse_generator_spec(*family));
  std::vector<std::vector<std::size_t>> ideals;
  IdealFamily::of(s).for_each([&](const ElemSet& x) {
    ideals.push_back(x.elements());
    return true;
  });
  std::sort(ideals.begin(), ideals.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  if (as_json) {
    std::cout << nlohmann::json(ideals).dump() << "\n";
  } else {
    for (const auto& ideal : ideals) {
      for (std::size_t i = 0; i < ideal.size(); ++i) {
        if (i != 0) std::cout << ' ';
        std::cout << ideal[i];
      }
      std::cout << "\n";
    }
  }
  return 0;
}

// ---- chains -----------------------------------------------------------

int cmd_chains(const std::string& specfile, std::optional<std::size_t> truncate_k,
               bool with_cross_check, bool as_json) {
  ChainSemigroup chain = load_chain_file(specfile);
  if (with_cross_check && !truncate_k) {
    throw InputError("--cross-check needs --truncate <k>");
  }

  SymbolicSet a_s = symbolic_a_s(chain);
  SymbolicSet fin = symbolic_a_fin(chain);
  SymbolicSet aw = symbolic_a_w(chain);
  SymbolicSet p_fin = symbolic_primitives(chain, WhichIdeal::AFin);
  SymbolicSet p_aw = symbolic_primitives(chain, WhichIdeal::AW);

  nlohmann::ordered_json j;
  int exit_code = 0;
  if (as_json) {
    j["spec"] = write_chain_text(chain);
    j["A_s"] = a_s.render(chain);
    j["A_fin"] = fin.render(chain);
    j["A"] = aw.render(chain);
    j["P(A_fin)"] = p_fin.render(chain);
    j["P(A)"] = p_aw.render(chain);
  } else {
    std::cout << "chain: " << write_chain_text(chain);
    std::cout << "A_s    = " << a_s.render(chain) << "\n";
    std::cout << "A_fin  = " << fin.render(chain) << "\n";
    std::cout << "A      = " << aw.render(chain) << "\n";
    std::cout << "P(A_fin) = " << p_fin.render(chain) << "\n";
    std::cout << "P(A)     = " << p_aw.render(chain) << "\n";
  }

  if (truncate_k) {
    Truncation t = truncate(chain, *truncate_k);
    if (as_json) {
      j["truncation"] = nlohmann::json::parse(write_table_json(t.table));
    } else {
      std::cout << "truncation (k=" << *truncate_k << "):\n" << write_table_text(t.table);
    }
    if (with_cross_check) {
      CrossCheckReport rep = cross_check(chain, *truncate_k);
      auto status_str = [](CrossCheckReport::Status s) {
        switch (s) {
          case CrossCheckReport::Status::Agree: return "AGREE";
          case CrossCheckReport::Status::ExpectedDivergence: return "EXPECTED_DIVERGENCE";
          default: return "FAIL";
        }
      };
      if (as_json) {
        std::vector<nlohmann::ordered_json> rows;
        for (const auto& row : rep.rows) {
          rows.push_back({{"quantity", row.quantity},
                          {"symbolic", row.symbolic},
                          {"finite", row.finite},
                          {"status", status_str(row.status)}});
        }
        j["cross_check"] = rows;
      } else {
        for (const auto& row : rep.rows) {
          std::cout << "cross-check " << row.quantity << ": " << status_str(row.status)
                    << "  symbolic=" << row.symbolic << "  finite=" << row.finite << "\n";
        }
      }
      if (!rep.ok()) exit_code = 1;
    }
  }
  if (as_json) std::cout << j.dump(2) << "\n";
  return exit_code;
}

// ---- setopt -----------------------------------------------------------

int verify_thm_on_instance(const setopt::Instance& inst) {
  using namespace absorb::setopt;
  int failures = 0;
  std::vector<RatVec> normals;
  for (const RatVec& g : inst.c.dual().generators()) {
    if (!g.is_zero()) normals.push_back(g);
  }
  for (std::size_t i = 0; i < inst.elements.size(); ++i) {
    const ConlinearElem& a = inst.elements[i];
    std::vector<RatVec> ys = normals;
    if (a.kind() == ConlinearElem::Kind::Poly) {
      for (const auto& c : h_representation(a)) {
        if (inst.c.dual().contains(c.normal)) ys.push_back(c.normal);
      }
    }
    for (const RatVec& y : ys) {
      HalfspaceSum r = halfspace_oplus(a, inst.c, y, unit_pairing(y));
      if (!r.verdict) {
        ++failures;
        std::cout << "element #" << i << " y=" << y.str() << ": oplus route "
                  << r.via_oplus.str() << " != formula " << r.via_formula.str() << "\n";
      }
    }
  }
  std::cout << "halfspace theorem: " << (failures == 0 ? "all verdicts true" : "FAILURES") << "\n";
  return failures == 0 ? 0 : 1;
}

int cmd_setopt(const std::optional<std::string>& instance_path,
               const std::vector<std::string>& verify, std::optional<std::size_t> random_count,
               std::uint64_t seed, const std::optional<std::string>& materialize_path) {
  using namespace absorb::setopt;
  int exit_code = 0;

  if (random_count) {
    SplitMix64 rng(seed);
    std::size_t duality_fail = 0, thm_fail = 0, group_fail = 0, polys = 0;
    for (std::size_t i = 0; i < *random_count; ++i) {
      Cone c = random_ambient_cone(rng);
      ConlinearElem a = random_poly(rng, c);
      RatVec y = random_dual_normal(rng, c);
      RatVec z = unit_pairing(y);
      for (const std::string& what : verify) {
        if (what == "thm" && !halfspace_oplus(a, c, y, z).verdict) ++thm_fail;
        if (what == "duality" && a.kind() == ConlinearElem::Kind::Poly) {
          ++polys;
          if (!duality_reconstruct(a, c).verdict) ++duality_fail;
        }
        if (what == "group" &&
            !translate_group_check(c, y, z, {Rat(-2), Rat(-1), Rat(0), Rat(1), Rat(2)}))
          ++group_fail;
      }
    }
    std::cout << "random verification: seed=" << seed << " count=" << *random_count << "\n";
    for (const std::string& what : verify) {
      if (what == "thm") {
        std::cout << "  thm: " << (*random_count - thm_fail) << "/" << *random_count << " pass\n";
        if (thm_fail) exit_code = 1;
      } else if (what == "duality") {
        std::cout << "  duality: " << (polys - duality_fail) << "/" << polys << " pass\n";
        if (duality_fail) exit_code = 1;
      } else if (what == "group") {
        std::cout << "  group: " << (*random_count - group_fail) << "/" << *random_count
                  << " pass\n";
        if (group_fail) exit_code = 1;
      } else {
        throw InputError("unknown verification: " + what);
      }
    }
    return exit_code;
  }

  if (!instance_path) throw InputError("setopt needs an instance file or --random <count>");
  Instance inst = parse_instance(read_file(*instance_path));

  for (const std::string& what : verify) {
    if (what == "thm") {
      if (verify_thm_on_instance(inst) != 0) exit_code = 1;
    } else if (what == "duality") {
      std::size_t fails = 0, polys = 0;
      for (const auto& a : inst.elements) {
        if (a.kind() != ConlinearElem::Kind::Poly) continue;
        ++polys;
        DualityResult r = duality_reconstruct(a, inst.c);
        if (!r.verdict || !r.normals_in_dual) ++fails;
      }
      std::cout << "duality: " << (polys - fails) << "/" << polys << " pass\n";
      if (fails) exit_code = 1;
    } else if (what == "group") {
      bool ok = true;
      for (const RatVec& y : inst.c.dual().generators()) {
        if (y.is_zero()) continue;
        ok = ok && translate_group_check(inst.c, y, unit_pairing(y),
                                         {Rat(-2), Rat(-1), Rat(0), Rat(1), Rat(2)});
      }
      std::cout << "group: " << (ok ? "pass" : "FAIL") << "\n";
      if (!ok) exit_code = 1;
    } else {
      throw InputError("unknown verification: " + what);
    }
  }

  if (materialize_path) {
    FiniteSemigroup s = materialize(inst.elements);
    write_file(*materialize_path, write_table_text(s));
    std::cout << "materialized " << s.size() << " elements to " << *materialize_path << "\n";
  }
  return exit_code;
}

// ---- gen --------------------------------------------------------------

int cmd_gen(const std::optional<std::string>& family, const std::optional<std::string>& random,
            const std::optional<std::string>& out_path, bool as_json) {
  if (int(family.has_value()) + int(random.has_value()) != 1) {
    throw InputError("gen needs exactly one of: --family, --random");
  }
  FiniteSemigroup s = family ? generate_family(parse_generator_spec(*family))
                             : [&] {
                                 RandomSpec spec = parse_random_spec(*random);
                                 return random_transformation_semigroup(spec.degree, spec.gens,
                                                                        spec.seed);
                               }();
  std::string text = as_json ? write_table_json(s) + "\n" : write_table_text(s);
  if (out_path) {
    write_file(*out_path, text);
  } else {
    std::cout << text;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"absorb-lab: Green's relations, quasi-absorbing structure, ideal predicates,\n"
               "symbolic chain semigroups, and an exact conlinear-semigroup model"};
  app.require_subcommand(1);

  // analyze
  std::string analyze_path;
  bool analyze_json = false, analyze_no_ideals = false;
  CLI::App* analyze_cmd = app.add_subcommand("analyze", "full structure report for a table file");
  analyze_cmd->add_option("path", analyze_path, "table file (text or JSON)")->required();
  analyze_cmd->add_flag("--json", analyze_json, "emit the JSON report");
  analyze_cmd->add_flag("--no-ideals", analyze_no_ideals, "skip the ideal census");

  // check
  std::optional<std::string> check_path, check_family, check_random;
  std::optional<std::size_t> check_enumerate;
  std::string check_suite = "all";
  CLI::App* check_cmd = app.add_subcommand("check", "run the theorem suite");
  check_cmd->add_option("path", check_path, "table file");
  check_cmd->add_option("--family", check_family, "generator family, e.g. min_chain:5");
  check_cmd->add_option("--enumerate", check_enumerate, "all tables of order n (n <= 4)");
  check_cmd->add_option("--random", check_random, "random closure, e.g. trans:4:2:seed=7");
  check_cmd->add_option("--suite", check_suite, "all|green|quasi|ideals")->capture_default_str();

  // ideals
  std::optional<std::string> ideals_path, ideals_family;
  bool ideals_json = false;
  CLI::App* ideals_cmd = app.add_subcommand("ideals", "list every two-sided ideal");
  ideals_cmd->add_option("path", ideals_path, "table file");
  ideals_cmd->add_option("--family", ideals_family, "generator family");
  ideals_cmd->add_flag("--json", ideals_json, "emit a JSON array");

  // chains
  std::string chains_spec;
  std::optional<std::size_t> chains_truncate;
  bool chains_cross = false, chains_json = false;
  CLI::App* chains_cmd = app.add_subcommand("chains", "symbolic chain semigroup analysis");
  chains_cmd->add_option("specfile", chains_spec, "chain spec (text or JSON)")->required();
  chains_cmd->add_option("--truncate", chains_truncate, "materialize a finite window of size k");
  chains_cmd->add_flag("--cross-check", chains_cross, "compare symbolic and finite answers");
  chains_cmd->add_flag("--json", chains_json, "emit the JSON report");

  // setopt
  std::optional<std::string> setopt_instance, setopt_materialize;
  std::vector<std::string> setopt_verify;
  std::optional<std::size_t> setopt_random;
  std::uint64_t setopt_seed = 1;
  CLI::App* setopt_cmd = app.add_subcommand("setopt", "conlinear semigroup verifications");
  setopt_cmd->add_option("instance", setopt_instance, "instance JSON file");
  setopt_cmd->add_option("--verify", setopt_verify, "thm|duality|group (repeatable)");
  setopt_cmd->add_option("--random", setopt_random, "seeded random instances instead of a file");
  setopt_cmd->add_option("--seed", setopt_seed, "seed for --random")->capture_default_str();
  setopt_cmd->add_option("--materialize", setopt_materialize, "write the Cayley table here");

  // gen
  std::optional<std::string> gen_family, gen_random, gen_out;
  bool gen_json = false;
  CLI::App* gen_cmd = app.add_subcommand("gen", "write a generator-family table");
  gen_cmd->add_option("--family", gen_family, "generator family, e.g. cyclic:6");
  gen_cmd->add_option("--random", gen_random, "random closure, e.g. trans:3:2:seed=5");
  gen_cmd->add_option("-o,--out", gen_out, "output path (default stdout)");
  gen_cmd->add_flag("--json", gen_json, "JSON table format");

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze_cmd->parsed()) return cmd_analyze(analyze_path, analyze_json, analyze_no_ideals);
    if (check_cmd->parsed())
      return cmd_check(check_path, check_family, check_enumerate, check_random, check_suite);
    if (ideals_cmd->parsed()) return cmd_ideals(ideals_path, ideals_family, ideals_json);
    if (chains_cmd->parsed())
      return cmd_chains(chains_spec, chains_truncate, chains_cross, chains_json);
    if (setopt_cmd->parsed())
      return cmd_setopt(setopt_instance, setopt_verify, setopt_random, setopt_seed,
                        setopt_materialize);
    if (gen_cmd->parsed()) return cmd_gen(gen_family, gen_random, gen_out, gen_json);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const absorb::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
