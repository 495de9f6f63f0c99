#include "absorb/generators.hpp"

#include <algorithm>
#include <unordered_map>

#include "absorb/splitmix64.hpp"

namespace absorb {

namespace {

FiniteSemigroup from_rule(std::size_t n, const std::function<std::size_t(std::size_t, std::size_t)>& rule,
                          std::optional<std::vector<std::string>> labels = std::nullopt) {
  std::vector<FiniteSemigroup::elem> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      table[i * n + j] = static_cast<FiniteSemigroup::elem>(rule(i, j));
    }
  }
  return FiniteSemigroup::validate_packed(n, std::move(table), std::move(labels));
}

std::size_t need_n(const GeneratorSpec& spec, long long min_value) {
  if (spec.param < min_value) {
    throw BadParameter(family_name(spec.family) + " needs a parameter >= " +
                       std::to_string(min_value));
  }
  return static_cast<std::size_t>(spec.param);
}

FiniteSemigroup adjoin(const FiniteSemigroup& base, bool zero) {
  std::size_t n = base.size();
  std::vector<FiniteSemigroup::elem> table((n + 1) * (n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) table[i * (n + 1) + j] = base.sum(i, j);
  }
  auto fresh = static_cast<FiniteSemigroup::elem>(n);
  for (std::size_t i = 0; i <= n; ++i) {
    FiniteSemigroup::elem down = zero ? fresh : static_cast<FiniteSemigroup::elem>(i);
    table[i * (n + 1) + n] = down;
    table[n * (n + 1) + i] = down;
  }
  table[n * (n + 1) + n] = fresh;
  std::optional<std::vector<std::string>> labels;
  if (base.has_labels()) {
    labels = *base.labels();
    labels->push_back(zero ? "\xce\xb1" : "1");  // alpha
  }
  return FiniteSemigroup::validate_packed(n + 1, std::move(table), std::move(labels));
}

// {1, 1/2, ..., 1/k} under min plus the twin top {e,f} with e+f = 1.
// Index i < k is the element 1/(i+1); the chain order by index runs from the
// greatest element downwards, so the chain meet is the larger index.
FiniteSemigroup ef_gadget(std::size_t k) {
  std::size_t n = k + 2;
  std::size_t e = k, f = k + 1;
  std::vector<std::string> labels;
  labels.emplace_back("1");
  for (std::size_t i = 1; i < k; ++i) labels.push_back("1/" + std::to_string(i + 1));
  labels.emplace_back("e");
  labels.emplace_back("f");
  return from_rule(
      n,
      [&](std::size_t i, std::size_t j) -> std::size_t {
        bool gi = i >= k, gj = j >= k;
        if (!gi && !gj) return std::max(i, j);
        if (gi && gj) return i == j ? i : 0;  // e+e=e, f+f=f, e+f=f+e=1
        return gi ? j : i;                    // gadget absorbs into the chain element
      },
      std::move(labels));
}

// {1+1/n} u {1-1/n} under max, truncated to k elements per block. Indices
// 0..k-1 are 1+1/1 .. 1+1/k (the block with the numeric maximum 2); indices
// k..2k-1 are 1-1/1 .. 1-1/k. Under max, a numerically larger element
// absorbs, so within the first block the meet is the smaller index, within
// the second the larger, and across blocks the first-block element wins.
FiniteSemigroup two_omega(std::size_t k) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < k; ++i) labels.push_back("1+1/" + std::to_string(i + 1));
  for (std::size_t i = 0; i < k; ++i) labels.push_back("1-1/" + std::to_string(i + 1));
  return from_rule(
      2 * k,
      [&](std::size_t i, std::size_t j) -> std::size_t {
        bool ti = i < k, tj = j < k;
        if (ti && tj) return std::min(i, j);
        if (!ti && !tj) return std::max(i, j);
        return ti ? i : j;
      },
      std::move(labels));
}

}  // namespace

std::string family_name(Family family) {
  switch (family) {
    case Family::LeftZero: return "left_zero";
    case Family::RightZero: return "right_zero";
    case Family::MinChain: return "min_chain";
    case Family::MaxChain: return "max_chain";
    case Family::Cyclic: return "cyclic";
    case Family::AdjoinZero: return "adjoin_zero";
    case Family::AdjoinIdentity: return "adjoin_identity";
    case Family::PaperExampleLeftZero: return "paper_example_left_zero";
    case Family::PaperExampleBottleneck: return "paper_example_bottleneck";
    case Family::PaperExampleEfGadget: return "paper_example_ef_gadget";
    case Family::TwoOmegaTruncation: return "two_omega_truncation";
    case Family::InfAdditionToy: return "inf_addition_toy";
  }
  return "?";
}

GeneratorSpec parse_generator_spec(const std::string& text) {
  std::string head = text;
  std::string rest;
  if (auto pos = text.find(':'); pos != std::string::npos) {
    head = text.substr(0, pos);
    rest = text.substr(pos + 1);
  }
  auto with_param = [&](Family f) {
    if (rest.empty()) throw BadParameter(head + " needs a numeric parameter, e.g. " + head + ":3");
    GeneratorSpec spec{f};
    try {
      spec.param = std::stoll(rest);
    } catch (const std::exception&) {
      throw BadParameter("bad parameter for " + head + ": " + rest);
    }
    return spec;
  };
  auto bare = [&](Family f) {
    if (!rest.empty()) throw BadParameter(head + " takes no parameter");
    return GeneratorSpec{f};
  };
  if (head == "left_zero") return with_param(Family::LeftZero);
  if (head == "right_zero") return with_param(Family::RightZero);
  if (head == "min_chain") return with_param(Family::MinChain);
  if (head == "max_chain") return with_param(Family::MaxChain);
  if (head == "cyclic") return with_param(Family::Cyclic);
  if (head == "adjoin_zero" || head == "adjoin_identity") {
    if (rest.empty()) throw BadParameter(head + " needs a base family, e.g. " + head + ":cyclic:3");
    GeneratorSpec spec{head == "adjoin_zero" ? Family::AdjoinZero : Family::AdjoinIdentity};
    spec.base = std::make_shared<GeneratorSpec>(parse_generator_spec(rest));
    return spec;
  }
  if (head == "paper_example_left_zero") return bare(Family::PaperExampleLeftZero);
  if (head == "paper_example_bottleneck") return bare(Family::PaperExampleBottleneck);
  if (head == "paper_example_ef_gadget") return with_param(Family::PaperExampleEfGadget);
  if (head == "two_omega_truncation") return with_param(Family::TwoOmegaTruncation);
  if (head == "inf_addition_toy") return bare(Family::InfAdditionToy);
  throw UnknownFamily(head);
}

FiniteSemigroup generate_family(const GeneratorSpec& spec) {
  switch (spec.family) {
    case Family::LeftZero: {
      std::size_t n = need_n(spec, 1);
      return from_rule(n, [](std::size_t i, std::size_t) { return i; });
    }
    case Family::RightZero: {
      std::size_t n = need_n(spec, 1);
      return from_rule(n, [](std::size_t, std::size_t j) { return j; });
    }
    case Family::MinChain: {
      std::size_t n = need_n(spec, 1);
      return from_rule(n, [](std::size_t i, std::size_t j) { return std::min(i, j); });
    }
    case Family::MaxChain: {
      std::size_t n = need_n(spec, 1);
      return from_rule(n, [](std::size_t i, std::size_t j) { return std::max(i, j); });
    }
    case Family::Cyclic: {
      std::size_t n = need_n(spec, 1);
      return from_rule(n, [n](std::size_t i, std::size_t j) { return (i + j) % n; });
    }
    case Family::AdjoinZero:
    case Family::AdjoinIdentity: {
      if (!spec.base) throw BadParameter("adjoin_* needs a base semigroup spec");
      return adjoin(generate_family(*spec.base), spec.family == Family::AdjoinZero);
    }
    case Family::PaperExampleLeftZero:
      return from_rule(
          2, [](std::size_t i, std::size_t) { return i; },
          std::vector<std::string>{"e", "f"});
    case Family::PaperExampleBottleneck: {
      // u v w alpha; v+v = u, w+w = alpha, everything at or below w absorbs.
      std::vector<std::vector<long long>> grid = {
          {0, 1, 2, 3}, {1, 0, 2, 3}, {2, 2, 3, 3}, {3, 3, 3, 3}};
      return FiniteSemigroup::validate(grid, std::vector<std::string>{"u", "v", "w", "\xce\xb1"});
    }
    case Family::PaperExampleEfGadget:
      return ef_gadget(need_n(spec, 1));
    case Family::TwoOmegaTruncation:
      return two_omega(need_n(spec, 1));
    case Family::InfAdditionToy:
      // (+inf)+(-inf) = +inf; +inf is absorbing and isolated, -inf becomes
      // absorbing once +inf is removed. A 3-chain as a table.
      return from_rule(
          3, [](std::size_t i, std::size_t j) { return std::min(i, j); },
          std::vector<std::string>{"+inf", "-inf", "0"});
  }
  throw UnknownFamily("unhandled family tag");
}

namespace {

struct MapHash {
  std::size_t operator()(const std::vector<std::uint8_t>& v) const {
    std::size_t h = v.size();
    for (std::uint8_t b : v) h = h * 131 + b + 0x9e37;
    return h;
  }
};

constexpr std::size_t kClosureCap = 10000;

}  // namespace

FiniteSemigroup transformation_closure(std::size_t degree,
                                       const std::vector<std::vector<std::uint8_t>>& generators) {
  if (degree < 1) throw BadParameter("degree must be >= 1");
  if (generators.empty()) throw BadParameter("need at least one generator");
  for (const auto& g : generators) {
    if (g.size() != degree) throw BadParameter("generator arity does not match degree");
    for (std::uint8_t v : g) {
      if (v >= degree) throw BadParameter("generator maps outside the point set");
    }
  }

  std::vector<std::vector<std::uint8_t>> elems;
  std::unordered_map<std::vector<std::uint8_t>, std::uint32_t, MapHash> index;
  auto intern = [&](const std::vector<std::uint8_t>& m) -> std::uint32_t {
    auto it = index.find(m);
    if (it != index.end()) return it->second;
    if (elems.size() >= kClosureCap) throw SizeExplosion(kClosureCap);
    auto id = static_cast<std::uint32_t>(elems.size());
    elems.push_back(m);
    index.emplace(m, id);
    return id;
  };

  std::vector<std::uint8_t> scratch(degree);
  auto compose = [&](const std::vector<std::uint8_t>& a, const std::vector<std::uint8_t>& b) {
    // (a + b)(x) = a(b(x))
    for (std::size_t x = 0; x < degree; ++x) scratch[x] = a[b[x]];
    return scratch;
  };

  for (const auto& g : generators) intern(g);
  for (std::size_t next = 0; next < elems.size(); ++next) {
    for (std::size_t g = 0; g < generators.size(); ++g) {
      auto w = elems[next];  // copy: intern may reallocate elems
      intern(compose(w, generators[g]));
    }
  }

  std::size_t n = elems.size();
  std::vector<FiniteSemigroup::elem> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      table[i * n + j] = index.at(compose(elems[i], elems[j]));
    }
  }
  return FiniteSemigroup::validate_packed(n, std::move(table));
}

FiniteSemigroup random_transformation_semigroup(std::size_t degree, std::size_t num_generators,
                                                std::uint64_t seed) {
  if (degree < 1 || degree > 6) throw BadParameter("degree must be in [1,6]");
  if (num_generators < 1 || num_generators > 5) throw BadParameter("num_generators must be in [1,5]");
  SplitMix64 rng(seed);
  std::vector<std::vector<std::uint8_t>> gens(num_generators, std::vector<std::uint8_t>(degree));
  for (auto& g : gens) {
    for (std::size_t i = 0; i < degree; ++i) g[i] = static_cast<std::uint8_t>(rng.below(degree));
  }
  return transformation_closure(degree, gens);
}

namespace {

constexpr std::uint8_t kUndef = 0xff;

bool partial_associative(const std::vector<std::uint8_t>& t, std::size_t n) {
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      std::uint8_t ab = t[a * n + b];
      if (ab == kUndef) continue;
      for (std::size_t c = 0; c < n; ++c) {
        std::uint8_t lhs = t[ab * n + c];
        if (lhs == kUndef) continue;
        std::uint8_t bc = t[b * n + c];
        if (bc == kUndef) continue;
        std::uint8_t rhs = t[a * n + bc];
        if (rhs == kUndef) continue;
        if (lhs != rhs) return false;
      }
    }
  }
  return true;
}

void enumerate_rec(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& order,
                   std::size_t depth, std::vector<std::uint8_t>& t,
                   const std::function<void(const FiniteSemigroup&)>& fn) {
  if (depth == order.size()) {
    std::vector<FiniteSemigroup::elem> table(t.begin(), t.end());
    fn(FiniteSemigroup::validate_packed(n, std::move(table)));
    return;
  }
  auto [r, c] = order[depth];
  for (std::uint8_t v = 0; v < n; ++v) {
    t[r * n + c] = v;
    if (partial_associative(t, n)) enumerate_rec(n, order, depth + 1, t, fn);
  }
  t[r * n + c] = kUndef;
}

}  // namespace

void for_each_semigroup_order(std::size_t n,
                              const std::vector<std::pair<std::size_t, std::size_t>>& order,
                              const std::function<void(const FiniteSemigroup&)>& fn) {
  if (n < 1) throw BadParameter("n must be >= 1");
  if (n > 4) throw NTooLarge(n);
  if (order.size() != n * n) throw BadParameter("cell order must cover all cells");
  std::vector<std::uint8_t> t(n * n, kUndef);
  enumerate_rec(n, order, 0, t, fn);
}

void for_each_semigroup(std::size_t n, const std::function<void(const FiniteSemigroup&)>& fn) {
  std::vector<std::pair<std::size_t, std::size_t>> order;
  order.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) order.emplace_back(r, c);
  }
  for_each_semigroup_order(n, order, fn);
}

std::size_t count_semigroups(std::size_t n) {
  std::size_t count = 0;
  for_each_semigroup(n, [&](const FiniteSemigroup&) { ++count; });
  return count;
}

}  // namespace absorb
