#include "absorb/green.hpp"

#include <unordered_map>

#include <nlohmann/json.hpp>

namespace absorb {

namespace {

void check_index(const FiniteSemigroup& s, std::size_t u) {
  if (u >= s.size()) throw IndexOutOfRange(u, s.size());
}

// Groups equal ElemSets, assigning class ids in order of first appearance.
std::vector<std::uint32_t> partition_by_equal(const std::vector<ElemSet>& sets,
                                              std::vector<ElemSet>* members,
                                              const std::vector<ElemSet>* secondary = nullptr) {
  struct Key {
    const ElemSet* a;
    const ElemSet* b;
    bool operator==(const Key& o) const {
      return *a == *o.a && (b == nullptr ? o.b == nullptr : *b == *o.b);
    }
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      std::size_t h = k.a->hash();
      if (k.b != nullptr) h ^= k.b->hash() * 0x9e3779b97f4a7c15ULL;
      return h;
    }
  };
  std::size_t n = sets.size();
  std::vector<std::uint32_t> cls(n);
  std::unordered_map<Key, std::uint32_t, KeyHash> seen;
  for (std::size_t u = 0; u < n; ++u) {
    Key key{&sets[u], secondary ? &(*secondary)[u] : nullptr};
    auto it = seen.find(key);
    if (it == seen.end()) {
      auto id = static_cast<std::uint32_t>(seen.size());
      seen.emplace(key, id);
      cls[u] = id;
    } else {
      cls[u] = it->second;
    }
  }
  if (members) {
    std::size_t classes = seen.size();
    members->assign(classes, ElemSet(n));
    for (std::size_t u = 0; u < n; ++u) (*members)[cls[u]].add(u);
  }
  return cls;
}

}  // namespace

ElemSet principal_left(const FiniteSemigroup& s, std::size_t u) {
  check_index(s, u);
  ElemSet out(s.size());
  out.add(u);
  for (std::size_t w = 0; w < s.size(); ++w) out.add(s.sum(w, u));
  return out;
}

ElemSet principal_right(const FiniteSemigroup& s, std::size_t u) {
  check_index(s, u);
  ElemSet out(s.size());
  out.add(u);
  for (std::size_t w = 0; w < s.size(); ++w) out.add(s.sum(u, w));
  return out;
}

ElemSet principal_two_sided(const FiniteSemigroup& s, std::size_t u) {
  ElemSet wl = principal_left(s, u);
  ElemSet out = wl;
  wl.for_each([&](std::size_t v) {
    for (std::size_t w = 0; w < s.size(); ++w) out.add(s.sum(v, w));
  });
  return out;
}

GreenSummary green_classes(const FiniteSemigroup& s) {
  std::size_t n = s.size();
  GreenSummary g;
  g.left_ideal.reserve(n);
  g.right_ideal.reserve(n);
  g.two_sided.reserve(n);
  for (std::size_t u = 0; u < n; ++u) {
    g.left_ideal.push_back(principal_left(s, u));
    g.right_ideal.push_back(principal_right(s, u));
    g.two_sided.push_back(principal_two_sided(s, u));
  }
  g.l_class = partition_by_equal(g.left_ideal, &g.l_members);
  g.r_class = partition_by_equal(g.right_ideal, &g.r_members);
  g.h_class = partition_by_equal(g.left_ideal, &g.h_members, &g.right_ideal);
  g.j_class = partition_by_equal(g.two_sided, &g.j_members);

  std::size_t jc = g.j_members.size();
  std::vector<std::size_t> rep(jc);
  for (std::size_t u = 0; u < n; ++u) rep[g.j_class[u]] = u;
  g.j_leq.assign(jc, std::vector<bool>(jc, false));
  for (std::size_t a = 0; a < jc; ++a) {
    for (std::size_t b = 0; b < jc; ++b) {
      g.j_leq[a][b] = g.two_sided[rep[a]].is_subset_of(g.two_sided[rep[b]]);
    }
  }
  return g;
}

nlohmann::ordered_json GreenSummary::to_json() const {
  nlohmann::ordered_json j;
  auto classes = [](const std::vector<ElemSet>& members) {
    std::vector<std::vector<std::size_t>> out;
    out.reserve(members.size());
    for (const auto& m : members) out.push_back(m.elements());
    return out;
  };
  j["L"] = classes(l_members);
  j["R"] = classes(r_members);
  j["H"] = classes(h_members);
  j["J"] = classes(j_members);
  std::vector<std::vector<std::size_t>> edges;
  for (std::size_t a = 0; a < j_leq.size(); ++a) {
    for (std::size_t b = 0; b < j_leq.size(); ++b) {
      if (a != b && j_leq[a][b]) edges.push_back({a, b});
    }
  }
  j["J_preorder"] = edges;
  return j;
}

bool is_left_ideal(const FiniteSemigroup& s, const ElemSet& x) {
  if (x.universe() != s.size()) throw UniverseMismatch(x.universe(), s.size());
  bool ok = true;
  x.for_each([&](std::size_t a) {
    if (!ok) return;
    for (std::size_t w = 0; w < s.size(); ++w) {
      if (!x.contains(s.sum(w, a))) {
        ok = false;
        return;
      }
    }
  });
  return ok;
}

bool is_right_ideal(const FiniteSemigroup& s, const ElemSet& x) {
  if (x.universe() != s.size()) throw UniverseMismatch(x.universe(), s.size());
  bool ok = true;
  x.for_each([&](std::size_t a) {
    if (!ok) return;
    for (std::size_t w = 0; w < s.size(); ++w) {
      if (!x.contains(s.sum(a, w))) {
        ok = false;
        return;
      }
    }
  });
  return ok;
}

bool is_ideal(const FiniteSemigroup& s, const ElemSet& x) {
  return is_left_ideal(s, x) && is_right_ideal(s, x);
}

bool is_group(const FiniteSemigroup& s, const ElemSet& x) {
  if (x.universe() != s.size()) throw UniverseMismatch(x.universe(), s.size());
  if (x.empty()) return false;
  std::vector<std::size_t> members = x.elements();

  // A group contains exactly one idempotent, its identity.
  std::size_t e = s.size();
  for (std::size_t m : members) {
    if (s.sum(m, m) == m) {
      if (e != s.size()) return false;
      e = m;
    }
  }
  if (e == s.size()) return false;
  for (std::size_t m : members) {
    if (s.sum(e, m) != m || s.sum(m, e) != m) return false;
  }
  for (std::size_t m : members) {
    bool inverse = false;
    for (std::size_t y : members) {
      std::size_t my = s.sum(m, y);
      if (!x.contains(my)) return false;  // not closed
      if (my == e && s.sum(y, m) == e) inverse = true;
    }
    if (!inverse) return false;
  }
  return true;
}

HTheoremVerdict h_theorem_verdict(const FiniteSemigroup& s, const GreenSummary& g, std::size_t e,
                                  const ElemSet& a) {
  check_index(s, e);
  if (s.sum(e, e) != e || a.contains(e)) {
    throw PreconditionViolated("h_theorem_verdict needs e in E(W)\\A");
  }
  if (!is_ideal(s, a)) throw PreconditionViolated("h_theorem_verdict needs a two-sided ideal A");
  ElemSet candidate = g.two_sided[e] - a;
  return HTheoremVerdict{g.h_of(e) == candidate, is_group(s, candidate)};
}

HTheoremVerdict h_theorem_verdict(const FiniteSemigroup& s, std::size_t e, const ElemSet& a) {
  GreenSummary g = green_classes(s);
  return h_theorem_verdict(s, g, e, a);
}

}  // namespace absorb
