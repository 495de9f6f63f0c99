#include "absorb/ideals.hpp"

namespace absorb {

IdealFamily IdealFamily::of(const FiniteSemigroup& s, const GreenSummary& g) {
  std::size_t jc = g.j_members.size();
  if (jc > 24) throw TooManyJClasses(jc);
  IdealFamily fam(s.size());
  fam.class_elems_ = g.j_members;
  fam.down_mask_.assign(jc, 0);
  for (std::size_t c = 0; c < jc; ++c) {
    for (std::size_t d = 0; d < jc; ++d) {
      if (g.j_leq[d][c]) fam.down_mask_[c] |= std::uint32_t{1} << d;
    }
  }
  return fam;
}

IdealFamily IdealFamily::of(const FiniteSemigroup& s) { return of(s, green_classes(s)); }

void IdealFamily::for_each(const std::function<bool(const ElemSet&)>& fn) const {
  std::size_t jc = class_elems_.size();  // <= 24 by the construction guard
  std::uint32_t limit = std::uint32_t{1} << jc;
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    bool downset = true;
    for (std::size_t c = 0; c < jc && downset; ++c) {
      if ((mask >> c) & 1u) downset = (down_mask_[c] & ~mask) == 0;
    }
    if (!downset) continue;
    ElemSet ideal(universe_);
    for (std::size_t c = 0; c < jc; ++c) {
      if ((mask >> c) & 1u) ideal |= class_elems_[c];
    }
    if (!fn(ideal)) return;
  }
}

std::vector<ElemSet> IdealFamily::all() const {
  std::vector<ElemSet> out;
  for_each([&](const ElemSet& x) {
    out.push_back(x);
    return true;
  });
  return out;
}

std::size_t IdealFamily::count() const {
  std::size_t c = 0;
  for_each([&](const ElemSet&) {
    ++c;
    return true;
  });
  return c;
}

namespace {

void require_ideal(const FiniteSemigroup& s, const ElemSet& x, const char* which) {
  if (!is_ideal(s, x)) throw NotAnIdeal(which);
}

}  // namespace

bool is_A_minimal(const FiniteSemigroup& s, const GreenSummary& g, const ElemSet& d,
                  const ElemSet& a) {
  require_ideal(s, d, "D");
  require_ideal(s, a, "A");
  if (d.is_subset_of(a)) return false;
  // Every ideal strictly inside D avoiding A would contain some W(u) with
  // u in D\A; conversely W(u) itself is such an ideal unless it is all of D.
  bool minimal = true;
  (d - a).for_each([&](std::size_t u) {
    if (minimal && g.two_sided[u] != d) minimal = false;
  });
  return minimal;
}

bool is_A_minimal_brute(const FiniteSemigroup& s, const IdealFamily& family, const ElemSet& d,
                        const ElemSet& a) {
  require_ideal(s, d, "D");
  require_ideal(s, a, "A");
  if (d.is_subset_of(a)) return false;
  bool minimal = true;
  family.for_each([&](const ElemSet& e) {
    if (e != d && e.is_subset_of(d) && !e.is_subset_of(a)) {
      minimal = false;
      return false;
    }
    return true;
  });
  return minimal;
}

bool is_A_simple(const FiniteSemigroup& s, const GreenSummary& g, const ElemSet& a) {
  require_ideal(s, a, "A");
  if (a == s.full_set()) throw ANotProper();
  bool simple = true;
  a.complement().for_each([&](std::size_t u) {
    if (simple && g.two_sided[u].count() != s.size()) simple = false;
  });
  return simple;
}

bool is_A_simple_brute(const FiniteSemigroup& s, const IdealFamily& family, const ElemSet& a) {
  require_ideal(s, a, "A");
  ElemSet w = s.full_set();
  if (a == w) throw ANotProper();
  bool simple = true;
  family.for_each([&](const ElemSet& e) {
    if (e != w && !e.is_subset_of(a)) {
      simple = false;
      return false;
    }
    return true;
  });
  return simple;
}

bool is_bottleneck(const FiniteSemigroup& s, const GreenSummary& g, const ElemSet& a) {
  require_ideal(s, a, "A");
  bool bottleneck = true;
  a.complement().for_each([&](std::size_t u) {
    if (bottleneck && !a.is_subset_of(g.two_sided[u])) bottleneck = false;
  });
  return bottleneck;
}

bool is_bottleneck_brute(const FiniteSemigroup& s, const IdealFamily& family, const ElemSet& a) {
  require_ideal(s, a, "A");
  bool bottleneck = true;
  family.for_each([&](const ElemSet& e) {
    if (!e.is_subset_of(a) && !a.is_subset_of(e)) {
      bottleneck = false;
      return false;
    }
    return true;
  });
  return bottleneck;
}

bool is_abrhan_minimal(const FiniteSemigroup& s, const IdealFamily& family, const ElemSet& d,
                       const ElemSet& b) {
  require_ideal(s, d, "D");
  if (b.empty()) throw EmptyB();
  if ((d & b).empty()) return false;
  bool minimal = true;
  family.for_each([&](const ElemSet& e) {
    if (e != d && e.is_subset_of(d) && !(e & b).empty()) {
      minimal = false;
      return false;
    }
    return true;
  });
  return minimal;
}

}  // namespace absorb
