#include "absorb/quasi.hpp"

#include <nlohmann/json.hpp>

namespace absorb {

namespace {

void require_idempotent(const FiniteSemigroup& s, std::size_t e) {
  if (e >= s.size()) throw IndexOutOfRange(e, s.size());
  if (s.sum(e, e) != e) throw NotIdempotent(e);
}

bool rees_leq_unchecked(const FiniteSemigroup& s, std::size_t e, std::size_t f) {
  return s.sum(e, f) == e && s.sum(f, e) == e;
}

bool totally_ordered(const FiniteSemigroup& s, const ElemSet& idems) {
  auto v = idems.elements();
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      if (!rees_leq_unchecked(s, v[i], v[j]) && !rees_leq_unchecked(s, v[j], v[i])) return false;
    }
  }
  return true;
}

}  // namespace

bool rees_leq(const FiniteSemigroup& s, std::size_t e, std::size_t f) {
  require_idempotent(s, e);
  require_idempotent(s, f);
  return rees_leq_unchecked(s, e, f);
}

ElemSet e_below(const FiniteSemigroup& s, std::size_t e) {
  require_idempotent(s, e);
  ElemSet out(s.size());
  idempotents(s).for_each([&](std::size_t f) {
    if (rees_leq_unchecked(s, f, e)) out.add(f);
  });
  return out;
}

ElemSet e_lin(const FiniteSemigroup& s) {
  ElemSet out(s.size());
  idempotents(s).for_each([&](std::size_t e) {
    if (totally_ordered(s, e_below(s, e))) out.add(e);
  });
  return out;
}

StepwiseResult stepwise_quasi_absorbing(const FiniteSemigroup& s) {
  StepwiseResult res{ElemSet(s.size()), {}};
  ElemSet remaining = s.full_set();
  for (;;) {
    std::vector<std::uint32_t> stage;
    remaining.for_each([&](std::size_t cand) {
      bool absorbs = true;
      remaining.for_each([&](std::size_t w) {
        if (absorbs && (s.sum(w, cand) != cand || s.sum(cand, w) != cand)) absorbs = false;
      });
      if (absorbs) stage.push_back(static_cast<std::uint32_t>(cand));
    });
    if (stage.empty()) break;
    for (std::uint32_t e : stage) {
      res.set.add(e);
      remaining.remove(e);
    }
    res.stages.push_back(std::move(stage));
  }
  return res;
}

namespace {

bool chain_below_is_finite(const ElemSet& below) {
  // Subsets of a finite universe are finite; the clause only bites in the
  // symbolic chain analyzer, which shares this predicate's wording.
  return below.count() < static_cast<std::size_t>(-1);
}

ElemSet quasi_absorbing_filter(const FiniteSemigroup& s, bool require_finite_chain) {
  ElemSet out(s.size());
  e_lin(s).for_each([&](std::size_t alpha) {
    ElemSet below = e_below(s, alpha);
    if (require_finite_chain && !chain_below_is_finite(below)) return;
    bool absorbs = true;
    below.complement().for_each([&](std::size_t w) {
      if (absorbs && (s.sum(w, alpha) != alpha || s.sum(alpha, w) != alpha)) absorbs = false;
    });
    if (absorbs) out.add(alpha);
  });
  return out;
}

}  // namespace

ElemSet a_fin(const FiniteSemigroup& s) { return quasi_absorbing_filter(s, true); }

ElemSet a_w(const FiniteSemigroup& s) { return quasi_absorbing_filter(s, false); }

ElemSet primitives(const FiniteSemigroup& s, const ElemSet& a) {
  if (!is_ideal(s, a)) throw NotAnIdeal("A");
  ElemSet idems = idempotents(s);
  ElemSet out(s.size());
  (idems - a).for_each([&](std::size_t e) {
    bool primitive = true;
    idems.for_each([&](std::size_t f) {
      if (primitive && rees_leq_unchecked(s, f, e) && f != e && !a.contains(f)) primitive = false;
    });
    if (primitive) out.add(e);
  });
  return out;
}

QuasiReport quasi_report(const FiniteSemigroup& s) {
  QuasiReport rep;
  ElemSet idems = idempotents(s);
  auto v = idems.elements();
  for (std::size_t e : v) {
    for (std::size_t f : v) {
      if (e != f && rees_leq_unchecked(s, e, f)) {
        rep.rees_order.emplace_back(static_cast<std::uint32_t>(e), static_cast<std::uint32_t>(f));
      }
    }
  }
  rep.e_lin = e_lin(s);
  auto stepwise = stepwise_quasi_absorbing(s);
  rep.a_s = stepwise.set;
  rep.stages = std::move(stepwise.stages);
  rep.a_fin = a_fin(s);
  rep.a_w = a_w(s);
  rep.primitives_a_w = primitives(s, rep.a_w);
  return rep;
}

nlohmann::ordered_json QuasiReport::to_json(const FiniteSemigroup& s) const {
  auto named = [&](const ElemSet& set) {
    std::vector<std::string> out;
    set.for_each([&](std::size_t e) { out.push_back(s.label(e)); });
    return out;
  };
  nlohmann::ordered_json j;
  j["A_s"] = named(a_s);
  std::vector<std::vector<std::string>> stage_lists;
  for (const auto& stage : stages) {
    std::vector<std::string> names;
    for (std::uint32_t e : stage) names.push_back(s.label(e));
    stage_lists.push_back(std::move(names));
  }
  j["stages"] = stage_lists;
  j["A_fin"] = named(a_fin);
  j["A"] = named(a_w);
  j["E_lin"] = named(e_lin);
  j["primitives"] = nlohmann::ordered_json{{"A(W)", named(primitives_a_w)}};
  return j;
}

}  // namespace absorb
