#include "absorb/semigroup.hpp"

#include <unordered_map>

namespace absorb {

FiniteSemigroup FiniteSemigroup::validate(const std::vector<std::vector<long long>>& grid,
                                          std::optional<std::vector<std::string>> labels) {
  std::size_t n = grid.size();
  if (n == 0) throw BadParameter("table must have at least one row");
  std::vector<elem> packed;
  packed.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (grid[i].size() != n) throw BadParameter("table is not square");
    for (std::size_t j = 0; j < n; ++j) {
      long long v = grid[i][j];
      if (v < 0 || static_cast<std::size_t>(v) >= n) throw OutOfRangeEntry(i, j, v, n);
      packed.push_back(static_cast<elem>(v));
    }
  }
  return validate_packed(n, std::move(packed), std::move(labels));
}

FiniteSemigroup FiniteSemigroup::validate_packed(std::size_t n, std::vector<elem> table,
                                                 std::optional<std::vector<std::string>> labels) {
  if (n == 0 || table.size() != n * n) throw BadParameter("packed table has wrong size");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (table[i * n + j] >= n) {
        throw OutOfRangeEntry(i, j, static_cast<long long>(table[i * n + j]), n);
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      elem ij = table[i * n + j];
      for (std::size_t k = 0; k < n; ++k) {
        if (table[ij * n + k] != table[i * n + table[j * n + k]]) {
          throw AssociativityViolation(i, j, k);
        }
      }
    }
  }
  if (labels && labels->size() != n) throw BadParameter("label count does not match n");
  return FiniteSemigroup(n, std::move(table), std::move(labels));
}

std::string FiniteSemigroup::label(std::size_t i) const {
  if (labels_) return (*labels_)[i];
  return std::to_string(i);
}

std::string FiniteSemigroup::label_set(const ElemSet& set) const {
  std::string out = "{";
  bool first = true;
  set.for_each([&](std::size_t e) {
    if (!first) out += ",";
    first = false;
    out += label(e);
  });
  out += "}";
  return out;
}

bool is_commutative(const FiniteSemigroup& s) {
  std::size_t n = s.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (s.sum(i, j) != s.sum(j, i)) return false;
    }
  }
  return true;
}

ElemSet idempotents(const FiniteSemigroup& s) {
  ElemSet out(s.size());
  for (std::size_t e = 0; e < s.size(); ++e) {
    if (s.sum(e, e) == e) out.add(e);
  }
  return out;
}

std::optional<std::size_t> absorbing_element(const FiniteSemigroup& s) {
  if (s.size() < 2) return std::nullopt;
  for (std::size_t a = 0; a < s.size(); ++a) {
    bool ok = true;
    for (std::size_t w = 0; w < s.size() && ok; ++w) {
      ok = s.sum(a, w) == a && s.sum(w, a) == a;
    }
    if (ok) return a;
  }
  return std::nullopt;
}

std::pair<FiniteSemigroup, std::vector<std::size_t>> subsemigroup(const FiniteSemigroup& s,
                                                                  const ElemSet& members) {
  std::vector<std::size_t> to_old = members.elements();
  if (to_old.empty()) throw BadParameter("subsemigroup needs a non-empty member set");
  std::unordered_map<std::size_t, std::uint32_t> to_new;
  for (std::size_t i = 0; i < to_old.size(); ++i) to_new[to_old[i]] = static_cast<std::uint32_t>(i);

  std::size_t m = to_old.size();
  std::vector<FiniteSemigroup::elem> table(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      std::size_t prod = s.sum(to_old[i], to_old[j]);
      auto it = to_new.find(prod);
      if (it == to_new.end()) throw NotClosed(to_old[i], to_old[j]);
      table[i * m + j] = it->second;
    }
  }
  std::optional<std::vector<std::string>> labels;
  if (s.has_labels()) {
    labels.emplace();
    for (std::size_t old : to_old) labels->push_back(s.label(old));
  }
  return {FiniteSemigroup::validate_packed(m, std::move(table), std::move(labels)),
          std::move(to_old)};
}

}  // namespace absorb
