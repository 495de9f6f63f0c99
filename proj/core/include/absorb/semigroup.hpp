#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "absorb/elem_set.hpp"
#include "absorb/errors.hpp"

namespace absorb {

/// A finite semigroup presented by its Cayley table. Elements are the dense
/// indices 0..n-1; entry (i,j) of the table is the element i + j. Instances
/// are immutable after construction and safe to share between threads.
///
/// Construction always goes through validate(), which checks that every
/// entry lies in [0, n) and that the operation is associative, reporting the
/// first offending cell or triple in lexicographic order.
class FiniteSemigroup {
 public:
  using elem = std::uint32_t;

  /// Validates a raw grid and builds the semigroup. Throws OutOfRangeEntry or
  /// AssociativityViolation. Labels, when given, must have one entry per
  /// element and are presentation-only.
  static FiniteSemigroup validate(const std::vector<std::vector<long long>>& grid,
                                  std::optional<std::vector<std::string>> labels = std::nullopt);

  /// Same validation, table already in packed row-major form.
  static FiniteSemigroup validate_packed(std::size_t n, std::vector<elem> table,
                                         std::optional<std::vector<std::string>> labels =
                                             std::nullopt);

  std::size_t size() const { return n_; }

  elem sum(std::size_t i, std::size_t j) const { return table_[i * n_ + j]; }

  const std::vector<elem>& table() const { return table_; }

  bool has_labels() const { return labels_.has_value(); }
  const std::optional<std::vector<std::string>>& labels() const { return labels_; }

  /// Display label of an element: the stored label, or the decimal index.
  std::string label(std::size_t i) const;

  /// Renders a set of elements as {a,b,c} using labels.
  std::string label_set(const ElemSet& set) const;

  ElemSet empty_set() const { return ElemSet(n_); }
  ElemSet full_set() const { return ElemSet::full(n_); }

  bool operator==(const FiniteSemigroup& other) const {
    return n_ == other.n_ && table_ == other.table_;
  }

 private:
  FiniteSemigroup(std::size_t n, std::vector<elem> table,
                  std::optional<std::vector<std::string>> labels)
      : n_(n), table_(std::move(table)), labels_(std::move(labels)) {}

  std::size_t n_ = 0;
  std::vector<elem> table_;
  std::optional<std::vector<std::string>> labels_;
};

bool is_commutative(const FiniteSemigroup& s);

/// E(W): the set of elements e with e + e = e.
ElemSet idempotents(const FiniteSemigroup& s);

/// The unique absorbing element of s, if one exists. Following the
/// convention that an absorbing element requires at least two elements,
/// a singleton semigroup reports nullopt (callers that care can flag it).
std::optional<std::size_t> absorbing_element(const FiniteSemigroup& s);

/// Materializes a subset closed under + as a semigroup of its own.
/// Returns the restricted semigroup and the map from new index to old index.
/// Throws NotClosed (with an offending pair, in original indices) otherwise.
std::pair<FiniteSemigroup, std::vector<std::size_t>> subsemigroup(const FiniteSemigroup& s,
                                                                  const ElemSet& members);

}  // namespace absorb
