#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "absorb/errors.hpp"

namespace absorb {

/// A subset of the elements {0, ..., n-1} of a fixed semigroup universe,
/// stored as a bitset. All binary operations require both operands to be
/// bound to the same universe size and throw UniverseMismatch otherwise.
class ElemSet {
 public:
  ElemSet() = default;
  explicit ElemSet(std::size_t universe);

  static ElemSet full(std::size_t universe);
  static ElemSet of(std::size_t universe, std::initializer_list<std::size_t> elems);

  std::size_t universe() const { return universe_; }
  std::size_t count() const;
  bool empty() const;

  bool contains(std::size_t i) const;
  void add(std::size_t i);
  void remove(std::size_t i);

  ElemSet& operator|=(const ElemSet& other);
  ElemSet& operator&=(const ElemSet& other);
  ElemSet& operator-=(const ElemSet& other);

  friend ElemSet operator|(ElemSet a, const ElemSet& b) { return a |= b; }
  friend ElemSet operator&(ElemSet a, const ElemSet& b) { return a &= b; }
  friend ElemSet operator-(ElemSet a, const ElemSet& b) { return a -= b; }

  /// Complement with respect to the bound universe.
  ElemSet complement() const;

  bool is_subset_of(const ElemSet& other) const;
  bool operator==(const ElemSet& other) const;
  bool operator!=(const ElemSet& other) const { return !(*this == other); }

  /// Members in increasing order.
  std::vector<std::size_t> elements() const;

  /// Calls f(i) for each member in increasing order.
  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        unsigned tz = static_cast<unsigned>(__builtin_ctzll(bits));
        f(w * 64 + tz);
        bits &= bits - 1;
      }
    }
  }

  /// Smallest member; universe() when empty.
  std::size_t min() const;

  /// Stable hash of the membership words (used for class grouping).
  std::size_t hash() const;

 private:
  void check_same(const ElemSet& other) const;
  void check_index(std::size_t i) const;

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace absorb
