#include "absorb/elem_set.hpp"

namespace absorb {

namespace {
std::size_t word_count(std::size_t universe) { return (universe + 63) / 64; }
}  // namespace

ElemSet::ElemSet(std::size_t universe) : universe_(universe), words_(word_count(universe), 0) {}

ElemSet ElemSet::full(std::size_t universe) {
  ElemSet s(universe);
  for (std::size_t i = 0; i < universe; ++i) s.add(i);
  return s;
}

ElemSet ElemSet::of(std::size_t universe, std::initializer_list<std::size_t> elems) {
  ElemSet s(universe);
  for (std::size_t e : elems) s.add(e);
  return s;
}

std::size_t ElemSet::count() const {
  std::size_t c = 0;
  for (std::uint64_t w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
  return c;
}

bool ElemSet::empty() const {
  for (std::uint64_t w : words_)
    if (w != 0) return false;
  return true;
}

bool ElemSet::contains(std::size_t i) const {
  check_index(i);
  return (words_[i / 64] >> (i % 64)) & 1u;
}

void ElemSet::add(std::size_t i) {
  check_index(i);
  words_[i / 64] |= std::uint64_t{1} << (i % 64);
}

void ElemSet::remove(std::size_t i) {
  check_index(i);
  words_[i / 64] &= ~(std::uint64_t{1} << (i % 64));
}

ElemSet& ElemSet::operator|=(const ElemSet& other) {
  check_same(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
  return *this;
}

ElemSet& ElemSet::operator&=(const ElemSet& other) {
  check_same(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  return *this;
}

ElemSet& ElemSet::operator-=(const ElemSet& other) {
  check_same(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~other.words_[w];
  return *this;
}

ElemSet ElemSet::complement() const {
  ElemSet out(universe_);
  for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] = ~words_[w];
  // mask tail bits beyond the universe
  if (universe_ % 64 != 0 && !out.words_.empty()) {
    out.words_.back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
  }
  return out;
}

bool ElemSet::is_subset_of(const ElemSet& other) const {
  check_same(other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & ~other.words_[w]) != 0) return false;
  }
  return true;
}

bool ElemSet::operator==(const ElemSet& other) const {
  return universe_ == other.universe_ && words_ == other.words_;
}

std::vector<std::size_t> ElemSet::elements() const {
  std::vector<std::size_t> out;
  out.reserve(count());
  for_each([&](std::size_t i) { out.push_back(i); });
  return out;
}

std::size_t ElemSet::min() const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) return w * 64 + static_cast<std::size_t>(__builtin_ctzll(words_[w]));
  }
  return universe_;
}

std::size_t ElemSet::hash() const {
  std::size_t h = universe_;
  for (std::uint64_t w : words_) {
    h ^= static_cast<std::size_t>(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

void ElemSet::check_same(const ElemSet& other) const {
  if (universe_ != other.universe_) throw UniverseMismatch(universe_, other.universe_);
}

void ElemSet::check_index(std::size_t i) const {
  if (i >= universe_) throw IndexOutOfRange(i, universe_);
}

}  // namespace absorb
