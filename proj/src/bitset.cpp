#include "posetforge/bitset.hpp"

#include <cassert>

namespace posetforge {

void Bitset::set_all() {
  for (auto& w : words_) w = ~std::uint64_t{0};
  if (const std::size_t tail = width_ & 63; tail != 0 && !words_.empty())
    words_.back() &= (std::uint64_t{1} << tail) - 1;
}

void Bitset::clear() {
  for (auto& w : words_) w = 0;
}

std::size_t Bitset::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += std::popcount(w);
  return c;
}

bool Bitset::any() const {
  for (auto w : words_)
    if (w) return true;
  return false;
}

bool Bitset::is_subset_of(const Bitset& o) const {
  assert(width_ == o.width_);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~o.words_[i]) return false;
  return true;
}

bool Bitset::intersects(const Bitset& o) const {
  assert(width_ == o.width_);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & o.words_[i]) return true;
  return false;
}

std::size_t Bitset::intersection_count(const Bitset& o) const {
  assert(width_ == o.width_);
  std::size_t c = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) c += std::popcount(words_[i] & o.words_[i]);
  return c;
}

Bitset& Bitset::operator|=(const Bitset& o) {
  assert(width_ == o.width_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
  return *this;
}

Bitset& Bitset::operator&=(const Bitset& o) {
  assert(width_ == o.width_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  return *this;
}

Bitset& Bitset::operator-=(const Bitset& o) {
  assert(width_ == o.width_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
  return *this;
}

std::vector<int> Bitset::to_indices() const {
  std::vector<int> out;
  out.reserve(count());
  for_each([&](int i) { out.push_back(i); });
  return out;
}

Bitset Bitset::from_indices(std::size_t width, const std::vector<int>& idx) {
  Bitset b(width);
  for (int i : idx) b.set(static_cast<std::size_t>(i));
  return b;
}

std::size_t Bitset::find_from(std::size_t i) const {
  if (i >= width_) return npos;
  std::size_t w = i >> 6;
  std::uint64_t word = words_[w] & (~std::uint64_t{0} << (i & 63));
  while (true) {
    if (word) return w * 64 + std::countr_zero(word);
    if (++w >= words_.size()) return npos;
    word = words_[w];
  }
}

}  // namespace posetforge
