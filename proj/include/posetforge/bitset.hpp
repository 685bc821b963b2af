#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace posetforge {

/// Fixed-width set of small integers backed by 64-bit words.
///
/// Every element set in the library (order rows, ideals, atom sets) is one of
/// these; all binary operations require equal widths.
class Bitset {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  Bitset() = default;
  explicit Bitset(std::size_t width)
      : width_(width), words_((width + 63) / 64, 0) {}

  std::size_t width() const { return width_; }

  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  void set_all();
  void clear();

  std::size_t count() const;
  bool any() const;
  bool none() const { return !any(); }

  bool is_subset_of(const Bitset& other) const;
  bool intersects(const Bitset& other) const;
  std::size_t intersection_count(const Bitset& other) const;

  std::size_t find_first() const { return find_from(0); }
  std::size_t find_next(std::size_t i) const { return find_from(i + 1); }

  Bitset& operator|=(const Bitset& o);
  Bitset& operator&=(const Bitset& o);
  Bitset& operator-=(const Bitset& o);  // set difference

  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator-(Bitset a, const Bitset& b) { return a -= b; }
  friend bool operator==(const Bitset&, const Bitset&) = default;

  std::vector<int> to_indices() const;
  static Bitset from_indices(std::size_t width, const std::vector<int>& idx);

  const std::vector<std::uint64_t>& words() const { return words_; }
  std::vector<std::uint64_t>& words() { return words_; }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t word = words_[w];
      while (word) {
        const int b = std::countr_zero(word);
        f(static_cast<int>(w * 64 + b));
        word &= word - 1;
      }
    }
  }

 private:
  std::size_t find_from(std::size_t i) const;

  std::size_t width_ = 0;
  std::vector<std::uint64_t> words_;
};

using ElementSet = Bitset;

}  // namespace posetforge
