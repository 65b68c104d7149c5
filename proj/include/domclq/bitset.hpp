#pragma once

#include "domclq/kernels.hpp"

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace domclq {

// Fixed-size dense bitset. Vertex sets use bit v for vertex v (1-based), so a
// set over n vertices is a Bitset of n + 1 bits with bit 0 always clear.
class Bitset {
 public:
  using Word = kernels::Word;
  static constexpr std::size_t kWordBits = 64;

  Bitset() = default;
  explicit Bitset(std::size_t bits) : bits_(bits), words_((bits + kWordBits - 1) / kWordBits, 0) {}

  std::size_t size() const noexcept { return bits_; }
  std::span<const Word> words() const noexcept { return words_; }

  void set(std::size_t i) noexcept { words_[i / kWordBits] |= Word{1} << (i % kWordBits); }
  void reset(std::size_t i) noexcept { words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits)); }
  bool test(std::size_t i) const noexcept { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }

  void clear() noexcept;
  // Sets bits [first, size()).
  void fill_from(std::size_t first) noexcept;

  std::size_t count() const noexcept { return kernels::popcount(words_); }
  std::size_t count_and(const Bitset& other) const noexcept { return kernels::and_popcount(words_, other.words_); }
  bool intersects(const Bitset& other) const noexcept { return kernels::intersects(words_, other.words_); }
  bool none() const noexcept;

  // *this = a & b, *this = a & ~b. All three must have the same size.
  void assign_and(const Bitset& a, const Bitset& b) noexcept;
  void assign_andnot(const Bitset& a, const Bitset& b) noexcept;

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word word = words_[w];
      while (word != 0) {
        const auto bit = static_cast<std::size_t>(std::countr_zero(word));
        fn(w * kWordBits + bit);
        word &= word - 1;
      }
    }
  }

  std::vector<int> to_vector() const;

  friend bool operator==(const Bitset&, const Bitset&) = default;

 private:
  std::size_t bits_ = 0;
  std::vector<Word> words_;
};

}  // namespace domclq
