#include "domclq/bitset.hpp"

#include <algorithm>

namespace domclq {

void Bitset::clear() noexcept { std::fill(words_.begin(), words_.end(), Word{0}); }

void Bitset::fill_from(std::size_t first) noexcept {
  for (std::size_t i = first; i < bits_; ++i) set(i);
}

bool Bitset::none() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

void Bitset::assign_and(const Bitset& a, const Bitset& b) noexcept {
  kernels::active().and_into(words_.data(), a.words_.data(), b.words_.data(), words_.size());
}

void Bitset::assign_andnot(const Bitset& a, const Bitset& b) noexcept {
  kernels::active().andnot_into(words_.data(), a.words_.data(), b.words_.data(), words_.size());
}

std::vector<int> Bitset::to_vector() const {
  std::vector<int> out;
  for_each([&](std::size_t i) { out.push_back(static_cast<int>(i)); });
  return out;
}

}  // namespace domclq
