#include "domclq/kernels.hpp"

#include <bit>

namespace domclq::kernels {
namespace {

std::size_t popcount_scalar(const Word* a, std::size_t n) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < n; ++i) total += static_cast<std::size_t>(std::popcount(a[i]));
  return total;
}

std::size_t and_popcount_scalar(const Word* a, const Word* b, std::size_t n) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < n; ++i) total += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  return total;
}

bool intersects_scalar(const Word* a, const Word* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    if ((a[i] & b[i]) != 0) return true;
  }
  return false;
}

void and_into_scalar(Word* dst, const Word* a, const Word* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = a[i] & b[i];
}

void andnot_into_scalar(Word* dst, const Word* a, const Word* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = a[i] & ~b[i];
}

constexpr KernelTable kScalar{
    Backend::scalar, popcount_scalar, and_popcount_scalar, intersects_scalar,
    and_into_scalar, andnot_into_scalar,
};

}  // namespace

const KernelTable& scalar_table() noexcept { return kScalar; }

}  // namespace domclq::kernels
