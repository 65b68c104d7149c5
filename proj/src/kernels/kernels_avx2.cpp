// Compiled with -mavx2 -mpopcnt. Nothing in here may be called unless
// cpu_supports_avx2() returned true.

#include "domclq/kernels.hpp"

#include <immintrin.h>

namespace domclq::kernels {
namespace {

constexpr std::size_t kWordsPerVec = 4;

// Nibble-lookup population count per byte (Mula et al.), then horizontal
// byte sums into four 64-bit lanes via SAD against zero.
inline __m256i popcount_lanes(__m256i v) {
  const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                       0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low_mask = _mm256_set1_epi8(0x0f);
  const __m256i lo = _mm256_and_si256(v, low_mask);
  const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
  const __m256i bytes = _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
  return _mm256_sad_epu8(bytes, _mm256_setzero_si256());
}

inline std::size_t horizontal_sum(__m256i acc) {
  alignas(32) std::uint64_t lanes[kWordsPerVec];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  return static_cast<std::size_t>(lanes[0] + lanes[1] + lanes[2] + lanes[3]);
}

inline __m256i load(const Word* p) { return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p)); }

std::size_t popcount_avx2(const Word* a, std::size_t n) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + kWordsPerVec <= n; i += kWordsPerVec) acc = _mm256_add_epi64(acc, popcount_lanes(load(a + i)));
  std::size_t total = horizontal_sum(acc);
  for (; i < n; ++i) total += static_cast<std::size_t>(_mm_popcnt_u64(a[i]));
  return total;
}

std::size_t and_popcount_avx2(const Word* a, const Word* b, std::size_t n) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + kWordsPerVec <= n; i += kWordsPerVec) {
    acc = _mm256_add_epi64(acc, popcount_lanes(_mm256_and_si256(load(a + i), load(b + i))));
  }
  std::size_t total = horizontal_sum(acc);
  for (; i < n; ++i) total += static_cast<std::size_t>(_mm_popcnt_u64(a[i] & b[i]));
  return total;
}

bool intersects_avx2(const Word* a, const Word* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + kWordsPerVec <= n; i += kWordsPerVec) {
    if (!_mm256_testz_si256(load(a + i), load(b + i))) return true;
  }
  for (; i < n; ++i) {
    if ((a[i] & b[i]) != 0) return true;
  }
  return false;
}

void and_into_avx2(Word* dst, const Word* a, const Word* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + kWordsPerVec <= n; i += kWordsPerVec) {
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_and_si256(load(a + i), load(b + i)));
  }
  for (; i < n; ++i) dst[i] = a[i] & b[i];
}

void andnot_into_avx2(Word* dst, const Word* a, const Word* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + kWordsPerVec <= n; i += kWordsPerVec) {
    // _mm256_andnot_si256(x, y) computes ~x & y.
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_andnot_si256(load(b + i), load(a + i)));
  }
  for (; i < n; ++i) dst[i] = a[i] & ~b[i];
}

constexpr KernelTable kAvx2{
    Backend::avx2, popcount_avx2, and_popcount_avx2, intersects_avx2, and_into_avx2, andnot_into_avx2,
};

}  // namespace

const KernelTable* avx2_table_impl() noexcept { return &kAvx2; }

}  // namespace domclq::kernels
