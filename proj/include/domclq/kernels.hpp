#pragma once

// Word-level bitset kernels. Every operation has a portable scalar reference
// implementation and, on x86-64, an AVX2 variant selected at runtime. Both
// backends must return identical results for identical inputs.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace domclq::kernels {

using Word = std::uint64_t;

enum class Backend { scalar, avx2 };

struct KernelTable {
  Backend backend;
  std::size_t (*popcount)(const Word* a, std::size_t n);
  std::size_t (*and_popcount)(const Word* a, const Word* b, std::size_t n);
  bool (*intersects)(const Word* a, const Word* b, std::size_t n);
  void (*and_into)(Word* dst, const Word* a, const Word* b, std::size_t n);
  void (*andnot_into)(Word* dst, const Word* a, const Word* b, std::size_t n);
};

const KernelTable& scalar_table() noexcept;

// nullptr when the AVX2 translation unit was not built.
const KernelTable* avx2_table() noexcept;

bool cpu_supports_avx2() noexcept;

// The table used by Bitset. Defaults to the best backend the CPU supports;
// DOMCLQ_KERNELS=scalar in the environment forces the reference kernels.
const KernelTable& active() noexcept;
Backend active_backend() noexcept;

// Throws domclq::Error if the backend is unavailable on this build or CPU.
void set_backend(Backend backend);

std::string_view backend_name(Backend backend) noexcept;

inline std::size_t popcount(std::span<const Word> a) noexcept {
  return active().popcount(a.data(), a.size());
}

inline std::size_t and_popcount(std::span<const Word> a, std::span<const Word> b) noexcept {
  return active().and_popcount(a.data(), b.data(), a.size());
}

inline bool intersects(std::span<const Word> a, std::span<const Word> b) noexcept {
  return active().intersects(a.data(), b.data(), a.size());
}

}  // namespace domclq::kernels
