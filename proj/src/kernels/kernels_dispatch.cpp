#include "domclq/error.hpp"
#include "domclq/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace domclq::kernels {

#if defined(DOMCLQ_HAVE_AVX2)
const KernelTable* avx2_table_impl() noexcept;
#endif

const KernelTable* avx2_table() noexcept {
#if defined(DOMCLQ_HAVE_AVX2)
  return avx2_table_impl();
#else
  return nullptr;
#endif
}

bool cpu_supports_avx2() noexcept {
#if defined(DOMCLQ_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
#else
  return false;
#endif
}

namespace {

const KernelTable* pick_default() noexcept {
  if (const char* env = std::getenv("DOMCLQ_KERNELS"); env != nullptr && std::string(env) == "scalar") {
    return &scalar_table();
  }
  if (cpu_supports_avx2()) return avx2_table();
  return &scalar_table();
}

std::atomic<const KernelTable*>& slot() noexcept {
  static std::atomic<const KernelTable*> table{pick_default()};
  return table;
}

}  // namespace

const KernelTable& active() noexcept { return *slot().load(std::memory_order_relaxed); }

Backend active_backend() noexcept { return active().backend; }

void set_backend(Backend backend) {
  switch (backend) {
    case Backend::scalar:
      slot().store(&scalar_table());
      return;
    case Backend::avx2:
      if (avx2_table() == nullptr || !cpu_supports_avx2()) {
        throw Error("avx2 kernels are not available on this build or CPU");
      }
      slot().store(avx2_table());
      return;
  }
}

std::string_view backend_name(Backend backend) noexcept {
  return backend == Backend::avx2 ? "avx2" : "scalar";
}

}  // namespace domclq::kernels
