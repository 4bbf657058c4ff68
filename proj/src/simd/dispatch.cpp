#include <atomic>

#include "pair014/simd/bitset_kernels.hpp"

namespace pair014::simd {

#if defined(PAIR014_HAVE_AVX2)
namespace avx2 {
const KernelTable& table();
}
#endif
#if defined(PAIR014_HAVE_NEON)
namespace neon {
const KernelTable& table();
}
#endif

namespace {

bool cpu_has_avx2() {
#if defined(PAIR014_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
#else
  return false;
#endif
}

const KernelTable& detect() {
#if defined(PAIR014_HAVE_AVX2)
  if (cpu_has_avx2()) return avx2::table();
#endif
#if defined(PAIR014_HAVE_NEON)
  return neon::table();  // mandatory on AArch64
#endif
  return scalar::table();
}

std::atomic<const KernelTable*>& current() {
  static std::atomic<const KernelTable*> table{&detect()};
  return table;
}

}  // namespace

std::string_view backend_name(Backend b) {
  switch (b) {
    case Backend::scalar: return "scalar";
    case Backend::avx2: return "avx2";
    case Backend::neon: return "neon";
  }
  return "unknown";
}

const KernelTable* table_for(Backend b) {
  switch (b) {
    case Backend::scalar: return &scalar::table();
    case Backend::avx2:
#if defined(PAIR014_HAVE_AVX2)
      if (cpu_has_avx2()) return &avx2::table();
#endif
      return nullptr;
    case Backend::neon:
#if defined(PAIR014_HAVE_NEON)
      return &neon::table();
#else
      return nullptr;
#endif
  }
  return nullptr;
}

const KernelTable& active() { return *current().load(std::memory_order_relaxed); }

Backend active_backend() { return active().backend; }

bool force_backend(Backend b) {
  const KernelTable* t = table_for(b);
  if (t == nullptr) return false;
  current().store(t, std::memory_order_relaxed);
  return true;
}

void reset_backend() { current().store(&detect(), std::memory_order_relaxed); }

}  // namespace pair014::simd
