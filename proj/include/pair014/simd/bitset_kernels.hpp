#pragma once

// Word-parallel kernels over packed 64-bit bitsets.
//
// Every kernel has a portable scalar reference in `scalar::` and optional
// vectorised variants (AVX2 on x86-64, NEON on AArch64). The active table is
// chosen once at startup from the CPU features and can be pinned with
// force_backend() for equivalence testing.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace pair014::simd {

using Word = std::uint64_t;

enum class Backend { scalar, avx2, neon };

std::string_view backend_name(Backend b);

struct KernelTable {
  Backend backend;
  // popcount(a)
  std::uint64_t (*popcount)(const Word* a, std::size_t n);
  // popcount(a & b)
  std::uint64_t (*and_popcount)(const Word* a, const Word* b, std::size_t n);
  // popcount(mask & ~a & ~b)
  std::uint64_t (*andnot2_popcount)(const Word* mask, const Word* a, const Word* b,
                                    std::size_t n);
  // dst |= src
  void (*or_assign)(Word* dst, const Word* src, std::size_t n);
  // dst &= src
  void (*and_assign)(Word* dst, const Word* src, std::size_t n);
  // dst &= ~src
  void (*andnot_assign)(Word* dst, const Word* src, std::size_t n);
  // (a & b) != 0
  bool (*intersects)(const Word* a, const Word* b, std::size_t n);
};

namespace scalar {
const KernelTable& table();
}
/// Table for `b`, or nullptr when the backend is not compiled in or the CPU
/// lacks the instructions.
const KernelTable* table_for(Backend b);

const KernelTable& active();
Backend active_backend();
/// Pins the active backend. Returns false (and changes nothing) if `b` is
/// unavailable on this machine.
bool force_backend(Backend b);
/// Restores the automatically detected backend.
void reset_backend();

inline std::uint64_t popcount(std::span<const Word> a) {
  return active().popcount(a.data(), a.size());
}
inline std::uint64_t and_popcount(std::span<const Word> a, std::span<const Word> b) {
  return active().and_popcount(a.data(), b.data(), a.size());
}
inline std::uint64_t andnot2_popcount(std::span<const Word> mask, std::span<const Word> a,
                                      std::span<const Word> b) {
  return active().andnot2_popcount(mask.data(), a.data(), b.data(), mask.size());
}
inline void or_assign(std::span<Word> dst, std::span<const Word> src) {
  active().or_assign(dst.data(), src.data(), dst.size());
}
inline void and_assign(std::span<Word> dst, std::span<const Word> src) {
  active().and_assign(dst.data(), src.data(), dst.size());
}
inline void andnot_assign(std::span<Word> dst, std::span<const Word> src) {
  active().andnot_assign(dst.data(), src.data(), dst.size());
}
inline bool intersects(std::span<const Word> a, std::span<const Word> b) {
  return active().intersects(a.data(), b.data(), a.size());
}

}  // namespace pair014::simd
