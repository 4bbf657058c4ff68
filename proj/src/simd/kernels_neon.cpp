#include "pair014/simd/bitset_kernels.hpp"

#include <arm_neon.h>

namespace pair014::simd::neon {
namespace {

inline std::uint64_t lane_count(uint64x2_t v) {
  // vcnt per byte, then widen-add up to one 64-bit value per lane.
  const uint8x16_t bytes = vcntq_u8(vreinterpretq_u8_u64(v));
  const uint64x2_t sums = vpaddlq_u32(vpaddlq_u16(vpaddlq_u8(bytes)));
  return vgetq_lane_u64(sums, 0) + vgetq_lane_u64(sums, 1);
}

std::uint64_t popcount(const Word* a, std::size_t n) {
  std::uint64_t total = 0;
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) total += lane_count(vld1q_u64(a + i));
  for (; i < n; ++i) total += __builtin_popcountll(a[i]);
  return total;
}

std::uint64_t and_popcount(const Word* a, const Word* b, std::size_t n) {
  std::uint64_t total = 0;
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) total += lane_count(vandq_u64(vld1q_u64(a + i), vld1q_u64(b + i)));
  for (; i < n; ++i) total += __builtin_popcountll(a[i] & b[i]);
  return total;
}

std::uint64_t andnot2_popcount(const Word* mask, const Word* a, const Word* b, std::size_t n) {
  std::uint64_t total = 0;
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    // vbicq(x, y) = x & ~y
    const uint64x2_t either = vorrq_u64(vld1q_u64(a + i), vld1q_u64(b + i));
    total += lane_count(vbicq_u64(vld1q_u64(mask + i), either));
  }
  for (; i < n; ++i) total += __builtin_popcountll(mask[i] & ~a[i] & ~b[i]);
  return total;
}

void or_assign(Word* dst, const Word* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) vst1q_u64(dst + i, vorrq_u64(vld1q_u64(dst + i), vld1q_u64(src + i)));
  for (; i < n; ++i) dst[i] |= src[i];
}

void and_assign(Word* dst, const Word* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) vst1q_u64(dst + i, vandq_u64(vld1q_u64(dst + i), vld1q_u64(src + i)));
  for (; i < n; ++i) dst[i] &= src[i];
}

void andnot_assign(Word* dst, const Word* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) vst1q_u64(dst + i, vbicq_u64(vld1q_u64(dst + i), vld1q_u64(src + i)));
  for (; i < n; ++i) dst[i] &= ~src[i];
}

bool intersects(const Word* a, const Word* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const uint64x2_t both = vandq_u64(vld1q_u64(a + i), vld1q_u64(b + i));
    if (vgetq_lane_u64(both, 0) | vgetq_lane_u64(both, 1)) return true;
  }
  for (; i < n; ++i)
    if (a[i] & b[i]) return true;
  return false;
}

}  // namespace

const KernelTable& table() {
  static constexpr KernelTable kTable{Backend::neon,    popcount,   and_popcount,
                                      andnot2_popcount, or_assign,  and_assign,
                                      andnot_assign,    intersects};
  return kTable;
}

}  // namespace pair014::simd::neon
