#include <immintrin.h>

#include "walsh/kernels.hpp"

namespace walsh::kernels {

// Eight lanes walk exponents s0 + j*L, j = 0..7, with L a multiple of N, so
// every lane sits in the same class at each step and the per-step count is
// a popcount of the trace bits.
void count_avx2(const FieldCtx& ctx, const BinaryTables& tables, std::uint64_t N, std::uint64_t s_begin,
                std::uint64_t s_end, CountMatrix& out) {
  if (s_begin >= s_end) return;
  constexpr std::uint64_t kLanes = 8;
  const std::uint64_t L = (s_end - s_begin) / (kLanes * N) * N;
  if (L == 0) {
    count_binary(ctx, tables, N, s_begin, s_end, out);
    return;
  }

  alignas(32) std::uint32_t start[kLanes];
  const FieldElem step = ctx.pow(*ctx.alpha(), L);
  FieldElem lane = ctx.pow(*ctx.alpha(), s_begin);
  for (std::uint64_t j = 0; j < kLanes; ++j) {
    start[j] = pack_binary(lane);
    lane = ctx.mul(lane, step);
  }

  const int* t0 = reinterpret_cast<const int*>(tables.mul_alpha[0].data());
  const int* t1 = reinterpret_cast<const int*>(tables.mul_alpha[1].data());
  const int* t2 = reinterpret_cast<const int*>(tables.mul_alpha[2].data());
  const int* t3 = reinterpret_cast<const int*>(tables.mul_alpha[3].data());
  const __m256i byte_mask = _mm256_set1_epi32(0xFF);
  const __m256i trace_mask = _mm256_set1_epi32(static_cast<int>(tables.trace_mask));
  const bool high_bytes = tables.f > 24;

  __m256i x = _mm256_load_si256(reinterpret_cast<const __m256i*>(start));
  std::uint64_t cls = s_begin % N;
  for (std::uint64_t m = 0; m < L; ++m) {
    __m256i v = _mm256_and_si256(x, trace_mask);
    v = _mm256_xor_si256(v, _mm256_srli_epi32(v, 16));
    v = _mm256_xor_si256(v, _mm256_srli_epi32(v, 8));
    v = _mm256_xor_si256(v, _mm256_srli_epi32(v, 4));
    v = _mm256_xor_si256(v, _mm256_srli_epi32(v, 2));
    v = _mm256_xor_si256(v, _mm256_srli_epi32(v, 1));
    const int bits = _mm256_movemask_ps(_mm256_castsi256_ps(_mm256_slli_epi32(v, 31)));
    const auto ones = static_cast<std::uint64_t>(__builtin_popcount(static_cast<unsigned>(bits)));
    out.at(cls, 1) += ones;
    out.at(cls, 0) += kLanes - ones;
    if (++cls == N) cls = 0;

    __m256i r = _mm256_i32gather_epi32(t0, _mm256_and_si256(x, byte_mask), 4);
    r = _mm256_xor_si256(r, _mm256_i32gather_epi32(t1, _mm256_and_si256(_mm256_srli_epi32(x, 8), byte_mask), 4));
    r = _mm256_xor_si256(r, _mm256_i32gather_epi32(t2, _mm256_and_si256(_mm256_srli_epi32(x, 16), byte_mask), 4));
    if (high_bytes) r = _mm256_xor_si256(r, _mm256_i32gather_epi32(t3, _mm256_srli_epi32(x, 24), 4));
    x = r;
  }
  count_binary(ctx, tables, N, s_begin + kLanes * L, s_end, out);
}

}  // namespace walsh::kernels
