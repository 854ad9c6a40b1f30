#include "walsh/kernels.hpp"

namespace walsh::kernels {

void count_binary(const FieldCtx& ctx, const BinaryTables& tables, std::uint64_t N, std::uint64_t s_begin,
                  std::uint64_t s_end, CountMatrix& out) {
  if (s_begin >= s_end) return;
  std::uint32_t x = pack_binary(ctx.pow(*ctx.alpha(), s_begin));
  const auto& t = tables.mul_alpha;
  std::uint64_t cls = s_begin % N;
  for (std::uint64_t s = s_begin; s < s_end; ++s) {
    ++out.at(cls, static_cast<std::uint64_t>(__builtin_parity(x & tables.trace_mask)));
    if (++cls == N) cls = 0;
    x = t[0][x & 0xFFU] ^ t[1][(x >> 8) & 0xFFU] ^ t[2][(x >> 16) & 0xFFU] ^ t[3][x >> 24];
  }
}

}  // namespace walsh::kernels
