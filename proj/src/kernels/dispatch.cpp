#include <algorithm>
#include <thread>

#include "walsh/error.hpp"
#include "walsh/kernels.hpp"

namespace walsh {

namespace kernels {

bool avx2_supported() {
#if defined(WALSH_HAVE_AVX2_KERNEL)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

#if !defined(WALSH_HAVE_AVX2_KERNEL)
void count_avx2(const FieldCtx&, const BinaryTables&, std::uint64_t, std::uint64_t, std::uint64_t, CountMatrix&) {
  throw Error(Errc::Unsupported, "AVX2 kernel not built for this target");
}
#endif

}  // namespace kernels

KernelKind select_kernel(const FieldCtx& ctx) {
  if (ctx.p() == 2 && ctx.f() <= 32) return kernels::avx2_supported() ? KernelKind::Avx2 : KernelKind::Binary;
  return KernelKind::Scalar;
}

CountMatrix count_matrix(const FieldCtx& ctx, std::uint64_t N, KernelKind kind, unsigned threads) {
  if (!ctx.alpha()) throw Error(Errc::InvalidInput, "field has no primitive element");
  if (ctx.q() > BigInt("18446744073709551615")) throw Error(Errc::Unsupported, "field too large to enumerate");
  const std::uint64_t order = BigInt(ctx.q() - 1).get_ui();
  if (N == 0 || order % N != 0) throw Error(Errc::InvalidInput, "N must divide q - 1");
  if (kind == KernelKind::Auto) kind = select_kernel(ctx);
  if (kind == KernelKind::Avx2 && !kernels::avx2_supported()) {
    throw Error(Errc::Unsupported, "this CPU does not support AVX2");
  }
  BinaryTables tables;
  if (kind != KernelKind::Scalar) tables = make_binary_tables(ctx);

  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  constexpr std::uint64_t kMinChunk = 1ULL << 16;
  const std::uint64_t chunks = std::max<std::uint64_t>(1, std::min<std::uint64_t>(threads, order / kMinChunk));
  std::vector<CountMatrix> parts(chunks, CountMatrix(N, ctx.p()));

  auto run = [&](std::uint64_t c) {
    const std::uint64_t lo = order * c / chunks;
    const std::uint64_t hi = order * (c + 1) / chunks;
    switch (kind) {
      case KernelKind::Scalar: kernels::count_scalar(ctx, N, lo, hi, parts[c]); break;
      case KernelKind::Binary: kernels::count_binary(ctx, tables, N, lo, hi, parts[c]); break;
      default: kernels::count_avx2(ctx, tables, N, lo, hi, parts[c]); break;
    }
  };
  if (chunks == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(chunks);
    for (std::uint64_t c = 0; c < chunks; ++c) {
      pool.emplace_back([&, c] {
        try {
          run(c);
        } catch (...) {
          errors[c] = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }
  CountMatrix total(N, ctx.p());
  for (const auto& part : parts) total += part;
  return total;
}

}  // namespace walsh
