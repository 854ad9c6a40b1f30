#include <doctest.h>

#include "helpers.hpp"
#include "walsh/kernels.hpp"

using namespace walsh;

namespace {

CountMatrix serial(const FieldCtx& ctx, std::uint64_t N, KernelKind kind) { return count_matrix(ctx, N, kind, 1); }

}  // namespace

TEST_CASE("binary packing") {
  const FieldCtx ctx = build_field(2, 10, 0);
  const BinaryTables t = make_binary_tables(ctx);
  CHECK(t.f == 10);
  for (std::uint64_t idx : {1u, 5u, 700u, 1023u}) {
    const FieldElem x = ctx.from_index(idx);
    CHECK(pack_binary(x) == idx);
    CHECK(static_cast<std::uint64_t>(__builtin_parity(pack_binary(x) & t.trace_mask)) == ctx.trace(x));
  }
}

TEST_CASE("kernels agree on binary fields") {
  const std::pair<std::uint64_t, std::uint64_t> cases[] = {{10, 33}, {12, 45}, {14, 3}, {18, 27}, {21, 49}};
  for (const auto& [f, N] : cases) {
    CAPTURE(f);
    const FieldCtx ctx = build_field(2, f, 0);
    const CountMatrix reference = serial(ctx, N, KernelKind::Scalar);
    CHECK(reference.total() + 1 == (std::uint64_t{1} << f));
    CHECK(serial(ctx, N, KernelKind::Binary) == reference);
    if (kernels::avx2_supported()) CHECK(serial(ctx, N, KernelKind::Avx2) == reference);
    CHECK(serial(ctx, N, KernelKind::Auto) == reference);
  }
}

TEST_CASE("chunk boundaries inside the vector kernel") {
  if (!kernels::avx2_supported()) return;
  const FieldCtx ctx = build_field(2, 16, 0);
  const BinaryTables t = make_binary_tables(ctx);
  for (const auto& [b, e] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{{0, 1}, {3, 200}, {17, 65535}, {9000, 9011}}) {
    CountMatrix x(5, 2), y(5, 2);
    kernels::count_binary(ctx, t, 5, b, e, x);
    kernels::count_avx2(ctx, t, 5, b, e, y);
    CAPTURE(b);
    CHECK(x == y);
  }
}

TEST_CASE("thread count does not change the result") {
  const FieldCtx ctx = build_field(2, 20, 0);
  const CountMatrix one = count_matrix(ctx, 25, KernelKind::Auto, 1);
  for (unsigned threads : {2u, 3u, 8u}) CHECK(count_matrix(ctx, 25, KernelKind::Auto, threads) == one);
  const FieldCtx odd = build_field(3, 9, 0);
  const CountMatrix s1 = count_matrix(odd, 13, KernelKind::Scalar, 1);
  CHECK(count_matrix(odd, 13, KernelKind::Scalar, 4) == s1);
}

TEST_CASE("odd characteristic counts") {
  const FieldCtx ctx = build_field(5, 4, 0);
  const CountMatrix m = count_matrix(ctx, 8);
  for (std::uint64_t i = 0; i < 8; ++i) CHECK(m.row_sum(i) == 78);
  // every nonzero trace value is hit equally often overall
  std::uint64_t by_t[5] = {};
  for (std::uint64_t i = 0; i < 8; ++i)
    for (std::uint64_t t = 0; t < 5; ++t) by_t[t] += m.at(i, t);
  CHECK(by_t[0] == 124);
  for (int t = 1; t < 5; ++t) CHECK(by_t[t] == 125);
}

TEST_CASE("kernel preconditions") {
  CHECK_ERRC(count_matrix(build_field(3, 5, 0), 11, KernelKind::Binary), Errc::Unsupported);
  CHECK_ERRC(count_matrix(build_field(2, 10, 0), 7), Errc::InvalidInput);
  CHECK_ERRC(count_matrix(build_extension(2, 10, 0), 3), Errc::InvalidInput);
  CountMatrix a(3, 2), b(4, 2);
  CHECK_ERRC(a += b, Errc::DomainMismatch);
}
