#pragma once

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

#include "walsh/field.hpp"

namespace walsh {

// counts[i][t] = #{x = alpha^s : s = i (mod N), Tr(x) = t} over a range
// of exponents s.
class CountMatrix {
 public:
  CountMatrix() = default;
  CountMatrix(std::uint64_t N, std::uint64_t p) : N_(N), p_(p), data_(N * p, 0) {}

  std::uint64_t N() const { return N_; }
  std::uint64_t p() const { return p_; }
  std::uint64_t& at(std::uint64_t i, std::uint64_t t) { return data_[i * p_ + t]; }
  std::uint64_t at(std::uint64_t i, std::uint64_t t) const { return data_[i * p_ + t]; }
  std::uint64_t row_sum(std::uint64_t i) const;
  std::uint64_t total() const;

  CountMatrix& operator+=(const CountMatrix& o);
  bool operator==(const CountMatrix&) const = default;

 private:
  std::uint64_t N_ = 0;
  std::uint64_t p_ = 0;
  std::vector<std::uint64_t> data_;
};

enum class KernelKind { Auto, Scalar, Binary, Avx2 };

std::string_view to_string(KernelKind kind) noexcept;

// Bit-packed F_{2^f}, f <= 32: multiplication by alpha as four byte-indexed
// tables, trace as the parity of a mask.
struct BinaryTables {
  std::uint32_t f = 0;
  std::uint32_t trace_mask = 0;
  std::array<std::array<std::uint32_t, 256>, 4> mul_alpha{};
};

BinaryTables make_binary_tables(const FieldCtx& ctx);
std::uint32_t pack_binary(const FieldElem& x);

namespace kernels {

// All kernels accumulate the exponent range [s_begin, s_end) into out.
void count_scalar(const FieldCtx& ctx, std::uint64_t N, std::uint64_t s_begin, std::uint64_t s_end,
                  CountMatrix& out);
void count_binary(const FieldCtx& ctx, const BinaryTables& tables, std::uint64_t N, std::uint64_t s_begin,
                  std::uint64_t s_end, CountMatrix& out);
void count_avx2(const FieldCtx& ctx, const BinaryTables& tables, std::uint64_t N, std::uint64_t s_begin,
                std::uint64_t s_end, CountMatrix& out);

bool avx2_supported();

}  // namespace kernels

// Kernel used by Auto: Avx2 when p = 2, f <= 32 and the CPU has AVX2;
// Binary when p = 2, f <= 32; Scalar otherwise.
KernelKind select_kernel(const FieldCtx& ctx);

// One pass over F_q^*; threads = 0 picks the hardware concurrency. Chunks
// are merged in order, so the result does not depend on the thread count.
CountMatrix count_matrix(const FieldCtx& ctx, std::uint64_t N, KernelKind kind = KernelKind::Auto,
                         unsigned threads = 0);

}  // namespace walsh
