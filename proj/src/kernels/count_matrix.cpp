#include "walsh/error.hpp"
#include "walsh/kernels.hpp"

namespace walsh {

std::uint64_t CountMatrix::row_sum(std::uint64_t i) const {
  std::uint64_t s = 0;
  for (std::uint64_t t = 0; t < p_; ++t) s += at(i, t);
  return s;
}

std::uint64_t CountMatrix::total() const {
  std::uint64_t s = 0;
  for (auto v : data_) s += v;
  return s;
}

CountMatrix& CountMatrix::operator+=(const CountMatrix& o) {
  if (o.N_ != N_ || o.p_ != p_) throw Error(Errc::DomainMismatch, "count matrices of different shape");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

std::string_view to_string(KernelKind kind) noexcept {
  switch (kind) {
    case KernelKind::Auto: return "auto";
    case KernelKind::Scalar: return "scalar";
    case KernelKind::Binary: return "binary";
    case KernelKind::Avx2: return "avx2";
  }
  return "?";
}

BinaryTables make_binary_tables(const FieldCtx& ctx) {
  if (ctx.p() != 2 || ctx.f() > 32) throw Error(Errc::Unsupported, "binary kernel needs p = 2 and f <= 32");
  if (!ctx.alpha()) throw Error(Errc::InvalidInput, "field has no primitive element");
  BinaryTables t;
  t.f = static_cast<std::uint32_t>(ctx.f());
  for (std::uint32_t j = 0; j < t.f; ++j) {
    if (ctx.trace_form()[j] != 0) t.trace_mask |= 1U << j;
  }
  // image of each basis vector x^j under multiplication by alpha
  std::vector<std::uint32_t> column(t.f);
  for (std::uint32_t j = 0; j < t.f; ++j) {
    FieldElem e = ctx.zero();
    e.c[j] = 1;
    column[j] = pack_binary(ctx.mul(e, *ctx.alpha()));
  }
  for (std::uint32_t byte = 0; byte < 4; ++byte) {
    for (std::uint32_t v = 0; v < 256; ++v) {
      std::uint32_t acc = 0;
      for (std::uint32_t bit = 0; bit < 8; ++bit) {
        const std::uint32_t j = byte * 8 + bit;
        if (j < t.f && ((v >> bit) & 1U)) acc ^= column[j];
      }
      t.mul_alpha[byte][v] = acc;
    }
  }
  return t;
}

std::uint32_t pack_binary(const FieldElem& x) {
  std::uint32_t v = 0;
  for (std::size_t j = 0; j < x.c.size(); ++j) {
    if (x.c[j] & 1U) v |= 1U << j;
  }
  return v;
}

}  // namespace walsh
