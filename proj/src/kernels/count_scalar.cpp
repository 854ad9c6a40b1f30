#include "walsh/error.hpp"
#include "walsh/kernels.hpp"

namespace walsh::kernels {

// Reference kernel for any field: multiplication by alpha as an f x f
// matrix over F_p, trace as a dot product.
void count_scalar(const FieldCtx& ctx, std::uint64_t N, std::uint64_t s_begin, std::uint64_t s_end,
                  CountMatrix& out) {
  if (!ctx.alpha()) throw Error(Errc::InvalidInput, "field has no primitive element");
  if (s_begin >= s_end) return;
  const std::uint64_t p = ctx.p();
  const std::size_t f = ctx.f();
  std::vector<std::uint64_t> m(f * f);  // m[j*f + i]: coordinate i of x^j * alpha
  for (std::size_t j = 0; j < f; ++j) {
    FieldElem e = ctx.zero();
    e.c[j] = 1;
    const FieldElem img = ctx.mul(e, *ctx.alpha());
    for (std::size_t i = 0; i < f; ++i) m[j * f + i] = img.c[i];
  }
  const auto& tf = ctx.trace_form();

  std::vector<std::uint64_t> x = ctx.pow(*ctx.alpha(), s_begin).c;
  std::vector<std::uint64_t> next(f);
  std::uint64_t cls = s_begin % N;
  for (std::uint64_t s = s_begin; s < s_end; ++s) {
    std::uint64_t tr = 0;
    for (std::size_t i = 0; i < f; ++i) tr += x[i] * tf[i] % p;
    ++out.at(cls, tr % p);
    if (++cls == N) cls = 0;

    std::fill(next.begin(), next.end(), 0);
    for (std::size_t j = 0; j < f; ++j) {
      if (x[j] == 0) continue;
      const std::uint64_t xj = x[j];
      const std::uint64_t* row = &m[j * f];
      for (std::size_t i = 0; i < f; ++i) next[i] = (next[i] + xj * row[i]) % p;
    }
    x.swap(next);
  }
}

}  // namespace walsh::kernels
