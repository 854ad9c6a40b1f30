#include "walsh/field.hpp"

#include "walsh/error.hpp"
#include "walsh/number_theory.hpp"

namespace walsh {

FieldCtx::FieldCtx(PolyFp modulus)
    : p_(modulus.prime()), f_(static_cast<std::uint64_t>(modulus.degree())), modulus_(std::move(modulus)) {
  if (modulus_.degree() < 1) throw Error(Errc::InvalidInput, "modulus must have positive degree");
  modulus_ = modulus_.monic();
  q_ = big_pow(p_, f_);

  // Newton's identities give the power sums s_j = Tr(x^j) of the roots.
  const auto& g = modulus_.coeffs();
  const auto c = [&](std::uint64_t i) { return g[i]; };  // coefficient of x^i
  trace_form_.assign(f_, 0);
  trace_form_[0] = f_ % p_;
  for (std::uint64_t k = 1; k < f_; ++k) {
    std::uint64_t s = mul_mod(k % p_, c(f_ - k), p_);
    for (std::uint64_t i = 1; i < k; ++i) s = (s + mul_mod(c(f_ - i), trace_form_[k - i], p_)) % p_;
    trace_form_[k] = (p_ - s) % p_;
  }
}

FieldElem FieldCtx::constant(std::uint64_t c) const {
  FieldElem e = zero();
  e.c[0] = c % p_;
  return e;
}

FieldElem FieldCtx::root() const { return from_poly(PolyFp::monomial(p_, 1)); }

FieldElem FieldCtx::from_poly(const PolyFp& x) const {
  const PolyFp r = x % modulus_;
  FieldElem e = zero();
  for (std::size_t i = 0; i < r.coeffs().size(); ++i) e.c[i] = r.coeffs()[i];
  return e;
}

FieldElem FieldCtx::add(const FieldElem& x, const FieldElem& y) const {
  FieldElem r = zero();
  for (std::uint64_t i = 0; i < f_; ++i) r.c[i] = (x.c[i] + y.c[i]) % p_;
  return r;
}

FieldElem FieldCtx::sub(const FieldElem& x, const FieldElem& y) const {
  FieldElem r = zero();
  for (std::uint64_t i = 0; i < f_; ++i) r.c[i] = (x.c[i] + p_ - y.c[i]) % p_;
  return r;
}

FieldElem FieldCtx::mul(const FieldElem& x, const FieldElem& y) const {
  return from_poly(mulmod(to_poly(x), to_poly(y), modulus_));
}

FieldElem FieldCtx::pow(const FieldElem& x, const BigInt& e) const {
  return from_poly(powmod(to_poly(x), e, modulus_));
}

bool FieldCtx::is_zero(const FieldElem& x) const {
  for (auto v : x.c) {
    if (v != 0) return false;
  }
  return true;
}

std::uint64_t FieldCtx::trace(const FieldElem& x) const {
  std::uint64_t t = 0;
  for (std::uint64_t i = 0; i < f_; ++i) t = (t + mul_mod(x.c[i], trace_form_[i], p_)) % p_;
  return t;
}

std::uint64_t FieldCtx::trace_naive(const FieldElem& x) const {
  FieldElem acc = zero();
  FieldElem term = x;
  for (std::uint64_t k = 0; k < f_; ++k) {
    acc = add(acc, term);
    term = pow(term, p_);
  }
  for (std::uint64_t i = 1; i < f_; ++i) {
    if (acc.c[i] != 0) throw Error(Errc::InternalInconsistency, "trace left the prime field");
  }
  return acc.c[0];
}

std::uint64_t FieldCtx::to_index(const FieldElem& x) const {
  if (q_ > BigInt("18446744073709551615")) throw Error(Errc::Unsupported, "field too large to index");
  std::uint64_t idx = 0;
  for (std::uint64_t i = f_; i-- > 0;) idx = idx * p_ + x.c[i];
  return idx;
}

FieldElem FieldCtx::from_index(std::uint64_t index) const {
  FieldElem e = zero();
  for (std::uint64_t i = 0; i < f_; ++i) {
    e.c[i] = index % p_;
    index /= p_;
  }
  return e;
}

bool has_exact_order(const FieldCtx& ctx, const FieldElem& x, const BigInt& n,
                     const std::vector<BigInt>& prime_divisors) {
  const FieldElem one = ctx.one();
  if (!(ctx.pow(x, n) == one)) return false;
  for (const auto& r : prime_divisors) {
    if (ctx.pow(x, BigInt(n / r)) == one) return false;
  }
  return true;
}

namespace {

PolyFp first_irreducible(std::uint64_t p, std::uint64_t f, std::uint64_t seed) {
  if (f == 1) return PolyFp(p, {seed % p, 1});
  // Candidates x^f + (lower part), the lower part enumerated by its base-p
  // index starting from seed and wrapping around.
  const BigInt count = big_pow(p, f);
  BigInt start = BigInt(to_big(seed) % count);
  for (BigInt k = 0; k < count; ++k) {
    BigInt m = BigInt((start + k) % count);
    std::vector<std::uint64_t> c(f + 1, 0);
    c[f] = 1;
    for (std::uint64_t i = 0; i < f; ++i) {
      c[i] = mod_u64(m, p);
      m /= p;
    }
    if (c[0] == 0) continue;
    PolyFp g(p, std::move(c));
    if (is_irreducible(g)) return g;
  }
  throw Error(Errc::InternalInconsistency, "no irreducible polynomial found");
}

std::vector<BigInt> prime_divisors_of(std::uint64_t n) {
  std::vector<BigInt> out;
  for (const auto& pp : factorize(n)) out.push_back(to_big(pp.prime));
  return out;
}

}  // namespace

FieldCtx build_extension(std::uint64_t p, std::uint64_t f, std::uint64_t seed) {
  if (!is_prime(p)) throw Error(Errc::InvalidInput, std::to_string(p) + " is not prime");
  if (f == 0) throw Error(Errc::InvalidInput, "extension degree must be positive");
  return FieldCtx(first_irreducible(p, f, seed));
}

FieldCtx build_field(std::uint64_t p, std::uint64_t f, std::uint64_t seed) {
  FieldCtx ctx = build_extension(p, f, seed);
  const BigInt q1 = ctx.q() - 1;
  if (q1 > BigInt("18446744073709551615")) {
    throw Error(Errc::CannotCertifyPrimitive, "q - 1 exceeds the factorization range");
  }
  const std::uint64_t n = q1.get_ui();
  const std::vector<BigInt> primes = prime_divisors_of(n);
  for (std::uint64_t idx = 1; idx <= n; ++idx) {
    const FieldElem cand = ctx.from_index(idx);
    if (has_exact_order(ctx, cand, q1, primes)) {
      ctx.set_alpha(cand);
      return ctx;
    }
  }
  throw Error(Errc::CannotCertifyPrimitive, "no primitive element found");
}

BetaTable attach_order(const FieldCtx& ctx, std::uint64_t N) {
  const BigInt q1 = ctx.q() - 1;
  if (N == 0 || mod_u64(q1, N) != 0) throw Error(Errc::InvalidInput, "N must divide q - 1");
  const BigInt cofactor = q1 / N;
  const std::vector<BigInt> primes = prime_divisors_of(N);
  BetaTable t;
  t.N = N;
  if (ctx.alpha()) {
    t.beta = ctx.pow(*ctx.alpha(), cofactor);
  } else {
    bool found = false;
    // Candidates 2, 3, ... in the base-p index order, walked with big
    // integers so that huge fields are fine.
    for (std::uint64_t idx = 2; !found; ++idx) {
      std::uint64_t m = idx;
      FieldElem cand = ctx.zero();
      for (std::uint64_t i = 0; i < ctx.f() && m != 0; ++i) {
        cand.c[i] = m % ctx.p();
        m /= ctx.p();
      }
      const FieldElem y = ctx.pow(cand, cofactor);
      if (has_exact_order(ctx, y, to_big(N), primes)) {
        t.beta = y;
        found = true;
      }
      if (idx > 1000000) throw Error(Errc::InternalInconsistency, "no element of order N found");
    }
  }
  FieldElem x = ctx.one();
  for (std::uint64_t i = 0; i < N; ++i) {
    t.index.emplace(x, i);
    t.powers.push_back(x);
    x = ctx.mul(x, t.beta);
  }
  if (!(x == ctx.one()) || t.index.size() != N) {
    throw Error(Errc::InternalInconsistency, "beta does not have order N");
  }
  return t;
}

std::uint64_t classify(const FieldCtx& ctx, const BetaTable& table, const FieldElem& x) {
  if (ctx.is_zero(x)) throw Error(Errc::ZeroInput, "classify(0) is undefined");
  const FieldElem y = ctx.pow(x, BigInt((ctx.q() - 1) / table.N));
  const auto it = table.index.find(y);
  if (it == table.index.end()) throw Error(Errc::InternalInconsistency, "x^((q-1)/N) is not a power of beta");
  return it->second;
}

}  // namespace walsh
