#include "walsh/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "walsh/error.hpp"
#include "walsh/number_theory.hpp"

namespace walsh {

std::vector<std::uint64_t> in_field_trace_row(const FieldCtx& ctx, const BetaTable& beta) {
  std::vector<std::uint64_t> row;
  row.reserve(beta.N);
  for (const auto& x : beta.powers) row.push_back(ctx.trace(x));
  return row;
}

std::vector<SpectrumLine> BruteSpectrum::lines() const {
  std::vector<SpectrumLine> out{{kZeroLabel, at_zero, BigInt(1)}};
  for (std::uint64_t k = 0; k < per_k.size(); ++k) {
    out.push_back({std::string(to_string(classify_residue(k, l))), per_k[k], per_class_count});
  }
  return out;
}

bool BruteSpectrum::class_constant() const {
  for (std::uint64_t k = 0; k < per_k.size(); ++k) {
    for (std::uint64_t k2 = 0; k2 < k; ++k2) {
      if (classify_residue(k, l) == classify_residue(k2, l) && !(per_k[k] == per_k[k2])) return false;
    }
  }
  return true;
}

BruteSpectrum brute_walsh_spectrum(const CountMatrix& counts, const std::vector<std::uint64_t>& trace_row,
                                   std::uint64_t p, std::uint64_t l) {
  const std::uint64_t N = counts.N();
  if (trace_row.size() != N || N != l * l || counts.p() != p) {
    throw Error(Errc::DomainMismatch, "count matrix, trace row and (p, l) disagree");
  }
  // f^(b) = 1 + sum_i sum_t counts[i][t] zeta^(Tr(beta^(i-k)) + t)
  std::vector<AlgNum> per_k;
  per_k.reserve(N);
  for (std::uint64_t k = 0; k < N; ++k) {
    std::vector<BigInt> weights(p, 0);
    weights[0] = 1;
    for (std::uint64_t i = 0; i < N; ++i) {
      const std::uint64_t shift = trace_row[(i + N - k) % N];
      for (std::uint64_t t = 0; t < p; ++t) {
        const std::uint64_t c = counts.at(i, t);
        if (c != 0) weights[(shift + t) % p] += to_big(c);
      }
    }
    per_k.push_back(AlgNum::from_cyc(CycEl::from_exponent_weights(p, weights), l));
  }
  // f^(0) = 1 + sum_i #{x : x^((q-1)/N) = beta^i} zeta^Tr(beta^i)
  std::vector<BigInt> w0(p, 0);
  w0[0] = 1;
  for (std::uint64_t i = 0; i < N; ++i) w0[trace_row[i]] += to_big(counts.row_sum(i));
  return BruteSpectrum{p, l, std::move(per_k), AlgNum::from_cyc(CycEl::from_exponent_weights(p, w0), l),
                       to_big(counts.row_sum(0))};
}

AlgNum brute_power_sum(const CountMatrix& counts, std::uint64_t l) {
  // x -> x^N is N-to-1 from F_q^* onto the class-0 coset.
  const std::uint64_t p = counts.p();
  std::vector<BigInt> w(p, 0);
  for (std::uint64_t t = 0; t < p; ++t) w[t] = to_big(counts.at(0, t)) * counts.N();
  w[0] += 1;
  return AlgNum::from_cyc(CycEl::from_exponent_weights(p, w), l);
}

MpComplex brute_gauss_sum(const CountMatrix& counts, std::uint64_t j, unsigned digits) {
  PrecisionScope scope(digits);
  const std::uint64_t N = counts.N(), p = counts.p();
  std::vector<MpComplex> zp;
  for (std::uint64_t t = 0; t < p; ++t) zp.push_back(unit_root(p, static_cast<std::int64_t>(t)));
  MpComplex acc;
  for (std::uint64_t i = 0; i < N; ++i) {
    MpComplex inner;
    for (std::uint64_t t = 0; t < p; ++t) {
      if (counts.at(i, t) != 0) inner += zp[t] * MpFloat(counts.at(i, t));
    }
    acc += unit_root(N, static_cast<std::int64_t>(mul_mod(i, j % N, N))) * inner;
  }
  return acc;
}

std::vector<std::uint64_t> power_index_table(const FieldCtx& ctx) {
  if (!ctx.alpha()) throw Error(Errc::InvalidInput, "field has no primitive element");
  if (ctx.q() > BigInt(100000000)) throw Error(Errc::Unsupported, "power table limited to q <= 10^8");
  const std::uint64_t order = BigInt(ctx.q() - 1).get_ui();
  const std::uint64_t p = ctx.p();
  const std::size_t f = ctx.f();
  std::vector<std::uint64_t> m(f * f);
  for (std::size_t j = 0; j < f; ++j) {
    FieldElem e = ctx.zero();
    e.c[j] = 1;
    const FieldElem img = ctx.mul(e, *ctx.alpha());
    for (std::size_t i = 0; i < f; ++i) m[j * f + i] = img.c[i];
  }
  std::vector<std::uint64_t> out(order);
  std::vector<std::uint64_t> x = ctx.one().c, next(f);
  for (std::uint64_t s = 0; s < order; ++s) {
    std::uint64_t idx = 0;
    for (std::size_t i = f; i-- > 0;) idx = idx * p + x[i];
    out[s] = idx;
    std::fill(next.begin(), next.end(), 0);
    for (std::size_t j = 0; j < f; ++j) {
      if (x[j] == 0) continue;
      for (std::size_t i = 0; i < f; ++i) next[i] = (next[i] + x[j] * m[j * f + i]) % p;
    }
    x.swap(next);
  }
  return out;
}

namespace {

// Tr of every element, indexed by element index.
std::vector<std::uint64_t> trace_by_index(const FieldCtx& ctx) {
  const std::uint64_t q = ctx.q().get_ui();
  std::vector<std::uint64_t> tr(q);
  for (std::uint64_t idx = 0; idx < q; ++idx) tr[idx] = ctx.trace(ctx.from_index(idx));
  return tr;
}

MpComplex psi_sum(const std::vector<std::uint64_t>& weights_by_trace, std::uint64_t p) {
  MpComplex acc;
  for (std::uint64_t t = 0; t < p; ++t) {
    if (weights_by_trace[t] != 0) acc += unit_root(p, static_cast<std::int64_t>(t)) * MpFloat(weights_by_trace[t]);
  }
  return acc;
}

}  // namespace

MpComplex brute_quadratic_gauss(const FieldCtx& ctx, unsigned digits) {
  if (ctx.p() == 2) throw Error(Errc::Unsupported, "no quadratic character in characteristic 2");
  PrecisionScope scope(digits);
  const auto powers = power_index_table(ctx);
  const auto tr = trace_by_index(ctx);
  std::vector<std::uint64_t> even(ctx.p(), 0), odd(ctx.p(), 0);
  for (std::uint64_t s = 0; s < powers.size(); ++s) ++(s % 2 == 0 ? even : odd)[tr[powers[s]]];
  return psi_sum(even, ctx.p()) - psi_sum(odd, ctx.p());
}

CycloTable brute_cyclotomic_numbers(std::uint64_t p, std::uint64_t e, std::uint64_t seed) {
  if (p == 2) throw Error(Errc::Unsupported, "order-2 classes need odd q");
  const FieldCtx ctx = build_field(p, e, seed);
  const auto powers = power_index_table(ctx);
  const std::uint64_t q = ctx.q().get_ui();
  std::vector<std::int8_t> cls(q, -1);  // -1 marks zero
  for (std::uint64_t s = 0; s < powers.size(); ++s) cls[powers[s]] = static_cast<std::int8_t>(s % 2);
  CycloTable table{};
  for (std::uint64_t idx = 1; idx < q; ++idx) {
    // 1 + x only touches the constant coordinate, the least significant digit
    const std::uint64_t c0 = idx % p;
    const std::uint64_t shifted = idx - c0 + (c0 + 1) % p;
    if (cls[shifted] < 0) continue;
    ++table[static_cast<std::size_t>(cls[idx])][static_cast<std::size_t>(cls[shifted])];
  }
  return table;
}

CycloTable cyclotomic_numbers_formula(const BigInt& q) {
  if (mod_u64(q, 2) == 0) throw Error(Errc::Unsupported, "order-2 classes need odd q");
  const std::uint64_t qq = q.get_ui();
  if (qq % 4 == 1) {
    const std::uint64_t other = (qq - 1) / 4;
    return CycloTable{{{(qq - 5) / 4, other}, {other, other}}};
  }
  const std::uint64_t other = (qq - 3) / 4;
  return CycloTable{{{other, (qq + 1) / 4}, {other, other}}};
}

std::vector<PrimePower> odd_prime_power_sample(std::uint64_t bound, std::size_t count, std::uint64_t seed) {
  std::vector<PrimePower> primes, proper;
  for (std::uint64_t p = 3; p < bound; p += 2) {
    if (!is_prime(p)) continue;
    primes.push_back({p, 1});
    unsigned e = 2;
    for (std::uint64_t q = p * p; q < bound; q *= p, ++e) proper.push_back({p, e});
  }
  std::mt19937_64 rng(seed);
  std::shuffle(primes.begin(), primes.end(), rng);
  std::shuffle(proper.begin(), proper.end(), rng);
  const std::size_t want_proper = std::min(proper.size(), count / 2);
  if (want_proper + primes.size() < count) throw Error(Errc::InvalidInput, "not enough prime powers below bound");
  std::vector<PrimePower> out(proper.begin(), proper.begin() + static_cast<std::ptrdiff_t>(want_proper));
  out.insert(out.end(), primes.begin(), primes.begin() + static_cast<std::ptrdiff_t>(count - want_proper));
  const auto value = [](const PrimePower& x) {
    std::uint64_t v = 1;
    for (unsigned i = 0; i < x.exponent; ++i) v *= x.prime;
    return v;
  };
  std::sort(out.begin(), out.end(), [&](const PrimePower& x, const PrimePower& y) { return value(x) < value(y); });
  return out;
}

CharacterSumCheck character_sum_check(const FieldCtx& ctx, std::uint64_t n, const FieldElem& a, const FieldElem& b,
                            unsigned digits, double tolerance) {
  if (ctx.is_zero(a)) throw Error(Errc::ZeroInput, "a must be nonzero");
  PrecisionScope scope(digits);
  const auto powers = power_index_table(ctx);
  const auto tr = trace_by_index(ctx);
  const std::uint64_t order = powers.size(), p = ctx.p();
  const std::uint64_t ia = ctx.to_index(a), ib = ctx.to_index(b);
  const std::uint64_t log_a = static_cast<std::uint64_t>(std::find(powers.begin(), powers.end(), ia) - powers.begin());
  const FieldElem bb = ctx.from_index(ib);

  // lhs: x = 0 contributes psi(b); x = alpha^m gives a x^n = alpha^(log a + m n).
  std::vector<std::uint64_t> lhs_w(p, 0);
  ++lhs_w[tr[ib]];
  for (std::uint64_t m = 0; m < order; ++m) {
    const std::uint64_t e = (log_a + mul_mod(m, n % order, order)) % order;
    const FieldElem y = ctx.add(ctx.from_index(powers[e]), bb);
    ++lhs_w[ctx.trace(y)];
  }
  CharacterSumCheck r;
  r.lhs = psi_sum(lhs_w, p);

  const std::uint64_t s = std::gcd(n, order);
  MpComplex inner;
  for (std::uint64_t j = 1; j < s; ++j) {
    MpComplex g;
    for (std::uint64_t m = 0; m < order; ++m) {
      g += unit_root(s, static_cast<std::int64_t>(mul_mod(j, m % s, s))) *
           unit_root(p, static_cast<std::int64_t>(tr[powers[m]]));
    }
    const auto conj_chi = unit_root(s, -static_cast<std::int64_t>(mul_mod(j, log_a % s, s)));
    inner += conj_chi * g;
  }
  r.rhs = unit_root(p, static_cast<std::int64_t>(tr[ib])) * inner;
  const MpFloat diff = (r.lhs - r.rhs).abs();
  const MpFloat scale = std::max(MpFloat(1), r.lhs.abs());
  r.agree = diff <= scale * MpFloat(tolerance);
  return r;
}

namespace {

FieldCtx residue_field(const Params& params, std::uint64_t seed) {
  const std::uint64_t d = (params.l - 1) / 2;
  const auto factors = equal_degree_factors(cyclotomic_prime(params.p, params.l), d, seed);
  return FieldCtx(factors.front());
}

// sum_{u in H1_0} xi^u, which lies in F_p.
std::uint64_t half_period(const Params& params, const FieldCtx& ctx, const FieldElem& xi) {
  FieldElem s = ctx.zero();
  for (std::uint64_t u : residue_partition(params.l).h1_0) s = ctx.add(s, ctx.pow(xi, u));
  for (std::uint64_t i = 1; i < ctx.f(); ++i) {
    if (s.c[i] != 0) throw Error(Errc::InternalInconsistency, "Gauss period is not in F_p");
  }
  return s.c[0];
}

int delta_from_period(std::uint64_t s, std::uint64_t p) {
  if (s == 0) return -1;
  if (s == p - 1) return 1;
  throw Error(Errc::InternalInconsistency, "period sum " + std::to_string(s) + " is neither 0 nor -1");
}

}  // namespace

int determine_delta(const Params& params, std::uint64_t seed) {
  if (!params.special()) throw Error(Errc::Unsupported, "delta is defined only when -l = 1 (mod p)");
  const FieldCtx sub = residue_field(params, seed);
  return delta_from_period(half_period(params, sub, sub.root()), params.p);
}

int determine_delta_anchored(const Params& params, const FieldCtx& ctx, const BetaTable& beta) {
  if (!params.special()) throw Error(Errc::Unsupported, "delta is defined only when -l = 1 (mod p)");
  return delta_from_period(half_period(params, ctx, beta.powers[params.l]), params.p);
}

std::uint64_t subfield_epsilon(const Params& params, std::uint64_t seed) {
  if (params.special()) throw Error(Errc::Unsupported, "epsilon is defined only when -l != 1 (mod p)");
  const FieldCtx sub = residue_field(params, seed);
  return half_period(params, sub, sub.root());
}

std::uint64_t sqrt_minus_l_anchored(const Params& params, const FieldCtx& ctx, const BetaTable& beta) {
  if (params.special()) throw Error(Errc::Unsupported, "the Special case is parametrised by delta");
  const std::uint64_t p = params.p;
  const std::uint64_t eps = mul_mod(ctx.trace(beta.powers[params.l]), inverse_mod(params.l % p, p), p);
  return (2 * eps + 1) % p;
}

bool oracle_feasible(const Params& params, const BigInt& verify_bound) {
  return params.q() <= verify_bound && params.q() < BigInt("18446744073709551615");
}

Params resolve_convention(const Params& params, const BigInt& verify_bound, std::uint64_t seed) {
  if (oracle_feasible(params, verify_bound)) {
    const FieldCtx ctx = build_field(params.p, params.f, seed);
    const BetaTable beta = attach_order(ctx, params.N);
    if (params.special()) return with_delta(params, determine_delta_anchored(params, ctx, beta), "alpha-anchored");
    return with_sqrt_minus_l(params, sqrt_minus_l_anchored(params, ctx, beta), "alpha-anchored");
  }
  if (params.special()) return with_delta(params, determine_delta(params, seed), "residue-field factor");
  return with_sqrt_minus_l(params, params.arith.sqrt_minus_l, "canonical root");
}

}  // namespace walsh
