#include "walsh/closed_form.hpp"

#include <algorithm>
#include <map>

#include "walsh/error.hpp"
#include "walsh/gauss.hpp"
#include "walsh/number_theory.hpp"

namespace walsh {

namespace {

std::size_t idx(ClassLabel c) { return static_cast<std::size_t>(c); }

void require_resolved(const Params& params) {
  if (!params.arith.resolved()) {
    throw Error(Errc::UnresolvedConvention,
                "delta is not fixed for (" + std::to_string(params.p) + "," + std::to_string(params.l) + ")");
  }
}

BigRational q_rat(std::int64_t num, std::int64_t den = 1) {
  return make_rational(to_big_signed(num), to_big_signed(den));
}

struct Ctx {
  std::uint64_t p, l, N;
  AlgNum one, s;  // 1 and sqrt(-l)
  AlgNum z(std::uint64_t t) const { return AlgNum::zeta_pow(p, l, static_cast<std::int64_t>(t)); }
  AlgNum c(const BigRational& r) const { return AlgNum::rational(p, l, r); }
};

Ctx make_ctx(const Params& params) {
  return Ctx{params.p, params.l, params.N, AlgNum::rational(params.p, params.l, 1),
             AlgNum::sqrt_minus_l(params.p, params.l)};
}

// Exponents Tr(1), Tr(beta^{l u}) for u in H1_0 and in H1_1 (Generic case).
struct GenericExps {
  std::uint64_t c0, e1, e2;
};

GenericExps generic_exponents(const Params& params) {
  const TraceTable t = trace_beta_table(params);
  return {t.entry(ClassLabel::Zero), t.entry(ClassLabel::LH1_0), t.entry(ClassLabel::LH1_1)};
}

}  // namespace

TraceTable trace_beta_table(const Params& params) {
  require_resolved(params);
  const std::uint64_t p = params.p, l = params.l;
  TraceTable t;
  t.p = p;
  t.l = l;
  if (params.special()) {
    t.entries[idx(ClassLabel::Zero)] = 1;
    t.entries[idx(params.arith.delta == 1 ? ClassLabel::LH1_0 : ClassLabel::LH1_1)] = 1;
    return t;
  }
  const std::uint64_t eps = mul_mod((params.arith.sqrt_minus_l + p - 1) % p, inverse_mod(2, p), p);
  t.epsilon = eps;
  t.entries[idx(ClassLabel::Zero)] = (l * (l - 1) / 2) % p;
  t.entries[idx(ClassLabel::LH1_0)] = mul_mod(l % p, eps, p);
  t.entries[idx(ClassLabel::LH1_1)] = (p - mul_mod(l % p, (1 + eps) % p, p)) % p;
  return t;
}

ISums i_sums(const Params& params, ClassLabel k) {
  require_resolved(params);
  const Ctx x = make_ctx(params);
  const std::int64_t l = static_cast<std::int64_t>(params.l);
  ISums r{k, AlgNum(x.p, x.l), AlgNum(x.p, x.l), AlgNum(x.p, x.l), AlgNum(x.p, x.l), AlgNum(x.p, x.l)};
  const AlgNum eta0 = (x.s - x.one) * q_rat(1, 2);   // (-1 + sqrt(-l))/2
  const AlgNum eta1 = (-x.s - x.one) * q_rat(1, 2);  // (-1 - sqrt(-l))/2
  const AlgNum plus = (x.one + x.s) * q_rat(1, 2);   // (1 + sqrt(-l))/2
  const AlgNum minus = (x.one - x.s) * q_rat(1, 2);  // (1 - sqrt(-l))/2

  if (!params.special()) {
    const auto [c0, e1, e2] = generic_exponents(params);
    const AlgNum z0 = x.z(c0), z1 = x.z(e1), z2 = x.z(e2);
    const BigRational half_l1 = q_rat(l - 1, 2), tri = q_rat(l * (l - 1), 2);
    r.I0 = z0 + (z1 + z2) * half_l1 + x.c(q_rat(l * (l - 1)));
    const AlgNum shared = z0 * half_l1 + (z1 + z2) * (half_l1 * half_l1) - x.c(tri);
    switch (k) {
      case ClassLabel::Zero:
        r.I1_0 = r.I1_1 = shared;
        r.I2_0 = (z0 + eta1 * z1 + eta0 * z2) * tri;
        r.I2_1 = (z0 + eta0 * z1 + eta1 * z2) * tri;
        break;
      case ClassLabel::LH1_0:
        r.I1_0 = r.I1_1 = shared;
        r.I2_0 = eta1 * z0 * q_rat(l) + z2 * q_rat(l * l + l, 4) + z1 * (plus * plus) * q_rat(l);
        r.I2_1 = eta0 * z0 * q_rat(l) + z2 * q_rat(l * l + l, 4) + z1 * (minus * minus) * q_rat(l);
        break;
      case ClassLabel::LH1_1:
        r.I1_0 = r.I1_1 = shared;
        r.I2_0 = eta0 * z0 * q_rat(l) + z1 * q_rat(l * l + l, 4) + z2 * (minus * minus) * q_rat(l);
        r.I2_1 = eta1 * z0 * q_rat(l) + z1 * q_rat(l * l + l, 4) + z2 * (plus * plus) * q_rat(l);
        break;
      case ClassLabel::H2_0:
        r.I1_0 = plus * q_rat(l) + eta1 * (z1 + z2) * half_l1 + eta1 * z0;
        r.I1_1 = minus * q_rat(l) + eta0 * (z1 + z2) * half_l1 + eta0 * z0;
        break;
      case ClassLabel::H2_1:
        r.I1_0 = minus * q_rat(l) + eta0 * (z1 + z2) * half_l1 + eta0 * z0;
        r.I1_1 = plus * q_rat(l) + eta1 * (z1 + z2) * half_l1 + eta1 * z0;
        break;
    }
    return r;
  }

  // Special case: -l = 1 (mod p); delta = -1 and +1 differ by swapping the
  // roles of (1 +- sqrt(-l))/2 and of l*H1_0 / l*H1_1.
  const int delta = params.arith.delta;
  const AlgNum zm = x.z(1) - x.one;  // zeta_p - 1
  const AlgNum mz = -zm;
  const AlgNum& first = delta == -1 ? plus : minus;
  const AlgNum& second = delta == -1 ? minus : plus;
  r.I0 = zm * q_rat(l + 1, 2) + x.c(q_rat(l * l));
  switch (k) {
    case ClassLabel::Zero:
      r.I1_0 = r.I1_1 = zm * q_rat(l * l - 1, 4);
      r.I2_0 = first * zm * q_rat(l * (l - 1), 2);
      r.I2_1 = second * zm * q_rat(l * (l - 1), 2);
      break;
    case ClassLabel::LH1_0:
    case ClassLabel::LH1_1: {
      r.I1_0 = r.I1_1 = zm * q_rat(l * l - 1, 4);
      // The class carrying trace 0 picks up the squared periods.
      const bool zero_trace_class = (k == ClassLabel::LH1_0) == (delta == -1);
      if (zero_trace_class) {
        r.I2_0 = first * first * mz * q_rat(l);
        r.I2_1 = second * second * mz * q_rat(l);
      } else {
        r.I2_0 = r.I2_1 = mz * q_rat(l * l + l, 4);
      }
      break;
    }
    case ClassLabel::H2_0:
      r.I1_0 = plus * mz * q_rat(l + 1, 2);
      r.I1_1 = minus * mz * q_rat(l + 1, 2);
      break;
    case ClassLabel::H2_1:
      r.I1_0 = minus * mz * q_rat(l + 1, 2);
      r.I1_1 = plus * mz * q_rat(l + 1, 2);
      break;
  }
  return r;
}

ISums i_sums_direct(const Params& params, const TraceTable& table, ClassLabel k_class) {
  const std::uint64_t p = params.p, l = params.l, N = params.N;
  const Ctx x = make_ctx(params);
  std::vector<bool> square(l, false);
  for (std::uint64_t u = 1; u < l; ++u) square[mul_mod(u, u, l)] = true;

  const std::uint64_t k = ResiduePartition(residue_partition(l)).residues(k_class).front();

  // For each sum, weight[t] counts rational multiples of zeta^t per period
  // kind; the periods are rational, (-1 +- sqrt(-l))/2 or l times those.
  enum Kind { Rational = 0, Eta0 = 1, Eta1 = 2 };
  using Weights = std::vector<std::array<BigRational, 3>>;
  auto accumulate = [&](auto&& period) {
    Weights w(p);
    for (std::uint64_t i = 0; i < N; ++i) {
      const std::uint64_t t = table.at((i + N - k) % N);
      const auto [kind, coeff] = period(i);
      if (coeff != 0) w[t][kind] += coeff;
    }
    const AlgNum eta0 = (x.s - x.one) * q_rat(1, 2);
    const AlgNum eta1 = (-x.s - x.one) * q_rat(1, 2);
    AlgNum acc(p, l);
    for (std::uint64_t t = 0; t < p; ++t) {
      const AlgNum zt = x.z(t);
      acc += zt * w[t][Rational] + zt * eta0 * w[t][Eta0] + zt * eta1 * w[t][Eta1];
    }
    return acc;
  };

  // sum_{j in l H1_e} zeta_N^{-ij}
  auto period_lh1 = [&](int e) {
    return [&, e](std::uint64_t i) -> std::pair<Kind, BigRational> {
      if (i % l == 0) return {Rational, q_rat(static_cast<std::int64_t>(l - 1), 2)};
      const std::uint64_t s = (l - i % l) % l;
      const int cls = e ^ (square[s] ? 0 : 1);
      return {cls == 0 ? Eta0 : Eta1, BigRational(1)};
    };
  };
  // sum_{j in H2_e} zeta_N^{-ij}
  auto period_h2 = [&](int e) {
    return [&, e](std::uint64_t i) -> std::pair<Kind, BigRational> {
      if (i == 0) return {Rational, q_rat(static_cast<std::int64_t>(l * (l - 1)), 2)};
      if (i % l != 0) return {Rational, BigRational(0)};
      const std::uint64_t s = (l - (i / l) % l) % l;
      const int cls = e ^ (square[s] ? 0 : 1);
      return {cls == 0 ? Eta0 : Eta1, BigRational(static_cast<unsigned long>(l))};
    };
  };

  ISums r{k_class, AlgNum(p, l), AlgNum(p, l), AlgNum(p, l), AlgNum(p, l), AlgNum(p, l)};
  r.I0 = accumulate([](std::uint64_t) -> std::pair<Kind, BigRational> { return {Rational, BigRational(1)}; });
  r.I1_0 = accumulate(period_lh1(0));
  r.I1_1 = accumulate(period_lh1(1));
  r.I2_0 = accumulate(period_h2(0));
  r.I2_1 = accumulate(period_h2(1));
  return r;
}

AlgNum walsh_value_from_isums(const Params& params, const ISums& sums) {
  const Index2Factors fac = index2_factors(params);
  const BigRational inv_n = make_rational(1, to_big(params.N));
  AlgNum v = AlgNum::rational(params.p, params.l, 1) - sums.I0 * inv_n;
  v += (fac.A * sums.I1_0 + fac.B * sums.I1_1) * inv_n;
  v += (fac.pi * sums.I2_0 + fac.pi_bar * sums.I2_1) * (BigRational(fac.P) * inv_n);
  return v;
}

AlgNum walsh_value_assembled(const Params& params, ClassLabel k_class) {
  return walsh_value_from_isums(params, i_sums(params, k_class));
}

AlgNum tabulated_value(const Params& params, ClassLabel k) {
  require_resolved(params);
  const Ctx x = make_ctx(params);
  const std::int64_t l = static_cast<std::int64_t>(params.l);
  const std::int64_t N = static_cast<std::int64_t>(params.N);
  const Index2Factors fac = index2_factors(params);
  const AlgNum& A = fac.A;
  const AlgNum& B = fac.B;
  const BigRational P(fac.P);
  const BigRational a(params.a), b(params.b);

  if (!params.special()) {
    const auto [c0, e1, e2] = generic_exponents(params);
    const AlgNum z0 = x.z(c0), z1 = x.z(e1), z2 = x.z(e2);
    const BigRational half_l1 = q_rat(l - 1, 2), bl = b * q_rat(l);
    const AlgNum d1 = z0 + (z1 + z2) * half_l1;
    const AlgNum eta0 = (x.s - x.one) * q_rat(1, 2);
    const AlgNum d5 = eta0 * z0 + eta0 * (z1 + z2) * half_l1 + (x.one - x.s) * q_rat(l, 2);
    const AlgNum d6 = galois_flip(d5);
    const BigRational inv_n = q_rat(1, N);
    switch (k) {
      case ClassLabel::H2_0:
        return x.one - x.c(q_rat(l * (l - 1), N)) + (-d1 + A * d6 + B * d5) * inv_n;
      case ClassLabel::H2_1:
        return x.one - x.c(q_rat(l * (l - 1), N)) + (-d1 + A * d5 + B * d6) * inv_n;
      default: break;
    }
    const AlgNum base = x.one + (x.c(-1) + (A + B) * half_l1) * d1 * inv_n -
                        (A + B + x.c(2)) * q_rat(l - 1, 2 * l);
    switch (k) {
      case ClassLabel::Zero: {
        const AlgNum d2 = z0 * a + z1 * ((-a + bl) / 2) + z2 * ((-a - bl) / 2);
        return base + d2 * (q_rat(l - 1, 2 * l) * P);
      }
      case ClassLabel::LH1_0: {
        const AlgNum d3 = z0 * ((-a + bl) / 2) + z1 * ((a - a * q_rat(l) - 2 * bl) / 4) +
                          z2 * (a * q_rat(l + 1) / 4);
        return base + d3 * (P / q_rat(l));
      }
      default: {
        const AlgNum d4 = z0 * ((-a - bl) / 2) + z1 * (a * q_rat(l + 1) / 4) +
                          z2 * ((a - a * q_rat(l) + 2 * bl) / 4);
        return base + d4 * (P / q_rat(l));
      }
    }
  }

  const BigRational delta(params.arith.delta);
  const AlgNum mz = x.one - x.z(1);  // 1 - zeta_p
  const AlgNum plus = (x.one + x.s) * q_rat(1, 2);
  const AlgNum minus = (x.one - x.s) * q_rat(1, 2);
  switch (k) {
    case ClassLabel::H2_0:
      return mz * (x.one + plus * A + minus * B) * q_rat(l + 1, 2 * N);
    case ClassLabel::H2_1:
      return mz * (x.one + minus * A + plus * B) * q_rat(l + 1, 2 * N);
    default: break;
  }
  const AlgNum common = x.c(q_rat(l + 1)) - (A + B) * q_rat(l * l - 1, 2);
  const BigRational lP = q_rat(l) * P;
  const BigRational inv_2n = q_rat(1, 2 * N);
  if (k == ClassLabel::Zero) {
    return mz * (common - x.c(q_rat(l - 1) * (a + delta * b * q_rat(l)) / 2 * lP)) * inv_2n;
  }
  // Row with (a - al + 2 delta b l) belongs to the class whose trace is 0.
  const bool zero_trace_class = (k == ClassLabel::LH1_0) == (params.arith.delta == -1);
  if (zero_trace_class) {
    return mz * (common + x.c((a - a * q_rat(l) + 2 * delta * b * q_rat(l)) / 2 * lP)) * inv_2n;
  }
  return mz * (common + x.c(a * q_rat(l + 1) / 2 * lP)) * inv_2n;
}

AlgNum spectrum_at_zero(const Params& params) {
  const BigRational per_class(BigInt((params.q() - 1) / params.N));
  return AlgNum::rational(params.p, params.l, 1) + i_sums(params, ClassLabel::Zero).I0 * per_class;
}

BigInt class_frequency(const Params& params, ClassLabel k) {
  const BigInt q1 = params.q() - 1;
  const std::uint64_t l = params.l;
  switch (k) {
    case ClassLabel::Zero: return q1 / params.N;
    case ClassLabel::LH1_0:
    case ClassLabel::LH1_1: return BigInt(q1 * (l - 1) / (2 * params.N));
    case ClassLabel::H2_0:
    case ClassLabel::H2_1: return BigInt(q1 * (l - 1) / (2 * l));
  }
  return 0;
}

namespace {

std::vector<SpectrumLine> merge_lines(const std::vector<SpectrumLine>& lines) {
  std::vector<SpectrumLine> out;
  for (const auto& line : lines) {
    auto it = std::find_if(out.begin(), out.end(), [&](const SpectrumLine& m) { return m.value == line.value; });
    if (it == out.end()) {
      out.push_back(line);
    } else {
      it->label += "|" + line.label;
      it->frequency += line.frequency;
    }
  }
  std::sort(out.begin(), out.end(),
            [](const SpectrumLine& x, const SpectrumLine& y) { return canonical_less(x.value, y.value); });
  return out;
}

}  // namespace

std::vector<SpectrumLine> SpectrumTable::merged() const { return merge_lines(lines); }

SpectrumTable spectrum(const Params& params) {
  require_resolved(params);
  SpectrumTable t;
  t.params = params;
  t.lines.push_back({kZeroLabel, spectrum_at_zero(params), BigInt(1)});
  for (ClassLabel c : {ClassLabel::H2_0, ClassLabel::H2_1, ClassLabel::Zero, ClassLabel::LH1_0, ClassLabel::LH1_1}) {
    t.lines.push_back({std::string(to_string(c)), tabulated_value(params, c), class_frequency(params, c)});
  }
  return t;
}

SpectrumIdentities check_identities(const SpectrumTable& table) {
  const Params& params = table.params;
  const BigInt q = params.q();
  BigInt freq_sum = 0;
  AlgNum mean(params.p, params.l), energy(params.p, params.l);
  for (const auto& line : table.lines) {
    freq_sum += line.frequency;
    const BigRational fr(line.frequency);
    mean += line.value * fr;
    energy += norm_squared(line.value) * fr;
  }
  SpectrumIdentities r;
  r.frequency_sum = freq_sum == q;
  r.mean = mean == AlgNum::rational(params.p, params.l, BigRational(q));
  r.parseval = energy == AlgNum::rational(params.p, params.l, BigRational(BigInt(q * q)));
  return r;
}

bool same_multiset(const std::vector<SpectrumLine>& x, const std::vector<SpectrumLine>& y) {
  const auto mx = merge_lines(x), my = merge_lines(y);
  if (mx.size() != my.size()) return false;
  for (std::size_t i = 0; i < mx.size(); ++i) {
    if (!(mx[i].value == my[i].value) || mx[i].frequency != my[i].frequency) return false;
  }
  return true;
}

bool five_line_table_applies(const Params& params) {
  return to_big(params.l + 1) == 4 * big_pow(params.p, params.h);
}

SpectrumTable five_line_spectrum(const Params& params) {
  if (!five_line_table_applies(params)) throw Error(Errc::Unsupported, "requires 1 + l = 4 p^h");
  if (params.l % 8 != 3) throw Error(Errc::Unsupported, "the specialised table covers l = 3 (mod 8) only");
  Params conv = params;
  conv.arith.delta = -1;
  conv.b = -1;
  conv.convention_source = "specialised table";
  if (conv.a != 1) throw Error(Errc::InternalInconsistency, "expected a = 1 for l = 3 (mod 8)");

  const Ctx x = make_ctx(conv);
  const std::int64_t l = static_cast<std::int64_t>(conv.l);
  const std::int64_t N = static_cast<std::int64_t>(conv.N);
  const Index2Factors fac = index2_factors(conv);
  const BigRational P(fac.P);
  const AlgNum mz = x.one - x.z(1);
  const AlgNum plus = (x.one + x.s) * q_rat(1, 2);
  const AlgNum minus = (x.one - x.s) * q_rat(1, 2);
  const AlgNum AB = fac.A + fac.B;
  const BigRational lP = q_rat(l) * P;

  SpectrumTable t;
  t.params = conv;
  t.lines.push_back({kZeroLabel, spectrum_at_zero(conv), BigInt(1)});
  t.lines.push_back({"H2_0", mz * (x.one + plus * fac.A + minus * fac.B) * q_rat(l + 1, 2 * N),
                     class_frequency(conv, ClassLabel::H2_0)});
  t.lines.push_back({"H2_1", mz * (x.one + minus * fac.A + plus * fac.B) * q_rat(l + 1, 2 * N),
                     class_frequency(conv, ClassLabel::H2_1)});
  t.lines.push_back({"k=0", mz * (x.c(2) - (AB + x.c(lP)) * q_rat(l - 1)) * q_rat(l + 1, 4 * N),
                     class_frequency(conv, ClassLabel::Zero)});
  t.lines.push_back({"lH1_0|lH1_1", mz * (x.c(2) - AB * q_rat(l - 1) + x.c(lP)) * q_rat(l + 1, 4 * N),
                     BigInt(2 * class_frequency(conv, ClassLabel::LH1_0))});
  return t;
}

Params apply_sign_rule(Params params) {
  require_resolved(params);
  const std::uint64_t p = params.p;
  const BigInt b_abs = abs(params.b);
  std::vector<int> ok;
  for (int sign : {1, -1}) {
    const BigInt b = sign * b_abs;
    bool holds;
    if (params.special()) {
      // delta * b = a modulo p (modulo 4 when p = 2).
      const std::uint64_t m = p == 2 ? 4 : p;
      holds = mod_u64(BigInt(params.arith.delta * b - params.a), m) == 0;
    } else {
      holds = mod_u64(BigInt(b * params.arith.sqrt_minus_l + params.a), p) == 0;
    }
    if (holds) ok.push_back(sign);
  }
  if (ok.empty()) throw Error(Errc::InternalInconsistency, "no sign of b is compatible with the chosen root");
  params.b = ok.size() == 1 ? BigInt(ok.front() * b_abs) : b_abs;
  return params;
}

Params with_delta(Params params, int delta, std::string source) {
  if (!params.special()) throw Error(Errc::Unsupported, "delta is defined only when -l = 1 (mod p)");
  if (delta != 1 && delta != -1) throw Error(Errc::InvalidInput, "delta must be +1 or -1");
  params.arith.delta = delta;
  params.convention_source = std::move(source);
  return apply_sign_rule(std::move(params));
}

Params with_sqrt_minus_l(Params params, std::uint64_t root, std::string source) {
  if (params.special()) throw Error(Errc::Unsupported, "the Special case is parametrised by delta");
  const std::uint64_t p = params.p;
  const std::uint64_t target = (p - params.l % p) % p;
  if (mul_mod(root % p, root % p, p) != target) {
    throw Error(Errc::NotAResidue, std::to_string(root) + " is not a square root of -l mod p");
  }
  params.arith.sqrt_minus_l = root % p;
  params.convention_source = std::move(source);
  return apply_sign_rule(std::move(params));
}

}  // namespace walsh
