#include "walsh/verify.hpp"

#include <sstream>

#include "walsh/closed_form.hpp"
#include "walsh/error.hpp"
#include "walsh/gauss.hpp"
#include "walsh/number_theory.hpp"
#include "walsh/oracle.hpp"
#include "walsh/poly_fp.hpp"
#include "walsh/spectrum_io.hpp"

namespace walsh {

std::string_view to_string(CheckStatus s) noexcept {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
  }
  return "?";
}

bool VerifyReport::ok() const { return count(CheckStatus::Fail) == 0; }

std::size_t VerifyReport::count(CheckStatus s) const {
  std::size_t n = 0;
  for (const auto& c : checks) n += c.status == s ? 1 : 0;
  return n;
}

const Check* VerifyReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

nlohmann::json VerifyReport::to_json() const {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& c : checks) {
    list.push_back({{"name", c.name}, {"status", std::string(to_string(c.status))}, {"detail", c.detail}});
  }
  return {{"instance", instance},
          {"checks", std::move(list)},
          {"summary",
           {{"pass", count(CheckStatus::Pass)},
            {"fail", count(CheckStatus::Fail)},
            {"skipped", count(CheckStatus::Skipped)}}}};
}

namespace {

class Recorder {
 public:
  explicit Recorder(std::vector<Check>& out) : out_(out) {}

  void expect(const std::string& name, bool ok, const std::string& detail = {}) {
    out_.push_back({name, ok ? CheckStatus::Pass : CheckStatus::Fail, detail});
  }
  void skip(const std::string& name, const std::string& why) { out_.push_back({name, CheckStatus::Skipped, why}); }

 private:
  std::vector<Check>& out_;
};

std::string str(const BigInt& x) { return to_decimal(x); }

template <typename T>
std::string join(const std::vector<T>& v) {
  std::ostringstream s;
  for (std::size_t i = 0; i < v.size(); ++i) s << (i ? "," : "") << v[i];
  return s.str();
}

std::string delta_text(int d) { return d > 0 ? "+1" : "-1"; }

// Params under the other choice of delta / sqrt(-l).
Params opposite_convention(const Params& params) {
  if (params.special()) return with_delta(params, -params.arith.delta, "opposite");
  return with_sqrt_minus_l(params, (params.p - params.arith.sqrt_minus_l) % params.p, "opposite");
}

void parameter_checks(const Params& params, Recorder& rec) {
  const std::uint64_t p = params.p, l = params.l;
  rec.expect("index_two", multiplicative_order(p, params.N) == params.f,
             "ord_" + std::to_string(params.N) + "(" + std::to_string(p) + ") = " + std::to_string(params.f));

  const BigInt lhs = params.a * params.a + to_big(l) * params.b * params.b;
  const bool norm_ok = lhs == 4 * big_pow(p, params.h);
  const std::uint64_t target = (l - mul_mod(2, pow_mod(p, (l - 1 + 2 * params.h) / 4, l), l)) % l;
  const bool cong_ok = mod_u64(params.a, l) == target;
  rec.expect("norm_equation", norm_ok && cong_ok,
             "a=" + str(params.a) + " b=" + str(params.b) + " h=" + std::to_string(params.h));

  const std::uint64_t forms = count_reduced_forms(l);
  rec.expect("class_number_forms", forms == params.h,
             "Dirichlet " + std::to_string(params.h) + ", reduced forms " + std::to_string(forms));

  // <p> mod l^2 is the subgroup of squares and misses -1
  bool squares_ok = params.f % 2 == 1;
  std::uint64_t x = 1;
  for (std::uint64_t i = 0; i < params.f && squares_ok; ++i) {
    if (classify_residue(x, l) != ClassLabel::H2_0) squares_ok = false;
    x = mul_mod(x, p, params.N);
  }
  rec.expect("subgroup_is_squares", squares_ok, "f odd, <p> = H2_0 mod l^2");

  if (p != 2) {
    const int sym = legendre_symbol(-static_cast<std::int64_t>(l), p);
    rec.expect("minus_l_residue", sym == 1, "(-l|p) = " + std::to_string(sym));
  }
  if (std::gcd(p, params.f) != 1) rec.skip("gcd_p_f", "gcd(p, f) != 1; the tables do not depend on it");
}

void symbolic_checks(const Params& params, const SpectrumTable& table, Recorder& rec) {
  const SpectrumIdentities ids = check_identities(table);
  rec.expect("frequency_sum", ids.frequency_sum, "sum of frequencies = q");
  rec.expect("mean", ids.mean, "sum freq * value = q");
  rec.expect("parseval", ids.parseval, "sum freq * |value|^2 = q^2");
  rec.expect("zero_line", table.lines.front().frequency == 1 && table.lines.front().value == spectrum_at_zero(params),
             "b=0 line has frequency 1");
  rec.expect("distinct_values", table.distinct_values() >= 1,
             std::to_string(table.distinct_values()) + " distinct values");

  const TraceTable tt = trace_beta_table(params);
  for (ClassLabel c : kAllClasses) {
    const std::string name(to_string(c));
    const ISums closed = i_sums(params, c);
    const ISums direct = i_sums_direct(params, tt, c);
    const bool same = closed.I0 == direct.I0 && closed.I1_0 == direct.I1_0 && closed.I1_1 == direct.I1_1 &&
                      closed.I2_0 == direct.I2_0 && closed.I2_1 == direct.I2_1;
    rec.expect("isums_" + name, same, "closed-form I-sums vs term-by-term sums");
    rec.expect("assembly_" + name, walsh_value_from_isums(params, closed) == tabulated_value(params, c),
               "I-sum assembly vs tabulated value");
  }

  const BigInt q = params.q();
  const AlgNum qq = AlgNum::rational(params.p, params.l, BigRational(q));
  rec.expect("gauss_modulus", norm_squared(gauss_sum_index2(params, 1)) == qq &&
                                  norm_squared(gauss_sum_index2(params, params.l)) == qq,
             "|G(chi)|^2 = |G(chi^l)|^2 = q");

  const AlgNum total = gauss_sum_total(params);
  rec.expect("gauss_total_rational", total.im().is_zero() && total.re().as_rational().has_value(),
             "sum_{j=1}^{N-1} G(chi^j) = " +
                 (total.re().as_rational() ? total.re().as_rational()->get_str() : std::string("?")));

  const SpectrumTable other = spectrum(opposite_convention(params));
  std::vector<SpectrumLine> flipped = other.lines;
  for (auto& line : flipped) line.value = galois_flip(line.value);
  rec.expect("conjugate_convention", same_multiset(flipped, table.lines),
             "opposite convention gives the conjugate multiset");

  if (!five_line_table_applies(params)) {
    rec.skip("specialised_table", "1 + l != 4 p^h");
  } else if (params.l % 8 != 3) {
    rec.skip("specialised_table", "1 + l = 4 p^h but l = 7 (mod 8); only the l = 3 (mod 8) table is stated");
  } else {
    const SpectrumTable cor = five_line_spectrum(params);
    const SpectrumTable thm = spectrum(cor.params);
    rec.expect("specialised_table", same_multiset(cor.lines, thm.lines),
               "five-line table vs general table at delta=-1, b=-1");
  }
}

void oracle_checks(const Params& params, const SpectrumTable& table, const VerifyOptions& options,
                   const FieldCtx& ctx, const BetaTable& beta, nlohmann::json& instance, Recorder& rec) {
  const std::uint64_t N = params.N;
  const KernelKind kind = options.kernel == KernelKind::Auto ? select_kernel(ctx) : options.kernel;
  instance["kernel"] = std::string(to_string(kind));
  const CountMatrix counts = count_matrix(ctx, N, kind, options.threads);
  const std::uint64_t per_row = BigInt((ctx.q() - 1) / N).get_ui();
  bool rows_ok = counts.total() == BigInt(ctx.q() - 1).get_ui();
  for (std::uint64_t i = 0; i < N; ++i) rows_ok = rows_ok && counts.row_sum(i) == per_row;
  rec.expect("count_rows", rows_ok, "every row sums to " + std::to_string(per_row));

  bool trace_ok = true;
  for (std::uint64_t idx = 1; idx < 64; ++idx) {
    const FieldElem x = ctx.pow(*ctx.alpha(), idx * 7919);
    trace_ok = trace_ok && ctx.trace(x) == ctx.trace_naive(x);
  }
  rec.expect("trace_form", trace_ok, "linear-form trace vs Frobenius sum on 63 elements");

  const auto row = in_field_trace_row(ctx, beta);
  const TraceTable tt = trace_beta_table(params);
  bool table_ok = true;
  for (std::uint64_t i = 0; i < N; ++i) table_ok = table_ok && row[i] == tt.at(i);
  rec.expect("trace_table", table_ok, "Tr(beta^i) in F_q vs closed form for i < N");

  const BruteSpectrum brute = brute_walsh_spectrum(counts, row, params.p, params.l);
  rec.expect("brute_class_constant", brute.class_constant(), "f^(b) depends on k only through its class");
  rec.expect("brute_spectrum", same_multiset(brute.lines(), table.lines),
             "brute multiset vs closed form, " + std::to_string(brute.per_k.size()) + " classes");
  rec.expect("brute_zero", brute.at_zero == spectrum_at_zero(params),
             "f^(0) = " + to_symbolic(brute.at_zero));
  const AlgNum power_sum = brute_power_sum(counts, params.l);
  rec.expect("brute_power_sum", power_sum == gauss_sum_total(params),
             "sum_x psi(x^N) = " + to_symbolic(power_sum));

  // Gauss sums for j = u and j = l*u, u ranging over the first units.
  const unsigned digits = options.precision;
  std::vector<std::uint64_t> js;
  for (std::uint64_t u = 1; js.size() < 16; ++u) {
    if (u % params.l == 0) continue;
    js.push_back(u % N);
    js.push_back(params.l * u % N);
  }
  bool gauss_ok = true;
  std::string worst;
  {
    PrecisionScope scope(digits);
    MpFloat max_err(0);
    for (std::uint64_t j : js) {
      const MpComplex brute_g = brute_gauss_sum(counts, j, digits);
      const MpComplex closed = embed_complex(gauss_sum_index2(params, j), digits);
      const MpFloat err = relative_distance(closed, brute_g);
      if (err > max_err) max_err = err;
      gauss_ok = gauss_ok && err < MpFloat(1e-6);
    }
    worst = format_float(max_err, 3);
  }
  rec.expect("gauss_sums", gauss_ok, std::to_string(js.size()) + " exponents, max relative error " + worst);

  // Which sign of b the brute G(chi) selects, against the sign rule.
  Params flipped = params;
  flipped.b = -params.b;
  const MpComplex g1 = brute_gauss_sum(counts, 1, digits);
  PrecisionScope scope(digits);
  const MpFloat e_rule = relative_distance(embed_complex(gauss_sum_index2(params, 1), digits), g1);
  const MpFloat e_flip = relative_distance(embed_complex(gauss_sum_index2(flipped, 1), digits), g1);
  rec.expect("b_sign_rule", e_rule < e_flip,
             "brute G(chi) selects b=" + str(e_rule < e_flip ? params.b : flipped.b) + ", rule gives b=" +
                 str(params.b));
}

// Traces of l*u from the degree-(l-1)/2 subfield: beta^l is a root xi of a
// factor of Phi_l, and Tr_{q/p} = l * Tr_{subfield/p} there.
void subfield_trace_check(const Params& base, std::uint64_t seed, Recorder& rec) {
  const std::uint64_t l = base.l, d = (l - 1) / 2;
  if (d > 300) {
    rec.skip("trace_table_subfield", "subfield degree too large");
    return;
  }
  const auto factors = equal_degree_factors(cyclotomic_prime(base.p, l), d, seed);
  const FieldCtx sub(factors.front());
  const FieldElem xi = sub.root();
  const ResiduePartition part = residue_partition(l);
  FieldElem s = sub.zero();
  for (std::uint64_t u : part.h1_0) s = sub.add(s, sub.pow(xi, u));
  const std::uint64_t s0 = s.c[0];

  Params anchored;
  if (base.special()) {
    anchored = with_delta(base, s0 == 0 ? -1 : 1, "subfield");
  } else {
    anchored = with_sqrt_minus_l(base, (2 * s0 + 1) % base.p, "subfield");
  }
  const TraceTable tt = trace_beta_table(anchored);
  bool ok = base.f % base.p == tt.entry(ClassLabel::Zero);
  for (std::uint64_t u = 1; u < l; ++u) {
    const std::uint64_t tr = mul_mod(l % base.p, sub.trace(sub.pow(xi, u)), base.p);
    ok = ok && tr == tt.at(l * u);
  }
  rec.expect("trace_table_subfield", ok,
             "Tr(beta^(l u)) via F_" + std::to_string(base.p) + "^" + std::to_string(d) + " vs closed form");
}

}  // namespace

VerifyReport verify_instance(std::uint64_t p, std::uint64_t l, const VerifyOptions& options) {
  VerifyReport report;
  Recorder rec(report.checks);
  const Params base = validate_instance(p, l);
  parameter_checks(base, rec);

  const bool feasible = oracle_feasible(base, options.verify_bound);
  std::optional<FieldCtx> ctx;
  std::optional<BetaTable> beta;
  Params params = base;
  std::string convention_detail;
  if (feasible) {
    ctx = build_field(p, base.f, options.seed);
    beta = attach_order(*ctx, base.N);
    if (base.special()) {
      const int anchored = determine_delta_anchored(base, *ctx, *beta);
      const int standalone = determine_delta(base, options.seed);
      params = with_delta(base, anchored, "alpha-anchored");
      convention_detail = "anchored delta=" + delta_text(anchored) + ", residue-field factor delta=" +
                          delta_text(standalone) + (anchored == standalone ? " (agree)" : " (differ; anchored used)");
    } else {
      const std::uint64_t r = sqrt_minus_l_anchored(base, *ctx, *beta);
      params = with_sqrt_minus_l(base, r, "alpha-anchored");
      convention_detail = "anchored sqrt(-l)=" + std::to_string(r) + ", canonical " +
                          std::to_string(base.arith.sqrt_minus_l);
    }
  } else {
    params = resolve_convention(base, options.verify_bound, options.seed);
    convention_detail = params.convention_source;
  }
  rec.expect("convention", params.arith.resolved(), convention_detail);

  report.instance = {{"p", p}, {"l", l}, {"params", params_to_json(params)}, {"convention", convention_to_json(params)}};

  const SpectrumTable table = spectrum(params);
  symbolic_checks(params, table, rec);

  subfield_trace_check(base, options.seed, rec);
  if (feasible) {
    report.instance["field"] = {{"modulus", ctx->modulus().coeffs()}, {"alpha", ctx->alpha()->c}};
    oracle_checks(params, table, options, *ctx, *beta, report.instance, rec);
  } else {
    rec.skip("oracle", "q = " + std::to_string(p) + "^" + std::to_string(base.f) + " exceeds the verify bound");
    // The trace table only needs beta, which a bare extension provides when
    // f is moderate.
    if (base.f <= 300) {
      const FieldCtx ext = build_extension(p, base.f, options.seed);
      const BetaTable b = attach_order(ext, base.N);
      const auto row = in_field_trace_row(ext, b);
      const Params anchored = base.special() ? with_delta(base, determine_delta_anchored(base, ext, b), "extension")
                                             : with_sqrt_minus_l(base, sqrt_minus_l_anchored(base, ext, b), "extension");
      const TraceTable tt = trace_beta_table(anchored);
      bool ok = true;
      for (std::uint64_t i = 0; i < base.N; ++i) ok = ok && row[i] == tt.at(i);
      rec.expect("trace_table_extension", ok, "Tr(beta^i) in F_q (no primitive element) vs closed form");
    } else {
      rec.skip("trace_table_extension", "f too large for polynomial exponentiation");
    }
  }
  return report;
}

}  // namespace walsh
