// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "walsh/closed_form.hpp"
#include "walsh/error.hpp"
#include "walsh/gauss.hpp"
#include "walsh/number_theory.hpp"
#include "walsh/oracle.hpp"
#include "walsh/poly_fp.hpp"

using namespace walsh;

namespace {

struct Verdict {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << "[failed: " << what << "] ";
    }
  }
};

// The (2, 7) field and its counts are shared by several criteria.
struct Flagship {
  FieldCtx ctx = build_field(2, 21, 0);
  BetaTable beta = attach_order(ctx, 49);
  Params params = with_delta(validate_instance(2, 7), determine_delta_anchored(validate_instance(2, 7), ctx, beta),
                             "alpha-anchored");
  CountMatrix counts = count_matrix(ctx, 49);
  std::vector<std::uint64_t> trace_row = in_field_trace_row(ctx, beta);
};

Verdict criterion1(const Flagship& fl, double seconds) {
  Verdict v;
  const BruteSpectrum brute = brute_walsh_spectrum(fl.counts, fl.trace_row, 2, 7);
  const SpectrumTable table = spectrum(fl.params);
  SpectrumTable assembled = table;
  for (auto& line : assembled.lines) {
    if (line.label != kZeroLabel) line.value = walsh_value_assembled(fl.params, class_label_from_string(line.label));
  }
  v.require(same_multiset(brute.lines(), table.lines), "tabulated path vs brute force");
  v.require(same_multiset(brute.lines(), assembled.lines), "assembly path vs brute force");
  std::multiset<BigInt> freqs, want{1, 898779, 898779, 42799, 128397, 128397};
  for (const auto& line : table.lines) freqs.insert(line.frequency);
  v.require(freqs == want, "frequency column");
  v.require(table.distinct_values() == 5, "five distinct values");
  v.require(seconds < 60, "runtime");
  v.detail << "values {";
  bool first = true;
  for (const auto& line : table.merged()) {
    v.detail << (first ? "" : ", ") << to_symbolic(line.value) << " x" << to_decimal(line.frequency);
    first = false;
  }
  v.detail << "}, oracle pass " << seconds << " s";
  return v;
}

Verdict criterion2(const Flagship& fl) {
  Verdict v;
  const AlgNum expected = AlgNum::rational(2, 7, -16512);
  // The stated closed form, read literally, is sum_{j=1}^{N-1} G(chi^j).
  const AlgNum stated = gauss_sum_total(fl.params);
  const BruteSpectrum brute = brute_walsh_spectrum(fl.counts, fl.trace_row, 2, 7);
  v.require(stated == expected, "closed form = -16512");
  v.require(brute.at_zero == expected, "brute sum_x (-1)^Tr(x^((q-1)/49)) = -16512");
  v.detail << "closed form " << to_symbolic(stated) << "; brute sum " << to_symbolic(brute.at_zero)
           << "; sum_x psi(x^49) = " << to_symbolic(brute_power_sum(fl.counts, 7))
           << "; 1 + ((q-1)/N) I0 = " << to_symbolic(spectrum_at_zero(fl.params));
  return v;
}

Verdict criterion3() {
  Verdict v;
  const std::pair<std::uint64_t, std::uint64_t> instances[] = {{2, 7}, {11, 7}, {3, 107}, {5, 19}, {2, 23}, {2, 47}};
  for (const auto& [p, l] : instances) {
    const Params params = resolve_convention(validate_instance(p, l), BigInt(1) << 24, 0);
    const SpectrumIdentities ids = check_identities(spectrum(params));
    const std::string tag = "(" + std::to_string(p) + "," + std::to_string(l) + ")";
    v.require(ids.frequency_sum, tag + " frequency sum");
    v.require(ids.mean, tag + " mean");
    v.require(ids.parseval, tag + " parseval");
    v.detail << tag << " ";
  }
  const Params big = validate_instance(3, 107);
  v.require(big.h == 3 && big.f == 5671, "(3,107) h and f");
  v.detail << "identities exact; (3,107) h=" << big.h << " f=" << big.f;
  return v;
}

Verdict criterion4(const Flagship& fl) {
  Verdict v;
  PrecisionScope scope(40);
  MpFloat worst(0);
  std::size_t sampled = 0;
  for (std::uint64_t u = 1; u <= 48; ++u) {
    if (u % 7 == 0) continue;
    for (std::uint64_t j : {u, 7 * u % 49}) {
      const MpFloat err =
          relative_distance(embed_complex(gauss_sum_index2(fl.params, j), 40), brute_gauss_sum(fl.counts, j, 40));
      worst = err > worst ? err : worst;
      ++sampled;
    }
  }
  v.require(worst < MpFloat(1e-6), "index-2 gauss sums within 1e-6");
  const AlgNum q = AlgNum::rational(2, 7, BigRational(fl.params.q()));
  bool modulus = true;
  for (std::uint64_t i = 1; i < 49; ++i) modulus = modulus && norm_squared(gauss_sum_index2(fl.params, i)) == q;
  v.require(modulus, "|G|^2 = q exactly");

  MpFloat worst_quad(0);
  const std::pair<std::uint64_t, std::uint64_t> fields[] = {{3, 2}, {5, 2}, {3, 3}, {7, 2}, {11, 2}};
  for (const auto& [p, f] : fields) {
    const FieldCtx ctx = build_field(p, f, 0);
    const MpFloat err = relative_distance(quadratic_gauss(p, f).embed(40), brute_quadratic_gauss(ctx, 40));
    worst_quad = err > worst_quad ? err : worst_quad;
  }
  v.require(worst_quad < MpFloat(1e-8), "quadratic gauss sums within 1e-8");
  v.detail << sampled << " exponents, max rel err " << format_float(worst, 3) << "; quadratic q in {9,25,27,49,121} max "
           << format_float(worst_quad, 3);
  return v;
}

Verdict criterion5() {
  Verdict v;
  const auto sample = odd_prime_power_sample(1000000, 50, 0);
  std::size_t proper = 0;
  for (const auto& pp : sample) {
    const BigInt q = big_pow(pp.prime, pp.exponent);
    proper += pp.exponent > 1 ? 1 : 0;
    v.require(brute_cyclotomic_numbers(pp.prime, pp.exponent, 0) == cyclotomic_numbers_formula(q),
              to_decimal(q));
  }
  v.require(sample.size() == 50, "sample size");
  v.detail << sample.size() << " prime powers (" << proper << " with exponent >= 2), exact";
  return v;
}

Verdict criterion6(const Flagship& fl) {
  Verdict v;
  const TraceTable t27 = trace_beta_table(fl.params);
  bool ok27 = true;
  for (std::uint64_t i = 0; i < 49; ++i) ok27 = ok27 && fl.trace_row[i] == t27.at(i);
  v.require(ok27, "(2,7) over F_2^21");

  // (11, 7): beta^7 is a root of a cubic factor of Phi_7, and Tr_{q/11} = 7 Tr_{11^3/11} on F_11^3.
  const Params base = validate_instance(11, 7);
  const auto factors = equal_degree_factors(cyclotomic_prime(11, 7), 3, 0);
  bool ok11 = true;
  for (const PolyFp& factor : factors) {
    const FieldCtx sub(factor);
    const FieldElem xi = sub.root();
    FieldElem s = sub.zero();
    for (std::uint64_t u : {1, 2, 4}) s = sub.add(s, sub.pow(xi, u));
    const Params params = with_sqrt_minus_l(base, (2 * s.c[0] + 1) % 11, "subfield");
    const TraceTable table = trace_beta_table(params);
    ok11 = ok11 && table.entry(ClassLabel::Zero) == 21 % 11;
    for (std::uint64_t u = 1; u < 7; ++u) ok11 = ok11 && 7 * sub.trace(sub.pow(xi, u)) % 11 == table.at(7 * u);
  }
  v.require(ok11, "(11,7) over F_11^3");

  // Units need beta itself: the full F_11^21 without a primitive element.
  const FieldCtx ext = build_extension(11, 21, 0);
  const BetaTable beta = attach_order(ext, 49);
  const auto row = in_field_trace_row(ext, beta);
  const TraceTable full = trace_beta_table(with_sqrt_minus_l(base, sqrt_minus_l_anchored(base, ext, beta), "ext"));
  bool okfull = true;
  for (std::uint64_t i = 0; i < 49; ++i) okfull = okfull && row[i] == full.at(i);
  v.require(okfull, "(11,7) over F_11^21");
  v.detail << "(2,7) 49 exponents; (11,7) both cubic factors of Phi_7 and all 49 exponents in F_11^21";
  return v;
}

Verdict criterion7() {
  Verdict v;
  std::mt19937_64 rng(0);
  std::size_t total = 0;
  for (const auto& [p, f] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{{7, 1}, {3, 2}}) {
    const FieldCtx ctx = build_field(p, f, 0);
    const std::uint64_t q = ctx.q().get_ui();
    for (int trial = 0; trial < 25; ++trial) {
      const std::uint64_t n = 1 + rng() % (2 * q);
      const FieldElem a = ctx.from_index(1 + rng() % (q - 1));
      const FieldElem b = ctx.from_index(rng() % q);
      const CharacterSumCheck r = character_sum_check(ctx, n, a, b, 40, 1e-8);
      v.require(r.agree, "q=" + std::to_string(q) + " n=" + std::to_string(n));
      ++total;
    }
  }
  v.detail << total << " random (n, a, b) triples on F_7 and F_9";
  return v;
}

Verdict criterion8() {
  Verdict v;
  std::size_t count = 0;
  for (std::uint64_t l = 7; l < 200; l += 4) {
    if (!is_prime(l)) continue;
    v.require(class_number(l) == count_reduced_forms(l), "l=" + std::to_string(l));
    ++count;
  }
  v.require(class_number(7) == 1, "h(-7) = 1");
  v.require(class_number(107) == 3, "h(-107) = 3");
  v.detail << count << " primes l = 3 (mod 4), 7 <= l < 200; h(-7)=" << class_number(7)
           << " h(-107)=" << class_number(107);
  return v;
}

Verdict criterion9() {
  Verdict v;
  std::size_t applied = 0, other_branch = 0;
  for (std::uint64_t l = 7; l < 1000; l += 4) {
    if (!is_prime(l)) continue;
    const auto fac = factorize((l + 1) / 4);
    if ((l + 1) % 4 != 0 || fac.size() != 1) continue;
    Params base;
    try {
      base = validate_instance(fac[0].prime, l);
    } catch (const Error&) {
      continue;
    }
    if (!five_line_table_applies(base)) continue;
    if (l % 8 != 3) {
      ++other_branch;
      continue;
    }
    const SpectrumTable cor = five_line_spectrum(base);
    v.require(same_multiset(cor.lines, spectrum(cor.params).lines),
              "(" + std::to_string(base.p) + "," + std::to_string(l) + ")");
    v.detail << "(" << base.p << "," << l << ") ";
    ++applied;
  }
  v.require(applied > 0, "at least one instance");
  v.detail << "matched; " << other_branch << " instance(s) with l = 7 (mod 8) have no stated table";
  return v;
}

void report(int number, const std::string& title, const Verdict& v, bool& all) {
  all = all && v.pass;
  std::cout << "criterion " << number << " " << title << ": " << (v.pass ? "PASS" : "FAIL") << "  " << v.detail.str()
            << std::endl;
}

}  // namespace

int main() {
  bool all = true;
  const auto start = std::chrono::steady_clock::now();
  const Flagship fl;
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  report(1, "oracle equivalence (2,7)", criterion1(fl, seconds), all);
  report(2, "f^(0) = -16512 for (2,7)", criterion2(fl), all);
  report(3, "symbolic identities", criterion3(), all);
  report(4, "gauss sums", criterion4(fl), all);
  report(5, "cyclotomic numbers", criterion5(), all);
  report(6, "trace tables", criterion6(fl), all);
  report(7, "character sum identity", criterion7(), all);
  report(8, "class numbers", criterion8(), all);
  report(9, "specialised table", criterion9(), all);
  return all ? 0 : 1;
}
