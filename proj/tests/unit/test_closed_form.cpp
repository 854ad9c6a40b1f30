#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "walsh/closed_form.hpp"
#include "walsh/gauss.hpp"
#include "walsh/number_theory.hpp"
#include "walsh/oracle.hpp"

using namespace walsh;

namespace {

Params resolved(std::uint64_t p, std::uint64_t l, int delta_or_zero = 0) {
  const Params base = validate_instance(p, l);
  if (base.special()) return with_delta(base, delta_or_zero ? delta_or_zero : 1, "test");
  return with_sqrt_minus_l(base, base.arith.sqrt_minus_l, "test");
}

// Valid (p, l) with p < 30 and l < 60.
std::vector<std::pair<std::uint64_t, std::uint64_t>> small_instances() {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  for (std::uint64_t l = 7; l < 60; l += 4) {
    if (!is_prime(l)) continue;
    for (std::uint64_t p = 2; p < 30; ++p) {
      if (!is_prime(p) || p == l) continue;
      try {
        validate_instance(p, l);
        out.emplace_back(p, l);
      } catch (const Error&) {
      }
    }
  }
  return out;
}

}  // namespace

TEST_CASE("trace table, special case") {
  const TraceTable plus = trace_beta_table(resolved(2, 7, 1));
  CHECK(plus.entry(ClassLabel::Zero) == 1);
  CHECK(plus.entry(ClassLabel::LH1_0) == 1);
  CHECK(plus.entry(ClassLabel::LH1_1) == 0);
  CHECK(plus.entry(ClassLabel::H2_0) == 0);
  CHECK(plus.entry(ClassLabel::H2_1) == 0);
  CHECK_FALSE(plus.epsilon);
  const TraceTable minus = trace_beta_table(resolved(2, 7, -1));
  CHECK(minus.entry(ClassLabel::LH1_0) == 0);
  CHECK(minus.entry(ClassLabel::LH1_1) == 1);
  CHECK_ERRC(trace_beta_table(validate_instance(2, 7)), Errc::UnresolvedConvention);
}

TEST_CASE("trace table, generic case") {
  const TraceTable t = trace_beta_table(resolved(11, 7));
  REQUIRE(t.epsilon);
  CHECK(*t.epsilon == 6);
  CHECK(t.entry(ClassLabel::Zero) == 10);
  CHECK(t.entry(ClassLabel::LH1_0) == 7 * 6 % 11);
  CHECK(t.entry(ClassLabel::LH1_1) == (11 * 11 - 7 * 7) % 11);
  CHECK(t.entry(ClassLabel::H2_0) == 0);
  const std::uint64_t e = *t.epsilon;
  CHECK((e * e + e + 2) % 11 == 0);
}

TEST_CASE("I-sums, special case examples") {
  const Params minus = resolved(2, 7, -1);
  const ISums zero = i_sums(minus, ClassLabel::Zero);
  CHECK(zero.I1_0 == AlgNum::rational(2, 7, -24));
  CHECK(zero.I1_1 == AlgNum::rational(2, 7, -24));
  const ISums h2 = i_sums(minus, ClassLabel::H2_0);
  CHECK(h2.I2_0.is_zero());
  CHECK(h2.I2_1.is_zero());
  // I0 = (l+1)/2 (zeta_p - 1) + l^2 for delta = -1
  CHECK(zero.I0 == AlgNum::rational(2, 7, 4 * -2 + 49));
}

TEST_CASE("p=2, l=7 spectrum") {
  const Params params = resolved(2, 7, 1);
  const SpectrumTable table = spectrum(params);
  REQUIRE(table.lines.size() == 6);
  std::multiset<std::string> freqs;
  for (const auto& line : table.lines) freqs.insert(to_decimal(line.frequency));
  CHECK(freqs == std::multiset<std::string>{"1", "898779", "898779", "42799", "128397", "128397"});
  CHECK(table.distinct_values() == 5);
  CHECK(table.lines[0].label == kZeroLabel);
  CHECK(table.lines[0].value == AlgNum::rational(2, 7, 1754760));
  CHECK(spectrum_at_zero(params) == AlgNum::rational(2, 7, 1754760));
  CHECK(check_identities(table).all());

  const std::pair<ClassLabel, long> expected[] = {{ClassLabel::Zero, 2696},
                                                 {ClassLabel::H2_0, 648},
                                                 {ClassLabel::H2_1, -376},
                                                 {ClassLabel::LH1_0, -1400},
                                                 {ClassLabel::LH1_1, -1400}};
  for (const auto& [c, v] : expected) CHECK(tabulated_value(params, c) == AlgNum::rational(2, 7, v));
  CHECK(class_frequency(params, ClassLabel::H2_0) == 898779);
}

TEST_CASE("both delta conventions give the same multiset for p=2, l=7") {
  CHECK(same_multiset(spectrum(resolved(2, 7, 1)).lines, spectrum(resolved(2, 7, -1)).lines));
}

TEST_CASE("paths agree on every small instance") {
  for (const auto& [p, l] : small_instances()) {
    for (int delta : {1, -1}) {
      const Params base = validate_instance(p, l);
      if (!base.special() && delta == -1) continue;
      const Params params = base.special() ? with_delta(base, delta, "test")
                                           : with_sqrt_minus_l(base, base.arith.sqrt_minus_l, "test");
      CAPTURE(p);
      CAPTURE(l);
      CAPTURE(delta);
      const TraceTable tt = trace_beta_table(params);
      for (ClassLabel c : kAllClasses) {
        const ISums closed = i_sums(params, c);
        const ISums direct = i_sums_direct(params, tt, c);
        CHECK(closed.I0 == direct.I0);
        CHECK(closed.I1_0 == direct.I1_0);
        CHECK(closed.I1_1 == direct.I1_1);
        CHECK(closed.I2_0 == direct.I2_0);
        CHECK(closed.I2_1 == direct.I2_1);
        CHECK(walsh_value_assembled(params, c) == tabulated_value(params, c));
      }
      const SpectrumTable table = spectrum(params);
      CHECK(check_identities(table).all());
      CHECK(table.lines[0].value == spectrum_at_zero(params));
      CHECK(gauss_sum_total(params).im().is_zero());
    }
  }
}

TEST_CASE("opposite convention gives the conjugate multiset") {
  for (const auto& [p, l] : small_instances()) {
    const Params base = validate_instance(p, l);
    Params one, other;
    if (base.special()) {
      one = with_delta(base, 1, "x");
      other = with_delta(base, -1, "y");
    } else {
      one = with_sqrt_minus_l(base, base.arith.sqrt_minus_l, "x");
      other = with_sqrt_minus_l(base, p - base.arith.sqrt_minus_l, "y");
    }
    auto flipped = spectrum(other).lines;
    for (auto& line : flipped) line.value = galois_flip(line.value);
    CAPTURE(p);
    CAPTURE(l);
    CHECK(same_multiset(flipped, spectrum(one).lines));
  }
}

TEST_CASE("sign rule") {
  CHECK(with_delta(validate_instance(2, 7), 1, "t").b == -1);
  CHECK(with_delta(validate_instance(2, 7), -1, "t").b == 1);
  const Params g = with_sqrt_minus_l(validate_instance(11, 7), 2, "t");
  // r b + a = 0 (mod p)
  CHECK(mod_u64(2 * g.b + g.a, 11) == 0);
  CHECK(g.b == 2);
  CHECK(with_sqrt_minus_l(validate_instance(11, 7), 9, "t").b == -2);
  CHECK_ERRC(with_sqrt_minus_l(validate_instance(11, 7), 3, "t"), Errc::NotAResidue);
}

TEST_CASE("p=3, l=107 exact identities") {
  const Params params = with_delta(validate_instance(3, 107), -1, "test");
  const SpectrumTable table = spectrum(params);
  BigInt total = 0;
  for (const auto& line : table.lines) total += line.frequency;
  CHECK(total == big_pow(3, 5671));
  const SpectrumIdentities ids = check_identities(table);
  CHECK(ids.frequency_sum);
  CHECK(ids.mean);
  CHECK(ids.parseval);
  CHECK(table.distinct_values() == 5);
}

TEST_CASE("specialised five-line table") {
  for (const auto& [p, l] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{{3, 107}, {5, 19}}) {
    const Params base = validate_instance(p, l);
    REQUIRE(five_line_table_applies(base));
    const SpectrumTable cor = five_line_spectrum(base);
    CAPTURE(p);
    CAPTURE(l);
    CHECK(cor.lines.size() == 5);
    CHECK(same_multiset(cor.lines, spectrum(cor.params).lines));
  }
  CHECK_FALSE(five_line_table_applies(validate_instance(11, 7)));
  CHECK(five_line_table_applies(validate_instance(2, 7)));
  CHECK_ERRC(five_line_spectrum(validate_instance(2, 7)), Errc::Unsupported);
}
