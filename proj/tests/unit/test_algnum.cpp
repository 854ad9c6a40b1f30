#include <doctest.h>

#include "helpers.hpp"
#include "walsh/algnum.hpp"

using namespace walsh;

TEST_CASE("cyclotomic reduction") {
  const CycEl z = CycEl::zeta_pow(5, 1);
  CycEl acc = CycEl::constant(5, 1);
  for (int i = 0; i < 5; ++i) acc *= z;
  CHECK(acc == CycEl::constant(5, 1));
  CycEl sum(5);
  for (int t = 0; t < 5; ++t) sum += CycEl::zeta_pow(5, t);
  CHECK(sum.is_zero());
  CHECK(CycEl::zeta_pow(5, 4).coeffs().size() == 4);
  CHECK(CycEl::zeta_pow(5, -1) == CycEl::zeta_pow(5, 4));
  CHECK(z.conjugate() == CycEl::zeta_pow(5, 4));
  CHECK(z.galois(2) == CycEl::zeta_pow(5, 2));
  CHECK(CycEl::zeta_pow(2, 1) == CycEl::constant(2, -1));
}

TEST_CASE("quadratic part") {
  const AlgNum s = AlgNum::sqrt_minus_l(3, 7);
  CHECK(s * s == AlgNum::rational(3, 7, -7));
  const AlgNum pi = AlgNum::quadratic(2, 7, BigRational(-1, 2), BigRational(1, 2));
  CHECK(norm_squared(pi) == AlgNum::rational(2, 7, 2));
  CHECK(galois_flip(pi) == AlgNum::quadratic(2, 7, BigRational(-1, 2), BigRational(-1, 2)));
  // 2^7 ((-1 + sqrt(-7))/2)^7 = 832 + 448 sqrt(-7)
  const AlgNum g = pow(pi, 7) * BigRational(128);
  CHECK(g == AlgNum::quadratic(2, 7, 832, 448));
}

TEST_CASE("conjugations") {
  const AlgNum x = AlgNum::zeta_pow(5, 7, 2) * AlgNum::sqrt_minus_l(5, 7) + AlgNum::rational(5, 7, 3);
  const AlgNum c = complex_conjugate(x);
  CHECK(c == AlgNum::rational(5, 7, 3) - AlgNum::zeta_pow(5, 7, 3) * AlgNum::sqrt_minus_l(5, 7));
  CHECK(complex_conjugate(c) == x);
  const AlgNum n = norm_squared(x);
  CHECK(complex_conjugate(n) == n);
}

TEST_CASE("embedding") {
  PrecisionScope scope(40);
  const MpComplex z = embed_complex(AlgNum::sqrt_minus_l(3, 7), 40);
  CHECK(abs(z.re) < MpFloat(1e-30));
  CHECK(abs(z.im - sqrt(MpFloat(7))) < MpFloat(1e-30));
  const MpComplex w = embed_complex(AlgNum::zeta_pow(3, 7, 1), 40);
  CHECK(abs(w.re + MpFloat(0.5)) < MpFloat(1e-30));
}

TEST_CASE("serialisation round trips") {
  const AlgNum x = AlgNum::zeta_pow(5, 7, 2) * AlgNum::quadratic(5, 7, BigRational(-3, 4), BigRational(7, 2)) +
                   AlgNum::zeta_pow(5, 7, 4);
  CHECK(algnum_from_json(to_json(x)) == x);
  CHECK(parse_symbolic(5, 7, to_symbolic(x)) == x);
  CHECK(to_symbolic(AlgNum(5, 7)) == "0");
  CHECK(to_symbolic(AlgNum::rational(2, 7, -16512)) == "-16512");
  CHECK(parse_symbolic(2, 7, "-16512") == AlgNum::rational(2, 7, -16512));
  CHECK_THROWS_AS(parse_symbolic(5, 7, "3*banana"), Error);
}

TEST_CASE("mismatched fields are rejected") {
  CHECK_ERRC(AlgNum::rational(3, 7, 1) + AlgNum::rational(5, 7, 1), Errc::DomainMismatch);
}

TEST_CASE("canonical order is strict") {
  const AlgNum a = AlgNum::rational(3, 7, 1), b = AlgNum::rational(3, 7, 2);
  CHECK(canonical_less(a, b) != canonical_less(b, a));
  CHECK_FALSE(canonical_less(a, a));
}
