#pragma once

#include <cstdint>

#include "walsh/algnum.hpp"
#include "walsh/mp_complex.hpp"
#include "walsh/params.hpp"

namespace walsh {

// sign * i^i_power * sqrt(p^f), kept symbolic because sqrt(q) is not in
// Q(zeta_p, sqrt(-l)) in general. i_power is normalized to 0 or 1.
struct QuadGaussValue {
  int sign = 1;
  unsigned i_power = 0;
  std::uint64_t p = 0;
  std::uint64_t f = 0;

  MpComplex embed(unsigned digits) const;
  BigInt modulus_squared() const { return big_pow(p, f); }
};

// Gauss sum of the quadratic character of F_{p^f}.
QuadGaussValue quadratic_gauss(std::uint64_t p, std::uint64_t f);

// The building blocks of every index-2 Gauss sum:
//   pi = (a + b sqrt(-l))/2,  A = p^((f-hl)/2) pi^l,  B = conj(A),
//   P = p^((f-h)/2).
struct Index2Factors {
  AlgNum pi;
  AlgNum pi_bar;
  AlgNum A;
  AlgNum B;
  BigInt P;
};

Index2Factors index2_factors(const Params& params);

// G(chi^i) for a character chi of order N = l^2 with chi(alpha) = zeta_N.
AlgNum gauss_sum_index2(const Params& params, std::uint64_t i);

// sum_{j=1}^{N-1} G(chi^j), which equals sum_x psi(x^N) over F_q.
AlgNum gauss_sum_total(const Params& params);

}  // namespace walsh
