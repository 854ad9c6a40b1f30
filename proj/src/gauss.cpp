#include "walsh/gauss.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include "walsh/error.hpp"
#include "walsh/number_theory.hpp"

namespace walsh {

MpComplex QuadGaussValue::embed(unsigned digits) const {
  PrecisionScope scope(digits);
  const MpFloat root = boost::multiprecision::pow(boost::multiprecision::sqrt(MpFloat(p)), MpFloat(f));
  const MpFloat s(sign);
  return i_power == 0 ? MpComplex(s * root, MpFloat(0)) : MpComplex(MpFloat(0), s * root);
}

QuadGaussValue quadratic_gauss(std::uint64_t p, std::uint64_t f) {
  if (p == 2) throw Error(Errc::Unsupported, "no quadratic character in characteristic 2");
  if (f == 0) throw Error(Errc::InvalidInput, "extension degree must be positive");
  QuadGaussValue g;
  g.p = p;
  g.f = f;
  g.sign = (f - 1) % 2 == 0 ? 1 : -1;
  if (p % 4 == 3) {
    const unsigned k = static_cast<unsigned>(f % 4);
    if (k >= 2) g.sign = -g.sign;
    g.i_power = k % 2;
  }
  return g;
}

Index2Factors index2_factors(const Params& params) {
  const std::uint64_t p = params.p, l = params.l;
  const BigRational half(1, 2);
  Index2Factors out{AlgNum::quadratic(p, l, BigRational(params.a) * half, BigRational(params.b) * half),
                    AlgNum::quadratic(p, l, BigRational(params.a) * half, -BigRational(params.b) * half),
                    AlgNum(p, l), AlgNum(p, l), big_pow(p, (params.f - params.h) / 2)};
  out.A = pow(out.pi, l) * BigRational(big_pow(p, (params.f - params.h * l) / 2));
  out.B = galois_flip(out.A);
  return out;
}

AlgNum gauss_sum_index2(const Params& params, std::uint64_t i) {
  const std::uint64_t l = params.l;
  i %= params.N;
  if (i == 0) throw Error(Errc::InvalidExponent, "G(chi^0) is not an index-2 Gauss sum");
  const bool t1 = i % l == 0;
  const std::uint64_t u = t1 ? i / l : i;
  const Index2Factors fac = index2_factors(params);
  AlgNum g = t1 ? fac.A : fac.pi * BigRational(fac.P);
  // <p> mod l^2 is the subgroup of squares, so membership is a Legendre test.
  if (legendre_symbol(static_cast<std::int64_t>(u % l), l) == -1) g = galois_flip(g);
  return g;
}

AlgNum gauss_sum_total(const Params& params) {
  const std::uint64_t l = params.l;
  const Index2Factors fac = index2_factors(params);
  AlgNum total = (fac.A + fac.B) * BigRational((l - 1) / 2);
  total += (fac.pi + fac.pi_bar) * BigRational(fac.P * (l * (l - 1) / 2));
  return total;
}

}  // namespace walsh
