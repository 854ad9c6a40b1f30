#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "walsh/cyclotomic.hpp"
#include "walsh/mp_complex.hpp"

namespace walsh {

// re + im * sqrt(-l) with re, im in Q(zeta_p). Every Walsh value, Gauss
// sum and intermediate sum of the closed forms lives in this field.
class AlgNum {
 public:
  AlgNum(std::uint64_t p, std::uint64_t l);
  AlgNum(CycEl re, CycEl im, std::uint64_t l);

  static AlgNum rational(std::uint64_t p, std::uint64_t l, const BigRational& c);
  // x + y sqrt(-l) with rational x, y.
  static AlgNum quadratic(std::uint64_t p, std::uint64_t l, const BigRational& x, const BigRational& y);
  static AlgNum sqrt_minus_l(std::uint64_t p, std::uint64_t l);
  static AlgNum zeta_pow(std::uint64_t p, std::uint64_t l, std::int64_t t);
  static AlgNum from_cyc(CycEl re, std::uint64_t l);

  std::uint64_t prime() const { return re_.prime(); }
  std::uint64_t l() const { return l_; }
  const CycEl& re() const { return re_; }
  const CycEl& im() const { return im_; }

  AlgNum& operator+=(const AlgNum& o);
  AlgNum& operator-=(const AlgNum& o);
  AlgNum& operator*=(const AlgNum& o);
  AlgNum& operator*=(const BigRational& s);

  friend AlgNum operator+(AlgNum x, const AlgNum& y) { return x += y; }
  friend AlgNum operator-(AlgNum x, const AlgNum& y) { return x -= y; }
  friend AlgNum operator*(AlgNum x, const AlgNum& y) { return x *= y; }
  friend AlgNum operator*(AlgNum x, const BigRational& s) { return x *= s; }
  friend AlgNum operator*(const BigRational& s, AlgNum x) { return x *= s; }
  AlgNum operator-() const { return AlgNum(-re_, -im_, l_); }

  friend bool operator==(const AlgNum& x, const AlgNum& y) {
    return x.l_ == y.l_ && x.re_ == y.re_ && x.im_ == y.im_;
  }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

 private:
  void require_same(const AlgNum& o) const;

  CycEl re_;
  CycEl im_;
  std::uint64_t l_;
};

AlgNum pow(const AlgNum& x, std::uint64_t exponent);

// zeta -> zeta^(-1) and sqrt(-l) -> -sqrt(-l).
AlgNum complex_conjugate(const AlgNum& x);
// sqrt(-l) -> -sqrt(-l), zeta fixed.
AlgNum galois_flip(const AlgNum& x);
// x * complex_conjugate(x).
AlgNum norm_squared(const AlgNum& x);

// zeta_p -> exp(2 pi i / p), sqrt(-l) -> +i sqrt(l), evaluated with the
// given number of decimal digits.
MpComplex embed_complex(const AlgNum& x, unsigned digits);

nlohmann::json to_json(const AlgNum& x);
AlgNum algnum_from_json(const nlohmann::json& j);

// Human-readable form "c0 + c1*zeta^1 + d0*sqrt(-l) + ..." that parses back
// exactly with parse_symbolic.
std::string to_symbolic(const AlgNum& x);
AlgNum parse_symbolic(std::uint64_t p, std::uint64_t l, const std::string& text);

// Total order on values (for sorting spectrum lines deterministically).
bool canonical_less(const AlgNum& x, const AlgNum& y);

}  // namespace walsh
