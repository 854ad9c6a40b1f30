#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "walsh/bigint.hpp"

namespace walsh {

// Element of Q(zeta_p) in the power basis 1, zeta, ..., zeta^(p-2), i.e.
// reduced modulo the cyclotomic polynomial Phi_p.
class CycEl {
 public:
  explicit CycEl(std::uint64_t p);
  CycEl(std::uint64_t p, std::vector<BigRational> coeffs);

  static CycEl constant(std::uint64_t p, const BigRational& c);
  // zeta_p^t; depends only on t mod p.
  static CycEl zeta_pow(std::uint64_t p, std::int64_t t);
  // sum_t weights[t] * zeta^t for t = 0..p-1 (weights.size() == p).
  static CycEl from_exponent_weights(std::uint64_t p, const std::vector<BigInt>& weights);

  std::uint64_t prime() const { return p_; }
  const std::vector<BigRational>& coeffs() const { return c_; }

  CycEl& operator+=(const CycEl& o);
  CycEl& operator-=(const CycEl& o);
  CycEl& operator*=(const CycEl& o);
  CycEl& operator*=(const BigRational& s);

  friend CycEl operator+(CycEl x, const CycEl& y) { return x += y; }
  friend CycEl operator-(CycEl x, const CycEl& y) { return x -= y; }
  friend CycEl operator*(CycEl x, const CycEl& y) { return x *= y; }
  friend CycEl operator*(CycEl x, const BigRational& s) { return x *= s; }
  friend CycEl operator*(const BigRational& s, CycEl x) { return x *= s; }
  CycEl operator-() const;

  friend bool operator==(const CycEl& x, const CycEl& y) { return x.p_ == y.p_ && x.c_ == y.c_; }

  // zeta -> zeta^(-1).
  CycEl conjugate() const;
  // zeta -> zeta^k for k coprime to p.
  CycEl galois(std::uint64_t k) const;

  bool is_zero() const;
  std::optional<BigRational> as_rational() const;
  bool has_integer_coeffs() const;

 private:
  void require_same(const CycEl& o) const;

  std::uint64_t p_;
  std::vector<BigRational> c_;
};

}  // namespace walsh
