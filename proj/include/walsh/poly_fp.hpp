#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "walsh/bigint.hpp"

namespace walsh {

// Dense polynomial over F_p, coefficients low degree first, no trailing
// zeros. p must be below 2^31.
class PolyFp {
 public:
  explicit PolyFp(std::uint64_t p);
  PolyFp(std::uint64_t p, std::vector<std::uint64_t> coeffs);

  static PolyFp constant(std::uint64_t p, std::uint64_t c);
  static PolyFp monomial(std::uint64_t p, std::uint64_t degree, std::uint64_t c = 1);

  std::uint64_t prime() const { return p_; }
  const std::vector<std::uint64_t>& coeffs() const { return c_; }
  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  std::uint64_t coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  std::uint64_t lead() const { return c_.empty() ? 0 : c_.back(); }

  PolyFp monic() const;

  friend PolyFp operator+(const PolyFp& x, const PolyFp& y);
  friend PolyFp operator-(const PolyFp& x, const PolyFp& y);
  friend PolyFp operator*(const PolyFp& x, const PolyFp& y);
  friend bool operator==(const PolyFp& x, const PolyFp& y) { return x.p_ == y.p_ && x.c_ == y.c_; }

 private:
  void trim();

  std::uint64_t p_;
  std::vector<std::uint64_t> c_;
};

std::pair<PolyFp, PolyFp> divmod(const PolyFp& x, const PolyFp& m);
PolyFp operator%(const PolyFp& x, const PolyFp& m);
// Monic gcd (zero if both inputs are zero).
PolyFp gcd(PolyFp x, PolyFp y);
PolyFp mulmod(const PolyFp& x, const PolyFp& y, const PolyFp& m);
PolyFp powmod(const PolyFp& base, const BigInt& exponent, const PolyFp& m);
PolyFp powmod(const PolyFp& base, std::uint64_t exponent, const PolyFp& m);

// Rabin's test.
bool is_irreducible(const PolyFp& g);

// Splits a monic squarefree g whose irreducible factors all have degree d
// (Cantor-Zassenhaus with a seeded generator). Factors are monic and sorted
// by lex_less.
std::vector<PolyFp> equal_degree_factors(const PolyFp& g, std::uint64_t d, std::uint64_t seed);

// Phi_l = 1 + x + ... + x^(l-1) over F_p for a prime l.
PolyFp cyclotomic_prime(std::uint64_t p, std::uint64_t l);

// Compares degree first, then coefficients from the top down.
bool lex_less(const PolyFp& x, const PolyFp& y);

}  // namespace walsh
