#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "walsh/bigint.hpp"

namespace walsh {

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;
  bool operator==(const PrimePower&) const = default;
};

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exponent, std::uint64_t m);
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m);

// Deterministic for the full 64-bit range.
bool is_prime(std::uint64_t n);

// Trial division up to 10^6, Pollard rho (Brent) for what remains.
// Factors come back sorted by prime.
std::vector<PrimePower> factorize(std::uint64_t n);

std::uint64_t euler_phi(std::uint64_t n);

// Smallest e >= 1 with x^e = 1 (mod n). Works from the factored group
// order rather than by stepping through powers.
std::uint64_t multiplicative_order(std::uint64_t x, std::uint64_t n);

// Smallest primitive root modulo n; n must have a cyclic unit group.
std::uint64_t smallest_primitive_root(std::uint64_t n);

// Legendre symbol (a|p) for an odd prime p.
int legendre_symbol(std::int64_t a, std::uint64_t p);

// Square root of a residue modulo a prime (Tonelli-Shanks). The root in
// [0, p/2] is returned.
std::uint64_t sqrt_mod_p(std::int64_t a, std::uint64_t p);

// Class number of Q(sqrt(-l)) for a prime l = 3 (mod 4), l > 3, from the
// Dirichlet character sum.
std::uint64_t class_number(std::uint64_t l);

// Number of reduced positive definite forms ax^2 + bxy + cy^2 with
// b^2 - 4ac = -d; an independent count of the class number.
std::uint64_t count_reduced_forms(std::uint64_t d);

struct NormSolution {
  BigInt a;
  BigInt b;
};

// Solves a^2 + l b^2 = 4 p^h with a = -2 p^((l-1+2h)/4) (mod l), b > 0.
NormSolution solve_ab(std::uint64_t p, std::uint64_t l, std::uint64_t h);

}  // namespace walsh
