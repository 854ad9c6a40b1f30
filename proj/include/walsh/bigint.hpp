#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace walsh {

using BigInt = mpz_class;
using BigRational = mpq_class;

BigInt big_pow(std::uint64_t base, std::uint64_t exponent);

BigInt to_big(std::uint64_t value);
BigInt to_big_signed(std::int64_t value);

// Canonical fraction num/den; den must be nonzero.
BigRational make_rational(const BigInt& num, const BigInt& den);

// Decimal strings are the only serialized form of big numbers.
std::string to_decimal(const BigInt& value);
BigInt parse_decimal(const std::string& text);

// Non-negative residue of value modulo m (m > 0).
std::uint64_t mod_u64(const BigInt& value, std::uint64_t m);

// Exact integer square root test; returns true and sets root when n is a square.
bool perfect_square(const BigInt& n, BigInt& root);

}  // namespace walsh
