#include "walsh/bigint.hpp"

#include "walsh/error.hpp"

namespace walsh {

BigInt big_pow(std::uint64_t base, std::uint64_t exponent) {
  BigInt result;
  mpz_ui_pow_ui(result.get_mpz_t(), static_cast<unsigned long>(base),
                static_cast<unsigned long>(exponent));
  return result;
}

BigInt to_big(std::uint64_t value) {
  BigInt r;
  mpz_import(r.get_mpz_t(), 1, -1, sizeof(value), 0, 0, &value);
  return r;
}

BigInt to_big_signed(std::int64_t value) {
  if (value >= 0) return to_big(static_cast<std::uint64_t>(value));
  // -(value+1) avoids overflow at INT64_MIN.
  BigInt r = to_big(static_cast<std::uint64_t>(-(value + 1)));
  r += 1;
  return -r;
}

BigRational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error(Errc::InvalidInput, "zero denominator");
  BigRational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_decimal(const BigInt& value) { return value.get_str(10); }

BigInt parse_decimal(const std::string& text) {
  BigInt r;
  if (text.empty() || r.set_str(text, 10) != 0) {
    throw Error(Errc::InvalidInput, "not a decimal integer: '" + text + "'");
  }
  return r;
}

std::uint64_t mod_u64(const BigInt& value, std::uint64_t m) {
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), value.get_mpz_t(), to_big(m).get_mpz_t());
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, r.get_mpz_t());
  return out;
}

bool perfect_square(const BigInt& n, BigInt& root) {
  if (n < 0) return false;
  if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return false;
  mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
  return true;
}

}  // namespace walsh
