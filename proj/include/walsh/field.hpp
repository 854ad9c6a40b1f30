#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "walsh/bigint.hpp"
#include "walsh/poly_fp.hpp"

namespace walsh {

// Coordinates in the power basis 1, x, ..., x^(f-1) of F_p[x]/(modulus).
struct FieldElem {
  std::vector<std::uint64_t> c;

  bool operator==(const FieldElem&) const = default;
  auto operator<=>(const FieldElem&) const = default;
};

// F_{p^f} as F_p[x]/(g) for a monic irreducible g. alpha is present when
// the field was built with a certified primitive element.
class FieldCtx {
 public:
  explicit FieldCtx(PolyFp modulus);

  std::uint64_t p() const { return p_; }
  std::uint64_t f() const { return f_; }
  const PolyFp& modulus() const { return modulus_; }
  const BigInt& q() const { return q_; }
  const std::optional<FieldElem>& alpha() const { return alpha_; }
  void set_alpha(FieldElem a) { alpha_ = std::move(a); }
  // trace_form()[j] = Tr(x^j).
  const std::vector<std::uint64_t>& trace_form() const { return trace_form_; }

  FieldElem zero() const { return FieldElem{std::vector<std::uint64_t>(f_, 0)}; }
  FieldElem one() const { return constant(1); }
  FieldElem constant(std::uint64_t c) const;
  // The class of x, i.e. the root of the modulus.
  FieldElem root() const;

  FieldElem add(const FieldElem& x, const FieldElem& y) const;
  FieldElem sub(const FieldElem& x, const FieldElem& y) const;
  FieldElem mul(const FieldElem& x, const FieldElem& y) const;
  FieldElem pow(const FieldElem& x, const BigInt& e) const;
  FieldElem pow(const FieldElem& x, std::uint64_t e) const { return pow(x, to_big(e)); }
  bool is_zero(const FieldElem& x) const;

  // Linear-form trace, O(f).
  std::uint64_t trace(const FieldElem& x) const;
  // x + x^p + ... + x^(p^(f-1)); for self-checks.
  std::uint64_t trace_naive(const FieldElem& x) const;

  // Base-p digits of the coordinates (constant term least significant);
  // requires q < 2^64.
  std::uint64_t to_index(const FieldElem& x) const;
  FieldElem from_index(std::uint64_t index) const;

  PolyFp to_poly(const FieldElem& x) const { return PolyFp(p_, x.c); }
  FieldElem from_poly(const PolyFp& x) const;

 private:
  std::uint64_t p_;
  std::uint64_t f_;
  PolyFp modulus_;
  BigInt q_;
  std::optional<FieldElem> alpha_;
  std::vector<std::uint64_t> trace_form_;
};

// Lexicographically first irreducible modulus at or after the seeded start
// index, then the smallest element (by index) whose order is q - 1.
// Requires q - 1 < 2^64 so the group order can be factored.
FieldCtx build_field(std::uint64_t p, std::uint64_t f, std::uint64_t seed);

// Modulus only (no primitive element); any size.
FieldCtx build_extension(std::uint64_t p, std::uint64_t f, std::uint64_t seed);

// beta of exact order N with its first N powers. With alpha present,
// beta = alpha^((q-1)/N); otherwise the smallest candidate c with
// c^((q-1)/N) of exact order N.
struct BetaTable {
  std::uint64_t N = 0;
  FieldElem beta;
  std::vector<FieldElem> powers;
  std::map<FieldElem, std::uint64_t> index;
};

BetaTable attach_order(const FieldCtx& ctx, std::uint64_t N);

// i with x^((q-1)/N) = beta^i.
std::uint64_t classify(const FieldCtx& ctx, const BetaTable& table, const FieldElem& x);

// Whether x has multiplicative order exactly n (prime divisors of n given).
bool has_exact_order(const FieldCtx& ctx, const FieldElem& x, const BigInt& n,
                     const std::vector<BigInt>& prime_divisors);

}  // namespace walsh
