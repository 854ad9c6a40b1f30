#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "walsh/closed_form.hpp"
#include "walsh/field.hpp"
#include "walsh/kernels.hpp"
#include "walsh/mp_complex.hpp"
#include "walsh/number_theory.hpp"

namespace walsh {

// Tr(beta^i) for i = 0..N-1, computed in the field.
std::vector<std::uint64_t> in_field_trace_row(const FieldCtx& ctx, const BetaTable& beta);

// Brute-force Walsh values: per_k[k] is f^(b) for any b with
// b^((q-1)/N) = beta^k, at_zero is f^(0).
struct BruteSpectrum {
  std::uint64_t p;
  std::uint64_t l;
  std::vector<AlgNum> per_k;
  AlgNum at_zero;
  BigInt per_class_count;  // (q-1)/N

  // b = 0 plus one line per k; merge() collapses them.
  std::vector<SpectrumLine> lines() const;
  // Every k in a residue class gives the same value.
  bool class_constant() const;
};

BruteSpectrum brute_walsh_spectrum(const CountMatrix& counts, const std::vector<std::uint64_t>& trace_row,
                                   std::uint64_t p, std::uint64_t l);

// sum_{x in F_q} psi(x^N), from the class-0 row of the count matrix.
AlgNum brute_power_sum(const CountMatrix& counts, std::uint64_t l);

// G(chi^j) = sum_i sum_t counts[i][t] zeta_N^(ij) zeta_p^t.
MpComplex brute_gauss_sum(const CountMatrix& counts, std::uint64_t j, unsigned digits);

// Index of alpha^s for s = 0..q-2 (small fields only).
std::vector<std::uint64_t> power_index_table(const FieldCtx& ctx);

// G(eta) for the quadratic character of a small field, by enumeration.
MpComplex brute_quadratic_gauss(const FieldCtx& ctx, unsigned digits);

// Order-2 cyclotomic numbers (i, j) = |(1 + C_i) cap C_j|.
using CycloTable = std::array<std::array<std::uint64_t, 2>, 2>;
CycloTable brute_cyclotomic_numbers(std::uint64_t p, std::uint64_t e, std::uint64_t seed = 0);
CycloTable cyclotomic_numbers_formula(const BigInt& q);

// `count` distinct odd prime powers below `bound`, half of them proper
// powers (e >= 2), drawn with a seeded shuffle and sorted by value.
std::vector<PrimePower> odd_prime_power_sample(std::uint64_t bound, std::size_t count, std::uint64_t seed);

// sum_x psi(a x^n + b) against psi(b) sum_{j=1}^{s-1} conj(chi^j(a)) G(chi^j)
// with s = gcd(n, q-1), both by enumeration.
struct CharacterSumCheck {
  MpComplex lhs;
  MpComplex rhs;
  bool agree = false;
};
CharacterSumCheck character_sum_check(const FieldCtx& ctx, std::uint64_t n, const FieldElem& a, const FieldElem& b,
                            unsigned digits, double tolerance = 1e-8);

// delta from sum_{u in H1_0} xi^u, xi a root of the lexicographically
// smallest degree-(l-1)/2 factor of Phi_l over F_p. Special case only.
int determine_delta(const Params& params, std::uint64_t seed = 0);
// Same with xi = beta^l in a field attached to order N.
int determine_delta_anchored(const Params& params, const FieldCtx& ctx, const BetaTable& beta);

// Generic case: epsilon = sum_{u in H1_0} xi^u in F_p, xi as above.
std::uint64_t subfield_epsilon(const Params& params, std::uint64_t seed = 0);
// Generic case: sqrt(-l) = 2 Tr(beta^l)/l + 1 from a field attached to N.
std::uint64_t sqrt_minus_l_anchored(const Params& params, const FieldCtx& ctx, const BetaTable& beta);

// Whether q is small enough for the counting pass.
bool oracle_feasible(const Params& params, const BigInt& verify_bound);

// Fixes delta / sqrt(-l) and the sign of b. Feasible instances anchor to
// alpha of the seeded field; the rest use the residue-field factor
// (Special) or the canonical root (Generic).
Params resolve_convention(const Params& params, const BigInt& verify_bound, std::uint64_t seed);

}  // namespace walsh
