#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "walsh/algnum.hpp"
#include "walsh/params.hpp"

namespace walsh {

// Tr_{q/p}(beta^i) as a function of the class of i. epsilon is set in the
// Generic case only.
struct TraceTable {
  std::uint64_t p = 0;
  std::uint64_t l = 0;
  std::array<std::uint64_t, 5> entries{};
  std::optional<std::uint64_t> epsilon;

  std::uint64_t entry(ClassLabel c) const { return entries[static_cast<std::size_t>(c)]; }
  // Tr(beta^i) for any integer exponent i.
  std::uint64_t at(std::uint64_t i) const { return entry(classify_residue(i, l)); }

  bool operator==(const TraceTable&) const = default;
};

TraceTable trace_beta_table(const Params& params);

struct ISums {
  ClassLabel k_class = ClassLabel::Zero;
  AlgNum I0, I1_0, I1_1, I2_0, I2_1;
};

// The five sums in their closed forms (three arithmetic cases).
ISums i_sums(const Params& params, ClassLabel k_class);
// Same sums evaluated term by term from the trace table and the Gauss
// periods sum_{j in C} zeta_N^(-ij).
ISums i_sums_direct(const Params& params, const TraceTable& table, ClassLabel k_class);

// f^(b) for b != 0 in class k_class, assembled from the I-sums and the
// index-2 Gauss sums.
AlgNum walsh_value_from_isums(const Params& params, const ISums& sums);
AlgNum walsh_value_assembled(const Params& params, ClassLabel k_class);

// f^(b) for b != 0 from the tabulated spectrum (Generic or Special table).
AlgNum tabulated_value(const Params& params, ClassLabel k_class);

// f^(0) = 1 + ((q-1)/N) I0.
AlgNum spectrum_at_zero(const Params& params);

// Number of b in F_q^* with b^((q-1)/N) in the given class.
BigInt class_frequency(const Params& params, ClassLabel k_class);

struct SpectrumLine {
  std::string label;
  AlgNum value;
  BigInt frequency;
};

struct SpectrumTable {
  Params params;
  std::vector<SpectrumLine> lines;

  // Lines with equal exact values combined (labels joined by '|'), sorted
  // canonically.
  std::vector<SpectrumLine> merged() const;
  std::size_t distinct_values() const { return merged().size(); }
};

inline constexpr const char* kZeroLabel = "b=0";

SpectrumTable spectrum(const Params& params);

struct SpectrumIdentities {
  bool frequency_sum = false;  // sum freq = q
  bool mean = false;           // sum freq * v = q
  bool parseval = false;       // sum freq * |v|^2 = q^2
  bool all() const { return frequency_sum && mean && parseval; }
};

SpectrumIdentities check_identities(const SpectrumTable& table);

// Equality of the merged (value, frequency) multisets; labels ignored.
bool same_multiset(const std::vector<SpectrumLine>& x, const std::vector<SpectrumLine>& y);

// 1 + l = 4 p^h.
bool five_line_table_applies(const Params& params);
// The specialised five-line table, valid for l = 3 (mod 8) under the
// convention sqrt(-l) = 1 (mod P1), b = -1. Throws Unsupported otherwise.
SpectrumTable five_line_spectrum(const Params& params);

// Fix delta (Special) or the square root of -l (Generic), then b's sign
// from the reduction of sqrt(-l) = -a/b modulo the prime above p.
Params with_delta(Params params, int delta, std::string source);
Params with_sqrt_minus_l(Params params, std::uint64_t root, std::string source);
// b's sign implied by the current delta / root; throws UnresolvedConvention
// if delta is unset.
Params apply_sign_rule(Params params);

}  // namespace walsh
