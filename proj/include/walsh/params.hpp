#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "walsh/bigint.hpp"

namespace walsh {

// Partition of Z/l^2Z used to index Walsh values: k = 0, k in l*H1_0,
// k in l*H1_1, k a unit square, k a unit non-square.
enum class ClassLabel { Zero, LH1_0, LH1_1, H2_0, H2_1 };

inline constexpr ClassLabel kAllClasses[] = {ClassLabel::Zero, ClassLabel::LH1_0, ClassLabel::LH1_1,
                                             ClassLabel::H2_0, ClassLabel::H2_1};

std::string_view to_string(ClassLabel label) noexcept;
ClassLabel class_label_from_string(std::string_view text);

// Class of k (mod l^2).
ClassLabel classify_residue(std::uint64_t k, std::uint64_t l);

enum class ArithKind { Generic, Special };

// Generic means -l != 1 (mod p). The Special case carries delta, the sign
// that decides which of l*H1_0 / l*H1_1 has trace 1; it is 0 until a
// convention is fixed. The Generic case carries the chosen square root of
// -l in F_p.
struct ArithCase {
  ArithKind kind = ArithKind::Generic;
  int delta = 0;
  std::uint64_t sqrt_minus_l = 0;

  bool resolved() const { return kind == ArithKind::Generic || delta != 0; }
};

struct Params {
  std::uint64_t p = 0;
  std::uint64_t l = 0;
  std::uint64_t N = 0;
  std::uint64_t f = 0;
  std::uint64_t h = 0;
  BigInt a;
  BigInt b;
  ArithCase arith;
  // Where b's sign and delta/sqrt(-l) came from: "unresolved", "rule",
  // "oracle".
  std::string convention_source = "unresolved";

  BigInt q() const { return big_pow(p, f); }
  bool special() const { return arith.kind == ArithKind::Special; }
};

struct ResiduePartition {
  std::uint64_t l = 0;
  std::uint64_t gamma = 0;  // smallest primitive root of l^2
  std::vector<std::uint64_t> h1_0, h1_1;  // squares / non-squares mod l
  std::vector<std::uint64_t> h2_0, h2_1;  // squares / non-squares mod l^2

  const std::vector<std::uint64_t>& members(ClassLabel label) const;
  // Every k in 0..l^2-1 with the given label (Zero gives {0}).
  std::vector<std::uint64_t> residues(ClassLabel label) const;
};

ResiduePartition residue_partition(std::uint64_t l);

// Checks the index-2 hypotheses and derives f, h, (a, b) and the
// arithmetic case. b comes back positive and delta unresolved.
Params validate_instance(std::uint64_t p, std::uint64_t l);

}  // namespace walsh
