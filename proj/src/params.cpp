#include "walsh/params.hpp"

#include <algorithm>

#include "walsh/error.hpp"
#include "walsh/number_theory.hpp"

namespace walsh {

std::string_view to_string(ClassLabel label) noexcept {
  switch (label) {
    case ClassLabel::Zero: return "k=0";
    case ClassLabel::LH1_0: return "lH1_0";
    case ClassLabel::LH1_1: return "lH1_1";
    case ClassLabel::H2_0: return "H2_0";
    case ClassLabel::H2_1: return "H2_1";
  }
  return "?";
}

ClassLabel class_label_from_string(std::string_view text) {
  for (ClassLabel c : kAllClasses) {
    if (to_string(c) == text) return c;
  }
  throw Error(Errc::InvalidInput, "unknown class label '" + std::string(text) + "'");
}

ClassLabel classify_residue(std::uint64_t k, std::uint64_t l) {
  k %= l * l;
  if (k == 0) return ClassLabel::Zero;
  const auto square_mod_l = [l](std::uint64_t u) {
    return pow_mod(u % l, (l - 1) / 2, l) == 1;
  };
  if (k % l == 0) return square_mod_l(k / l) ? ClassLabel::LH1_0 : ClassLabel::LH1_1;
  return square_mod_l(k) ? ClassLabel::H2_0 : ClassLabel::H2_1;
}

const std::vector<std::uint64_t>& ResiduePartition::members(ClassLabel label) const {
  switch (label) {
    case ClassLabel::LH1_0: return h1_0;
    case ClassLabel::LH1_1: return h1_1;
    case ClassLabel::H2_0: return h2_0;
    case ClassLabel::H2_1: return h2_1;
    case ClassLabel::Zero: break;
  }
  throw Error(Errc::InvalidInput, "class k=0 has no member list");
}

std::vector<std::uint64_t> ResiduePartition::residues(ClassLabel label) const {
  switch (label) {
    case ClassLabel::Zero: return {0};
    case ClassLabel::LH1_0:
    case ClassLabel::LH1_1: {
      std::vector<std::uint64_t> out;
      for (std::uint64_t u : members(label)) out.push_back(l * u);
      return out;
    }
    default: return members(label);
  }
}

ResiduePartition residue_partition(std::uint64_t l) {
  if (!is_prime(l) || l < 5) throw Error(Errc::BadL, "l must be an odd prime > 3");
  ResiduePartition part;
  part.l = l;
  const std::uint64_t n = l * l;
  part.gamma = smallest_primitive_root(n);

  const std::uint64_t g2 = mul_mod(part.gamma, part.gamma, n);
  std::uint64_t x = 1;
  for (std::uint64_t i = 0; i < l * (l - 1) / 2; ++i) {
    part.h2_0.push_back(x);
    part.h2_1.push_back(mul_mod(x, part.gamma, n));
    x = mul_mod(x, g2, n);
  }
  x = 1;
  const std::uint64_t g2_mod_l = g2 % l;
  for (std::uint64_t i = 0; i < (l - 1) / 2; ++i) {
    part.h1_0.push_back(x);
    part.h1_1.push_back(mul_mod(x, part.gamma % l, l));
    x = mul_mod(x, g2_mod_l, l);
  }
  for (auto* v : {&part.h1_0, &part.h1_1, &part.h2_0, &part.h2_1}) std::sort(v->begin(), v->end());
  return part;
}

Params validate_instance(std::uint64_t p, std::uint64_t l) {
  if (!is_prime(p)) throw Error(Errc::InvalidInput, std::to_string(p) + " is not prime");
  if (!is_prime(l)) throw Error(Errc::InvalidInput, std::to_string(l) + " is not prime");
  if (l % 4 != 3 || l == 3) throw Error(Errc::BadL, "l must satisfy l = 3 (mod 4), l != 3");
  if (p == l) throw Error(Errc::InvalidInput, "p and l must differ");

  Params params;
  params.p = p;
  params.l = l;
  params.N = l * l;
  params.f = l * (l - 1) / 2;
  const std::uint64_t order = multiplicative_order(p, params.N);
  if (order != params.f) {
    throw Error(Errc::NotIndexTwo, "ord_" + std::to_string(params.N) + "(" + std::to_string(p) +
                                       ") = " + std::to_string(order) + ", expected " +
                                       std::to_string(params.f));
  }
  params.h = class_number(l);
  auto [a, b] = solve_ab(p, l, params.h);
  params.a = a;
  params.b = b;

  // -l = 1 (mod p)  <=>  p | l + 1.
  if ((l + 1) % p == 0) {
    params.arith.kind = ArithKind::Special;
  } else {
    params.arith.kind = ArithKind::Generic;
    params.arith.sqrt_minus_l = sqrt_mod_p(-static_cast<std::int64_t>(l), p);
  }
  return params;
}

}  // namespace walsh
