#include "walsh/cyclotomic.hpp"

#include <algorithm>

#include "walsh/error.hpp"

namespace walsh {

namespace {

// Folds a vector of weights on zeta^0..zeta^(p-1) into the Phi_p basis using
// zeta^(p-1) = -(1 + zeta + ... + zeta^(p-2)).
std::vector<BigRational> fold_top(std::vector<BigRational> full, std::uint64_t p) {
  const BigRational top = full[p - 1];
  full.resize(p - 1);
  if (top != 0) {
    for (auto& c : full) c -= top;
  }
  return full;
}

}  // namespace

CycEl::CycEl(std::uint64_t p) : p_(p), c_(p - 1) {
  if (p < 2) throw Error(Errc::InvalidInput, "CycEl needs a prime p >= 2");
}

CycEl::CycEl(std::uint64_t p, std::vector<BigRational> coeffs) : p_(p), c_(std::move(coeffs)) {
  if (c_.size() != p - 1) throw Error(Errc::InvalidInput, "CycEl coefficient count must be p-1");
}

CycEl CycEl::constant(std::uint64_t p, const BigRational& c) {
  CycEl x(p);
  x.c_[0] = c;
  return x;
}

CycEl CycEl::zeta_pow(std::uint64_t p, std::int64_t t) {
  std::int64_t e = t % static_cast<std::int64_t>(p);
  if (e < 0) e += static_cast<std::int64_t>(p);
  std::vector<BigRational> full(p);
  full[static_cast<std::size_t>(e)] = 1;
  return CycEl(p, fold_top(std::move(full), p));
}

CycEl CycEl::from_exponent_weights(std::uint64_t p, const std::vector<BigInt>& weights) {
  if (weights.size() != p) throw Error(Errc::InvalidInput, "need p exponent weights");
  std::vector<BigRational> full(p);
  for (std::uint64_t t = 0; t < p; ++t) full[t] = weights[t];
  return CycEl(p, fold_top(std::move(full), p));
}

void CycEl::require_same(const CycEl& o) const {
  if (p_ != o.p_) {
    throw Error(Errc::DomainMismatch,
                "Q(zeta_" + std::to_string(p_) + ") vs Q(zeta_" + std::to_string(o.p_) + ")");
  }
}

CycEl& CycEl::operator+=(const CycEl& o) {
  require_same(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

CycEl& CycEl::operator-=(const CycEl& o) {
  require_same(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

CycEl& CycEl::operator*=(const CycEl& o) {
  require_same(o);
  const std::size_t d = c_.size();
  std::vector<BigRational> full(p_);
  BigRational term;
  for (std::size_t i = 0; i < d; ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (o.c_[j] == 0) continue;
      term = c_[i] * o.c_[j];
      full[(i + j) % p_] += term;
    }
  }
  c_ = fold_top(std::move(full), p_);
  return *this;
}

CycEl& CycEl::operator*=(const BigRational& s) {
  for (auto& c : c_) c *= s;
  return *this;
}

CycEl CycEl::operator-() const {
  CycEl r(*this);
  for (auto& c : r.c_) c = -c;
  return r;
}

CycEl CycEl::galois(std::uint64_t k) const {
  if (k % p_ == 0) throw Error(Errc::InvalidInput, "Galois exponent must be coprime to p");
  std::vector<BigRational> full(p_);
  for (std::size_t i = 0; i < c_.size(); ++i) full[(i * k) % p_] += c_[i];
  return CycEl(p_, fold_top(std::move(full), p_));
}

CycEl CycEl::conjugate() const { return galois(p_ - 1); }

bool CycEl::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const BigRational& c) { return c == 0; });
}

std::optional<BigRational> CycEl::as_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i) {
    if (c_[i] != 0) return std::nullopt;
  }
  return c_[0];
}

bool CycEl::has_integer_coeffs() const {
  return std::all_of(c_.begin(), c_.end(), [](const BigRational& c) { return c.get_den() == 1; });
}

}  // namespace walsh
