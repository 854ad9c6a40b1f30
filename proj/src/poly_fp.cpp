#include "walsh/poly_fp.hpp"

#include <algorithm>
#include <random>

#include "walsh/error.hpp"
#include "walsh/number_theory.hpp"

namespace walsh {

PolyFp::PolyFp(std::uint64_t p) : p_(p) {
  if (p < 2 || p >= (1ULL << 31)) throw Error(Errc::Unsupported, "polynomial arithmetic needs 2 <= p < 2^31");
}

PolyFp::PolyFp(std::uint64_t p, std::vector<std::uint64_t> coeffs) : PolyFp(p) {
  c_ = std::move(coeffs);
  for (auto& c : c_) c %= p_;
  trim();
}

PolyFp PolyFp::constant(std::uint64_t p, std::uint64_t c) { return PolyFp(p, {c}); }

PolyFp PolyFp::monomial(std::uint64_t p, std::uint64_t degree, std::uint64_t c) {
  std::vector<std::uint64_t> v(degree + 1, 0);
  v[degree] = c;
  return PolyFp(p, std::move(v));
}

void PolyFp::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

PolyFp PolyFp::monic() const {
  if (c_.empty()) return *this;
  const std::uint64_t inv = inverse_mod(lead(), p_);
  PolyFp r = *this;
  for (auto& c : r.c_) c = c * inv % p_;
  return r;
}

PolyFp operator+(const PolyFp& x, const PolyFp& y) {
  if (x.p_ != y.p_) throw Error(Errc::DomainMismatch, "polynomials over different fields");
  std::vector<std::uint64_t> r(std::max(x.c_.size(), y.c_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = (x.coeff(i) + y.coeff(i)) % x.p_;
  return PolyFp(x.p_, std::move(r));
}

PolyFp operator-(const PolyFp& x, const PolyFp& y) {
  if (x.p_ != y.p_) throw Error(Errc::DomainMismatch, "polynomials over different fields");
  std::vector<std::uint64_t> r(std::max(x.c_.size(), y.c_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = (x.coeff(i) + x.p_ - y.coeff(i)) % x.p_;
  return PolyFp(x.p_, std::move(r));
}

PolyFp operator*(const PolyFp& x, const PolyFp& y) {
  if (x.p_ != y.p_) throw Error(Errc::DomainMismatch, "polynomials over different fields");
  if (x.is_zero() || y.is_zero()) return PolyFp(x.p_);
  const std::uint64_t p = x.p_;
  std::vector<std::uint64_t> r(x.c_.size() + y.c_.size() - 1, 0);
  if (p < (1ULL << 16)) {
    // products < 2^32: sums of up to 2^32 terms fit, reduce once at the end
    for (std::size_t i = 0; i < x.c_.size(); ++i) {
      if (x.c_[i] == 0) continue;
      for (std::size_t j = 0; j < y.c_.size(); ++j) r[i + j] += x.c_[i] * y.c_[j];
    }
    for (auto& c : r) c %= p;
  } else {
    for (std::size_t i = 0; i < x.c_.size(); ++i) {
      if (x.c_[i] == 0) continue;
      for (std::size_t j = 0; j < y.c_.size(); ++j) r[i + j] = (r[i + j] + x.c_[i] * y.c_[j]) % p;
    }
  }
  return PolyFp(p, std::move(r));
}

std::pair<PolyFp, PolyFp> divmod(const PolyFp& x, const PolyFp& m) {
  if (m.is_zero()) throw Error(Errc::InvalidInput, "division by the zero polynomial");
  const std::uint64_t p = m.prime();
  if (x.degree() < m.degree()) return {PolyFp(p), x};
  std::vector<std::uint64_t> rem = x.coeffs();
  const std::size_t dm = static_cast<std::size_t>(m.degree());
  std::vector<std::uint64_t> quo(rem.size() - dm, 0);
  const std::uint64_t inv = inverse_mod(m.lead(), p);
  const auto& mc = m.coeffs();
  for (std::size_t k = rem.size(); k-- > dm;) {
    const std::uint64_t c = rem[k] * inv % p;
    if (c == 0) continue;
    quo[k - dm] = c;
    const std::size_t shift = k - dm;
    for (std::size_t j = 0; j <= dm; ++j) rem[shift + j] = (rem[shift + j] + (p - c) * mc[j]) % p;
  }
  rem.resize(dm);
  return {PolyFp(p, std::move(quo)), PolyFp(p, std::move(rem))};
}

PolyFp operator%(const PolyFp& x, const PolyFp& m) { return divmod(x, m).second; }

PolyFp gcd(PolyFp x, PolyFp y) {
  while (!y.is_zero()) {
    PolyFp r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

PolyFp mulmod(const PolyFp& x, const PolyFp& y, const PolyFp& m) { return (x * y) % m; }

PolyFp powmod(const PolyFp& base, const BigInt& exponent, const PolyFp& m) {
  if (exponent < 0) throw Error(Errc::InvalidInput, "negative exponent");
  PolyFp result = PolyFp::constant(m.prime(), 1) % m;
  const PolyFp b = base % m;
  const std::size_t bits = mpz_sizeinbase(exponent.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = mulmod(result, result, m);
    if (mpz_tstbit(exponent.get_mpz_t(), i)) result = mulmod(result, b, m);
  }
  return result;
}

PolyFp powmod(const PolyFp& base, std::uint64_t exponent, const PolyFp& m) {
  return powmod(base, to_big(exponent), m);
}

bool is_irreducible(const PolyFp& g) {
  const long n = g.degree();
  if (n < 1) return false;
  if (n == 1) return true;
  const std::uint64_t p = g.prime();
  const PolyFp x = PolyFp::monomial(p, 1);
  // frob[k] = x^(p^k) mod g
  std::vector<PolyFp> frob{x % g};
  for (long k = 1; k <= n; ++k) frob.push_back(powmod(frob.back(), p, g));
  if (!(frob[static_cast<std::size_t>(n)] == x % g)) return false;
  for (const auto& [r, e] : factorize(static_cast<std::uint64_t>(n))) {
    (void)e;
    const PolyFp h = frob[static_cast<std::size_t>(n / static_cast<long>(r))] - x;
    if (gcd(g, h).degree() != 0) return false;
  }
  return true;
}

bool lex_less(const PolyFp& x, const PolyFp& y) {
  if (x.degree() != y.degree()) return x.degree() < y.degree();
  const auto& a = x.coeffs();
  const auto& b = y.coeffs();
  return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
}

namespace {

PolyFp random_poly(std::uint64_t p, long below_degree, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
  std::vector<std::uint64_t> c(static_cast<std::size_t>(below_degree));
  for (auto& v : c) v = dist(rng);
  return PolyFp(p, std::move(c));
}

void split(const PolyFp& g, std::uint64_t d, std::mt19937_64& rng, std::vector<PolyFp>& out) {
  if (g.degree() <= static_cast<long>(d)) {
    out.push_back(g.monic());
    return;
  }
  const std::uint64_t p = g.prime();
  for (;;) {
    const PolyFp a = random_poly(p, g.degree(), rng);
    if (a.degree() < 1) continue;
    PolyFp h(p);
    if (p == 2) {
      // a + a^2 + ... + a^(2^(d-1)) splits the factors by absolute trace.
      PolyFp term = a % g;
      h = term;
      for (std::uint64_t i = 1; i < d; ++i) {
        term = mulmod(term, term, g);
        h = h + term;
      }
    } else {
      const BigInt e = (big_pow(p, d) - 1) / 2;
      h = powmod(a, e, g) - PolyFp::constant(p, 1);
    }
    const PolyFp f = gcd(g, h);
    if (f.degree() > 0 && f.degree() < g.degree()) {
      split(f, d, rng, out);
      split(divmod(g, f).first, d, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<PolyFp> equal_degree_factors(const PolyFp& g, std::uint64_t d, std::uint64_t seed) {
  if (d == 0 || g.degree() % static_cast<long>(d) != 0) {
    throw Error(Errc::InvalidInput, "degree is not a multiple of the factor degree");
  }
  std::mt19937_64 rng(seed);
  std::vector<PolyFp> out;
  split(g.monic(), d, rng, out);
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

PolyFp cyclotomic_prime(std::uint64_t p, std::uint64_t l) {
  return PolyFp(p, std::vector<std::uint64_t>(l, 1));
}

}  // namespace walsh
