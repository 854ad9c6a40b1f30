#include "walsh/number_theory.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <utility>

#include "walsh/error.hpp"

namespace walsh {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exponent, std::uint64_t m) {
  if (m == 1) return 0;
  std::uint64_t result = 1;
  base %= m;
  while (exponent != 0) {
    if (exponent & 1U) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exponent >>= 1U;
  }
  return result;
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(m), new_r = static_cast<std::int64_t>(a % m);
  while (new_r != 0) {
    const std::int64_t quotient = r / new_r;
    t = std::exchange(new_t, t - quotient * new_t);
    r = std::exchange(new_r, r - quotient * new_r);
  }
  if (r != 1) throw Error(Errc::InvalidInput, "value not invertible modulo " + std::to_string(m));
  if (t < 0) t += static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(t);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  // These twelve bases are a proven witness set below 3.3e24.
  for (std::uint64_t base : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = pow_mod(base, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

namespace {

std::uint64_t pollard_brent(std::uint64_t n) {
  if (n % 2 == 0) return 2;
  for (std::uint64_t c = 1;; ++c) {
    auto step = [&](std::uint64_t v) { return (mul_mod(v, v, n) + c) % n; };
    std::uint64_t y = 2, g = 1, q = 1, x = 0, ys = 0;
    const std::uint64_t m = 128;
    std::uint64_t r = 1;
    while (g == 1) {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = step(y);
      std::uint64_t k = 0;
      while (k < r && g == 1) {
        ys = y;
        const std::uint64_t limit = std::min(m, r - k);
        for (std::uint64_t i = 0; i < limit; ++i) {
          y = step(y);
          q = mul_mod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
        k += m;
      }
      r <<= 1U;
    }
    if (g == n) {
      do {
        ys = step(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split_factor(std::uint64_t n, std::map<std::uint64_t, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  const std::uint64_t d = pollard_brent(n);
  split_factor(d, out);
  split_factor(n / d, out);
}

}  // namespace

std::vector<PrimePower> factorize(std::uint64_t n) {
  if (n == 0) throw Error(Errc::InvalidInput, "cannot factor zero");
  std::map<std::uint64_t, unsigned> found;
  constexpr std::uint64_t kTrialLimit = 1000000;
  for (std::uint64_t d = 2; d <= kTrialLimit && d * d <= n; d += (d == 2 ? 1 : 2)) {
    while (n % d == 0) {
      ++found[d];
      n /= d;
    }
  }
  split_factor(n, found);
  std::vector<PrimePower> result;
  result.reserve(found.size());
  for (const auto& [prime, exponent] : found) result.push_back({prime, exponent});
  return result;
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t phi = n;
  for (const auto& pp : factorize(n)) phi = phi / pp.prime * (pp.prime - 1);
  return phi;
}

std::uint64_t multiplicative_order(std::uint64_t x, std::uint64_t n) {
  if (n < 2) throw Error(Errc::InvalidInput, "modulus must be at least 2");
  if (std::gcd(x % n, n) != 1) {
    throw Error(Errc::InvalidInput,
                std::to_string(x) + " is not a unit modulo " + std::to_string(n));
  }
  std::uint64_t order = euler_phi(n);
  for (const auto& pp : factorize(order)) {
    for (unsigned i = 0; i < pp.exponent; ++i) {
      if (pow_mod(x, order / pp.prime, n) != 1) break;
      order /= pp.prime;
    }
  }
  return order;
}

std::uint64_t smallest_primitive_root(std::uint64_t n) {
  const std::uint64_t phi = euler_phi(n);
  const auto factors = factorize(phi);
  for (std::uint64_t g = 1; g < n; ++g) {
    if (std::gcd(g, n) != 1) continue;
    const bool generates = std::all_of(factors.begin(), factors.end(), [&](const PrimePower& pp) {
      return pow_mod(g, phi / pp.prime, n) != 1;
    });
    if (generates) return g;
  }
  throw Error(Errc::InvalidInput, "no primitive root modulo " + std::to_string(n));
}

int legendre_symbol(std::int64_t a, std::uint64_t p) {
  if (p < 3 || p % 2 == 0) throw Error(Errc::InvalidInput, "Legendre symbol needs an odd prime");
  std::int64_t r = a % static_cast<std::int64_t>(p);
  if (r < 0) r += static_cast<std::int64_t>(p);
  // Jacobi reciprocity; for prime p this is the Legendre symbol.
  std::uint64_t x = static_cast<std::uint64_t>(r), m = p;
  int sign = 1;
  while (x != 0) {
    while (x % 2 == 0) {
      x /= 2;
      if (m % 8 == 3 || m % 8 == 5) sign = -sign;
    }
    std::swap(x, m);
    if (x % 4 == 3 && m % 4 == 3) sign = -sign;
    x %= m;
  }
  return m == 1 ? sign : 0;
}

std::uint64_t sqrt_mod_p(std::int64_t a, std::uint64_t p) {
  std::int64_t reduced = a % static_cast<std::int64_t>(p);
  if (reduced < 0) reduced += static_cast<std::int64_t>(p);
  const auto n = static_cast<std::uint64_t>(reduced);
  if (p == 2 || n == 0) return n;
  if (legendre_symbol(reduced, p) != 1) {
    throw Error(Errc::NotAResidue, std::to_string(a) + " is not a square modulo " + std::to_string(p));
  }
  std::uint64_t root = 0;
  if (p % 4 == 3) {
    root = pow_mod(n, (p + 1) / 4, p);
  } else {
    std::uint64_t q = p - 1;
    unsigned s = 0;
    while (q % 2 == 0) {
      q /= 2;
      ++s;
    }
    std::uint64_t z = 2;
    while (legendre_symbol(static_cast<std::int64_t>(z), p) != -1) ++z;
    std::uint64_t c = pow_mod(z, q, p);
    std::uint64_t t = pow_mod(n, q, p);
    root = pow_mod(n, (q + 1) / 2, p);
    unsigned m = s;
    while (t != 1) {
      unsigned i = 0;
      std::uint64_t t2 = t;
      while (t2 != 1) {
        t2 = mul_mod(t2, t2, p);
        ++i;
      }
      std::uint64_t b = c;
      for (unsigned j = 0; j + i + 1 < m; ++j) b = mul_mod(b, b, p);
      root = mul_mod(root, b, p);
      c = mul_mod(b, b, p);
      t = mul_mod(t, c, p);
      m = i;
    }
  }
  return std::min(root, p - root);
}

std::uint64_t class_number(std::uint64_t l) {
  if (!is_prime(l) || l % 4 != 3 || l == 3) {
    throw Error(Errc::UnsupportedDiscriminant,
                "class number formula needs a prime l = 3 (mod 4), l > 3; got " + std::to_string(l));
  }
  std::int64_t sum = 0;
  for (std::uint64_t a = 1; 2 * a < l; ++a) sum += legendre_symbol(static_cast<std::int64_t>(a), l);
  const std::int64_t denom = 2 - legendre_symbol(2, l);
  if (sum <= 0 || sum % denom != 0) {
    throw Error(Errc::InternalInconsistency, "Dirichlet sum not divisible for l=" + std::to_string(l));
  }
  return static_cast<std::uint64_t>(sum / denom);
}

std::uint64_t count_reduced_forms(std::uint64_t d) {
  if (d % 4 != 3 && d % 4 != 0) throw Error(Errc::UnsupportedDiscriminant, "-d is not a discriminant");
  std::uint64_t count = 0;
  // |b| <= a <= c and 3a^2 <= d
  for (std::uint64_t a = 1; 3 * a * a <= d; ++a) {
    for (std::int64_t b = -static_cast<std::int64_t>(a) + 1; b <= static_cast<std::int64_t>(a); ++b) {
      const std::uint64_t bb = static_cast<std::uint64_t>(b * b);
      if ((bb + d) % (4 * a) != 0) continue;
      const std::uint64_t c = (bb + d) / (4 * a);
      if (c < a) continue;
      if (c == a && b < 0) continue;
      ++count;
    }
  }
  return count;
}

NormSolution solve_ab(std::uint64_t p, std::uint64_t l, std::uint64_t h) {
  if ((l - 1 + 2 * h) % 4 != 0) {
    throw Error(Errc::InvalidInput, "(l-1+2h)/4 is not an integer");
  }
  const std::uint64_t target_mod_l =
      (l - mul_mod(2, pow_mod(p, (l - 1 + 2 * h) / 4, l), l)) % l;
  const BigInt four_ph = 4 * big_pow(p, h);
  const BigInt big_l = to_big(l);
  std::optional<NormSolution> fallback;
  for (BigInt b = 1; big_l * b * b <= four_ph; ++b) {
    BigInt root;
    if (!perfect_square(four_ph - big_l * b * b, root)) continue;
    for (const BigInt& a : {root, BigInt(-root)}) {
      if (mod_u64(a, l) != target_mod_l) continue;
      // A solution with p | b would be divisible by p as a whole; keep
      // looking for the primitive one first.
      if (mod_u64(b, p) != 0) return {a, b};
      if (!fallback) fallback = NormSolution{a, b};
    }
  }
  if (fallback) return *fallback;
  throw Error(Errc::NoRepresentation, "no (a,b) with a^2 + " + std::to_string(l) + " b^2 = 4*" +
                                          std::to_string(p) + "^" + std::to_string(h));
}

}  // namespace walsh
