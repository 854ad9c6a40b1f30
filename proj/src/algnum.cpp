#include "walsh/algnum.hpp"

#include <sstream>

#include "walsh/error.hpp"

namespace walsh {

AlgNum::AlgNum(std::uint64_t p, std::uint64_t l) : re_(p), im_(p), l_(l) {}

AlgNum::AlgNum(CycEl re, CycEl im, std::uint64_t l) : re_(std::move(re)), im_(std::move(im)), l_(l) {
  if (re_.prime() != im_.prime()) throw Error(Errc::DomainMismatch, "components over different p");
}

AlgNum AlgNum::rational(std::uint64_t p, std::uint64_t l, const BigRational& c) {
  return AlgNum(CycEl::constant(p, c), CycEl(p), l);
}

AlgNum AlgNum::quadratic(std::uint64_t p, std::uint64_t l, const BigRational& x, const BigRational& y) {
  return AlgNum(CycEl::constant(p, x), CycEl::constant(p, y), l);
}

AlgNum AlgNum::sqrt_minus_l(std::uint64_t p, std::uint64_t l) { return quadratic(p, l, 0, 1); }

AlgNum AlgNum::zeta_pow(std::uint64_t p, std::uint64_t l, std::int64_t t) {
  return AlgNum(CycEl::zeta_pow(p, t), CycEl(p), l);
}

AlgNum AlgNum::from_cyc(CycEl re, std::uint64_t l) {
  const std::uint64_t p = re.prime();
  return AlgNum(std::move(re), CycEl(p), l);
}

void AlgNum::require_same(const AlgNum& o) const {
  if (l_ != o.l_ || prime() != o.prime()) {
    throw Error(Errc::DomainMismatch, "(p,l) = (" + std::to_string(prime()) + "," + std::to_string(l_) +
                                          ") vs (" + std::to_string(o.prime()) + "," +
                                          std::to_string(o.l_) + ")");
  }
}

AlgNum& AlgNum::operator+=(const AlgNum& o) {
  require_same(o);
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

AlgNum& AlgNum::operator-=(const AlgNum& o) {
  require_same(o);
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

AlgNum& AlgNum::operator*=(const AlgNum& o) {
  require_same(o);
  // (r1 + i1 s)(r2 + i2 s) with s^2 = -l.
  CycEl re = re_ * o.re_ - (im_ * o.im_) * BigRational(static_cast<unsigned long>(l_));
  CycEl im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

AlgNum& AlgNum::operator*=(const BigRational& s) {
  re_ *= s;
  im_ *= s;
  return *this;
}

AlgNum pow(const AlgNum& x, std::uint64_t exponent) {
  AlgNum result = AlgNum::rational(x.prime(), x.l(), 1);
  AlgNum base = x;
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent != 0) base *= base;
  }
  return result;
}

AlgNum complex_conjugate(const AlgNum& x) {
  return AlgNum(x.re().conjugate(), -x.im().conjugate(), x.l());
}

AlgNum galois_flip(const AlgNum& x) { return AlgNum(x.re(), -x.im(), x.l()); }

AlgNum norm_squared(const AlgNum& x) { return x * complex_conjugate(x); }

namespace {

MpFloat to_mp(const BigRational& r) {
  return MpFloat(r.get_num().get_mpz_t()) / MpFloat(r.get_den().get_mpz_t());
}

MpComplex embed_cyc(const CycEl& x) {
  MpComplex acc;
  const auto& c = x.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    acc += unit_root(x.prime(), static_cast<std::int64_t>(i)) * to_mp(c[i]);
  }
  return acc;
}

}  // namespace

MpComplex embed_complex(const AlgNum& x, unsigned digits) {
  PrecisionScope scope(digits);
  const MpComplex re = embed_cyc(x.re());
  const MpComplex im = embed_cyc(x.im());
  const MpComplex root{MpFloat(0), boost::multiprecision::sqrt(MpFloat(x.l()))};
  return re + im * root;
}

namespace {

nlohmann::json coeffs_json(const CycEl& c) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : c.coeffs()) {
    arr.push_back({to_decimal(r.get_num()), to_decimal(r.get_den())});
  }
  return arr;
}

CycEl coeffs_from_json(std::uint64_t p, const nlohmann::json& arr) {
  if (!arr.is_array() || arr.size() != p - 1) {
    throw Error(Errc::InvalidInput, "AlgNum JSON component must have p-1 entries");
  }
  std::vector<BigRational> c;
  c.reserve(p - 1);
  for (const auto& entry : arr) {
    c.push_back(make_rational(parse_decimal(entry.at(0).get<std::string>()),
                              parse_decimal(entry.at(1).get<std::string>())));
  }
  return CycEl(p, std::move(c));
}

}  // namespace

nlohmann::json to_json(const AlgNum& x) {
  return {{"p", x.prime()}, {"l", x.l()}, {"re", coeffs_json(x.re())}, {"im", coeffs_json(x.im())}};
}

AlgNum algnum_from_json(const nlohmann::json& j) {
  const auto p = j.at("p").get<std::uint64_t>();
  const auto l = j.at("l").get<std::uint64_t>();
  return AlgNum(coeffs_from_json(p, j.at("re")), coeffs_from_json(p, j.at("im")), l);
}

std::string to_symbolic(const AlgNum& x) {
  std::ostringstream out;
  bool first = true;
  const auto emit = [&](const CycEl& part, bool with_root) {
    const auto& c = part.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] == 0) continue;
      if (!first) out << " + ";
      first = false;
      out << c[i].get_str();
      if (i > 0) out << "*zeta^" << i;
      if (with_root) out << "*sqrt(-" << x.l() << ")";
    }
  };
  emit(x.re(), false);
  emit(x.im(), true);
  if (first) out << "0";
  return out.str();
}

AlgNum parse_symbolic(std::uint64_t p, std::uint64_t l, const std::string& text) {
  AlgNum result(p, l);
  std::size_t pos = 0;
  const std::string root_token = "*sqrt(-" + std::to_string(l) + ")";
  while (pos <= text.size()) {
    std::size_t end = text.find(" + ", pos);
    if (end == std::string::npos) end = text.size();
    std::string term = text.substr(pos, end - pos);
    bool with_root = false;
    if (term.size() >= root_token.size() &&
        term.compare(term.size() - root_token.size(), root_token.size(), root_token) == 0) {
      with_root = true;
      term.resize(term.size() - root_token.size());
    }
    std::uint64_t power = 0;
    if (const auto star = term.find("*zeta^"); star != std::string::npos) {
      power = std::stoull(term.substr(star + 6));
      term.resize(star);
    }
    BigRational coeff;
    if (term.empty() || coeff.set_str(term, 10) != 0) {
      throw Error(Errc::InvalidInput, "bad symbolic term '" + text.substr(pos, end - pos) + "'");
    }
    coeff.canonicalize();
    if (power >= p - 1) throw Error(Errc::InvalidInput, "zeta power out of range in symbolic value");
    AlgNum term_value = AlgNum::zeta_pow(p, l, static_cast<std::int64_t>(power)) * coeff;
    if (with_root) term_value *= AlgNum::sqrt_minus_l(p, l);
    result += term_value;
    if (end == text.size()) break;
    pos = end + 3;
  }
  return result;
}

bool canonical_less(const AlgNum& x, const AlgNum& y) {
  const auto key = [](const AlgNum& v) {
    std::vector<BigRational> k(v.re().coeffs());
    k.insert(k.end(), v.im().coeffs().begin(), v.im().coeffs().end());
    return k;
  };
  const auto kx = key(x), ky = key(y);
  return std::lexicographical_compare(kx.begin(), kx.end(), ky.begin(), ky.end());
}

}  // namespace walsh
