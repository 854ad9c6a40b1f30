#include "walsh/mp_complex.hpp"

#include <iomanip>
#include <sstream>

#include <boost/math/constants/constants.hpp>

namespace walsh {

PrecisionScope::PrecisionScope(unsigned digits) : saved_(MpFloat::default_precision()) {
  MpFloat::default_precision(digits);
}

PrecisionScope::~PrecisionScope() { MpFloat::default_precision(saved_); }

MpFloat MpComplex::abs() const { return boost::multiprecision::sqrt(re * re + im * im); }

MpComplex unit_root(std::uint64_t n, std::int64_t k) {
  std::int64_t e = k % static_cast<std::int64_t>(n);
  if (e < 0) e += static_cast<std::int64_t>(n);
  if (e == 0) return {MpFloat(1), MpFloat(0)};
  MpFloat theta = 2 * boost::math::constants::pi<MpFloat>() * MpFloat(e) / MpFloat(n);
  return {boost::multiprecision::cos(theta), boost::multiprecision::sin(theta)};
}

MpFloat relative_distance(const MpComplex& x, const MpComplex& y) {
  MpFloat scale = y.abs();
  if (scale == 0) scale = 1;
  return (x - y).abs() / scale;
}

std::string format_float(const MpFloat& x, unsigned digits) {
  std::ostringstream out;
  out << std::scientific << std::setprecision(static_cast<int>(digits > 1 ? digits - 1 : 1)) << x;
  return out.str();
}

}  // namespace walsh
