#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/mpfr.hpp>

namespace walsh {

using MpFloat = boost::multiprecision::mpfr_float;

// Sets the working precision (decimal digits) for MpFloat values created
// inside the scope and restores the previous setting on exit.
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned digits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned saved_;
};

struct MpComplex {
  MpFloat re;
  MpFloat im;

  MpComplex() : re(0), im(0) {}
  MpComplex(MpFloat r, MpFloat i) : re(std::move(r)), im(std::move(i)) {}

  MpComplex& operator+=(const MpComplex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  friend MpComplex operator+(MpComplex x, const MpComplex& y) { return x += y; }
  friend MpComplex operator-(const MpComplex& x, const MpComplex& y) {
    return {x.re - y.re, x.im - y.im};
  }
  friend MpComplex operator*(const MpComplex& x, const MpComplex& y) {
    return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
  }
  friend MpComplex operator*(const MpComplex& x, const MpFloat& s) { return {x.re * s, x.im * s}; }

  MpFloat abs() const;
  MpComplex conj() const { return {re, -im}; }
};

// exp(2 pi i k / n).
MpComplex unit_root(std::uint64_t n, std::int64_t k);

// |x - y| / max(|y|, tiny); relative distance used by numeric comparisons.
MpFloat relative_distance(const MpComplex& x, const MpComplex& y);

// Scientific notation with the given number of significant digits.
std::string format_float(const MpFloat& x, unsigned digits);

}  // namespace walsh
