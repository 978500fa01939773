#pragma once

// Real-number policy shared by every precision-generic kernel. A kernel
// templated on R works in std::complex<R> and reaches R's elementary
// functions through argument-dependent lookup.

#include <cmath>
#include <complex>
#include <string>
#include <string_view>
#include <type_traits>

#include "resonax/double_double.hpp"
#include "resonax/quad_double.hpp"

namespace resonax {

template <class R>
struct RealTraits;

template <>
struct RealTraits<double> {
  static constexpr const char* name = "binary64";
  static constexpr int digits10 = 16;
  static double epsilon() { return 2.220446049250313e-16; }
  static double pi() { return 3.141592653589793; }
  static double from_double(double x) { return x; }
  static double parse(std::string_view text) { return std::stod(std::string(text)); }
  static double to_double(double x) { return x; }
  static std::string to_string(double x, int digits);
};

template <>
struct RealTraits<DoubleDouble> {
  static constexpr const char* name = "double-double";
  static constexpr int digits10 = 31;
  static DoubleDouble epsilon() { return 4.93038065763132e-32; }
  static DoubleDouble pi() { return dd_constants::pi; }
  static DoubleDouble from_double(double x) { return x; }
  static DoubleDouble parse(std::string_view text) { return DoubleDouble::parse(text); }
  static double to_double(const DoubleDouble& x) { return static_cast<double>(x); }
  static std::string to_string(const DoubleDouble& x, int digits) { return x.to_string(digits); }
};

template <>
struct RealTraits<QuadDouble> {
  static constexpr const char* name = "quad-double";
  static constexpr int digits10 = 62;
  static QuadDouble epsilon() { return 1.21543267145725e-63; }
  static QuadDouble pi() { return qd_constants::pi; }
  static QuadDouble from_double(double x) { return x; }
  static QuadDouble parse(std::string_view text) { return QuadDouble::parse(text); }
  static double to_double(const QuadDouble& x) { return static_cast<double>(x); }
  static std::string to_string(const QuadDouble& x, int digits) { return x.to_string(digits); }
};

template <class R>
using Complex = std::complex<R>;

template <class R>
R real_from(double x) {
  return RealTraits<R>::from_double(x);
}

// Rounds a quad-double to R (components are non-overlapping, so the leading
// ones already form a valid double-double).
template <class R>
R narrow(const QuadDouble& x) {
  if constexpr (std::is_same_v<R, QuadDouble>) return x;
  else if constexpr (std::is_same_v<R, DoubleDouble>) return DoubleDouble(x[0]) + x[1];
  else return static_cast<R>(x[0] + x[1]);
}

template <class R>
double to_double(const R& x) {
  return RealTraits<R>::to_double(x);
}

template <class R>
std::complex<double> to_double(const std::complex<R>& z) {
  return {RealTraits<R>::to_double(z.real()), RealTraits<R>::to_double(z.imag())};
}

template <class R>
std::complex<R> complex_from(std::complex<double> z) {
  return {real_from<R>(z.real()), real_from<R>(z.imag())};
}

// |Re z| + |Im z|; cheap magnitude used for deflation and pivoting tests.
template <class R>
R cabs1(const std::complex<R>& z) {
  using std::abs;
  return abs(z.real()) + abs(z.imag());
}

// Shortest decimal string that parses back to the same double.
std::string format_double(double x);

// Working-precision tiers selectable at run time.
enum class PrecisionTier { binary64, double_double, quad_double };

// Smallest tier carrying at least `digits` significant decimal digits.
PrecisionTier tier_for_digits(int digits);
int tier_digits(PrecisionTier tier);
const char* tier_name(PrecisionTier tier);

}  // namespace resonax
