#pragma once

// Unevaluated sum of two IEEE doubles (hi + lo, |lo| <= ulp(hi)/2), giving
// about 31 significant decimal digits. Built on error-free transforms; uses
// hardware fma when the target has it, Dekker splitting otherwise. Must not
// be compiled with -ffast-math.

#include <cmath>
#include <iosfwd>
#include <string>
#include <string_view>

namespace resonax {

class DoubleDouble {
 public:
  constexpr DoubleDouble() = default;
  constexpr DoubleDouble(double x) : hi_(x) {}  // NOLINT(google-explicit-constructor)
  constexpr DoubleDouble(double hi, double lo) : hi_(hi), lo_(lo) {}

  // Parses a decimal literal ("3.14159...", "-2.5e-7") to full precision.
  static DoubleDouble parse(std::string_view text);

  constexpr double hi() const { return hi_; }
  constexpr double lo() const { return lo_; }
  explicit constexpr operator double() const { return hi_ + lo_; }

  DoubleDouble& operator+=(const DoubleDouble& b);
  DoubleDouble& operator-=(const DoubleDouble& b);
  DoubleDouble& operator*=(const DoubleDouble& b);
  DoubleDouble& operator/=(const DoubleDouble& b);

  constexpr DoubleDouble operator-() const { return {-hi_, -lo_}; }

  // Scientific notation with `digits` significant digits.
  std::string to_string(int digits = 32) const;

 private:
  double hi_ = 0.0;
  double lo_ = 0.0;
};

namespace dd_detail {

inline DoubleDouble quick_two_sum(double a, double b) {
  const double s = a + b;
  return {s, b - (s - a)};
}

inline DoubleDouble two_sum(double a, double b) {
  const double s = a + b;
  const double bb = s - a;
  return {s, (a - (s - bb)) + (b - bb)};
}

inline DoubleDouble two_prod(double a, double b) {
  const double p = a * b;
#ifdef __FMA__
  return {p, std::fma(a, b, -p)};
#else
  constexpr double split = 134217729.0;  // 2^27 + 1
  const double ta = split * a;
  const double ah = ta - (ta - a);
  const double al = a - ah;
  const double tb = split * b;
  const double bh = tb - (tb - b);
  const double bl = b - bh;
  return {p, ((ah * bh - p) + ah * bl + al * bh) + al * bl};
#endif
}

}  // namespace dd_detail

inline DoubleDouble operator+(const DoubleDouble& a, const DoubleDouble& b) {
  using namespace dd_detail;
  DoubleDouble s = two_sum(a.hi(), b.hi());
  const DoubleDouble t = two_sum(a.lo(), b.lo());
  s = quick_two_sum(s.hi(), s.lo() + t.hi());
  return quick_two_sum(s.hi(), s.lo() + t.lo());
}

inline DoubleDouble operator+(const DoubleDouble& a, double b) {
  using namespace dd_detail;
  const DoubleDouble s = two_sum(a.hi(), b);
  return quick_two_sum(s.hi(), s.lo() + a.lo());
}

inline DoubleDouble operator+(double a, const DoubleDouble& b) { return b + a; }
inline DoubleDouble operator-(const DoubleDouble& a, const DoubleDouble& b) { return a + (-b); }
inline DoubleDouble operator-(const DoubleDouble& a, double b) { return a + (-b); }
inline DoubleDouble operator-(double a, const DoubleDouble& b) { return (-b) + a; }

inline DoubleDouble operator*(const DoubleDouble& a, const DoubleDouble& b) {
  using namespace dd_detail;
  const DoubleDouble p = two_prod(a.hi(), b.hi());
  return quick_two_sum(p.hi(), p.lo() + (a.hi() * b.lo() + a.lo() * b.hi()));
}

inline DoubleDouble operator*(const DoubleDouble& a, double b) {
  using namespace dd_detail;
  const DoubleDouble p = two_prod(a.hi(), b);
  return quick_two_sum(p.hi(), p.lo() + a.lo() * b);
}

inline DoubleDouble operator*(double a, const DoubleDouble& b) { return b * a; }

inline DoubleDouble operator/(const DoubleDouble& a, const DoubleDouble& b) {
  using namespace dd_detail;
  const double q1 = a.hi() / b.hi();
  DoubleDouble r = a - b * q1;
  const double q2 = r.hi() / b.hi();
  r = r - b * q2;
  const double q3 = r.hi() / b.hi();
  return quick_two_sum(q1, q2) + q3;
}

inline DoubleDouble operator/(const DoubleDouble& a, double b) {
  using namespace dd_detail;
  const double q1 = a.hi() / b;
  const DoubleDouble p = two_prod(q1, b);
  const DoubleDouble s = two_sum(a.hi(), -p.hi());
  const double t = (s.lo() - p.lo()) + a.lo();
  const double q2 = (s.hi() + t) / b;
  return quick_two_sum(q1, q2);
}

inline DoubleDouble operator/(double a, const DoubleDouble& b) { return DoubleDouble(a) / b; }

inline DoubleDouble& DoubleDouble::operator+=(const DoubleDouble& b) { return *this = *this + b; }
inline DoubleDouble& DoubleDouble::operator-=(const DoubleDouble& b) { return *this = *this - b; }
inline DoubleDouble& DoubleDouble::operator*=(const DoubleDouble& b) { return *this = *this * b; }
inline DoubleDouble& DoubleDouble::operator/=(const DoubleDouble& b) { return *this = *this / b; }

inline bool operator==(const DoubleDouble& a, const DoubleDouble& b) {
  return a.hi() == b.hi() && a.lo() == b.lo();
}
inline bool operator!=(const DoubleDouble& a, const DoubleDouble& b) { return !(a == b); }
inline bool operator<(const DoubleDouble& a, const DoubleDouble& b) {
  return a.hi() < b.hi() || (a.hi() == b.hi() && a.lo() < b.lo());
}
inline bool operator>(const DoubleDouble& a, const DoubleDouble& b) { return b < a; }
inline bool operator<=(const DoubleDouble& a, const DoubleDouble& b) { return !(b < a); }
inline bool operator>=(const DoubleDouble& a, const DoubleDouble& b) { return !(a < b); }

inline DoubleDouble abs(const DoubleDouble& a) { return a.hi() < 0.0 ? -a : a; }
inline DoubleDouble fabs(const DoubleDouble& a) { return abs(a); }
inline bool isfinite(const DoubleDouble& a) { return std::isfinite(a.hi()); }
inline bool isnan(const DoubleDouble& a) { return std::isnan(a.hi()); }
inline DoubleDouble ldexp(const DoubleDouble& a, int e) {
  return {std::ldexp(a.hi(), e), std::ldexp(a.lo(), e)};
}

DoubleDouble floor(const DoubleDouble& a);
DoubleDouble sqrt(const DoubleDouble& a);
DoubleDouble exp(const DoubleDouble& a);
DoubleDouble log(const DoubleDouble& a);
DoubleDouble sin(const DoubleDouble& a);
DoubleDouble cos(const DoubleDouble& a);
DoubleDouble atan2(const DoubleDouble& y, const DoubleDouble& x);
DoubleDouble pow(const DoubleDouble& a, int n);

std::ostream& operator<<(std::ostream& os, const DoubleDouble& a);

namespace dd_constants {
inline constexpr DoubleDouble pi{3.141592653589793116e+00, 1.224646799147353207e-16};
inline constexpr DoubleDouble two_pi{6.283185307179586232e+00, 2.449293598294706414e-16};
inline constexpr DoubleDouble half_pi{1.570796326794896558e+00, 6.123233995736766036e-17};
inline constexpr DoubleDouble ln2{6.931471805599452862e-01, 2.319046813846299558e-17};
}  // namespace dd_constants

}  // namespace resonax
