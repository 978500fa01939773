#pragma once

// Unevaluated sum of four doubles, about 62 significant decimal digits.
// Same error-free-transform machinery as DoubleDouble, with the renormalize
// and accumulate steps of the classic quad-double algorithms. Addition and
// multiplication are the fast variants (error ~ 2^-208 relative to the
// operands), which is what dense linear algebra needs.

#include <cmath>
#include <iosfwd>
#include <string>
#include <string_view>

#include "resonax/double_double.hpp"

namespace resonax {

namespace qd_detail {

inline double quick_two_sum(double a, double b, double& err) {
  const double s = a + b;
  err = b - (s - a);
  return s;
}

inline double two_sum(double a, double b, double& err) {
  const double s = a + b;
  const double bb = s - a;
  err = (a - (s - bb)) + (b - bb);
  return s;
}

inline double two_prod(double a, double b, double& err) {
  const DoubleDouble p = dd_detail::two_prod(a, b);
  err = p.lo();
  return p.hi();
}

inline void three_sum(double& a, double& b, double& c) {
  double t2 = 0.0, t3 = 0.0;
  const double t1 = two_sum(a, b, t2);
  a = two_sum(c, t1, t3);
  b = two_sum(t2, t3, c);
}

inline void three_sum2(double& a, double& b, double& c) {
  double t2 = 0.0, t3 = 0.0;
  const double t1 = two_sum(a, b, t2);
  a = two_sum(c, t1, t3);
  b = t2 + t3;
}

inline void renorm(double& c0, double& c1, double& c2, double& c3) {
  if (std::isinf(c0)) return;
  double s0 = quick_two_sum(c2, c3, c3);
  s0 = quick_two_sum(c1, s0, c2);
  c0 = quick_two_sum(c0, s0, c1);
  s0 = c0;
  double s1 = c1, s2 = 0.0, s3 = 0.0;
  if (s1 != 0.0) {
    s1 = quick_two_sum(s1, c2, s2);
    if (s2 != 0.0) s2 = quick_two_sum(s2, c3, s3);
    else s1 = quick_two_sum(s1, c3, s2);
  } else {
    s0 = quick_two_sum(s0, c2, s1);
    if (s1 != 0.0) s1 = quick_two_sum(s1, c3, s2);
    else s0 = quick_two_sum(s0, c3, s1);
  }
  c0 = s0;
  c1 = s1;
  c2 = s2;
  c3 = s3;
}

inline void renorm(double& c0, double& c1, double& c2, double& c3, double& c4) {
  if (std::isinf(c0)) return;
  double s0 = quick_two_sum(c3, c4, c4);
  s0 = quick_two_sum(c2, s0, c3);
  s0 = quick_two_sum(c1, s0, c2);
  c0 = quick_two_sum(c0, s0, c1);
  s0 = c0;
  double s1 = c1, s2 = 0.0, s3 = 0.0;
  if (s1 != 0.0) {
    s1 = quick_two_sum(s1, c2, s2);
    if (s2 != 0.0) {
      s2 = quick_two_sum(s2, c3, s3);
      if (s3 != 0.0) s3 += c4;
      else s2 = quick_two_sum(s2, c4, s3);
    } else {
      s1 = quick_two_sum(s1, c3, s2);
      if (s2 != 0.0) s2 = quick_two_sum(s2, c4, s3);
      else s1 = quick_two_sum(s1, c4, s2);
    }
  } else {
    s0 = quick_two_sum(s0, c2, s1);
    if (s1 != 0.0) {
      s1 = quick_two_sum(s1, c3, s2);
      if (s2 != 0.0) s2 = quick_two_sum(s2, c4, s3);
      else s1 = quick_two_sum(s1, c4, s2);
    } else {
      s0 = quick_two_sum(s0, c3, s1);
      if (s1 != 0.0) s1 = quick_two_sum(s1, c4, s2);
      else s0 = quick_two_sum(s0, c4, s1);
    }
  }
  c0 = s0;
  c1 = s1;
  c2 = s2;
  c3 = s3;
}

}  // namespace qd_detail

class QuadDouble {
 public:
  constexpr QuadDouble() = default;
  constexpr QuadDouble(double x) : x_{x, 0.0, 0.0, 0.0} {}  // NOLINT(google-explicit-constructor)
  constexpr QuadDouble(double a, double b, double c, double d) : x_{a, b, c, d} {}
  QuadDouble(const DoubleDouble& a) : x_{a.hi(), a.lo(), 0.0, 0.0} {}  // NOLINT(google-explicit-constructor)

  // Decimal literal to full precision.
  static QuadDouble parse(std::string_view text);

  constexpr double operator[](int i) const { return x_[i]; }
  explicit constexpr operator double() const { return x_[0] + (x_[1] + (x_[2] + x_[3])); }

  QuadDouble& operator+=(const QuadDouble& b);
  QuadDouble& operator-=(const QuadDouble& b);
  QuadDouble& operator*=(const QuadDouble& b);
  QuadDouble& operator/=(const QuadDouble& b);

  constexpr QuadDouble operator-() const { return {-x_[0], -x_[1], -x_[2], -x_[3]}; }

  std::string to_string(int digits = 64) const;

 private:
  double x_[4] = {0.0, 0.0, 0.0, 0.0};
};

inline QuadDouble operator+(const QuadDouble& a, const QuadDouble& b) {
  using namespace qd_detail;
  double t0 = 0.0, t1 = 0.0, t2 = 0.0, t3 = 0.0;
  double s0 = two_sum(a[0], b[0], t0);
  double s1 = two_sum(a[1], b[1], t1);
  double s2 = two_sum(a[2], b[2], t2);
  double s3 = two_sum(a[3], b[3], t3);
  s1 = two_sum(s1, t0, t0);
  three_sum(s2, t0, t1);
  three_sum2(s3, t0, t2);
  t0 = t0 + t1 + t3;
  renorm(s0, s1, s2, s3, t0);
  return {s0, s1, s2, s3};
}

inline QuadDouble operator+(const QuadDouble& a, double b) {
  using namespace qd_detail;
  double e = 0.0;
  double c0 = two_sum(a[0], b, e);
  double c1 = two_sum(a[1], e, e);
  double c2 = two_sum(a[2], e, e);
  double c3 = two_sum(a[3], e, e);
  renorm(c0, c1, c2, c3, e);
  return {c0, c1, c2, c3};
}

inline QuadDouble operator+(double a, const QuadDouble& b) { return b + a; }
inline QuadDouble operator-(const QuadDouble& a, const QuadDouble& b) { return a + (-b); }
inline QuadDouble operator-(const QuadDouble& a, double b) { return a + (-b); }
inline QuadDouble operator-(double a, const QuadDouble& b) { return (-b) + a; }

inline QuadDouble operator*(const QuadDouble& a, const QuadDouble& b) {
  using namespace qd_detail;
  double q0 = 0.0, q1 = 0.0, q2 = 0.0, q3 = 0.0, q4 = 0.0, q5 = 0.0;
  double p0 = two_prod(a[0], b[0], q0);
  double p1 = two_prod(a[0], b[1], q1);
  double p2 = two_prod(a[1], b[0], q2);
  double p3 = two_prod(a[0], b[2], q3);
  double p4 = two_prod(a[1], b[1], q4);
  double p5 = two_prod(a[2], b[0], q5);

  three_sum(p1, p2, q0);
  three_sum(p2, q1, q2);
  three_sum(p3, p4, p5);
  double t0 = 0.0, t1 = 0.0;
  double s0 = two_sum(p2, p3, t0);
  double s1 = two_sum(q1, p4, t1);
  double s2 = q2 + p5;
  s1 = two_sum(s1, t0, t0);
  s2 += (t0 + t1);
  s1 += a[0] * b[3] + a[1] * b[2] + a[2] * b[1] + a[3] * b[0] + q0 + q3 + q4 + q5;
  renorm(p0, p1, s0, s1, s2);
  return {p0, p1, s0, s1};
}

inline QuadDouble operator*(const QuadDouble& a, double b) {
  using namespace qd_detail;
  double q0 = 0.0, q1 = 0.0, q2 = 0.0, s2 = 0.0;
  const double p0 = two_prod(a[0], b, q0);
  const double p1 = two_prod(a[1], b, q1);
  double p2 = two_prod(a[2], b, q2);
  double p3 = a[3] * b;
  double s0 = p0;
  double s1 = two_sum(q0, p1, s2);
  three_sum(s2, q1, p2);
  three_sum2(q1, q2, p3);
  double s3 = q1;
  double s4 = q2 + p2;
  renorm(s0, s1, s2, s3, s4);
  return {s0, s1, s2, s3};
}

inline QuadDouble operator*(double a, const QuadDouble& b) { return b * a; }

inline QuadDouble operator/(const QuadDouble& a, const QuadDouble& b) {
  double q0 = a[0] / b[0];
  QuadDouble r = a - b * q0;
  double q1 = r[0] / b[0];
  r = r - b * q1;
  double q2 = r[0] / b[0];
  r = r - b * q2;
  double q3 = r[0] / b[0];
  r = r - b * q3;
  double q4 = r[0] / b[0];
  qd_detail::renorm(q0, q1, q2, q3, q4);
  return {q0, q1, q2, q3};
}

inline QuadDouble operator/(const QuadDouble& a, double b) { return a / QuadDouble(b); }
inline QuadDouble operator/(double a, const QuadDouble& b) { return QuadDouble(a) / b; }

inline QuadDouble& QuadDouble::operator+=(const QuadDouble& b) { return *this = *this + b; }
inline QuadDouble& QuadDouble::operator-=(const QuadDouble& b) { return *this = *this - b; }
inline QuadDouble& QuadDouble::operator*=(const QuadDouble& b) { return *this = *this * b; }
inline QuadDouble& QuadDouble::operator/=(const QuadDouble& b) { return *this = *this / b; }

inline bool operator==(const QuadDouble& a, const QuadDouble& b) {
  return a[0] == b[0] && a[1] == b[1] && a[2] == b[2] && a[3] == b[3];
}
inline bool operator!=(const QuadDouble& a, const QuadDouble& b) { return !(a == b); }
inline bool operator<(const QuadDouble& a, const QuadDouble& b) {
  for (int i = 0; i < 4; ++i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}
inline bool operator>(const QuadDouble& a, const QuadDouble& b) { return b < a; }
inline bool operator<=(const QuadDouble& a, const QuadDouble& b) { return !(b < a); }
inline bool operator>=(const QuadDouble& a, const QuadDouble& b) { return !(a < b); }

inline QuadDouble abs(const QuadDouble& a) { return a[0] < 0.0 ? -a : a; }
inline QuadDouble fabs(const QuadDouble& a) { return abs(a); }
inline bool isfinite(const QuadDouble& a) { return std::isfinite(a[0]); }
inline bool isnan(const QuadDouble& a) { return std::isnan(a[0]); }
inline QuadDouble ldexp(const QuadDouble& a, int e) {
  return {std::ldexp(a[0], e), std::ldexp(a[1], e), std::ldexp(a[2], e), std::ldexp(a[3], e)};
}

QuadDouble floor(const QuadDouble& a);
QuadDouble sqrt(const QuadDouble& a);
QuadDouble exp(const QuadDouble& a);
QuadDouble log(const QuadDouble& a);
QuadDouble sin(const QuadDouble& a);
QuadDouble cos(const QuadDouble& a);
QuadDouble atan2(const QuadDouble& y, const QuadDouble& x);
QuadDouble pow(const QuadDouble& a, int n);

std::ostream& operator<<(std::ostream& os, const QuadDouble& a);

namespace qd_constants {
inline constexpr QuadDouble pi{3.141592653589793, 1.2246467991473532e-16, -2.9947698097183397e-33,
                               1.1124542208633653e-49};
inline constexpr QuadDouble two_pi{6.283185307179586, 2.4492935982947064e-16, -5.989539619436679e-33,
                                   2.2249084417267306e-49};
inline constexpr QuadDouble half_pi{1.5707963267948966, 6.123233995736766e-17, -1.4973849048591698e-33,
                                    5.562271104316826e-50};
inline constexpr QuadDouble ln2{0.6931471805599453, 2.3190468138462996e-17, 5.707708438416212e-34,
                                -3.5824322106018114e-50};
}  // namespace qd_constants

}  // namespace resonax
