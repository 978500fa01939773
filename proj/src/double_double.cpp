#include "resonax/double_double.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <stdexcept>

namespace resonax {

namespace {

constexpr double kEps = 4.93038065763132e-32;  // 2^-104

DoubleDouble sqr(const DoubleDouble& a) { return a * a; }

DoubleDouble nint(const DoubleDouble& a) {
  const double hi = std::nearbyint(a.hi());
  if (hi == a.hi()) {
    return dd_detail::quick_two_sum(hi, std::nearbyint(a.lo()));
  }
  if (std::abs(hi - a.hi()) == 0.5 && a.lo() < 0.0) return {hi - 1.0, 0.0};
  return {hi, 0.0};
}

// Taylor series for |t| <= pi/4.
DoubleDouble sin_taylor(const DoubleDouble& t) {
  if (t.hi() == 0.0) return {};
  const DoubleDouble t2 = -sqr(t);
  DoubleDouble term = t;
  DoubleDouble sum = t;
  for (int k = 1; k < 40; ++k) {
    term = term * t2 / static_cast<double>((2 * k) * (2 * k + 1));
    sum += term;
    if (std::abs(term.hi()) < kEps * 1e-2 * std::abs(sum.hi())) break;
  }
  return sum;
}

DoubleDouble cos_taylor(const DoubleDouble& t) {
  const DoubleDouble t2 = -sqr(t);
  DoubleDouble term = 1.0;
  DoubleDouble sum = 1.0;
  for (int k = 1; k < 40; ++k) {
    term = term * t2 / static_cast<double>((2 * k - 1) * (2 * k));
    sum += term;
    if (std::abs(term.hi()) < kEps * 1e-2) break;
  }
  return sum;
}

// Reduces a to t in [-pi/4, pi/4] with a = t + j*pi/2 (mod 2pi).
void reduce_angle(const DoubleDouble& a, DoubleDouble& t, int& j) {
  const DoubleDouble z = nint(a / dd_constants::two_pi);
  const DoubleDouble r = a - dd_constants::two_pi * z;
  const double q = std::nearbyint(r.hi() / dd_constants::half_pi.hi());
  t = r - dd_constants::half_pi * q;
  j = static_cast<int>(q);
}

}  // namespace

DoubleDouble floor(const DoubleDouble& a) {
  const double hi = std::floor(a.hi());
  if (hi == a.hi()) {
    return dd_detail::quick_two_sum(hi, std::floor(a.lo()));
  }
  return {hi, 0.0};
}

DoubleDouble sqrt(const DoubleDouble& a) {
  if (a.hi() == 0.0) return {};
  if (a.hi() < 0.0) return {std::nan(""), 0.0};
  const double x = 1.0 / std::sqrt(a.hi());
  const double ax = a.hi() * x;
  return dd_detail::two_sum(ax, (a - sqr(DoubleDouble(ax))).hi() * (x * 0.5));
}

DoubleDouble exp(const DoubleDouble& a) {
  if (a.hi() > 709.0) return {HUGE_VAL, 0.0};
  if (a.hi() < -745.0) return {};
  if (a.hi() == 0.0) return 1.0;

  constexpr int kSquarings = 9;
  const double m = std::floor(a.hi() / dd_constants::ln2.hi() + 0.5);
  const DoubleDouble r = ldexp(a - dd_constants::ln2 * m, -kSquarings);

  // expm1(r) by Taylor series; |r| <= ln2/1024.
  DoubleDouble term = r;
  DoubleDouble s = r;
  for (int k = 2; k < 30; ++k) {
    term = term * r / static_cast<double>(k);
    s += term;
    if (std::abs(term.hi()) < kEps * 1e-3 * std::abs(s.hi())) break;
  }
  for (int i = 0; i < kSquarings; ++i) s = s * (s + 2.0);
  return ldexp(s + 1.0, static_cast<int>(m));
}

DoubleDouble log(const DoubleDouble& a) {
  if (a.hi() <= 0.0) return {std::nan(""), 0.0};
  if (a.hi() == 1.0 && a.lo() == 0.0) return {};
  DoubleDouble x = std::log(a.hi());
  x = x + a * exp(-x) - 1.0;
  return x;
}

DoubleDouble sin(const DoubleDouble& a) {
  DoubleDouble t;
  int j = 0;
  reduce_angle(a, t, j);
  switch (((j % 4) + 4) % 4) {
    case 0: return sin_taylor(t);
    case 1: return cos_taylor(t);
    case 2: return -sin_taylor(t);
    default: return -cos_taylor(t);
  }
}

DoubleDouble cos(const DoubleDouble& a) {
  DoubleDouble t;
  int j = 0;
  reduce_angle(a, t, j);
  switch (((j % 4) + 4) % 4) {
    case 0: return cos_taylor(t);
    case 1: return -sin_taylor(t);
    case 2: return -cos_taylor(t);
    default: return sin_taylor(t);
  }
}

DoubleDouble atan2(const DoubleDouble& y, const DoubleDouble& x) {
  if (x.hi() == 0.0 && y.hi() == 0.0) return {};
  DoubleDouble z = std::atan2(y.hi(), x.hi());
  const DoubleDouble r = sqrt(sqr(x) + sqr(y));
  const DoubleDouble xx = x / r;
  const DoubleDouble yy = y / r;
  const DoubleDouble s = sin(z);
  const DoubleDouble c = cos(z);
  if (std::abs(xx.hi()) > std::abs(yy.hi())) {
    z += (yy - s) / c;
  } else {
    z -= (xx - c) / s;
  }
  return z;
}

DoubleDouble pow(const DoubleDouble& a, int n) {
  DoubleDouble base = n < 0 ? DoubleDouble(1.0) / a : a;
  unsigned int e = static_cast<unsigned int>(n < 0 ? -n : n);
  DoubleDouble result = 1.0;
  while (e != 0) {
    if (e & 1U) result *= base;
    base = sqr(base);
    e >>= 1U;
  }
  return result;
}

DoubleDouble DoubleDouble::parse(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) negative = text[i++] == '-';

  DoubleDouble value;
  int exponent = 0;
  bool seen_digit = false;
  bool after_point = false;
  for (; i < text.size(); ++i) {
    const char ch = text[i];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      value = value * 10.0 + static_cast<double>(ch - '0');
      if (after_point) --exponent;
      seen_digit = true;
    } else if (ch == '.' && !after_point) {
      after_point = true;
    } else {
      break;
    }
  }
  if (!seen_digit) throw std::invalid_argument("not a number: " + std::string(text));
  if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
    exponent += std::atoi(std::string(text.substr(i + 1)).c_str());
  }
  if (exponent != 0) {
    const DoubleDouble scale = pow(DoubleDouble(10.0), std::abs(exponent));
    value = exponent > 0 ? value * scale : value / scale;
  }
  return negative ? -value : value;
}

std::string DoubleDouble::to_string(int digits) const {
  if (std::isnan(hi_)) return "nan";
  if (std::isinf(hi_)) return hi_ < 0 ? "-inf" : "inf";
  digits = std::clamp(digits, 1, 34);
  std::string out;
  DoubleDouble r = abs(*this);
  if (hi_ < 0.0) out.push_back('-');
  if (r.hi() == 0.0) return out + "0";

  int e = static_cast<int>(std::floor(std::log10(r.hi())));
  const DoubleDouble scale = pow(DoubleDouble(10.0), std::abs(e));
  r = e >= 0 ? r / scale : r * scale;
  if (r.hi() >= 10.0) {
    r = r / 10.0;
    ++e;
  } else if (r.hi() < 1.0) {
    r = r * 10.0;
    --e;
  }

  std::string mantissa;
  for (int k = 0; k <= digits; ++k) {
    int d = static_cast<int>(std::floor(r.hi()));
    if (d < 0) d = 0;
    if (d > 9) d = 9;
    mantissa.push_back(static_cast<char>('0' + d));
    r = (r - static_cast<double>(d)) * 10.0;
  }
  // Round on the guard digit.
  const bool round_up = mantissa.back() >= '5';
  mantissa.pop_back();
  if (round_up) {
    int k = static_cast<int>(mantissa.size()) - 1;
    while (k >= 0 && mantissa[static_cast<std::size_t>(k)] == '9') {
      mantissa[static_cast<std::size_t>(k)] = '0';
      --k;
    }
    if (k >= 0) {
      ++mantissa[static_cast<std::size_t>(k)];
    } else {
      mantissa.insert(mantissa.begin(), '1');
      mantissa.pop_back();
      ++e;
    }
  }
  out.push_back(mantissa[0]);
  if (mantissa.size() > 1) {
    out.push_back('.');
    out.append(mantissa, 1, std::string::npos);
  }
  char exp_text[16];
  std::snprintf(exp_text, sizeof exp_text, "e%+03d", e);
  out += exp_text;
  return out;
}

std::ostream& operator<<(std::ostream& os, const DoubleDouble& a) {
  return os << a.to_string(static_cast<int>(std::max<std::streamsize>(os.precision(), 17)));
}

}  // namespace resonax
