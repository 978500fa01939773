#include "resonax/quad_double.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <stdexcept>

namespace resonax {

namespace {

constexpr double kEps = 1.21543267145725e-63;  // 2^-209

QuadDouble sqr(const QuadDouble& a) { return a * a; }

QuadDouble nint(const QuadDouble& a) {
  double x[4] = {std::nearbyint(a[0]), 0.0, 0.0, 0.0};
  if (x[0] == a[0]) {
    x[1] = std::nearbyint(a[1]);
    if (x[1] == a[1]) {
      x[2] = std::nearbyint(a[2]);
      if (x[2] == a[2]) x[3] = std::nearbyint(a[3]);
    }
  }
  qd_detail::renorm(x[0], x[1], x[2], x[3]);
  return {x[0], x[1], x[2], x[3]};
}

QuadDouble sin_taylor(const QuadDouble& t) {
  if (t[0] == 0.0) return {};
  const QuadDouble t2 = -sqr(t);
  QuadDouble term = t, sum = t;
  for (int k = 1; k < 60; ++k) {
    term = term * t2 / static_cast<double>((2 * k) * (2 * k + 1));
    sum += term;
    if (std::abs(term[0]) < kEps * 1e-2 * std::abs(sum[0])) break;
  }
  return sum;
}

QuadDouble cos_taylor(const QuadDouble& t) {
  const QuadDouble t2 = -sqr(t);
  QuadDouble term = 1.0, sum = 1.0;
  for (int k = 1; k < 60; ++k) {
    term = term * t2 / static_cast<double>((2 * k - 1) * (2 * k));
    sum += term;
    if (std::abs(term[0]) < kEps * 1e-2) break;
  }
  return sum;
}

void reduce_angle(const QuadDouble& a, QuadDouble& t, int& j) {
  const QuadDouble z = nint(a / qd_constants::two_pi);
  const QuadDouble r = a - qd_constants::two_pi * z;
  const double q = std::nearbyint(r[0] / qd_constants::half_pi[0]);
  t = r - qd_constants::half_pi * q;
  j = static_cast<int>(q);
}

}  // namespace

QuadDouble floor(const QuadDouble& a) {
  double x[4] = {std::floor(a[0]), 0.0, 0.0, 0.0};
  if (x[0] == a[0]) {
    x[1] = std::floor(a[1]);
    if (x[1] == a[1]) {
      x[2] = std::floor(a[2]);
      if (x[2] == a[2]) x[3] = std::floor(a[3]);
    }
    qd_detail::renorm(x[0], x[1], x[2], x[3]);
  }
  return {x[0], x[1], x[2], x[3]};
}

QuadDouble sqrt(const QuadDouble& a) {
  if (a[0] == 0.0) return {};
  if (a[0] < 0.0) return {std::nan(""), 0.0, 0.0, 0.0};
  QuadDouble r = 1.0 / std::sqrt(a[0]);
  const QuadDouble h = ldexp(a, -1);
  for (int i = 0; i < 3; ++i) r += (0.5 - h * sqr(r)) * r;
  return r * a;
}

QuadDouble exp(const QuadDouble& a) {
  if (a[0] > 709.0) return {HUGE_VAL, 0.0, 0.0, 0.0};
  if (a[0] < -745.0) return {};
  if (a[0] == 0.0) return 1.0;

  constexpr int kSquarings = 10;
  const double m = std::floor(a[0] / qd_constants::ln2[0] + 0.5);
  const QuadDouble r = ldexp(a - qd_constants::ln2 * m, -kSquarings);

  QuadDouble term = r, s = r;
  for (int k = 2; k < 40; ++k) {
    term = term * r / static_cast<double>(k);
    s += term;
    if (std::abs(term[0]) < kEps * 1e-3 * std::abs(s[0])) break;
  }
  for (int i = 0; i < kSquarings; ++i) s = s * (s + 2.0);
  return ldexp(s + 1.0, static_cast<int>(m));
}

QuadDouble log(const QuadDouble& a) {
  if (a[0] <= 0.0) return {std::nan(""), 0.0, 0.0, 0.0};
  if (a == QuadDouble(1.0)) return {};
  QuadDouble x = std::log(a[0]);
  for (int i = 0; i < 3; ++i) x = x + a * exp(-x) - 1.0;
  return x;
}

QuadDouble sin(const QuadDouble& a) {
  QuadDouble t;
  int j = 0;
  reduce_angle(a, t, j);
  switch (((j % 4) + 4) % 4) {
    case 0: return sin_taylor(t);
    case 1: return cos_taylor(t);
    case 2: return -sin_taylor(t);
    default: return -cos_taylor(t);
  }
}

QuadDouble cos(const QuadDouble& a) {
  QuadDouble t;
  int j = 0;
  reduce_angle(a, t, j);
  switch (((j % 4) + 4) % 4) {
    case 0: return cos_taylor(t);
    case 1: return -sin_taylor(t);
    case 2: return -cos_taylor(t);
    default: return sin_taylor(t);
  }
}

QuadDouble atan2(const QuadDouble& y, const QuadDouble& x) {
  if (x[0] == 0.0 && y[0] == 0.0) return {};
  QuadDouble z = std::atan2(y[0], x[0]);
  const QuadDouble r = sqrt(sqr(x) + sqr(y));
  const QuadDouble xx = x / r;
  const QuadDouble yy = y / r;
  // each Newton step doubles the digits: 16 -> 32 -> 64
  for (int i = 0; i < 2; ++i) {
    const QuadDouble s = sin(z);
    const QuadDouble c = cos(z);
    if (std::abs(xx[0]) > std::abs(yy[0])) z += (yy - s) / c;
    else z -= (xx - c) / s;
  }
  return z;
}

QuadDouble pow(const QuadDouble& a, int n) {
  QuadDouble base = n < 0 ? QuadDouble(1.0) / a : a;
  unsigned int e = static_cast<unsigned int>(n < 0 ? -n : n);
  QuadDouble result = 1.0;
  while (e != 0) {
    if (e & 1U) result *= base;
    base = sqr(base);
    e >>= 1U;
  }
  return result;
}

QuadDouble QuadDouble::parse(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) negative = text[i++] == '-';

  QuadDouble value;
  int exponent = 0;
  bool seen_digit = false, after_point = false;
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
  if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) exponent += std::atoi(std::string(text.substr(i + 1)).c_str());
  if (exponent != 0) {
    const QuadDouble scale = pow(QuadDouble(10.0), std::abs(exponent));
    value = exponent > 0 ? value * scale : value / scale;
  }
  return negative ? -value : value;
}

std::string QuadDouble::to_string(int digits) const {
  if (std::isnan(x_[0])) return "nan";
  if (std::isinf(x_[0])) return x_[0] < 0 ? "-inf" : "inf";
  digits = std::clamp(digits, 1, 64);
  std::string out;
  QuadDouble r = abs(*this);
  if (x_[0] < 0.0) out.push_back('-');
  if (r[0] == 0.0) return out + "0";

  int e = static_cast<int>(std::floor(std::log10(r[0])));
  const QuadDouble scale = pow(QuadDouble(10.0), std::abs(e));
  r = e >= 0 ? r / scale : r * scale;
  if (r[0] >= 10.0) {
    r = r / 10.0;
    ++e;
  } else if (r[0] < 1.0) {
    r = r * 10.0;
    --e;
  }

  std::string mantissa;
  for (int k = 0; k <= digits; ++k) {
    int d = static_cast<int>(std::floor(r[0]));
    // the leading component can sit just below an integer with a positive tail
    if (static_cast<double>(r - static_cast<double>(d)) >= 1.0) ++d;
    if (static_cast<double>(r - static_cast<double>(d)) < 0.0) --d;
    d = std::clamp(d, 0, 9);
    mantissa.push_back(static_cast<char>('0' + d));
    r = (r - static_cast<double>(d)) * 10.0;
  }
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
  return out + exp_text;
}

std::ostream& operator<<(std::ostream& os, const QuadDouble& a) {
  return os << a.to_string(static_cast<int>(std::max<std::streamsize>(os.precision(), 17)));
}

}  // namespace resonax
