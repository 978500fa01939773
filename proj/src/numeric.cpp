#include "resonax/numeric.hpp"

#include <charconv>
#include <cmath>

#include "resonax/errors.hpp"

namespace resonax {

std::string RealTraits<double>::to_string(double x, int digits) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::scientific,
                                 digits > 0 ? digits - 1 : 16);
  return {buf, res.ptr};
}

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x < 0 ? "-inf" : "inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return {buf, res.ptr};
}

PrecisionTier tier_for_digits(int digits) {
  if (digits <= 16) return PrecisionTier::binary64;
  if (digits <= 31) return PrecisionTier::double_double;
  if (digits <= 62) return PrecisionTier::quad_double;
  throw ConfigError("no precision tier carries " + std::to_string(digits) + " digits (max 62)");
}

int tier_digits(PrecisionTier tier) {
  switch (tier) {
    case PrecisionTier::binary64: return 16;
    case PrecisionTier::double_double: return 31;
    case PrecisionTier::quad_double: return 62;
  }
  return 16;
}

const char* tier_name(PrecisionTier tier) {
  switch (tier) {
    case PrecisionTier::binary64: return "binary64";
    case PrecisionTier::double_double: return "double-double";
    case PrecisionTier::quad_double: return "quad-double";
  }
  return "?";
}

}  // namespace resonax
