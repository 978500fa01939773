#include "doctest.h"

#include <complex>

#include "resonax/double_double.hpp"
#include "resonax/quad_double.hpp"
#include "resonax/numeric.hpp"

using resonax::DoubleDouble;

namespace {

// |a - b| in units of the reference magnitude, measured in double-double
double rel(const DoubleDouble& a, const char* ref) {
  const DoubleDouble b = DoubleDouble::parse(ref);
  return static_cast<double>(abs(a - b) / abs(b));
}

}  // namespace

TEST_CASE("double-double elementary functions reach ~31 digits") {
  CHECK(rel(exp(DoubleDouble(1.0)), "2.718281828459045235360287471352662497757") < 1e-30);
  CHECK(rel(exp(DoubleDouble(-7.25)), "7.101743888425490635846003705775444086763e-4") < 1e-30);
  CHECK(rel(sin(DoubleDouble(1.0)), "0.8414709848078965066525023216302989996226") < 1e-30);
  CHECK(rel(cos(DoubleDouble(1.0)), "0.5403023058681397174009366074429766037323") < 1e-30);
  CHECK(rel(sin(DoubleDouble(100.0)), "-0.5063656411097587936565576104597854320650") < 1e-29);
  CHECK(rel(log(DoubleDouble(10.0)), "2.302585092994045684017991454684364207601") < 1e-30);
  CHECK(rel(sqrt(DoubleDouble(2.0)), "1.414213562373095048801688724209698078570") < 1e-31);
  CHECK(rel(DoubleDouble(2.0) * atan2(DoubleDouble(1.0), DoubleDouble(0.0)),
            "3.141592653589793238462643383279502884197") < 1e-31);
  CHECK(rel(DoubleDouble(1.0) / DoubleDouble(3.0), "0.3333333333333333333333333333333333333333") < 1e-31);
  CHECK(rel(pow(DoubleDouble::parse("1.1"), 30), "17.449402268886407318558803753801") < 1e-30);
}

TEST_CASE("double-double decimal round trip") {
  const DoubleDouble x = DoubleDouble::parse("0.40780397907366957146548001");
  CHECK(x.to_string(26) == "4.0780397907366957146548001e-01");
  CHECK(DoubleDouble::parse("-2.5e-7").to_string(5) == "-2.5000e-07");
  CHECK(static_cast<double>(DoubleDouble::parse("1e300")) == 1e300);
}

TEST_CASE("complex double-double arithmetic") {
  using C = std::complex<DoubleDouble>;
  const C z(DoubleDouble(1.0), DoubleDouble(2.0));
  const C w = z * z / z;
  CHECK(static_cast<double>(abs(w.real() - z.real())) < 1e-30);
  CHECK(static_cast<double>(abs(w.imag() - z.imag())) < 1e-30);
  const C r = std::sqrt(C(DoubleDouble(-4.0), DoubleDouble(0.0)));
  CHECK(static_cast<double>(abs(r.imag() - DoubleDouble(2.0))) < 1e-30);
  CHECK(static_cast<double>(std::abs(C(DoubleDouble(3.0), DoubleDouble(4.0)))) == doctest::Approx(5.0));
}

TEST_CASE("precision tiers") {
  using resonax::PrecisionTier;
  CHECK(resonax::tier_for_digits(16) == PrecisionTier::binary64);
  CHECK(resonax::tier_for_digits(30) == PrecisionTier::double_double);
  CHECK(resonax::tier_for_digits(40) == PrecisionTier::quad_double);
  CHECK(resonax::tier_for_digits(62) == PrecisionTier::quad_double);
  CHECK_THROWS(resonax::tier_for_digits(80));
  CHECK(resonax::format_double(0.1) == "0.1");
}

namespace {

using resonax::QuadDouble;

double qrel(const QuadDouble& a, const char* ref) {
  const QuadDouble b = QuadDouble::parse(ref);
  return static_cast<double>(abs(a - b) / abs(b));
}

}  // namespace

// references from mpmath at 80 digits
TEST_CASE("quad-double arithmetic and functions") {
  const QuadDouble one = 1.0;
  CHECK(qrel(one / 3.0, "0.333333333333333333333333333333333333333333333333333333333333333333") < 1e-62);
  CHECK(qrel(sqrt(QuadDouble(2.0)), "1.41421356237309504880168872420969807856967187537694807317667973799") < 1e-62);
  CHECK(qrel(exp(QuadDouble::parse("-7.25")),
             "0.000710174388842549063584600370577544408676302387361895885564452288746") < 1e-61);
  CHECK(qrel(log(QuadDouble(10.0)), "2.30258509299404568401799145468436420760110148862877297603332790097") < 1e-61);
  CHECK(qrel(sin(QuadDouble(100.0)), "-0.506365641109758793656557610459785432065032721290657323443392473594") < 1e-60);
  CHECK(qrel(cos(QuadDouble(0.5)), "0.877582561890372716116281582603829651991645197109744052997610868316") < 1e-62);
  CHECK(qrel(atan2(QuadDouble(1.0), QuadDouble(-2.0)),
             "2.67794504458898712224838715181828848216863234508898555716401150359") < 1e-61);
  CHECK(qrel(pow(QuadDouble::parse("1.1"), 30), "17.449402268886407318558803753801") < 1e-62);
  // x (1/x) == 1 and (a + b) - b == a well below double-double resolution
  const QuadDouble x = QuadDouble::parse("7.123456789012345678901234567890123456789");
  CHECK(static_cast<double>(abs(x * (one / x) - one)) < 1e-62);
  const QuadDouble big = 1e20;
  CHECK(static_cast<double>(abs((x + big) - big - x)) < 1e-40);
  CHECK(QuadDouble::parse("2.5e-7").to_string(5) == "2.5000e-07");
  CHECK(QuadDouble(-3.0).to_string(3) == "-3.00e+00");
  CHECK(floor(QuadDouble(3.0) - QuadDouble(1e-40)) == QuadDouble(2.0));
}
