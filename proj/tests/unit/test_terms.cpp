#include "piesp/terms.hpp"

#include "piesp/pi.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

namespace {

using namespace piesp;

}  // namespace

TEST_CASE("terms: the reciprocal odd squares, exactly") {
  CHECK(format_rational(term<Rational>(1)) == "1");
  CHECK(format_rational(term<Rational>(2)) == "1/9");
  CHECK(format_rational(term<Rational>(3)) == "1/25");
  CHECK(format_rational(term<Rational>(10)) == "1/361");
}

TEST_CASE("terms: defining identity (2l-1)^2 * u_l == 1") {
  std::mt19937 rng(20250817);
  std::uniform_int_distribution<std::int64_t> pick(1, 1'000'000);
  for (int i = 0; i < 50; ++i) {
    const std::int64_t l = pick(rng);
    const BigInt root = 2 * l - 1;
    CHECK(Rational(root * root) * term<Rational>(l) == 1);
  }
}

TEST_CASE("terms: positive and strictly decreasing") {
  Rational previous = term<Rational>(1);
  for (std::int64_t l = 2; l <= 200; ++l) {
    const Rational current = term<Rational>(l);
    CHECK(current > 0);
    CHECK(current < previous);
    previous = current;
  }
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::int64_t> pick(1, 999'999);
  for (int i = 0; i < 50; ++i) {
    const std::int64_t l = pick(rng);
    CHECK(term<double>(l) > term<double>(l + 1));
    CHECK(term<double>(l + 1) > 0.0);
  }
}

TEST_CASE("terms: double mode lands within one ulp of the exact value") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<std::int64_t> pick(1, 1'000'000);
  for (int i = 0; i < 200; ++i) {
    const std::int64_t l = pick(rng);
    const double fast = term<double>(l);
    const double exact = term<Rational>(l).convert_to<double>();
    const bool within_one_ulp =
        fast == exact || std::nextafter(fast, exact) == exact;
    CHECK(within_one_ulp);
  }
}

TEST_CASE("terms: index validation") {
  CHECK_THROWS_AS(term<Rational>(0), Error);
  CHECK_THROWS_AS(term<double>(-3), Error);
  CHECK_THROWS_AS(term<double>(kMaxTermIndex + 1), OverflowError);
  CHECK(term<double>(kMaxTermIndex) > 0.0);
}

TEST_CASE("terms: prehalf form is exactly four times the extracted form") {
  std::mt19937 rng(23);
  std::uniform_int_distribution<std::int64_t> pick(1, 100'000);
  for (int i = 0; i < 40; ++i) {
    const std::int64_t l = pick(rng);
    CHECK(term_prehalf<Rational>(l) == Rational(4) * term<Rational>(l));
    // multiplying by 4 is exact in binary floating point too
    CHECK(term_prehalf<double>(l) == 4.0 * term<double>(l));
  }
}

TEST_CASE("partial sums: frozen small values") {
  CHECK(simple_partial_sum<Rational>(0) == 0);
  CHECK(format_rational(simple_partial_sum<Rational>(1)) == "1");
  CHECK(format_rational(simple_partial_sum<Rational>(2)) == "10/9");
  CHECK(format_rational(simple_partial_sum<Rational>(3)) == "259/225");
}

TEST_CASE("partial sums: monotone increase toward pi^2/8, never reaching it") {
  Rational previous(0);
  for (std::int64_t count = 1; count <= 60; ++count) {
    const Rational current = simple_partial_sum<Rational>(count);
    CHECK(current > previous);
    previous = current;
  }
  CHECK(widen(previous) < pi_squared_over_8());

  // The gap behaves like 1/(4*count): between 1/(4c + 2) and 1/(4c).
  const double sum = simple_partial_sum<double>(1'000'000);
  const double limit = pi_squared_over_8().convert_to<double>();
  CHECK(sum < limit);
  CHECK(limit - sum < 2.6e-7);
  CHECK(limit - sum > 2.4e-7);
}

TEST_CASE("terms: mode wrappers tag their results") {
  const NumberValue exact = term(2, NumberMode::rational());
  CHECK(exact.kind() == NumberKind::rational);
  CHECK(exact.str() == "1/9");

  const NumberValue fast = term(2, NumberMode::float64());
  CHECK(fast.kind() == NumberKind::float64);
  CHECK(fast.float64() == doctest::Approx(1.0 / 9.0));

  const NumberValue wide = term(2, NumberMode::decimal(30));
  CHECK(wide.kind() == NumberKind::decimal);
  CHECK(wide.digits() == 30);
  CHECK(wide.str().substr(0, 12) == "0.1111111111");

  const NumberValue sum = simple_partial_sum(3, NumberMode::rational());
  CHECK(sum.str() == "259/225");
}

TEST_CASE("numbers: parsing and canonical formatting") {
  CHECK(format_rational(parse_rational("7/45")) == "7/45");
  CHECK(format_rational(parse_rational("-14/90")) == "-7/45");
  CHECK(format_rational(parse_rational("0.3")) == "3/10");
  CHECK(format_rational(parse_rational("-2.5e2")) == "-250");
  CHECK(format_rational(parse_rational("1e-3")) == "1/1000");
  CHECK(format_rational(parse_rational("+12")) == "12");

  CHECK_THROWS_AS(parse_rational("abc"), Error);
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("0..1"), Error);
  CHECK_THROWS_AS(parse_rational(""), Error);

  CHECK(parse_number("0.5", NumberMode::float64()).float64() == 0.5);
  CHECK_THROWS_AS(parse_number("0.5x", NumberMode::float64()), Error);
  CHECK(parse_number("0.25", NumberMode::decimal(20)).decimal() == BigFloat("0.25"));

  CHECK(format_double(1.0) == "1");
  CHECK(format_double(-4.0) == "-4");
  CHECK(format_double(0.1) == "0.1");
}

TEST_CASE("numbers: mode boundaries") {
  CHECK_THROWS_AS(NumberMode::decimal(8), PrecisionError);
  CHECK_THROWS_AS(NumberMode::decimal(101), PrecisionError);
  CHECK(NumberMode::decimal(16).digits == 16);
  CHECK(NumberMode::decimal(100).digits == 100);

  CHECK_THROWS_AS(kind_from_name("float"), ModeError);
  CHECK(kind_from_name("rational") == NumberKind::rational);
  CHECK(kind_from_name("f64") == NumberKind::float64);
  CHECK(kind_from_name("decimal") == NumberKind::decimal);

  // exact mode refuses inexact inputs instead of coercing them
  CHECK_THROWS_AS(to_scalar<Rational>(NumberValue(0.5)), ModeError);
  CHECK(to_scalar<double>(NumberValue(Rational(1, 4))) == 0.25);
  CHECK(to_scalar<BigFloat>(NumberValue(Rational(1, 4))) == BigFloat("0.25"));
}
