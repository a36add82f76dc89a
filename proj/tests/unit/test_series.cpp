#include "piesp/series.hpp"

#include "piesp/pi.hpp"

#include <doctest.h>

#include <string>
#include <vector>

namespace {

using namespace piesp;

Rational rat(const char* text) { return parse_rational(text); }

BigFloat rel_gap(const BigFloat& a, const BigFloat& b) {
  if (b == 0) return abs(a);
  return abs(a - b) / abs(b);
}

// (pi/2)^(2n)/(2n)! for n = 1..5, from an independent high-precision
// evaluation, 55 digits each.
const char* kTargets[] = {
    "1.233700550136169827354311374984518891914212425905098828",
    "0.253669507901048013636563366376836227212832254355951619",
    "0.02086348076335296087305163723204036238861149149481437969",
    "0.0009192602748394265802417162217791618029104255285490570254",
    "0.00002520204237306060548105302173134653286834613383608074804",
};

}  // namespace

TEST_CASE("targets: frozen 55-digit closed forms") {
  for (int order = 1; order <= 5; ++order) {
    const PiTarget target = target_value(order, 50);
    CHECK(target.order == order);
    CHECK(rel_gap(target.value, BigFloat(kTargets[order - 1])) < BigFloat("1e-54"));
  }
  CHECK_THROWS_AS(target_value(0), Error);
  CHECK_THROWS_AS(target_value(1, 101), PrecisionError);
}

TEST_CASE("targets: rescaling by 4^n gives pi^(2n)/(2n)!") {
  for (int order = 1; order <= 6; ++order) {
    BigFloat pi_power(1);
    for (int k = 0; k < 2 * order; ++k) pi_power *= pi_reference();
    BigFloat factorial(1);
    for (int k = 2; k <= 2 * order; ++k) factorial *= k;
    BigFloat four_n(1);
    for (int k = 0; k < order; ++k) four_n *= 4;
    CHECK(rel_gap(four_n * target_value(order).value, pi_power / factorial) <
          BigFloat("1e-95"));
  }
}

TEST_CASE("targets: strictly decreasing from order one on") {
  CHECK(nested_sum_limit(0) == 1);
  // the one increase sits between orders 0 and 1: pi^2/8 > 1
  CHECK(nested_sum_limit(1) > 1);
  BigFloat previous = nested_sum_limit(1);
  for (int order = 2; order <= 8; ++order) {
    const BigFloat current = nested_sum_limit(order);
    CHECK(current < previous);
    CHECK(current > 0);
    previous = current;
  }
}

TEST_CASE("nested partial sums: frozen values and the mode wrappers") {
  CHECK(nested_partial<Rational>(2, 2) == rat("1/9"));
  CHECK(nested_partial<Rational>(3, 3) == rat("1/225"));
  CHECK(nested_partial<Rational>(3, 2) == 0);  // fewer terms than the order

  const NumberValue exact = nested_partial(2, 3, NumberMode::rational());
  CHECK(exact.str() == "7/45");
  const NumberValue wide = nested_partial(2, 3, NumberMode::decimal(30));
  CHECK(wide.kind() == NumberKind::decimal);
  CHECK(rel_gap(wide.decimal(), BigFloat(rat("7/45"))) < BigFloat("1e-95"));
  CHECK_THROWS_AS(nested_partial<Rational>(0, 3), Error);
}

TEST_CASE("tail bound: closed form, positivity, decay") {
  // order 1, one term: the order-0 limit is 1 and 1/(2(2-1)) = 1/2
  CHECK(tail_bound(1, 1) == BigFloat("0.5"));
  CHECK(rel_gap(tail_bound(2, 1'000), BigFloat("3.0857942724766628998e-4")) <
        BigFloat("1e-19"));
  CHECK(rel_gap(tail_bound(1, 100'000), BigFloat("2.5000125000625003125e-6")) <
        BigFloat("1e-19"));

  for (const int order : {1, 2, 5}) {
    BigFloat previous = tail_bound(order, 10);
    CHECK(previous > 0);
    for (const std::int64_t count : {100, 1'000, 10'000}) {
      const BigFloat current = tail_bound(order, count);
      // O(1/count): ten times the terms shrinks the bound about tenfold
      CHECK(current * 9 < previous);
      previous = current;
    }
  }
  CHECK_THROWS_AS(tail_bound(0, 10), Error);
  CHECK_THROWS_AS(tail_bound(1, 0), Error);
}

TEST_CASE("verify: the bracket holds on a grid of orders and counts") {
  for (int order = 1; order <= 5; ++order) {
    for (const std::int64_t count :
         {static_cast<std::int64_t>(order), static_cast<std::int64_t>(order) + 1,
          std::int64_t{50}, std::int64_t{400}}) {
      if (count < order) continue;
      const VerificationReport report =
          verify(order, count, NumberMode::decimal(50), 50);
      CHECK(report.bracket_ok);
      CHECK(report.abs_error >= 0);
      CHECK(report.abs_error <= report.tail);
      CHECK(rel_gap(report.rel_error * report.target.value, report.abs_error) <
            BigFloat("1e-40"));
    }
  }
}

TEST_CASE("verify: exact mode keeps the computed value exact") {
  const VerificationReport report = verify(5, 5, NumberMode::rational(), 50);
  CHECK(report.computed.kind() == NumberKind::rational);
  CHECK(report.computed.rational() == rat("1/893025"));
  CHECK(report.bracket_ok);
  CHECK_THROWS_AS(verify(2, 1), Error);
  CHECK_THROWS_AS(verify(0, 5), Error);
}

TEST_CASE("verify: float64 mode brackets too at moderate counts") {
  const VerificationReport report = verify(3, 2'000, NumberMode::float64(), 50);
  CHECK(report.computed.kind() == NumberKind::float64);
  CHECK(report.bracket_ok);
}

TEST_CASE("verify: pi recovery from the bracket midpoint") {
  const VerificationReport one = verify(1, 100'000, NumberMode::decimal(50), 50);
  CHECK(abs(one.pi_estimate - pi_reference()) < BigFloat("1e-5"));

  const VerificationReport two = verify(2, 10'000, NumberMode::decimal(50), 50);
  CHECK(abs(two.pi_estimate - pi_reference()) < BigFloat("1e-4"));
}

TEST_CASE("majorant: ordered and numeric domination") {
  // order 1 is the equality case: the nested sum is the plain sum itself
  CHECK(majorant_check(1, 1, NumberMode::rational()));
  CHECK(majorant_check(1, 1, NumberMode::float64()));
  // behind the order-2 check at two terms: 1/9 < (10/9)^2 = 100/81
  CHECK(majorant_check(2, 2, NumberMode::rational()));

  for (int order = 1; order <= 4; ++order) {
    for (const std::int64_t count : {1, 10, 50}) {
      CHECK(majorant_check(order, count, NumberMode::rational()));
    }
  }
  for (int order = 1; order <= 5; ++order) {
    CHECK(majorant_check(order, 10'000, NumberMode::float64()));
  }
  CHECK_THROWS_AS(majorant_check(0, 5, NumberMode::rational()), Error);
  CHECK_THROWS_AS(majorant_check(1, 0, NumberMode::rational()), Error);
}

TEST_CASE("modes: rational, decimal and double agree on the same partial sum") {
  // decimal vs exact: all working digits match
  const Rational exact = nested_partial<Rational>(2, 500);
  const BigFloat wide = nested_partial<BigFloat>(2, 500);
  CHECK(rel_gap(wide, BigFloat(exact)) < BigFloat("1e-95"));
  // double vs exact: a compensated fold stays within 1e-12 easily
  const double fast = nested_partial<double>(2, 500);
  CHECK(rel_gap(widen(fast), BigFloat(exact)) < BigFloat(1e-12));

  // the decimal/exact agreement also holds at a thousand terms, order 3
  const Rational exact3 = nested_partial<Rational>(3, 1'000);
  const BigFloat wide3 = nested_partial<BigFloat>(3, 1'000);
  CHECK(rel_gap(wide3, BigFloat(exact3)) < BigFloat("1e-95"));
}

TEST_CASE("convergence report: rows in checkpoint order, brackets throughout") {
  const auto exact_rows =
      convergence_report(2, {2, 3, 4}, NumberMode::rational(), 50);
  REQUIRE(exact_rows.size() == 3);
  CHECK(exact_rows[0].computed.rational() == rat("1/9"));
  CHECK(exact_rows[1].computed.rational() == rat("7/45"));
  CHECK(exact_rows[2].computed.rational() == rat("94/525"));
  for (const auto& row : exact_rows) {
    CHECK(row.bracket_ok);
    CHECK(row.abs_error > 0);
  }
  CHECK(exact_rows[1].abs_error < exact_rows[0].abs_error);
  CHECK(exact_rows[2].abs_error < exact_rows[1].abs_error);

  const auto decimal_rows =
      convergence_report(1, {1, 10, 100, 1'000}, NumberMode::decimal(50), 50);
  for (std::size_t i = 1; i < decimal_rows.size(); ++i) {
    CHECK(decimal_rows[i].bracket_ok);
    // the error tracks 1/(4M): about a tenfold drop per tenfold count
    const BigFloat ratio = decimal_rows[i - 1].abs_error / decimal_rows[i].abs_error;
    CHECK(ratio > 9);
    CHECK(ratio < 11);
  }

  CHECK_THROWS_AS(convergence_report(2, {4, 3}, NumberMode::rational(), 50), Error);
  CHECK_THROWS_AS(convergence_report(2, {1, 3}, NumberMode::rational(), 50), Error);
  CHECK_THROWS_AS(convergence_report(2, {}, NumberMode::rational(), 50), Error);
}

TEST_CASE("pi constant: literal, cap, and an independent arctangent check") {
  CHECK(pi_max_digits() == kMaxDigits);
  CHECK(BigFloat(pi_digits_literal()) == pi_reference());
  CHECK(rel_gap(pi_squared_over_8(), pi_reference() * pi_reference() / 8) == 0);

  // Machin: pi = 16 atan(1/5) - 4 atan(1/239), arctan from its Taylor series
  const auto atan_inverse = [](int denominator) {
    const BigFloat x = BigFloat(1) / denominator;
    const BigFloat xx = x * x;
    BigFloat piece = x;
    BigFloat sum = x;
    const BigFloat eps("1e-110");
    for (int k = 1;; ++k) {
      piece *= -xx;
      sum += piece / (2 * k + 1);
      if (abs(piece) < eps) break;
    }
    return sum;
  };
  const BigFloat machin = 16 * atan_inverse(5) - 4 * atan_inverse(239);
  CHECK(abs(machin - pi_reference()) < BigFloat("1e-99"));
}
