#include "piesp/series.hpp"

#include "piesp/pi.hpp"

#include <chrono>

namespace piesp {
namespace {

BigFloat factorial(int n) {
  BigInt f(1);
  for (int i = 2; i <= n; ++i) f *= i;
  return BigFloat(f);
}

template <class T>
T int_pow(const T& base, int exponent) {
  T out(1);
  for (int i = 0; i < exponent; ++i) out *= base;
  return out;
}

template <class T>
bool majorant_check_impl(int order, std::int64_t count) {
  const T nested = nested_partial<T>(order, count);
  const T grid = int_pow(simple_partial_sum<T>(count), order);
  const bool ordered_ok = order == 1 ? !(nested > grid) : nested < grid;
  const bool limit_ok = widen(nested) < int_pow(pi_squared_over_8(), order);
  return ordered_ok && limit_ok;
}

}  // namespace

BigFloat nested_sum_limit(int order, int digits) {
  validate_digits(digits);
  if (order < 0) throw Error("nested sum order must be >= 0");
  if (order == 0) return BigFloat(1);
  const BigFloat half_pi = pi_reference() / 2;
  return int_pow(half_pi, 2 * order) / factorial(2 * order);
}

PiTarget target_value(int order, int digits) {
  if (order < 1) throw Error("target order must be >= 1");
  return PiTarget{order, nested_sum_limit(order, digits), validate_digits(digits)};
}

NumberValue nested_partial(int order, std::int64_t count, const NumberMode& mode) {
  return dispatch(mode, [&]<class T>(ScalarTag<T>) {
    return make_value(mode, nested_partial<T>(order, count));
  });
}

BigFloat tail_bound(int order, std::int64_t count, int digits) {
  if (order < 1) throw Error("tail bound order must be >= 1");
  if (count < 1) throw Error("tail bound needs at least one term");
  return nested_sum_limit(order - 1, digits) / BigFloat(2 * (2 * count - 1));
}

VerificationReport verify(int order, std::int64_t count, const NumberMode& mode,
                          int digits) {
  if (order < 1) throw Error("verification order must be >= 1");
  if (count < order)
    throw Error("verification needs count >= order, the partial sum is zero below that");
  const auto start = std::chrono::steady_clock::now();

  VerificationReport report;
  report.order = order;
  report.count = count;
  report.mode = mode;
  report.digits = validate_digits(digits);
  report.computed = nested_partial(order, count, mode);
  report.target = target_value(order, digits);
  report.tail = tail_bound(order, count, digits);

  const BigFloat computed = report.computed.to_bigfloat();
  report.abs_error = report.target.value - computed;
  report.rel_error = report.abs_error / report.target.value;
  report.bracket_ok =
      computed <= report.target.value && report.target.value <= computed + report.tail;

  // Midpoint of the bracket, pushed back through the closed form. Its error
  // against pi shrinks with tail/count like the bracket itself does.
  const BigFloat midpoint = computed + report.tail / 2;
  report.pi_estimate =
      2 * pow(factorial(2 * order) * midpoint, BigFloat(1) / (2 * order));

  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

bool majorant_check(int order, std::int64_t count, const NumberMode& mode) {
  if (order < 1) throw Error("majorant order must be >= 1");
  if (count < 1) throw Error("majorant needs at least one term");
  return dispatch(mode, [&]<class T>(ScalarTag<T>) {
    return majorant_check_impl<T>(order, count);
  });
}

std::vector<ConvergenceRow> convergence_report(
    int order, const std::vector<std::int64_t>& checkpoints, const NumberMode& mode,
    int digits) {
  if (order < 1) throw Error("convergence order must be >= 1");
  if (checkpoints.empty()) throw Error("convergence needs at least one checkpoint");
  std::int64_t previous = order - 1;
  for (const std::int64_t count : checkpoints) {
    if (count <= previous)
      throw Error("checkpoints must be strictly increasing and >= the order");
    previous = count;
  }

  const PiTarget target = target_value(order, digits);
  std::vector<ConvergenceRow> rows;
  rows.reserve(checkpoints.size());
  for (const std::int64_t count : checkpoints) {
    ConvergenceRow row;
    row.count = count;
    row.computed = nested_partial(order, count, mode);
    row.tail = tail_bound(order, count, digits);
    const BigFloat computed = row.computed.to_bigfloat();
    row.abs_error = target.value - computed;
    row.bracket_ok =
        computed <= target.value && target.value <= computed + row.tail;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace piesp
