#pragma once

#include "piesp/esp.hpp"
#include "piesp/number.hpp"

#include <cstdint>
#include <vector>

namespace piesp {

/// The closed form the order-n nested sum converges to.
struct PiTarget {
  int order = 1;
  BigFloat value;  // (pi/2)^(2n) / (2n)!
  int digits = NumberMode::kDefaultDigits;
};

/// (pi/2)^(2n) / (2n)! to `digits` significant digits. Requires n >= 1.
PiTarget target_value(int order, int digits = NumberMode::kDefaultDigits);

/// The same limit extended to order 0, where the empty nested sum is 1.
/// The tail bound leans on the order-(n-1) limit, so it needs this case.
BigFloat nested_sum_limit(int order, int digits = NumberMode::kDefaultDigits);

/// The order-n nested sum truncated to the first `count` terms:
/// e_n over u_1..u_count. Zero while count < n; increases toward the target.
template <class T>
T nested_partial(int order, std::int64_t count) {
  if (order < 1) throw Error("nested sum order must be >= 1");
  if (count < 0) throw Error("term count must be >= 0");
  return esp_dp<T>(count, order).e[static_cast<std::size_t>(order)];
}

NumberValue nested_partial(int order, std::int64_t count, const NumberMode& mode);

/// Upper bound on target - partial: every omitted tuple contains an index
/// past `count`, the remaining factors are bounded by the full order-(n-1)
/// limit, and the omitted single-index tail sums below 1/(2(2*count - 1)).
/// O(1/count), so brackets tighten linearly in the term count.
BigFloat tail_bound(int order, std::int64_t count,
                    int digits = NumberMode::kDefaultDigits);

/// Everything `verify` measures for one (order, count) pair. The bracket
///   computed <= target <= computed + tail
/// is the rigorous part; errors and the pi estimate are diagnostics.
struct VerificationReport {
  int order = 1;
  std::int64_t count = 0;
  NumberMode mode;
  int digits = NumberMode::kDefaultDigits;
  NumberValue computed;
  PiTarget target;
  BigFloat tail;
  BigFloat abs_error;  // target - computed, nonnegative when the bracket holds
  BigFloat rel_error;
  bool bracket_ok = false;
  BigFloat pi_estimate;  // 2 * ((2n)! * (computed + tail/2))^(1/(2n))
  double elapsed_seconds = 0.0;
};

/// Computes the order-n partial sum over `count` terms in `mode`, compares
/// it against the closed form at `digits` digits, and checks the bracket.
/// Requires count >= order so the partial sum is nonzero.
VerificationReport verify(int order, std::int64_t count,
                          const NumberMode& mode = NumberMode::decimal(),
                          int digits = NumberMode::kDefaultDigits);

/// Ordered-tuple domination: the nested partial sum must sit strictly below
/// (sum of the first `count` terms)^n -- with equality allowed at n = 1,
/// where the two coincide -- and numerically below the limit (pi^2/8)^n.
bool majorant_check(int order, std::int64_t count, const NumberMode& mode);

struct ConvergenceRow {
  std::int64_t count = 0;
  NumberValue computed;
  BigFloat abs_error;
  BigFloat tail;
  bool bracket_ok = false;
};

/// One row per checkpoint, in checkpoint order. Checkpoints must be strictly
/// increasing and start at or above the order.
std::vector<ConvergenceRow> convergence_report(
    int order, const std::vector<std::int64_t>& checkpoints,
    const NumberMode& mode = NumberMode::decimal(),
    int digits = NumberMode::kDefaultDigits);

}  // namespace piesp
