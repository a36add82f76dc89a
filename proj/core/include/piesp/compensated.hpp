#pragma once

namespace piesp {

/// Kahan compensated accumulator. The carry captures the low-order bits each
/// add loses, so long all-positive sums stay within a few ulp instead of
/// drifting with the term count.
template <class T>
struct CompensatedSum {
  T sum{};
  T carry{};

  void add(const T& value) {
    const T y = value - carry;
    const T t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

}  // namespace piesp
