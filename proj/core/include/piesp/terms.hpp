#pragma once

#include "piesp/compensated.hpp"
#include "piesp/number.hpp"

#include <cstdint>
#include <limits>
#include <type_traits>

namespace piesp {

/// Largest index for which the odd denominator root 2l-1 still fits int64.
inline constexpr std::int64_t kMaxTermIndex =
    (std::numeric_limits<std::int64_t>::max() - 1) / 2;

namespace detail {

inline std::int64_t odd_root(std::int64_t index) {
  if (index < 1) throw Error("term index must be >= 1");
  if (index > kMaxTermIndex)
    throw OverflowError("term index too large: 2l-1 leaves the 64-bit range");
  return 2 * index - 1;
}

}  // namespace detail

/// u_l = 1/(2l-1)^2, the reciprocal odd squares: 1, 1/9, 1/25, ...
/// Exact in rational mode; one rounded division elsewhere.
template <class T>
T term(std::int64_t index) {
  const std::int64_t odd = detail::odd_root(index);
  if constexpr (std::is_same_v<T, Rational>) {
    const BigInt root(odd);
    return Rational(BigInt(1), root * root);
  } else {
    const T root(odd);
    return T(1) / (root * root);
  }
}

/// 1/(l - 1/2)^2 == 4 * u_l: the factor as it appears in the cosine product
/// before the power of 2^2 per index is pulled out front.
template <class T>
T term_prehalf(std::int64_t index) {
  return T(4) * term<T>(index);
}

/// Sum of term(1..count). Approaches pi^2/8 from below; compensated in
/// double mode so the limit stays clean at large counts.
template <class T>
T simple_partial_sum(std::int64_t count) {
  if (count < 0) throw Error("term count must be >= 0");
  if constexpr (std::is_same_v<T, double>) {
    CompensatedSum<double> acc;
    for (std::int64_t l = 1; l <= count; ++l) acc.add(term<double>(l));
    return acc.sum;
  } else {
    T acc(0);
    for (std::int64_t l = 1; l <= count; ++l) acc += term<T>(l);
    return acc;
  }
}

inline NumberValue term(std::int64_t index, const NumberMode& mode) {
  return dispatch(mode, [&]<class T>(ScalarTag<T>) {
    return make_value(mode, piesp::term<T>(index));
  });
}

inline NumberValue simple_partial_sum(std::int64_t count, const NumberMode& mode) {
  return dispatch(mode, [&]<class T>(ScalarTag<T>) {
    return make_value(mode, piesp::simple_partial_sum<T>(count));
  });
}

}  // namespace piesp
