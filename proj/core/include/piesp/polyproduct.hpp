#pragma once

#include "piesp/esp.hpp"
#include "piesp/number.hpp"
#include "piesp/terms.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace piesp {

/// Full-order expansion ceiling: above this many factors the complete
/// coefficient vector must be requested with an explicit cutoff.
inline constexpr std::int64_t kFullOrderLimit = 10'000;

/// An even polynomial sum_k coeffs[k] * x^(2k): the expanded form of the
/// finite cosine product. coeffs[0] == 1 and signs alternate.
template <class T>
struct EvenPolynomial {
  std::int64_t factor_count = 0;
  std::vector<T> coeffs;

  int order() const { return static_cast<int>(coeffs.size()) - 1; }
};

/// Expands prod_{k=1..factor_count} (1 - x^2/(k - 1/2)^2) up to x^(2*order);
/// order defaults to factor_count (the full expansion). The coefficient of
/// x^(2k) is (-1)^k 4^k e_k over the reciprocal odd squares; running the
/// symmetric-polynomial fold over 4*u_l keeps the 4^k implicit instead of
/// pushing an explicit power through the float modes.
template <class T>
EvenPolynomial<T> expand_product(std::int64_t factor_count,
                                 std::optional<int> order = std::nullopt) {
  if (factor_count < 1) throw Error("product needs at least one factor");
  int cutoff;
  if (order) {
    if (*order < 0 || *order > factor_count)
      throw Error("expansion order must lie in [0, factor_count]");
    cutoff = *order;
  } else {
    if (factor_count > kFullOrderLimit)
      throw GuardError("full-order expansion past " +
                       std::to_string(kFullOrderLimit) +
                       " factors; pass an order cutoff");
    cutoff = static_cast<int>(factor_count);
  }
  EspState<T> state(cutoff);
  for (std::int64_t k = 1; k <= factor_count; ++k)
    state.extend(term_prehalf<T>(k));
  EvenPolynomial<T> poly;
  poly.factor_count = factor_count;
  poly.coeffs = std::move(state.e);
  for (int k = 1; k <= cutoff; k += 2)
    poly.coeffs[static_cast<std::size_t>(k)] = -poly.coeffs[static_cast<std::size_t>(k)];
  return poly;
}

/// Horner evaluation in x^2.
template <class T>
T eval_poly(const EvenPolynomial<T>& poly, const T& x) {
  const T xx = x * x;
  T acc = poly.coeffs.back();
  for (int k = poly.order() - 1; k >= 0; --k)
    acc = poly.coeffs[static_cast<std::size_t>(k)] + xx * acc;
  return acc;
}

/// Left-to-right product of (1 - (2x/(2k-1))^2). The ratio form makes each
/// factor vanish exactly at its zero x = k - 1/2, in every mode: 2x then
/// equals the odd integer 2k-1 and the quotient is exactly one.
template <class T>
T eval_product(std::int64_t factor_count, const T& x) {
  if (factor_count < 1) throw Error("product needs at least one factor");
  const T two_x = T(2) * x;
  T acc(1);
  for (std::int64_t k = 1; k <= factor_count; ++k) {
    const T r = two_x / T(detail::odd_root(k));
    acc *= T(1) - r * r;
  }
  return acc;
}

/// cos(pi * x) to `digits` significant digits from the Taylor series, with
/// the argument folded into [0, 1/2] first (2-periodicity, then the
/// reflection cos(pi(1 - x)) = -cos(pi x)). Independent of the product and
/// series code paths, so it can referee them. Requires |x| <= 10.
BigFloat cos_reference(const BigFloat& x, int digits = NumberMode::kDefaultDigits);

}  // namespace piesp
