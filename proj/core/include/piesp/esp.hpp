#pragma once

#include "piesp/compensated.hpp"
#include "piesp/number.hpp"
#include "piesp/terms.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <future>
#include <utility>
#include <vector>

namespace piesp {

/// Ceiling on C(m, n) for the literal nested-sum evaluator. Past this the
/// enumeration is pointless as a check and painful as a wait.
inline constexpr std::uint64_t kBruteforceTupleLimit = 2'000'000;

/// C(m, n), saturating at cap + 1 as soon as the running value passes `cap`.
inline std::uint64_t binomial_capped(std::int64_t m, int n, std::uint64_t cap) {
  if (m < 0 || n < 0) throw Error("binomial arguments must be >= 0");
  if (n > m) return 0;
  const std::int64_t k = std::min<std::int64_t>(n, m - n);
  unsigned __int128 c = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    c = c * static_cast<unsigned __int128>(m - k + i) /
        static_cast<unsigned __int128>(i);
    if (c > cap) return cap + 1;
  }
  return static_cast<std::uint64_t>(c);
}

/// Elementary symmetric polynomials over a growing prefix of the term
/// sequence: after consuming terms t_1..t_count,
///   e[k] == sum over k-element subsets of {t_1..t_count} of their products.
/// e[0] stays 1 and e[k] is exactly zero while k > count, in every mode.
/// Double mode keeps a per-order Kahan carry so the O(count) update chain
/// does not accumulate drift.
template <class T>
struct EspState {
  std::int64_t count = 0;
  std::vector<T> e;
  std::vector<T> carry;

  explicit EspState(int max_order) : e(checked_size(max_order), T(0)) {
    e[0] = T(1);
    if constexpr (std::is_same_v<T, double>) carry.assign(e.size(), 0.0);
  }

  int max_order() const { return static_cast<int>(e.size()) - 1; }

  /// One step of the update e[k] += t * e[k-1], walked downward so each
  /// e[k-1] read is the value from before this term arrived.
  void extend(const T& next_term) {
    if (!(next_term > T(0))) throw Error("esp terms must be positive");
    const int top =
        static_cast<int>(std::min<std::int64_t>(max_order(), count + 1));
    if constexpr (std::is_same_v<T, double>) {
      for (int k = top; k >= 1; --k) {
        const double y = next_term * e[k - 1] - carry[k];
        const double t = e[k] + y;
        carry[k] = (t - e[k]) - y;
        e[k] = t;
      }
    } else {
      for (int k = top; k >= 1; --k) e[k] += next_term * e[k - 1];
    }
    ++count;
  }

 private:
  static std::size_t checked_size(int max_order) {
    if (max_order < 0) throw Error("esp max order must be >= 0");
    return static_cast<std::size_t>(max_order) + 1;
  }
};

/// Value-semantics step: returns the extended copy, leaves `state` alone.
template <class T>
EspState<T> esp_extend(EspState<T> state, const T& next_term) {
  state.extend(next_term);
  return state;
}

/// Folds term(first..last) into a fresh state.
template <class T>
EspState<T> esp_over_range(std::int64_t first, std::int64_t last, int max_order) {
  EspState<T> state(max_order);
  for (std::int64_t l = first; l <= last; ++l) state.extend(term<T>(l));
  return state;
}

/// e[0..max_order] over the first `count` terms in O(count * max_order).
template <class T>
EspState<T> esp_dp(std::int64_t count, int max_order) {
  if (count < 0) throw Error("term count must be >= 0");
  return esp_over_range<T>(1, count, max_order);
}

/// Combines states over disjoint term ranges. The generating polynomial of
/// the union is the product of the two factors, so coefficients convolve.
template <class T>
EspState<T> esp_merge(const EspState<T>& a, const EspState<T>& b) {
  if (a.max_order() != b.max_order())
    throw Error("esp merge requires states of equal max order");
  EspState<T> out(a.max_order());
  out.count = a.count + b.count;
  for (int k = out.max_order(); k >= 0; --k) {
    T acc(0);
    for (int i = 0; i <= k; ++i) acc += a.e[i] * b.e[k - i];
    out.e[k] = acc;
  }
  return out;
}

/// Block size for the split/merge evaluation. Fixed, so the reduction tree --
/// and therefore every rounded bit -- is independent of the thread count.
inline constexpr std::int64_t kEspBlockSize = 4096;

/// esp_dp over fixed blocks merged left to right. `threads` only controls how
/// many block states are computed concurrently; results are bit-identical for
/// any thread count, including 1.
template <class T>
EspState<T> esp_dp_blocked(std::int64_t count, int max_order, unsigned threads = 1,
                           std::int64_t block_size = kEspBlockSize) {
  if (count < 0) throw Error("term count must be >= 0");
  if (block_size < 1) throw Error("block size must be >= 1");
  const std::int64_t blocks = (count + block_size - 1) / block_size;
  if (blocks <= 1) return esp_dp<T>(count, max_order);

  const auto block_range = [&](std::int64_t b) {
    const std::int64_t first = b * block_size + 1;
    const std::int64_t last = std::min(count, (b + 1) * block_size);
    return std::pair{first, last};
  };

  std::vector<EspState<T>> parts;
  parts.reserve(static_cast<std::size_t>(blocks));
  if (threads <= 1) {
    for (std::int64_t b = 0; b < blocks; ++b) {
      const auto [first, last] = block_range(b);
      parts.push_back(esp_over_range<T>(first, last, max_order));
    }
  } else {
    // Launch in waves of `threads` so huge inputs do not fan out into one
    // thread per block. Collection order stays the block order.
    std::int64_t next = 0;
    while (next < blocks) {
      const std::int64_t wave_end =
          std::min<std::int64_t>(blocks, next + static_cast<std::int64_t>(threads));
      std::vector<std::future<EspState<T>>> wave;
      for (std::int64_t b = next; b < wave_end; ++b) {
        const auto [first, last] = block_range(b);
        wave.push_back(std::async(std::launch::async, [first, last, max_order] {
          return esp_over_range<T>(first, last, max_order);
        }));
      }
      for (auto& f : wave) parts.push_back(f.get());
      next = wave_end;
    }
  }

  EspState<T> acc = std::move(parts.front());
  for (std::size_t i = 1; i < parts.size(); ++i) acc = esp_merge(acc, parts[i]);
  return acc;
}

namespace detail {

// Literal nested summation: sum over index_level from `level` up to `upper`
// of u[index] times the next level in, bottoming out at level 1. Each visited
// tuple is strictly increasing, exactly the index set of the definition.
template <class T>
T nested_level(const std::vector<T>& u, int level, std::int64_t upper) {
  if constexpr (std::is_same_v<T, double>) {
    CompensatedSum<double> total;
    for (std::int64_t l = level; l <= upper; ++l) {
      if (level == 1)
        total.add(u[static_cast<std::size_t>(l)]);
      else
        total.add(u[static_cast<std::size_t>(l)] * nested_level(u, level - 1, l - 1));
    }
    return total.sum;
  } else {
    T total(0);
    for (std::int64_t l = level; l <= upper; ++l) {
      if (level == 1)
        total += u[static_cast<std::size_t>(l)];
      else
        total += u[static_cast<std::size_t>(l)] * nested_level(u, level - 1, l - 1);
    }
    return total;
  }
}

inline void check_bruteforce_cost(std::int64_t count, int order) {
  if (binomial_capped(count, order, kBruteforceTupleLimit) > kBruteforceTupleLimit)
    throw GuardError("nested-sum enumeration of C(" + std::to_string(count) + ", " +
                     std::to_string(order) + ") tuples exceeds the limit of " +
                     std::to_string(kBruteforceTupleLimit) +
                     "; use esp_dp or esp_newton instead");
}

}  // namespace detail

/// The order-n nested sum evaluated exactly as written: n nested loops over
/// strictly increasing indices. Equal to esp_dp(count, n).e[n] but costs
/// C(count, n) tuple visits, so it is guarded. This is the oracle the fast
/// paths are checked against.
template <class T>
T nested_sum_naive(std::int64_t count, int order) {
  if (order < 1) throw Error("nested sum order must be >= 1");
  if (count < 0) throw Error("term count must be >= 0");
  detail::check_bruteforce_cost(count, order);
  if (count < order) return T(0);
  std::vector<T> u(static_cast<std::size_t>(count) + 1, T(0));
  for (std::int64_t l = 1; l <= count; ++l)
    u[static_cast<std::size_t>(l)] = term<T>(l);
  return detail::nested_level(u, order, count);
}

/// All orders 0..max_order by direct enumeration. Guards every intermediate
/// order as well: C(count, k) can dwarf C(count, max_order) when max_order
/// sits past count/2.
template <class T>
std::vector<T> esp_bruteforce(std::int64_t count, int max_order) {
  if (max_order < 0) throw Error("esp max order must be >= 0");
  if (count < 0) throw Error("term count must be >= 0");
  std::vector<T> e(static_cast<std::size_t>(max_order) + 1, T(0));
  e[0] = T(1);
  for (int k = 1; k <= max_order; ++k) {
    if (count < k) break;  // stays exactly zero
    e[static_cast<std::size_t>(k)] = nested_sum_naive<T>(count, k);
  }
  return e;
}

/// p[j] = sum of u_l^j over l = 1..count, for j = 0..max_power (p[0] = count).
template <class T>
struct PowerSums {
  std::int64_t count = 0;
  std::vector<T> p;
};

template <class T>
PowerSums<T> power_sums(std::int64_t count, int max_power) {
  if (count < 1) throw Error("power sums need at least one term");
  if (max_power < 1) throw Error("power sum order must be >= 1");
  PowerSums<T> out;
  out.count = count;
  out.p.assign(static_cast<std::size_t>(max_power) + 1, T(0));
  out.p[0] = T(count);
  for (std::int64_t l = 1; l <= count; ++l) {
    const T u = term<T>(l);
    T pw = u;
    for (int j = 1; j <= max_power; ++j) {
      out.p[static_cast<std::size_t>(j)] += pw;
      if (j < max_power) pw *= u;
    }
  }
  return out;
}

/// esp_newton result: the coefficients plus, in the float modes, the orders
/// whose alternating sum collapsed by more than twelve decades -- the sign
/// that catastrophic cancellation ate the value.
template <class T>
struct NewtonEsp {
  std::vector<T> e;
  std::vector<int> cancellation_orders;
};

/// e[0..max_order] from power sums via Newton's identities:
///   k * e_k = sum_{i=1..k} (-1)^(i-1) * e_{k-i} * p_i.
/// Exact in rational mode, where orders past `count` vanish by algebra. The
/// float modes force those orders to zero (the alternating sum leaves only
/// rounding residue there) and report them as cancelled.
template <class T>
NewtonEsp<T> esp_newton(std::int64_t count, int max_order) {
  if (max_order < 1) throw Error("newton max order must be >= 1");
  const PowerSums<T> sums = power_sums<T>(count, max_order);
  NewtonEsp<T> out;
  out.e.assign(static_cast<std::size_t>(max_order) + 1, T(0));
  out.e[0] = T(1);
  constexpr bool exact = std::is_same_v<T, Rational>;
  for (int k = 1; k <= max_order; ++k) {
    T acc(0);
    T largest(0);
    for (int i = 1; i <= k; ++i) {
      const T piece = out.e[static_cast<std::size_t>(k - i)] *
                      sums.p[static_cast<std::size_t>(i)];
      if (i % 2 == 1)
        acc += piece;
      else
        acc -= piece;
      if constexpr (!exact) {
        using std::abs;
        const T mag = abs(piece);
        if (mag > largest) largest = mag;
      }
    }
    T ek = acc / T(k);
    if constexpr (!exact) {
      using std::abs;
      if (largest > T(0) && abs(ek) < T(1e-12) * largest)
        out.cancellation_orders.push_back(k);
      if (k > count) ek = T(0);
    }
    out.e[static_cast<std::size_t>(k)] = ek;
  }
  return out;
}

}  // namespace piesp
