#pragma once

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

namespace piesp {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Working precision of the high-precision decimal mode, in significant
/// digits. Requests above this are rejected; the stored pi constant carries
/// enough digits to back it.
inline constexpr int kMaxDigits = 100;

using BigFloat =
    boost::multiprecision::number<boost::multiprecision::cpp_dec_float<kMaxDigits>>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An index or count no longer fits the fixed-width integer it must pass
/// through. Exact arithmetic itself never overflows.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// A cost or memory guard tripped (brute-force tuple count, full-order
/// expansion).
class GuardError : public Error {
 public:
  using Error::Error;
};

/// Requested digits exceed what the stored constants can support.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

/// An operation was asked to mix value kinds it must not silently coerce.
class ModeError : public Error {
 public:
  using Error::Error;
};

enum class NumberKind { rational, float64, decimal };

const char* kind_name(NumberKind kind);

/// Parses "rational" | "f64" | "decimal"; throws ModeError otherwise.
NumberKind kind_from_name(const std::string& name);

/// Arithmetic mode every computation runs in: exact rationals, hardware
/// doubles, or decimal floats carrying `digits` significant digits.
struct NumberMode {
  static constexpr int kMinDigits = 16;
  static constexpr int kDefaultDigits = 50;

  NumberKind kind = NumberKind::float64;
  int digits = kDefaultDigits;

  static NumberMode rational() { return {NumberKind::rational, kDefaultDigits}; }
  static NumberMode float64() { return {NumberKind::float64, kDefaultDigits}; }
  static NumberMode decimal(int digits = kDefaultDigits);
};

/// Clamps nothing: digits outside [16, 100] raise PrecisionError.
int validate_digits(int digits);

std::string format_rational(const Rational& value);
std::string format_double(double value);
std::string format_bigfloat(const BigFloat& value, int digits);

/// Exact rational from "p/q", an integer, or a decimal/scientific literal
/// ("0.3" becomes 3/10). Throws Error on anything else.
Rational parse_rational(const std::string& text);

/// Mode-tagged scalar. Values keep the representation they were computed in;
/// conversions out are explicit.
class NumberValue {
 public:
  NumberValue() = default;
  explicit NumberValue(Rational value) : value_(std::move(value)) {}
  explicit NumberValue(double value) : value_(value) {}
  NumberValue(BigFloat value, int digits = NumberMode::kDefaultDigits)
      : value_(std::move(value)), digits_(validate_digits(digits)) {}

  NumberKind kind() const {
    switch (value_.index()) {
      case 1:
        return NumberKind::rational;
      case 2:
        return NumberKind::decimal;
      default:
        return NumberKind::float64;
    }
  }

  int digits() const { return digits_; }

  const Rational& rational() const {
    if (kind() != NumberKind::rational)
      throw ModeError("value does not hold an exact rational");
    return std::get<Rational>(value_);
  }

  double float64() const {
    if (kind() != NumberKind::float64)
      throw ModeError("value does not hold a binary double");
    return std::get<double>(value_);
  }

  const BigFloat& decimal() const {
    if (kind() != NumberKind::decimal)
      throw ModeError("value does not hold a decimal float");
    return std::get<BigFloat>(value_);
  }

  double to_double() const;
  BigFloat to_bigfloat() const;

  /// Canonical text: lowest-terms "p/q" (plain "p" for integers), shortest
  /// round-trip doubles, or `digits` significant decimal digits.
  std::string str() const;

 private:
  std::variant<double, Rational, BigFloat> value_{0.0};
  int digits_ = NumberMode::kDefaultDigits;
};

/// Parses `text` into the representation `mode` asks for.
NumberValue parse_number(const std::string& text, const NumberMode& mode);

template <class T>
struct ScalarTag {
  using type = T;
};

/// Runs `f` with the scalar type selected by `mode`. `f` must accept
/// ScalarTag<Rational>, ScalarTag<double> and ScalarTag<BigFloat>.
template <class F>
auto dispatch(const NumberMode& mode, F&& f) {
  switch (mode.kind) {
    case NumberKind::rational:
      return f(ScalarTag<Rational>{});
    case NumberKind::float64:
      return f(ScalarTag<double>{});
    case NumberKind::decimal:
      return f(ScalarTag<BigFloat>{});
  }
  throw ModeError("unrecognized number mode");
}

inline NumberValue make_value(const NumberMode&, Rational value) {
  return NumberValue(std::move(value));
}
inline NumberValue make_value(const NumberMode&, double value) {
  return NumberValue(value);
}
inline NumberValue make_value(const NumberMode& mode, BigFloat value) {
  return NumberValue(std::move(value), mode.digits);
}

/// Extracts a scalar for computation. Exact mode refuses to coerce inexact
/// inputs; the float modes accept any kind.
template <class T>
T to_scalar(const NumberValue& value) {
  if constexpr (std::is_same_v<T, Rational>) {
    if (value.kind() != NumberKind::rational)
      throw ModeError("exact mode requires exact rational inputs, refusing to coerce");
    return value.rational();
  } else if constexpr (std::is_same_v<T, double>) {
    return value.to_double();
  } else {
    return value.to_bigfloat();
  }
}

/// Widens any supported scalar to BigFloat (comparisons, error columns).
template <class T>
BigFloat widen(const T& value) {
  if constexpr (std::is_same_v<T, BigFloat>) {
    return value;
  } else {
    return BigFloat(value);
  }
}

}  // namespace piesp
