#include "piesp/number.hpp"

#include <charconv>
#include <cstdlib>
#include <ios>

namespace piesp {
namespace {

BigInt pow10(long exponent) {
  BigInt out(1);
  for (long i = 0; i < exponent; ++i) out *= 10;
  return out;
}

Rational parse_decimal_literal(const std::string& text) {
  // [sign] digits [. digits] [eE [sign] digits], converted exactly.
  std::size_t epos = text.find_first_of("eE");
  const std::string mantissa = text.substr(0, epos);
  long exponent = 0;
  if (epos != std::string::npos) exponent = std::stol(text.substr(epos + 1));

  std::size_t i = 0;
  bool negative = false;
  if (i < mantissa.size() && (mantissa[i] == '+' || mantissa[i] == '-')) {
    negative = mantissa[i] == '-';
    ++i;
  }
  std::string digits;
  long frac_len = 0;
  bool seen_dot = false;
  for (; i < mantissa.size(); ++i) {
    const char c = mantissa[i];
    if (c == '.') {
      if (seen_dot) throw Error("malformed number '" + text + "'");
      seen_dot = true;
      continue;
    }
    if (c < '0' || c > '9') throw Error("malformed number '" + text + "'");
    digits.push_back(c);
    if (seen_dot) ++frac_len;
  }
  if (digits.empty()) throw Error("malformed number '" + text + "'");

  BigInt numerator(digits);
  if (negative) numerator = -numerator;
  const long net = exponent - frac_len;
  if (net >= 0) return Rational(numerator * pow10(net));
  return Rational(numerator, pow10(-net));
}

}  // namespace

const char* kind_name(NumberKind kind) {
  switch (kind) {
    case NumberKind::rational:
      return "rational";
    case NumberKind::float64:
      return "f64";
    case NumberKind::decimal:
      return "decimal";
  }
  return "unknown";
}

NumberKind kind_from_name(const std::string& name) {
  if (name == "rational") return NumberKind::rational;
  if (name == "f64") return NumberKind::float64;
  if (name == "decimal") return NumberKind::decimal;
  throw ModeError("unknown mode '" + name + "' (expected rational, f64 or decimal)");
}

NumberMode NumberMode::decimal(int digits) {
  return {NumberKind::decimal, validate_digits(digits)};
}

int validate_digits(int digits) {
  if (digits < NumberMode::kMinDigits || digits > kMaxDigits)
    throw PrecisionError("decimal precision must lie in [" +
                         std::to_string(NumberMode::kMinDigits) + ", " +
                         std::to_string(kMaxDigits) + "] digits, got " +
                         std::to_string(digits));
  return digits;
}

std::string format_rational(const Rational& value) {
  const BigInt num = numerator(value);
  const BigInt den = denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string format_double(double value) {
  char buffer[32];
  const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, result.ptr);
}

std::string format_bigfloat(const BigFloat& value, int digits) {
  return value.str(validate_digits(digits), std::ios_base::fmtflags(0));
}

Rational parse_rational(const std::string& text) {
  std::string body = text;
  if (!body.empty() && body.front() == '+') body.erase(body.begin());
  if (body.empty()) throw Error("empty number literal");
  try {
    if (const std::size_t slash = body.find('/'); slash != std::string::npos) {
      const BigInt num(body.substr(0, slash));
      const BigInt den(body.substr(slash + 1));
      if (den == 0) throw Error("rational denominator must be nonzero");
      return Rational(num, den);
    }
    if (body.find_first_of(".eE") != std::string::npos)
      return parse_decimal_literal(body);
    return Rational(BigInt(body));
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    throw Error("cannot parse '" + text + "' as a rational");
  }
}

double NumberValue::to_double() const {
  return std::visit(
      [](const auto& v) -> double {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, double>)
          return v;
        else
          return v.template convert_to<double>();
      },
      value_);
}

BigFloat NumberValue::to_bigfloat() const {
  return std::visit(
      [](const auto& v) -> BigFloat {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, BigFloat>)
          return v;
        else
          return BigFloat(v);
      },
      value_);
}

std::string NumberValue::str() const {
  switch (kind()) {
    case NumberKind::rational:
      return format_rational(std::get<Rational>(value_));
    case NumberKind::decimal:
      return format_bigfloat(std::get<BigFloat>(value_), digits_);
    default:
      return format_double(std::get<double>(value_));
  }
}

NumberValue parse_number(const std::string& text, const NumberMode& mode) {
  switch (mode.kind) {
    case NumberKind::rational:
      return NumberValue(parse_rational(text));
    case NumberKind::float64: {
      double value = 0.0;
      const char* end = text.data() + text.size();
      const auto result = std::from_chars(text.data(), end, value);
      if (result.ec != std::errc() || result.ptr != end)
        throw Error("cannot parse '" + text + "' as a double");
      return NumberValue(value);
    }
    case NumberKind::decimal:
      try {
        return NumberValue(BigFloat(text), mode.digits);
      } catch (const std::exception&) {
        throw Error("cannot parse '" + text + "' as a decimal");
      }
  }
  throw ModeError("unrecognized number mode");
}

}  // namespace piesp
