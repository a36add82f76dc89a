#include "piesp/pi.hpp"

namespace piesp {
namespace {

// 120 decimals, truncated. The 121st decimal of pi is 0, so the literal sits
// below pi by less than 1e-121 -- comfortably past the 100-digit working
// precision plus the backend's guard digits.
constexpr const char* kPiDigits =
    "3."
    "14159265358979323846264338327950288419716939937510"
    "58209749445923078164062862089986280348253421170679"
    "82148086513282306647";

}  // namespace

int pi_max_digits() { return kMaxDigits; }

const char* pi_digits_literal() { return kPiDigits; }

const BigFloat& pi_reference() {
  static const BigFloat pi{kPiDigits};
  return pi;
}

const BigFloat& pi_squared_over_8() {
  static const BigFloat value = pi_reference() * pi_reference() / 8;
  return value;
}

}  // namespace piesp
