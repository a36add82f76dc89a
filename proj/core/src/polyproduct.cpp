#include "piesp/polyproduct.hpp"

#include "piesp/pi.hpp"

namespace piesp {

BigFloat cos_reference(const BigFloat& x, int digits) {
  validate_digits(digits);
  BigFloat y = abs(x);
  if (y > 10) throw Error("cos reference supports |x| <= 10");

  y = fmod(y, BigFloat(2));                      // cos(pi x) has period 2
  if (y > 1) y = BigFloat(2) - y;                // cos is even around x = 1
  bool negate = false;
  if (2 * y > 1) {                               // reflect into [0, 1/2]
    y = BigFloat(1) - y;
    negate = true;
  }

  // Taylor series at the reduced argument t = pi*y <= pi/2, stopped a safe
  // ten digits past the request. Terms decay superlinearly there.
  const BigFloat t = pi_reference() * y;
  const BigFloat tt = t * t;
  const BigFloat eps = pow(BigFloat(10), -(digits + 10));
  BigFloat piece(1);
  BigFloat sum(1);
  for (int j = 1;; ++j) {
    piece *= -tt / BigFloat((2 * j - 1) * (2 * j));
    sum += piece;
    if (abs(piece) < eps) break;
  }
  return negate ? BigFloat(-sum) : sum;
}

}  // namespace piesp
