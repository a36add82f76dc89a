#pragma once

#include "piesp/number.hpp"

namespace piesp {

/// Decimal digits the stored pi constant reliably provides. Precision
/// requests beyond this raise PrecisionError at the call sites that need pi.
int pi_max_digits();

/// The stored constant at full working precision. Reference targets and
/// bounds derive from this value, never from the identities under test.
const BigFloat& pi_reference();

/// pi^2/8, the limit of the plain reciprocal-odd-square sum.
const BigFloat& pi_squared_over_8();

/// The raw decimal literal backing pi_reference(), truncated (not rounded),
/// with digits to spare past the working precision. Exposed so tests can
/// cross-check it against an independent construction.
const char* pi_digits_literal();

}  // namespace piesp
