#pragma once

#include "nagata/arith.hpp"

namespace nagata::dec {

enum class Round { Down, Up };

Int pow10(int e);

/// Directed rounding of 10^digits * sqrt(p/q). Requires p >= 0, q > 0.
Int sqrt_scaled(const Int& p, const Int& q, int digits, Round dir);

/// Directed rounding of 10^digits * pi (Machin's formula, integer arithmetic).
Int pi_scaled(int digits, Round dir);

/// Drop (from - to) digits, rounding half away from zero.
Int rescale_nearest(const Int& v, int from, int to);

/// Drop (from - to) digits with directed rounding.
Int rescale_directed(const Int& v, int from, int to, Round dir);

/// Fixed-point rendering of v / 10^digits, e.g. (-1666, 4) -> "-0.1666".
std::string render_scaled(const Int& v, int digits);

}  // namespace nagata::dec
