#pragma once

#include "nagata/arith.hpp"
#include "nagata/decimal.hpp"

namespace nagata {

/// Averaged unloading state: r_1 = 1, s_1 = n-1; thereafter
/// r_i = (i^2/(n-1+i^2))(r_{i-1} + s_{i-1}/i) and s_i = ((n-1)/i) r_i.
struct AveragedState {
  long i;
  Rat r;
  Rat s;
};

AveragedState averaged_initial(const Int& n);
AveragedState averaged_step(const AveragedState& st, const Int& n);

inline constexpr long kRoeRCap = 5000;

/// r(n) = r_{n-1}(n) by the recurrence. Requires 3 <= n <= cap.
Rat roe_r(const Int& n, long cap = kRoeRCap);

/// r(n) = (n-1) * prod_{i=2}^{n-1} (1 - i/(n-1+i^2)), exact.
Rat roe_r_product(const Int& n);

/// Directed rounding of 10^digits * (sqrt(n-1) - pi/8 + 1/sqrt(n-1)).
Int analytic_upper_scaled(const Int& n, int digits, dec::Round dir);

/// Decimal rendering of the analytic bound, correct to the requested digits.
std::string roe_upper_bound_analytic(const Int& n, int digits);

/// lambda_n - r(n); throws std::logic_error if the difference is not > 0.
Rat compare_lambda_r(const Int& n);

}  // namespace nagata
