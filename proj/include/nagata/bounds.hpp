#pragma once

#include "nagata/arith.hpp"

#include <string>

namespace nagata {

/// lambda_n = n*floor(sqrt(n)) / ceil(sqrt(n)*floor(sqrt(n))), exact.
Rat lambda(const Int& n);

/// ceil(m * lambda_n).
Int lambda_bound(const Int& m, const Int& n);

/// m * floor(sqrt(n)).
Int easy_bound_floor(const Int& m, const Int& n);

struct RatioBound {
  Rat value;  // m*n / ceil(sqrt(n))
  Int bound;  // ceil(value)
};

RatioBound easy_bound_ratio(const Int& m, const Int& n);

/// c_n for 1 <= n <= 9: 1, 1, 3/2, 2, 2, 12/5, 21/8, 48/17, 3.
Rat small_n_coefficient(long n);

/// ceil(c_n * m); the exact value of d(m,n) for n <= 9.
/// Throws std::domain_error for n outside 1..9.
Int small_n_exact(const Int& m, long n);

struct DrPair {
  Int d;
  Int r;
};

/// ceil(m*n*d/r). Requires r^2 >= n*d^2 and r <= n; throws
/// std::invalid_argument when the certificate hypotheses fail.
Int general_bound(const Int& m, const Int& n, const DrPair& pair);

struct DrSearch {
  DrPair pair;
  Rat value;  // n*d/r
};

/// Best (d, r) with r^2 >= n*d^2 and r <= n, maximizing n*d/r.
/// Ties broken by smallest d.
DrSearch optimize_dr(const Int& n);

/// d > m*sqrt(n), decided exactly as d^2 > m^2*n.
bool nagata_holds(const Int& d, const Int& m, const Int& n);

/// Validity domain of the closed form for ceil(m*lambda_n) at n = s^2+s.
bool lambda_closed_form_valid(const Int& m, const Int& s);

/// Closed form for ceil(m*lambda_n) at n = s^2+s: ms+m/2 (m even),
/// ms+(m+1)/2 (m odd). Throws std::domain_error outside the proven range.
Int lambda_closed_form(const Int& m, const Int& s);

/// For n = s^2+s, s >= 3: (s even and m < 2s) or (s odd and m < 2s/3).
bool nagata_range_check(const Int& s, const Int& m);

/// Decimal rendering of m*sqrt(n) - 1/(2*sqrt(n-1)), correct to the
/// requested digits (integer-scaled square roots, no floats). Requires n >= 2.
std::string xu_threshold(const Int& m, const Int& n, int digits);

}  // namespace nagata
