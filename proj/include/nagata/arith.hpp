#pragma once

#include <gmpxx.h>

#include <string>

namespace nagata {

using Int = mpz_class;
using Rat = mpq_class;

/// floor(sqrt(n)); exact at any magnitude. Requires n >= 0.
Int isqrt(const Int& n);

/// Least s with s^2 >= n. Requires n >= 0.
Int ceil_sqrt(const Int& n);

/// n = s^2 + t with s = floor(sqrt(n)) and 0 <= t <= 2s.
struct SqrtDecomposition {
  Int s;
  Int t;
};

SqrtDecomposition sqrt_decompose(const Int& n);

/// Canonical rational num/den with den > 0. Requires den != 0.
Rat make_rat(const Int& num, const Int& den);

Int floor_rat(const Rat& q);
Int ceil_rat(const Rat& q);

/// "p/q", or just "p" when q == 1.
std::string rat_str(const Rat& q);

}  // namespace nagata
