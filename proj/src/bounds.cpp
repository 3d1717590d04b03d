#include "nagata/bounds.hpp"

#include "nagata/decimal.hpp"

#include <stdexcept>

namespace nagata {

Rat lambda(const Int& n) {
  if (n < 1) throw std::domain_error("lambda: requires n >= 1");
  Int s = isqrt(n);
  // ceil(s*sqrt(n)) = ceil(sqrt(s^2*n)), computed exactly
  Int denom = ceil_sqrt(s * s * n);
  return make_rat(n * s, denom);
}

Int lambda_bound(const Int& m, const Int& n) {
  if (m < 1) throw std::domain_error("lambda_bound: requires m >= 1");
  return ceil_rat(Rat(m) * lambda(n));
}

Int easy_bound_floor(const Int& m, const Int& n) {
  return m * isqrt(n);
}

RatioBound easy_bound_ratio(const Int& m, const Int& n) {
  Rat v = make_rat(m * n, ceil_sqrt(n));
  return {v, ceil_rat(v)};
}

Rat small_n_coefficient(long n) {
  switch (n) {
    case 1: return Rat(1);
    case 2: return Rat(1);
    case 3: return make_rat(3, 2);
    case 4: return Rat(2);
    case 5: return Rat(2);
    case 6: return make_rat(12, 5);
    case 7: return make_rat(21, 8);
    case 8: return make_rat(48, 17);
    case 9: return Rat(3);
    default:
      throw std::domain_error("small_n_coefficient: exact value known only for 1 <= n <= 9");
  }
}

Int small_n_exact(const Int& m, long n) {
  if (m < 1) throw std::domain_error("small_n_exact: requires m >= 1");
  return ceil_rat(Rat(m) * small_n_coefficient(n));
}

Int general_bound(const Int& m, const Int& n, const DrPair& pair) {
  if (pair.d < 1 || pair.r < 1)
    throw std::invalid_argument("general_bound: d and r must be positive");
  if (pair.r * pair.r < n * pair.d * pair.d)
    throw std::invalid_argument("general_bound: certificate invalid, r^2 < n*d^2");
  if (pair.r > n)
    throw std::invalid_argument("general_bound: certificate invalid, r > n");
  return ceil_rat(make_rat(m * n * pair.d, pair.r));
}

DrSearch optimize_dr(const Int& n) {
  if (n < 1) throw std::domain_error("optimize_dr: requires n >= 1");
  DrSearch best{{0, 0}, Rat(0)};
  Int dmax = isqrt(n);
  for (Int d = 1; d <= dmax; ++d) {
    Int r = ceil_sqrt(n * d * d);  // best feasible r for this d
    Rat v = make_rat(n * d, r);
    if (best.pair.d == 0 || v > best.value) best = {{d, r}, v};
  }
  return best;
}

bool nagata_holds(const Int& d, const Int& m, const Int& n) {
  return d * d > m * m * n;
}

bool lambda_closed_form_valid(const Int& m, const Int& s) {
  if (s < 1 || m < 1) return false;
  bool m_even = (m % 2 == 0);
  if (s % 2 == 0)
    return m_even ? m < 4 * s + 2 : m < 2 * s;
  // s odd: thresholds (4s^2+2s+2)/(3s+1) resp. (2s^2+s+1)/(3s+1)
  if (m_even) return m * (3 * s + 1) < 4 * s * s + 2 * s + 2;
  return m * (3 * s + 1) < 2 * s * s + s + 1;
}

Int lambda_closed_form(const Int& m, const Int& s) {
  if (!lambda_closed_form_valid(m, s))
    throw std::domain_error("lambda_closed_form: closed form not proven for this (m, s)");
  if (m % 2 == 0) return m * s + m / 2;
  return m * s + (m + 1) / 2;
}

bool nagata_range_check(const Int& s, const Int& m) {
  if (s < 3) throw std::domain_error("nagata_range_check: requires s >= 3");
  if (s % 2 == 0) return m < 2 * s;
  return 3 * m < 2 * s;
}

std::string xu_threshold(const Int& m, const Int& n, int digits) {
  if (n < 2) throw std::domain_error("xu_threshold: requires n >= 2");
  for (int g = digits + 8;; g *= 2) {
    // m*sqrt(n) = sqrt(m^2*n); 1/(2*sqrt(n-1)) = sqrt(1/(4*(n-1)))
    Int a_lo = dec::sqrt_scaled(m * m * n, 1, g, dec::Round::Down);
    Int a_hi = dec::sqrt_scaled(m * m * n, 1, g, dec::Round::Up);
    Int b_lo = dec::sqrt_scaled(1, 4 * (n - 1), g, dec::Round::Down);
    Int b_hi = dec::sqrt_scaled(1, 4 * (n - 1), g, dec::Round::Up);
    Int lo = dec::rescale_nearest(a_lo - b_hi, g, digits);
    Int hi = dec::rescale_nearest(a_hi - b_lo, g, digits);
    if (lo == hi) return dec::render_scaled(lo, digits);
  }
}

}  // namespace nagata
