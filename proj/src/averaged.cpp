#include "nagata/averaged.hpp"

#include "nagata/bounds.hpp"

#include <stdexcept>

namespace nagata {

AveragedState averaged_initial(const Int& n) {
  if (n < 3) throw std::domain_error("averaged_initial: requires n >= 3");
  return {1, Rat(1), Rat(n - 1)};
}

AveragedState averaged_step(const AveragedState& st, const Int& n) {
  long i = st.i + 1;
  if (i < 2 || Int(i) > n - 1)
    throw std::domain_error("averaged_step: index out of range");
  Rat coeff = make_rat(Int(i) * i, n - 1 + Int(i) * i);
  Rat r = coeff * (st.r + st.s / i);
  Rat s = make_rat(n - 1, i) * r;
  return {i, r, s};
}

Rat roe_r(const Int& n, long cap) {
  if (n < 3) throw std::domain_error("roe_r: requires n >= 3");
  if (n > cap)
    throw std::domain_error("roe_r: n exceeds cap; pass a larger cap explicitly");
  AveragedState st = averaged_initial(n);
  while (Int(st.i) < n - 1) st = averaged_step(st, n);
  return st.r;
}

Rat roe_r_product(const Int& n) {
  if (n < 3) throw std::domain_error("roe_r_product: requires n >= 3");
  Rat prod(n - 1);
  for (Int i = 2; i <= n - 1; ++i)
    prod *= make_rat(n - 1 + i * i - i, n - 1 + i * i);
  return prod;
}

Int analytic_upper_scaled(const Int& n, int digits, dec::Round dir) {
  if (n < 3) throw std::domain_error("analytic_upper_scaled: requires n >= 3");
  const int g = digits + 8;
  dec::Round up = dec::Round::Up, down = dec::Round::Down;
  Int sq, inv, pi8;
  if (dir == up) {
    sq = dec::sqrt_scaled(n - 1, 1, g, up);
    inv = dec::sqrt_scaled(1, n - 1, g, up);
    pi8 = dec::pi_scaled(g, down) / 8;  // subtracted: round it down
    return dec::rescale_directed(sq + inv - pi8, g, digits, up);
  }
  sq = dec::sqrt_scaled(n - 1, 1, g, down);
  inv = dec::sqrt_scaled(1, n - 1, g, down);
  Int pi_up = dec::pi_scaled(g, up);
  pi8 = (pi_up + 7) / 8;
  return dec::rescale_directed(sq + inv - pi8, g, digits, down);
}

std::string roe_upper_bound_analytic(const Int& n, int digits) {
  for (int g = digits + 6;; g *= 2) {
    Int lo = dec::rescale_nearest(analytic_upper_scaled(n, g, dec::Round::Down), g, digits);
    Int hi = dec::rescale_nearest(analytic_upper_scaled(n, g, dec::Round::Up), g, digits);
    if (lo == hi) return dec::render_scaled(lo, digits);
  }
}

Rat compare_lambda_r(const Int& n) {
  Rat diff = lambda(n) - roe_r(n, n.fits_slong_p() ? n.get_si() : kRoeRCap);
  if (diff <= 0)
    throw std::logic_error("compare_lambda_r: lambda_n - r(n) is not positive");
  return diff;
}

}  // namespace nagata
