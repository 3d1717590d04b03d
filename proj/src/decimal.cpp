#include "nagata/decimal.hpp"

#include <stdexcept>

namespace nagata::dec {

Int pow10(int e) {
  Int p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(e));
  return p;
}

Int sqrt_scaled(const Int& p, const Int& q, int digits, Round dir) {
  if (p < 0 || q <= 0) throw std::domain_error("sqrt_scaled: requires p >= 0, q > 0");
  Int scale = pow10(digits);
  // floor(S*sqrt(p/q)) = floor(isqrt(S^2*p*q)/q): no integer multiple of q
  // can lie strictly between isqrt(S^2*p*q) and sqrt(S^2*p*q).
  Int a = isqrt(scale * scale * p * q);
  Int fl = a / q;
  if (dir == Round::Down) return fl;
  if (fl * fl * q == scale * scale * p) return fl;  // exact
  return fl + 1;
}

namespace {

// Truncated integer series for scale/x * atan-like sum; each term floored,
// so the result is in (true - terms, true].
Int atan_inv_scaled(unsigned long x, const Int& scale, long& terms) {
  Int sum = 0;
  Int power = scale / x;
  Int x2 = Int(x) * Int(x);
  long k = 0;
  terms = 0;
  while (power > 0) {
    Int term = power / (2 * k + 1);
    if (k % 2 == 0)
      sum += term;
    else
      sum -= term;
    power /= x2;
    ++k;
    ++terms;
  }
  return sum;
}

}  // namespace

Int pi_scaled(int digits, Round dir) {
  const int guard = 10;
  Int scale = pow10(digits + guard);
  long t5 = 0, t239 = 0;
  Int a5 = atan_inv_scaled(5, scale, t5);
  Int a239 = atan_inv_scaled(239, scale, t239);
  Int pi = 16 * a5 - 4 * a239;
  // crude but safe error bound on the truncated/floored series
  Int err = 16 * (t5 + 2) + 4 * (t239 + 2);
  Int g = pow10(guard);
  if (dir == Round::Down) {
    Int lo = pi - err;
    Int out;
    mpz_fdiv_q(out.get_mpz_t(), lo.get_mpz_t(), g.get_mpz_t());
    return out;
  }
  Int hi = pi + err;
  Int out;
  mpz_cdiv_q(out.get_mpz_t(), hi.get_mpz_t(), g.get_mpz_t());
  return out;
}

Int rescale_nearest(const Int& v, int from, int to) {
  if (from < to) throw std::domain_error("rescale_nearest: from < to");
  if (from == to) return v;
  Int h = pow10(from - to);
  Int half = h / 2;
  Int out;
  if (v >= 0) {
    Int t = v + half;
    mpz_fdiv_q(out.get_mpz_t(), t.get_mpz_t(), h.get_mpz_t());
  } else {
    Int t = -v + half;
    mpz_fdiv_q(out.get_mpz_t(), t.get_mpz_t(), h.get_mpz_t());
    out = -out;
  }
  return out;
}

Int rescale_directed(const Int& v, int from, int to, Round dir) {
  if (from < to) throw std::domain_error("rescale_directed: from < to");
  if (from == to) return v;
  Int h = pow10(from - to);
  Int out;
  if (dir == Round::Down)
    mpz_fdiv_q(out.get_mpz_t(), v.get_mpz_t(), h.get_mpz_t());
  else
    mpz_cdiv_q(out.get_mpz_t(), v.get_mpz_t(), h.get_mpz_t());
  return out;
}

std::string render_scaled(const Int& v, int digits) {
  Int a = abs(v);
  Int scale = pow10(digits);
  Int ip = a / scale;
  Int fp = a % scale;
  std::string s = (v < 0 ? "-" : "") + ip.get_str();
  if (digits > 0) {
    std::string frac = fp.get_str();
    s += "." + std::string(digits - frac.size(), '0') + frac;
  }
  return s;
}

}  // namespace nagata::dec
