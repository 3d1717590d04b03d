#include "nagata/arith.hpp"

#include <stdexcept>

namespace nagata {

Int isqrt(const Int& n) {
  if (n < 0) throw std::domain_error("isqrt: negative argument");
  Int s;
  mpz_sqrt(s.get_mpz_t(), n.get_mpz_t());
  return s;
}

Int ceil_sqrt(const Int& n) {
  Int s = isqrt(n);
  if (s * s == n) return s;
  return s + 1;
}

SqrtDecomposition sqrt_decompose(const Int& n) {
  if (n < 1) throw std::domain_error("sqrt_decompose: requires n >= 1");
  Int s = isqrt(n);
  return {s, n - s * s};
}

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::domain_error("make_rat: zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

Int floor_rat(const Rat& q) {
  Int f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return f;
}

Int ceil_rat(const Rat& q) {
  Int c;
  mpz_cdiv_q(c.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return c;
}

std::string rat_str(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace nagata
