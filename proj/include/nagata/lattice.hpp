#pragma once

#include "nagata/arith.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace nagata::lattice {

/// Divisor class sum(a_i * e_i) on the blow-up of the plane at n points;
/// coefficients (a_0; a_1, ..., a_n) on the basis e_0, e_1, ..., e_n.
struct DivisorClass {
  std::vector<long long> coeff;
  long long n() const { return static_cast<long long>(coeff.size()) - 1; }
};

/// Intersection pairing: a_0*b_0 - sum_{i>=1} a_i*b_i.
long long intersect(const DivisorClass& A, const DivisorClass& B);

/// Basis class e_i, 0 <= i <= n.
DivisorClass basis_e(long long i, long long n);

/// C = d*e_0 - (e_1 + ... + e_r): proper transform of a degree-d curve
/// through the first r points.
DivisorClass class_C(long long d, long long r, long long n);

/// D = r*d*e_0 - d^2*(e_1 + ... + e_n).
DivisorClass class_D(long long d, long long r, long long n);

/// Explicit decomposition of D as r*C plus nonnegative multiples of
/// e_j - e_{j+1} and e_n.
struct DecompositionCertificate {
  long long n, d, r;
  long long c_weight;                // multiple of C (= r)
  std::vector<long long> telescope;  // weight on e_j - e_{j+1}, j = 1..len
  std::vector<long long> tail;       // weight on e_{r+k} - e_{r+k+1}, k = 1..len
  long long en_weight;               // weight on e_n

  /// Coefficientwise: does the weighted sum equal D, with all weights >= 0?
  bool verify() const;
  nlohmann::json to_json() const;
};

/// Requires d^2 <= r, r <= n, r^2 - r*d^2 >= (n-r)*d^2; throws
/// std::invalid_argument otherwise. The returned certificate has been
/// re-verified by summation.
DecompositionCertificate effective_decomposition(long long n, long long d, long long r);

struct PairingCheck {
  std::string generator;
  long long value;
  bool ok;
};

/// Nef certificate for D: pairing checks D.C = 0, D.(e_i - e_{i+1}) = 0,
/// D.e_n >= 0, plus the effective decomposition; implies d(m,n) >= ceil(mnd/r).
struct NefCertificate {
  long long n, d, r;
  DecompositionCertificate decomposition;
  std::vector<PairingCheck> pairings;
  bool ok;

  Rat bound_value(const Int& m) const;  // m*n*d/r
  Int bound(const Int& m) const;        // ceiling
  nlohmann::json to_json() const;
};

NefCertificate nef_certificate(long long n, long long d, long long r);

/// Nef-pairing certificates behind the two easy bounds: variant 'a' pairs
/// against an r-ic through r^2 points (r = floor(sqrt(n))), variant 'b'
/// against an r-ic through all n points (r = ceil(sqrt(n))).
struct EasyCertificate {
  char variant;
  long long n;
  long long r;
  long long points;         // points the curve passes through
  std::string inequality;   // the pairing inequality, rendered
  Rat bound_value(const Int& m) const;
  Int bound(const Int& m) const;
  nlohmann::json to_json() const;
};

EasyCertificate easy_bound_certificate(long long n, char variant);

}  // namespace nagata::lattice
