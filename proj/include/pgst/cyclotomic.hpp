#pragma once
// Exact real cyclotomic arithmetic: numbers built from 2cos(r*pi/m), stored
// as reduced power-basis vectors in the 2m-th cyclotomic field. This is the
// zero-error substrate for every eigenvalue-relation test in the engine.
#include <gmpxx.h>

#include <optional>
#include <utility>
#include <vector>

namespace pgst {

// Element of Q(zeta_2m) known to be real, zeta_2m = exp(i*pi/m). Canonical
// form is the coordinate vector in the power basis 1, z, ..., z^(phi(2m)-1)
// fully reduced modulo the 2m-th cyclotomic polynomial; equality of numbers
// is equality of conductor-aligned coordinate vectors.
class CycloReal {
 public:
  CycloReal();  // zero at conductor 1

  // The rational q embedded at conductor 1.
  static CycloReal rational(const mpq_class& q);
  // The exact value 2cos(r*pi/m); requires 1 <= r <= m-1.
  static CycloReal make_cos(long r, long m);
  // Canonicalized sum of coeff * z^exp at conductor m (z = exp(i*pi/m));
  // exponents may be any integers. Callers are responsible for only
  // assembling combinations that are real numbers.
  static CycloReal from_terms(long m,
                              const std::vector<std::pair<long, mpq_class>>& terms);

  long conductor() const { return m_; }
  const std::vector<mpq_class>& coeffs() const { return c_; }

  // Same number re-expressed at conductor m2; requires m | m2.
  CycloReal lift(long m2) const;
  // Image under z -> z^{-1}; equals *this exactly when the value is real.
  CycloReal conjugate() const;

  bool is_zero() const;
  // The rational value when the reduced vector is supported on the basis
  // element 1 only; nullopt otherwise.
  std::optional<mpq_class> is_rational() const;
  double float_value() const;

  bool operator==(const CycloReal& other) const;
  bool operator!=(const CycloReal& other) const { return !(*this == other); }

  friend CycloReal add(const CycloReal& x, const CycloReal& y);
  friend CycloReal neg(const CycloReal& x);
  friend CycloReal sub(const CycloReal& x, const CycloReal& y);
  friend CycloReal scale(const CycloReal& x, const mpq_class& q);

 private:
  CycloReal(long m, std::vector<mpq_class> coeffs);

  long m_;                    // conductor; the element lives in Q(zeta_{2m})
  std::vector<mpq_class> c_;  // length phi(2m), reduced mod Phi_{2m}
};

CycloReal add(const CycloReal& x, const CycloReal& y);
CycloReal neg(const CycloReal& x);
CycloReal sub(const CycloReal& x, const CycloReal& y);
CycloReal scale(const CycloReal& x, const mpq_class& q);

enum class IdentityKind { Prime, TwicePrime };

// Exactly checks the alternating cosine identities behind the eigenvalue
// relation proofs: 1 + sum_{j=1}^{(p-1)/2} (-1)^j 2cos(j*pi/p) = 0 (Prime)
// and 1 + sum_{j=1}^{(p-1)/2} (-1)^j 2cos(2j*pi/(2p)) = 0 (TwicePrime).
// Requires p an odd prime; false signals an arithmetic bug.
bool verify_alternating_identity(IdentityKind kind, long p);

// The n-th cyclotomic polynomial (dense, index = degree, monic), cached.
const std::vector<mpz_class>& cyclotomic_polynomial(long n);
long euler_phi(long n);
bool is_prime(long n);

}  // namespace pgst
