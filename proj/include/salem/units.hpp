#pragma once

// Norms of alpha^n -+ 1 and the unit characterizations for small n.
//
// Norm(alpha^n - 1) = resultant(S, x^n - 1) and Norm(alpha^n + 1) =
// resultant(S, x^n + 1) for monic S (see `resultant` for the convention). For
// a Salem number the first is always negative and the second positive, so
// alpha^n - 1 is a unit exactly when its norm is -1.

#include <set>
#include <vector>

#include "salem/poly.hpp"
#include "salem/trace.hpp"

namespace salem {

Integer norm_pow_minus(const IntPoly& monic, unsigned n);
Integer norm_pow_plus(const IntPoly& monic, unsigned n);
inline Integer norm_pow_minus(const SalemPolynomial& s, unsigned n) { return norm_pow_minus(s.poly, n); }
inline Integer norm_pow_plus(const SalemPolynomial& s, unsigned n) { return norm_pow_plus(s.poly, n); }

bool is_exceptional_power(const IntPoly& monic, unsigned n);
inline bool is_exceptional_power(const SalemPolynomial& s, unsigned n) { return is_exceptional_power(s.poly, n); }

struct UnitCertificate {
  unsigned n = 0;
  Integer norm_minus;
  Integer norm_plus;
  bool is_unit_minus = false;  // norm_minus == -1
  bool is_unit_plus = false;   // norm_plus == 1
};

UnitCertificate certify_power(const IntPoly& monic, unsigned n);

struct UnitSpectrum {
  unsigned max_n = 0;
  std::set<unsigned> members;
  std::vector<UnitCertificate> certificates;  // one per n = 1..max_n
};

UnitSpectrum unit_spectrum(const IntPoly& monic, unsigned max_n);
inline UnitSpectrum unit_spectrum(const SalemPolynomial& s, unsigned max_n) { return unit_spectrum(s.poly, max_n); }

/// 3 * 7^(3 deg): bound on the number of exceptional units in a field of
/// the given degree.
Integer evertse_bound(unsigned degree);

/// Coefficient identities for a monic reciprocal S of degree 2t, read as
/// S = (1 + x^2t) + a_1 (x + x^(2t-1)) + ... + a_t x^t. n in {1, 2, 3, 4}.
bool prop1_check(const IntPoly& salem, unsigned n);

/// Evaluation identities for a monic trace polynomial T. n in {1, 2, 3, 4, 6}.
bool prop23_check(const IntPoly& trace, unsigned n);

/// Q with T = C_n (x - 2) Q - 1 (n in {1, 3}) or T = C_n (x^2 - 4) Q - 1
/// (n in {2, 4, 6}, t odd). Throws NoStructuralForm otherwise.
IntPoly structural_form(const IntPoly& trace, unsigned n);

}  // namespace salem
