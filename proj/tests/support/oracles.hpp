#pragma once

// Reference computations for tests. Each one uses a different method from
// the library code it checks.

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "salem/poly.hpp"

namespace oracle {

using salem::Integer;
using salem::IntPoly;
using salem::Rational;

/// Determinant of the Sylvester matrix by fraction-free (Bareiss) elimination.
Integer sylvester_resultant(const IntPoly& p, const IntPoly& q);

/// Roots as eigenvalues of the companion matrix (double precision).
std::vector<std::complex<double>> numeric_roots(const IntPoly& p);

/// Real roots (|imag| below tol) strictly inside (lo, hi).
std::size_t numeric_real_count(const IntPoly& p, double lo, double hi, double tol = 1e-7);

/// prod over the roots r of p of q(r), in complex double arithmetic.
std::complex<double> numeric_root_product(const IntPoly& p, const IntPoly& q);

/// Schoolbook evaluation by repeated powers (no Horner).
Rational power_sum_eval(const IntPoly& p, const Rational& x);

/// Random polynomial with coefficients in [-bound, bound] and exact degree.
IntPoly random_poly(std::mt19937_64& rng, int degree, long bound, bool monic = false);

/// Random monic reciprocal polynomial of degree 2t.
IntPoly random_reciprocal(std::mt19937_64& rng, int t, long bound);

/// Palindrome check written out against the definition x^deg p(1/x).
bool palindromic(const IntPoly& p);

}  // namespace oracle
