#pragma once

// Polynomials over Z/pZ for small primes p (< 2^31). Internal to irrcert.

#include <cstdint>
#include <random>
#include <vector>

#include "salem/poly.hpp"

namespace salem::modp {

using Coeff = std::uint64_t;

class Field {
 public:
  explicit Field(Coeff p) : p_(p) {}
  Coeff modulus() const { return p_; }
  Coeff add(Coeff a, Coeff b) const { return (a + b) % p_; }
  Coeff sub(Coeff a, Coeff b) const { return (a + p_ - b) % p_; }
  Coeff mul(Coeff a, Coeff b) const { return (a * b) % p_; }
  Coeff neg(Coeff a) const { return a == 0 ? 0 : p_ - a; }
  Coeff inv(Coeff a) const;
  Coeff reduce(const Integer& z) const;

 private:
  Coeff p_;
};

/// Ascending coefficients in [0, p), no trailing zeros.
using Poly = std::vector<Coeff>;

void trim(Poly& a);
inline int degree(const Poly& a) { return static_cast<int>(a.size()) - 1; }

Poly reduce(const Field& f, const IntPoly& p);
Poly add(const Field& f, const Poly& a, const Poly& b);
Poly sub(const Field& f, const Poly& a, const Poly& b);
Poly mul(const Field& f, const Poly& a, const Poly& b);
Poly scale(const Field& f, const Poly& a, Coeff c);
Poly make_monic(const Field& f, const Poly& a);
Poly derivative(const Field& f, const Poly& a);
void divrem(const Field& f, const Poly& a, const Poly& b, Poly& q, Poly& r);
Poly rem(const Field& f, const Poly& a, const Poly& b);
Poly quot(const Field& f, const Poly& a, const Poly& b);
/// Monic gcd.
Poly gcd(const Field& f, Poly a, Poly b);
/// s*a + t*b = gcd (monic); returns gcd.
Poly ext_gcd(const Field& f, const Poly& a, const Poly& b, Poly& s, Poly& t);
/// base^e mod m.
Poly powmod(const Field& f, const Poly& base, const Integer& e, const Poly& m);

/// (degree d, product of all monic irreducible factors of degree d).
struct DegreeBlock {
  int degree;
  Poly product;
};

/// Distinct-degree factorization of a monic square-free polynomial.
std::vector<DegreeBlock> distinct_degree(const Field& f, const Poly& a);

/// Splits a product of irreducibles of common degree d into those factors
/// (Cantor-Zassenhaus, odd p only).
std::vector<Poly> equal_degree(const Field& f, const Poly& a, int d, std::mt19937_64& rng);

/// Complete factorization of a monic square-free polynomial into monic
/// irreducibles, sorted by (degree, coefficients).
std::vector<Poly> factor_squarefree(const Field& f, const Poly& a, std::mt19937_64& rng);

}  // namespace salem::modp
