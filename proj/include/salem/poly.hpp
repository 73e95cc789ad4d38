#pragma once

// Dense univariate polynomials over the integers, with the exact algebra the
// rest of the library is built on: ring operations, division by monic
// divisors, evaluation at rationals, gcd over Q and resultants.

#include <gmpxx.h>

#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace salem {

using Integer = mpz_class;
using Rational = mpq_class;

/// Reduced fraction num/den with den > 0. Throws on den == 0.
Rational make_rational(const Integer& num, const Integer& den = 1);

class IntPoly {
 public:
  IntPoly() = default;
  /// Coefficients ascending by exponent; trailing zeros are dropped.
  explicit IntPoly(std::vector<Integer> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(const Integer& c);
  static IntPoly monomial(const Integer& c, std::size_t k);
  /// x - c
  static IntPoly linear_root(const Integer& c);

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_monic() const { return !is_zero() && coeffs_.back() == 1; }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }

  /// Leading coefficient; zero polynomial has none.
  const Integer& lead() const;
  /// Coefficient of x^k, zero beyond the degree.
  Integer coeff(std::size_t k) const;
  std::span<const Integer> coeffs() const noexcept { return coeffs_; }

  IntPoly derivative() const;
  /// Gcd of the coefficients, non-negative.
  Integer content() const;
  /// p / content(p), sign of the leading coefficient preserved.
  IntPoly primitive_part() const;
  /// x^deg * p(1/x)
  IntPoly reversed() const;

  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  IntPoly& operator*=(const IntPoly& o);
  IntPoly& operator*=(const Integer& c);
  /// Exact division of every coefficient; throws if some is not divisible.
  IntPoly& divide_exact(const Integer& c);

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(IntPoly a, const Integer& c) { return a *= c; }
  friend IntPoly operator*(const Integer& c, IntPoly a) { return a *= c; }
  IntPoly operator-() const;

  friend bool operator==(const IntPoly& a, const IntPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }

  /// Human-readable form, highest power first, e.g. "x^3 - 4*x - 1".
  std::string to_string() const;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const IntPoly& p);

IntPoly pow(const IntPoly& p, unsigned e);
/// p(q(x))
IntPoly compose(const IntPoly& p, const IntPoly& q);

struct DivRem {
  IntPoly quotient;
  IntPoly remainder;
};

/// p = divisor * quotient + remainder with deg(remainder) < deg(divisor).
/// The divisor must be monic; the zero or a non-monic divisor is rejected.
DivRem divrem(const IntPoly& p, const IntPoly& divisor);

/// lead(b)^(deg a - deg b + 1) * a mod b, computed in Z[x].
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);

/// Quotient p / d when d divides p in Z[x]; nullopt otherwise.
std::optional<IntPoly> exact_quotient(const IntPoly& p, const IntPoly& d);

Integer evaluate(const IntPoly& p, const Integer& x);
Rational evaluate(const IntPoly& p, const Rational& x);
/// Sign of p(x) in {-1, 0, 1}, computed without forming the rational value.
int sign_at(const IntPoly& p, const Rational& x);

/// Primitive generator of the gcd ideal over Q, positive leading coefficient.
/// Returns the constant 1 exactly when p and q are coprime.
IntPoly gcd_q(const IntPoly& p, const IntPoly& q);

/// lead(p)^deg(q) * prod_{p(r)=0} q(r), by the subresultant PRS.
/// So resultant(S, x^n - 1) is the norm of (alpha^n - 1) for monic S.
Integer resultant(const IntPoly& p, const IntPoly& q);

bool is_separable(const IntPoly& p);
/// p / gcd_q(p, p'), primitive with the sign of p's leading coefficient.
IntPoly squarefree_part(const IntPoly& p);

}  // namespace salem
