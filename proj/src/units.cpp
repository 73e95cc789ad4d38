#include "salem/units.hpp"

#include <stdexcept>

#include "salem/errors.hpp"
#include "salem/forge.hpp"

namespace salem {

namespace {

IntPoly x_pow_plus(unsigned n, long c) {
  IntPoly q = IntPoly::monomial(1, n);
  q += IntPoly::constant(c);
  return q;
}

void require_monic(const IntPoly& p) {
  if (!p.is_monic()) throw std::invalid_argument("norm computation needs a monic polynomial");
}

void require_exponent(unsigned n) {
  if (n == 0) throw std::invalid_argument("exponent must be at least 1");
}

// Floor division for the (possibly negative) upper limits of the sums.
long fdiv(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

Integer norm_pow_minus(const IntPoly& monic, unsigned n) {
  require_monic(monic);
  require_exponent(n);
  return resultant(monic, x_pow_plus(n, -1));
}

Integer norm_pow_plus(const IntPoly& monic, unsigned n) {
  require_monic(monic);
  require_exponent(n);
  return resultant(monic, x_pow_plus(n, 1));
}

bool is_exceptional_power(const IntPoly& monic, unsigned n) { return norm_pow_minus(monic, n) == -1; }

UnitCertificate certify_power(const IntPoly& monic, unsigned n) {
  UnitCertificate c;
  c.n = n;
  c.norm_minus = norm_pow_minus(monic, n);
  c.norm_plus = norm_pow_plus(monic, n);
  c.is_unit_minus = c.norm_minus == -1;
  c.is_unit_plus = c.norm_plus == 1;
  return c;
}

UnitSpectrum unit_spectrum(const IntPoly& monic, unsigned max_n) {
  if (max_n == 0) throw std::invalid_argument("unit_spectrum needs max_n >= 1");
  UnitSpectrum s;
  s.max_n = max_n;
  for (unsigned n = 1; n <= max_n; ++n) {
    s.certificates.push_back(certify_power(monic, n));
    if (s.certificates.back().is_unit_minus) s.members.insert(n);
  }
  return s;
}

Integer evertse_bound(unsigned degree) {
  if (degree == 0) throw std::invalid_argument("evertse_bound needs degree >= 1");
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 7, 3UL * degree);
  return 3 * r;
}

bool prop1_check(const IntPoly& salem, unsigned n) {
  if (n < 1 || n > 4) throw std::invalid_argument("prop1_check supports n in {1,2,3,4}");
  if (!salem.is_monic() || salem.degree() < 2 || salem.degree() % 2 != 0 || !is_reciprocal(salem))
    throw std::invalid_argument("prop1_check needs a monic reciprocal polynomial of even degree");
  const long t = salem.degree() / 2;
  auto a = [&](long k) { return k >= 1 && k <= t ? salem.coeff(static_cast<std::size_t>(k)) : Integer(0); };
  // sum of a(step*k + offset) for k = from..to (empty when to < from)
  auto sum = [&](long step, long offset, long from, long to) {
    Integer s = 0;
    for (long k = from; k <= to; ++k) s += a(step * k + offset);
    return s;
  };
  // sum of a(k), 1 <= k <= t-2, k not congruent to r mod 3
  auto sum_excluding = [&](long r) {
    Integer s = 0;
    for (long k = 1; k <= t - 2; ++k)
      if (k % 3 != r) s += a(k);
    return s;
  };

  switch (n) {
    case 1:
      return a(t) == -3 - 2 * sum(1, 0, 1, t - 1);
    case 2:
      return t % 2 == 1 && a(t) == -1 - 2 * sum(2, 1, 0, fdiv(t - 3, 2)) &&
             a(t - 1) == -1 - sum(2, 0, 1, fdiv(t - 3, 2));
    case 4:
      if (t % 4 == 1)
        return a(t) == -1 - 2 * sum(4, 1, 0, fdiv(t - 5, 4)) &&
               a(t - 1) == -1 - sum(2, 0, 1, fdiv(t - 3, 2)) && a(t - 2) == -sum(4, 3, 0, fdiv(t - 9, 4));
      if (t % 4 == 3)
        return a(t) == -1 - 2 * sum(4, 3, 0, fdiv(t - 7, 4)) &&
               a(t - 1) == -1 - sum(2, 0, 1, fdiv(t - 3, 2)) && a(t - 2) == -sum(4, 1, 0, fdiv(t - 7, 4));
      return false;
    case 3:
      if (t % 3 == 0) return a(t) == -3 - 2 * sum(3, 0, 1, fdiv(t - 3, 3)) && a(t - 1) == -sum_excluding(0);
      if (t % 3 == 1)
        return a(t) == -1 - 2 * sum(3, 1, 0, fdiv(t - 4, 3)) && a(t - 1) == -1 - sum_excluding(1);
      return a(t) == -1 - 2 * sum(3, 2, 0, fdiv(t - 5, 3)) && a(t - 1) == -1 - sum_excluding(2);
    default:
      break;
  }
  return false;
}

bool prop23_check(const IntPoly& trace, unsigned n) {
  if (n != 1 && n != 2 && n != 3 && n != 4 && n != 6)
    throw std::invalid_argument("prop23_check supports n in {1,2,3,4,6}");
  if (!trace.is_monic() || trace.degree() < 1)
    throw std::invalid_argument("prop23_check needs a monic polynomial of degree >= 1");
  const bool t_odd = trace.degree() % 2 == 1;
  auto is_minus_one = [&](long x) { return evaluate(trace, Integer(x)) == -1; };
  switch (n) {
    case 1: return is_minus_one(2);
    case 2: return t_odd && is_minus_one(2) && is_minus_one(-2);
    case 3: return is_minus_one(2) && is_minus_one(-1);
    case 4: return t_odd && is_minus_one(2) && is_minus_one(-2) && is_minus_one(0);
    case 6: return t_odd && is_minus_one(2) && is_minus_one(-2) && is_minus_one(-1) && is_minus_one(1);
    default: break;
  }
  return false;
}

IntPoly structural_form(const IntPoly& trace, unsigned n) {
  if (n != 1 && n != 2 && n != 3 && n != 4 && n != 6)
    throw std::invalid_argument("structural_form supports n in {1,2,3,4,6}");
  if (!trace.is_monic()) throw std::invalid_argument("structural_form needs a monic polynomial");
  const bool even = n % 2 == 0;
  if (even && trace.degree() % 2 == 0)
    throw NoStructuralForm("even n requires a trace polynomial of odd degree");
  const IntPoly fixed = cyclo_trace(n) * (even ? IntPoly{-4, 0, 1} : IntPoly{-2, 1});
  auto [q, r] = divrem(trace, fixed);
  if (!(r == IntPoly::constant(-1)) || q.is_zero())
    throw NoStructuralForm("remainder of T modulo C_" + std::to_string(n) +
                           (even ? "(x^2-4)" : "(x-2)") + " is " + r.to_string() + ", not -1");
  return q;
}

}  // namespace salem
