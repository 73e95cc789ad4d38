#include "salem/poly.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace salem {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

IntPoly::IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPoly IntPoly::constant(const Integer& c) { return IntPoly(std::vector<Integer>{c}); }

IntPoly IntPoly::monomial(const Integer& c, std::size_t k) {
  std::vector<Integer> v(k + 1);
  v[k] = c;
  return IntPoly(std::move(v));
}

IntPoly IntPoly::linear_root(const Integer& c) {
  return IntPoly(std::vector<Integer>{-c, Integer(1)});
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Integer& IntPoly::lead() const {
  if (is_zero()) throw std::domain_error("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

Integer IntPoly::coeff(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Integer(0);
}

IntPoly IntPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Integer> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<unsigned long>(k);
  return IntPoly(std::move(d));
}

Integer IntPoly::content() const {
  Integer g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return {};
  IntPoly r = *this;
  Integer g = content();
  if (g != 1) r.divide_exact(g);
  return r;
}

IntPoly IntPoly::reversed() const {
  std::vector<Integer> v(coeffs_.rbegin(), coeffs_.rend());
  return IntPoly(std::move(v));
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> r(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      mpz_addmul(r[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
  }
  return IntPoly(std::move(r));
}

IntPoly& IntPoly::operator*=(const IntPoly& o) {
  *this = *this * o;
  return *this;
}

IntPoly& IntPoly::operator*=(const Integer& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

IntPoly& IntPoly::divide_exact(const Integer& c) {
  if (c == 0) throw std::domain_error("division by zero");
  for (auto& x : coeffs_) {
    if (!mpz_divisible_p(x.get_mpz_t(), c.get_mpz_t()))
      throw std::domain_error("coefficient not divisible");
    mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  }
  return *this;
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& x : r.coeffs_) x = -x;
  return r;
}

std::string IntPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Integer& c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << "*";
    os << "x";
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntPoly& p) { return os << p.to_string(); }

IntPoly pow(const IntPoly& p, unsigned e) {
  IntPoly result = IntPoly::constant(1);
  IntPoly base = p;
  while (e) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e) base *= base;
  }
  return result;
}

IntPoly compose(const IntPoly& p, const IntPoly& q) {
  IntPoly r;
  for (int k = p.degree(); k >= 0; --k) {
    r *= q;
    r += IntPoly::constant(p.coeff(static_cast<std::size_t>(k)));
  }
  return r;
}

DivRem divrem(const IntPoly& p, const IntPoly& divisor) {
  if (divisor.is_zero()) throw std::invalid_argument("division by the zero polynomial");
  if (!divisor.is_monic()) throw std::invalid_argument("divisor must be monic");
  const int dd = divisor.degree();
  if (p.degree() < dd) return {IntPoly{}, p};
  std::vector<Integer> rem(p.coeffs().begin(), p.coeffs().end());
  std::vector<Integer> quo(static_cast<std::size_t>(p.degree() - dd + 1));
  const auto dc = divisor.coeffs();
  for (int k = p.degree(); k >= dd; --k) {
    const Integer c = rem[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    const auto shift = static_cast<std::size_t>(k - dd);
    quo[shift] = c;
    for (std::size_t j = 0; j < dc.size(); ++j)
      mpz_submul(rem[shift + j].get_mpz_t(), c.get_mpz_t(), dc[j].get_mpz_t());
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {IntPoly(std::move(quo)), IntPoly(std::move(rem))};
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("pseudo-division by zero");
  if (a.degree() < b.degree()) return a;
  std::vector<Integer> r(a.coeffs().begin(), a.coeffs().end());
  const auto bc = b.coeffs();
  const int db = b.degree();
  const Integer& lb = b.lead();
  for (int k = a.degree(); k >= db; --k) {
    const Integer c = r[static_cast<std::size_t>(k)];
    for (int j = 0; j <= k; ++j) r[static_cast<std::size_t>(j)] *= lb;
    r.resize(static_cast<std::size_t>(k));
    if (c == 0) continue;
    const auto shift = static_cast<std::size_t>(k - db);
    for (std::size_t j = 0; j + 1 < bc.size(); ++j)
      mpz_submul(r[shift + j].get_mpz_t(), c.get_mpz_t(), bc[j].get_mpz_t());
  }
  return IntPoly(std::move(r));
}

std::optional<IntPoly> exact_quotient(const IntPoly& p, const IntPoly& d) {
  if (d.is_zero()) throw std::invalid_argument("division by the zero polynomial");
  if (p.is_zero()) return IntPoly{};
  if (p.degree() < d.degree()) return std::nullopt;
  std::vector<Integer> rem(p.coeffs().begin(), p.coeffs().end());
  std::vector<Integer> quo(static_cast<std::size_t>(p.degree() - d.degree() + 1));
  const auto dc = d.coeffs();
  const int dd = d.degree();
  const Integer& ld = d.lead();
  for (int k = p.degree(); k >= dd; --k) {
    Integer& c = rem[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    if (!mpz_divisible_p(c.get_mpz_t(), ld.get_mpz_t())) return std::nullopt;
    Integer q;
    mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), ld.get_mpz_t());
    const auto shift = static_cast<std::size_t>(k - dd);
    quo[shift] = q;
    for (std::size_t j = 0; j < dc.size(); ++j)
      mpz_submul(rem[shift + j].get_mpz_t(), q.get_mpz_t(), dc[j].get_mpz_t());
  }
  for (int k = 0; k < dd; ++k)
    if (rem[static_cast<std::size_t>(k)] != 0) return std::nullopt;
  return IntPoly(std::move(quo));
}

Integer evaluate(const IntPoly& p, const Integer& x) {
  Integer acc = 0;
  const auto c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

namespace {

// sum c_k num^k den^(d-k): p(num/den) * den^d.
Integer homogeneous_value(const IntPoly& p, const Integer& num, const Integer& den) {
  Integer acc = 0;
  Integer den_pow = 1;
  const auto c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc *= num;
    acc += *it * den_pow;
    den_pow *= den;
  }
  return acc;
}

}  // namespace

Rational evaluate(const IntPoly& p, const Rational& x) {
  if (p.is_zero()) return 0;
  Integer den_pow;
  mpz_pow_ui(den_pow.get_mpz_t(), x.get_den_mpz_t(), static_cast<unsigned long>(p.degree()));
  return make_rational(homogeneous_value(p, x.get_num(), x.get_den()), den_pow);
}

int sign_at(const IntPoly& p, const Rational& x) {
  return sgn(homogeneous_value(p, x.get_num(), x.get_den()));
}

IntPoly gcd_q(const IntPoly& p, const IntPoly& q) {
  IntPoly a = p.primitive_part();
  IntPoly b = q.primitive_part();
  if (a.is_zero() && b.is_zero()) throw std::invalid_argument("gcd of two zero polynomials");
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPoly r = pseudo_remainder(a, b).primitive_part();
    a = std::move(b);
    b = std::move(r);
  }
  if (a.degree() == 0) return IntPoly::constant(1);
  if (a.lead() < 0) a = -a;
  return a;
}

Integer resultant(const IntPoly& p, const IntPoly& q) {
  if (p.is_zero() || q.is_zero()) return 0;
  IntPoly a = p;
  IntPoly b = q;
  Integer sign = 1;
  if (a.degree() < b.degree()) {
    std::swap(a, b);
    if ((a.degree() % 2 == 1) && (b.degree() % 2 == 1)) sign = -1;
  }
  if (b.degree() == 0) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), b.lead().get_mpz_t(), static_cast<unsigned long>(a.degree()));
    return sign * r;
  }
  const Integer ca = a.content();
  const Integer cb = b.content();
  a.divide_exact(ca);
  b.divide_exact(cb);
  Integer t, tb;
  mpz_pow_ui(t.get_mpz_t(), ca.get_mpz_t(), static_cast<unsigned long>(b.degree()));
  mpz_pow_ui(tb.get_mpz_t(), cb.get_mpz_t(), static_cast<unsigned long>(a.degree()));
  t *= tb;

  Integer g = 1;
  Integer h = 1;
  for (;;) {
    const int delta = a.degree() - b.degree();
    if ((a.degree() % 2 == 1) && (b.degree() % 2 == 1)) sign = -sign;
    IntPoly r = pseudo_remainder(a, b);
    a = std::move(b);
    if (r.is_zero()) return 0;
    Integer divisor;
    mpz_pow_ui(divisor.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta));
    divisor *= g;
    r.divide_exact(divisor);
    b = std::move(r);
    g = a.lead();
    // h <- g^delta / h^(delta - 1)
    if (delta > 0) {
      Integer num, den;
      mpz_pow_ui(num.get_mpz_t(), g.get_mpz_t(), static_cast<unsigned long>(delta));
      mpz_pow_ui(den.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta - 1));
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
    if (b.degree() == 0) {
      const auto da = static_cast<unsigned long>(a.degree());
      Integer num, den;
      mpz_pow_ui(num.get_mpz_t(), b.lead().get_mpz_t(), da);
      mpz_pow_ui(den.get_mpz_t(), h.get_mpz_t(), da - 1);
      Integer last;
      mpz_divexact(last.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
      return sign * t * last;
    }
  }
}

bool is_separable(const IntPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("separability of the zero polynomial");
  if (p.degree() <= 1) return true;
  return gcd_q(p, p.derivative()).degree() == 0;
}

IntPoly squarefree_part(const IntPoly& p) {
  if (p.degree() <= 1) return p.primitive_part();
  IntPoly g = gcd_q(p, p.derivative());
  IntPoly pp = p.primitive_part();
  if (g.degree() == 0) return pp;
  auto q = exact_quotient(pp, g);
  if (!q) throw std::logic_error("gcd does not divide its argument");
  return *q;
}

}  // namespace salem
