#include "modp.hpp"

#include <algorithm>
#include <stdexcept>

namespace salem::modp {

Coeff Field::inv(Coeff a) const {
  if (a % p_ == 0) throw std::domain_error("inverse of zero mod p");
  // Fermat: a^(p-2)
  Coeff result = 1;
  Coeff base = a % p_;
  Coeff e = p_ - 2;
  while (e) {
    if (e & 1U) result = mul(result, base);
    base = mul(base, base);
    e >>= 1U;
  }
  return result;
}

Coeff Field::reduce(const Integer& z) const {
  return static_cast<Coeff>(mpz_fdiv_ui(z.get_mpz_t(), static_cast<unsigned long>(p_)));
}

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly reduce(const Field& f, const IntPoly& p) {
  Poly r;
  r.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) r.push_back(f.reduce(c));
  trim(r);
  return r;
}

Poly add(const Field& f, const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    const Coeff x = i < a.size() ? a[i] : 0;
    const Coeff y = i < b.size() ? b[i] : 0;
    r[i] = f.add(x, y);
  }
  trim(r);
  return r;
}

Poly sub(const Field& f, const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    const Coeff x = i < a.size() ? a[i] : 0;
    const Coeff y = i < b.size() ? b[i] : 0;
    r[i] = f.sub(x, y);
  }
  trim(r);
  return r;
}

Poly mul(const Field& f, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
  }
  trim(r);
  return r;
}

Poly scale(const Field& f, const Poly& a, Coeff c) {
  Poly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.mul(a[i], c);
  trim(r);
  return r;
}

Poly make_monic(const Field& f, const Poly& a) {
  if (a.empty()) return a;
  return scale(f, a, f.inv(a.back()));
}

Poly derivative(const Field& f, const Poly& a) {
  if (a.size() <= 1) return {};
  Poly r(a.size() - 1);
  for (std::size_t k = 1; k < a.size(); ++k) r[k - 1] = f.mul(a[k], static_cast<Coeff>(k) % f.modulus());
  trim(r);
  return r;
}

void divrem(const Field& f, const Poly& a, const Poly& b, Poly& q, Poly& r) {
  if (b.empty()) throw std::domain_error("division by zero polynomial mod p");
  r = a;
  if (a.size() < b.size()) {
    q.clear();
    return;
  }
  q.assign(a.size() - b.size() + 1, 0);
  const Coeff inv_lead = f.inv(b.back());
  for (std::size_t k = a.size(); k-- >= b.size();) {
    const Coeff c = f.mul(r[k], inv_lead);
    if (c == 0) continue;
    const std::size_t shift = k - (b.size() - 1);
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] = f.sub(r[shift + j], f.mul(c, b[j]));
  }
  r.resize(b.size() - 1);
  trim(r);
  trim(q);
}

Poly rem(const Field& f, const Poly& a, const Poly& b) {
  Poly q, r;
  divrem(f, a, b, q, r);
  return r;
}

Poly quot(const Field& f, const Poly& a, const Poly& b) {
  Poly q, r;
  divrem(f, a, b, q, r);
  return q;
}

Poly gcd(const Field& f, Poly a, Poly b) {
  while (!b.empty()) {
    Poly r = rem(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(f, a);
}

Poly ext_gcd(const Field& f, const Poly& a, const Poly& b, Poly& s, Poly& t) {
  Poly r0 = a, r1 = b;
  Poly s0{1}, s1{};
  Poly t0{}, t1{1};
  while (!r1.empty()) {
    Poly q, r;
    divrem(f, r0, r1, q, r);
    Poly s2 = sub(f, s0, mul(f, q, s1));
    Poly t2 = sub(f, t0, mul(f, q, t1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.empty()) {
    s = s0;
    t = t0;
    return r0;
  }
  const Coeff inv_lead = f.inv(r0.back());
  s = scale(f, s0, inv_lead);
  t = scale(f, t0, inv_lead);
  return scale(f, r0, inv_lead);
}

Poly powmod(const Field& f, const Poly& base, const Integer& e, const Poly& m) {
  Poly result{1};
  result = rem(f, result, m);
  Poly b = rem(f, base, m);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = rem(f, mul(f, result, result), m);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = rem(f, mul(f, result, b), m);
  }
  return result;
}

std::vector<DegreeBlock> distinct_degree(const Field& f, const Poly& a) {
  std::vector<DegreeBlock> out;
  Poly rest = make_monic(f, a);
  const Poly x{0, 1};
  Poly h = x;
  const Integer p(static_cast<unsigned long>(f.modulus()));
  for (int d = 1; degree(rest) >= 2 * d; ++d) {
    h = powmod(f, h, p, rest);
    Poly g = gcd(f, rest, sub(f, h, x));
    if (degree(g) > 0) {
      out.push_back({d, g});
      rest = quot(f, rest, g);
      h = rem(f, h, rest);
    }
  }
  if (degree(rest) > 0) out.push_back({degree(rest), rest});
  return out;
}

std::vector<Poly> equal_degree(const Field& f, const Poly& a, int d, std::mt19937_64& rng) {
  if (f.modulus() == 2) throw std::invalid_argument("equal-degree splitting needs odd p");
  if (degree(a) == d) return {a};
  std::vector<Poly> pending{a};
  std::vector<Poly> done;
  Integer exponent;
  mpz_ui_pow_ui(exponent.get_mpz_t(), static_cast<unsigned long>(f.modulus()), static_cast<unsigned long>(d));
  exponent = (exponent - 1) / 2;
  std::uniform_int_distribution<Coeff> coef(0, f.modulus() - 1);
  while (!pending.empty()) {
    Poly g = std::move(pending.back());
    pending.pop_back();
    if (degree(g) == d) {
      done.push_back(std::move(g));
      continue;
    }
    for (;;) {
      Poly r(static_cast<std::size_t>(degree(g)));
      for (auto& c : r) c = coef(rng);
      trim(r);
      if (degree(r) < 1) continue;
      Poly b = sub(f, powmod(f, r, exponent, g), Poly{1});
      Poly split = gcd(f, g, b);
      if (degree(split) > 0 && degree(split) < degree(g)) {
        pending.push_back(quot(f, g, split));
        pending.push_back(std::move(split));
        break;
      }
    }
  }
  return done;
}

std::vector<Poly> factor_squarefree(const Field& f, const Poly& a, std::mt19937_64& rng) {
  std::vector<Poly> out;
  for (const auto& block : distinct_degree(f, a)) {
    auto parts = equal_degree(f, block.product, block.degree, rng);
    out.insert(out.end(), parts.begin(), parts.end());
  }
  std::sort(out.begin(), out.end(), [](const Poly& x, const Poly& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x < y;
  });
  return out;
}

}  // namespace salem::modp
