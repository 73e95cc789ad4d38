#include "salem/irreducible.hpp"

#include <bitset>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>

#include "modp.hpp"
#include "salem/roots.hpp"

namespace salem {

std::string to_string(IrreducibilityTag tag) {
  switch (tag) {
    case IrreducibilityTag::Irreducible: return "Irreducible";
    case IrreducibilityTag::Reducible: return "Reducible";
    case IrreducibilityTag::Unresolved: return "Unresolved";
  }
  return "?";
}

namespace {

constexpr std::size_t kMaxDegree = 512;
using DegreeSet = std::bitset<kMaxDegree + 1>;

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::string set_to_string(const DegreeSet& s, int n) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (int d = 1; d < n; ++d) {
    if (!s.test(static_cast<std::size_t>(d))) continue;
    os << (first ? "" : ",") << d;
    first = false;
  }
  os << "}";
  return os.str();
}

std::optional<Integer> integer_root(const IntPoly& p) {
  for (auto iv : isolate_roots(p)) {
    iv = refine_root(p, iv, Rational(1, 2));
    Integer lo, hi;
    mpz_fdiv_q(lo.get_mpz_t(), iv.lo.get_num_mpz_t(), iv.lo.get_den_mpz_t());
    mpz_cdiv_q(hi.get_mpz_t(), iv.hi.get_num_mpz_t(), iv.hi.get_den_mpz_t());
    for (Integer c = lo; c <= hi; ++c)
      if (evaluate(p, c) == 0) return c;
  }
  return std::nullopt;
}

struct SieveResult {
  DegreeSet allowed;  // factor degrees compatible with every prime seen
  bool proved = false;
  unsigned long best_prime = 0;  // odd usable prime with fewest factors
  std::size_t best_count = 0;
  std::string evidence;
};

SieveResult degree_sieve(const IntPoly& p, const IrreducibilityOptions& opts) {
  const int n = p.degree();
  SieveResult res;
  for (int d = 0; d <= n; ++d) res.allowed.set(static_cast<std::size_t>(d));
  std::ostringstream ev;
  int usable = 0;
  int used = 0;
  // The exact search needs an odd prime even when the sieve finishes at 2.
  for (unsigned long q = 2; used < opts.sieve_primes || (opts.force_exact && res.best_prime == 0); ++q) {
    if (!is_prime(q)) continue;
    const modp::Field field(q);
    const modp::Poly fbar = modp::reduce(field, p);
    if (modp::degree(modp::gcd(field, fbar, modp::derivative(field, fbar))) > 0) continue;
    if (usable++ < opts.prime_offset) continue;
    ++used;
    const auto blocks = modp::distinct_degree(field, fbar);
    DegreeSet sums;
    sums.set(0);
    std::size_t nfactors = 0;
    std::ostringstream pattern;
    for (const auto& b : blocks) {
      const int count = modp::degree(b.product) / b.degree;
      for (int i = 0; i < count; ++i) {
        sums |= sums << static_cast<std::size_t>(b.degree);
        pattern << (nfactors++ ? "+" : "") << b.degree;
      }
    }
    res.allowed &= sums;
    ev << (used > 1 ? "; " : "") << "p=" << q << ":" << pattern.str();
    if (q % 2 == 1 && (res.best_prime == 0 || nfactors < res.best_count)) {
      res.best_prime = q;
      res.best_count = nfactors;
    }
    bool nontrivial = false;
    for (int d = 1; d < n; ++d) nontrivial |= res.allowed.test(static_cast<std::size_t>(d));
    if (!nontrivial) {
      res.proved = true;
      if (res.best_prime != 0 || !opts.force_exact) break;
    }
  }
  res.evidence = ev.str();
  return res;
}

// f = g*h (mod p) lifted to mod p^k; g, h monic and coprime mod p.
std::pair<IntPoly, IntPoly> lift_pair(const IntPoly& f, const modp::Poly& g0, const modp::Poly& h0,
                                      const modp::Field& field, int k) {
  modp::Poly s, t;
  const modp::Poly one = modp::ext_gcd(field, g0, h0, s, t);
  if (one != modp::Poly{1}) throw std::logic_error("Hensel lifting of non-coprime factors");
  auto to_int = [](const modp::Poly& a) {
    std::vector<Integer> v;
    for (auto c : a) v.emplace_back(static_cast<unsigned long>(c));
    return IntPoly(std::move(v));
  };
  IntPoly g = to_int(g0);
  IntPoly h = to_int(h0);
  const Integer p(static_cast<unsigned long>(field.modulus()));
  Integer pj = p;
  for (int j = 1; j < k; ++j) {
    const Integer next = pj * p;
    IntPoly e = f - g * h;
    std::vector<Integer> ec;
    for (const auto& c : e.coeffs()) {
      Integer r;
      mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), next.get_mpz_t());
      mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), pj.get_mpz_t());
      ec.push_back(r);
    }
    const modp::Poly ebar = modp::reduce(field, IntPoly(std::move(ec)));
    const modp::Poly dg = modp::rem(field, modp::mul(field, t, ebar), g0);
    const modp::Poly dh = modp::rem(field, modp::mul(field, s, ebar), h0);
    g += to_int(dg) * pj;
    h += to_int(dh) * pj;
    pj = next;
  }
  return {g, h};
}

Integer symmetric_mod(const Integer& c, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  if (2 * r > m) r -= m;
  return r;
}

IntPoly symmetric_reduce(const IntPoly& a, const Integer& m) {
  std::vector<Integer> v;
  for (const auto& c : a.coeffs()) v.push_back(symmetric_mod(c, m));
  return IntPoly(std::move(v));
}

// Exhaustive recombination. Returns a nontrivial monic factor if one exists.
std::optional<IntPoly> zassenhaus(const IntPoly& f, unsigned long prime, const DegreeSet* allowed,
                                  std::string& evidence) {
  const int n = f.degree();
  const modp::Field field(prime);
  std::mt19937_64 rng(prime);
  const auto factors = modp::factor_squarefree(field, modp::reduce(field, f), rng);
  const std::size_t r = factors.size();

  Integer norm2 = 0;
  for (const auto& c : f.coeffs()) norm2 += c * c;
  Integer root;
  mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
  Integer bound;
  mpz_mul_2exp(bound.get_mpz_t(), Integer(root + 1).get_mpz_t(), static_cast<unsigned long>(n));

  int k = 1;
  Integer modulus(static_cast<unsigned long>(prime));
  while (modulus <= 2 * bound) {
    modulus *= static_cast<unsigned long>(prime);
    ++k;
  }
  std::ostringstream ev;
  ev << "exhaustive recombination: p=" << prime << ", " << r << " modular factors, lifted to p^" << k
     << ", coefficient bound " << bound;
  evidence = ev.str();
  if (r <= 1) return std::nullopt;

  std::vector<IntPoly> lifted;
  IntPoly current = f;
  for (std::size_t i = 0; i + 1 < r; ++i) {
    modp::Poly rest{1};
    for (std::size_t j = i + 1; j < r; ++j) rest = modp::mul(field, rest, factors[j]);
    auto [g, h] = lift_pair(current, factors[i], rest, field, k);
    lifted.push_back(symmetric_reduce(g, modulus));
    current = symmetric_reduce(h, modulus);
  }
  lifted.push_back(current);

  const Integer f0 = f.coeff(0);
  std::optional<IntPoly> found;
  std::vector<std::size_t> chosen;
  std::function<void(std::size_t, int)> search = [&](std::size_t start, int deg) {
    if (found) return;
    if (!chosen.empty() && (allowed == nullptr || allowed->test(static_cast<std::size_t>(deg)))) {
      Integer c0 = 1;
      for (auto i : chosen) c0 = symmetric_mod(c0 * lifted[i].coeff(0), modulus);
      if (c0 != 0 && (f0 == 0 || mpz_divisible_p(f0.get_mpz_t(), c0.get_mpz_t()))) {
        IntPoly cand = IntPoly::constant(1);
        for (auto i : chosen) cand = symmetric_reduce(cand * lifted[i], modulus);
        bool within = true;
        for (const auto& c : cand.coeffs()) within = within && abs(c) <= bound;
        if (within && exact_quotient(f, cand)) {
          found = cand;
          return;
        }
      }
    }
    for (std::size_t i = start; i < r; ++i) {
      const int d = lifted[i].degree();
      if (2 * (deg + d) > n) continue;
      chosen.push_back(i);
      search(i + 1, deg + d);
      chosen.pop_back();
      if (found) return;
    }
  };
  search(0, 0);
  return found;
}

}  // namespace

IrreducibilityVerdict is_irreducible(const IntPoly& p, const IrreducibilityOptions& opts) {
  if (!p.is_monic()) throw std::invalid_argument("irreducibility test needs a monic polynomial");
  if (p.degree() < 1) throw std::invalid_argument("irreducibility test needs degree >= 1");
  if (p.degree() > static_cast<int>(kMaxDegree)) throw std::invalid_argument("degree too large");
  if (!is_separable(p)) throw std::invalid_argument("irreducibility test needs a square-free polynomial");

  IrreducibilityVerdict v;
  const int n = p.degree();
  if (n == 1) {
    v.tag = IrreducibilityTag::Irreducible;
    v.evidence = "degree one";
    return v;
  }
  if (auto r = integer_root(p)) {
    v.tag = IrreducibilityTag::Reducible;
    v.witness = IntPoly::linear_root(*r);
    v.evidence = "integer root " + r->get_str();
    return v;
  }
  if (n <= 3) {
    v.tag = IrreducibilityTag::Irreducible;
    v.evidence = "no rational root and degree <= 3";
    return v;
  }

  const SieveResult sieve = degree_sieve(p, opts);
  if (sieve.proved && !opts.force_exact) {
    v.tag = IrreducibilityTag::Irreducible;
    v.evidence = "degree patterns admit no proper factor: " + sieve.evidence;
    return v;
  }
  if (n > opts.degree_cap && !opts.force_exact) {
    v.tag = IrreducibilityTag::Unresolved;
    v.evidence = "sieve inconclusive, possible factor degrees " + set_to_string(sieve.allowed, n) +
                 ", degree above cap " + std::to_string(opts.degree_cap);
    return v;
  }
  if (sieve.best_prime == 0) throw std::logic_error("no odd prime available for lifting");

  std::string ev;
  const auto factor = zassenhaus(p, sieve.best_prime, opts.force_exact ? nullptr : &sieve.allowed, ev);
  if (factor) {
    v.tag = IrreducibilityTag::Reducible;
    v.witness = *factor;
    v.evidence = ev;
  } else {
    v.tag = IrreducibilityTag::Irreducible;
    v.evidence = ev;
  }
  return v;
}

}  // namespace salem
