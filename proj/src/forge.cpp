#include "salem/forge.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "salem/errors.hpp"
#include "salem/roots.hpp"

namespace salem {

IntPoly chebyshev(unsigned k) {
  if (k == 0) throw std::invalid_argument("chebyshev(0) is ambiguous; k must be >= 1");
  return symmetric_power_trace(k);
}

IntPoly cyclo_trace(unsigned n) {
  if (n == 0) throw std::invalid_argument("cyclo_trace needs n >= 1");
  std::vector<Integer> c;
  if (n % 2 == 1) {
    c.assign(n, 1);  // 1 + x + ... + x^(n-1)
  } else {
    c.assign(n - 1, 0);  // 1 + x^2 + ... + x^(n-2)
    for (std::size_t k = 0; k < c.size(); k += 2) c[k] = 1;
  }
  return compress_trace(IntPoly(std::move(c)));
}

bool lemma1_coprime(unsigned k, unsigned n) { return gcd_q(chebyshev(k), cyclo_trace(n)).degree() == 0; }

bool lemma2_coprime(unsigned n, unsigned m) { return gcd_q(cyclo_trace(n), cyclo_trace(m)).degree() == 0; }

namespace {

// t_k with the convention t_0 = 1.
IntPoly chebyshev_or_one(unsigned k) { return k == 0 ? IntPoly::constant(1) : chebyshev(k); }

bool is_power_of_two(unsigned n) { return n != 0 && (n & (n - 1)) == 0; }

std::string nt(unsigned n, unsigned t) {
  return "(n, t) = (" + std::to_string(n) + ", " + std::to_string(t) + ")";
}

}  // namespace

IntPoly theorem1_D(unsigned n, unsigned t) {
  if (n == 0) throw UnsupportedParameters("n must be >= 1");
  if (n % 2 == 1) {
    if (2 * t < n + 3) throw UnsupportedParameters(nt(n, t) + ": odd n needs t >= (n+3)/2");
    return chebyshev_or_one(t - (n + 3) / 2);
  }
  if (t % 2 == 0) throw UnsupportedParameters(nt(n, t) + ": even n needs t odd");
  if (n % 4 == 2) {
    if (2 * t < n + 4) throw UnsupportedParameters(nt(n, t) + ": n = 2 mod 4 needs t >= (n+4)/2");
    return chebyshev_or_one(t - (n + 4) / 2);
  }
  if (is_power_of_two(n)) {
    if (2 * t < n + 6) throw UnsupportedParameters(nt(n, t) + ": n = 2^s needs t >= (n+6)/2");
    const unsigned d = (t - (n + 4) / 2 - 1) / 2;
    return cyclo_trace(4 * d + 3);
  }
  if (n % 8 == 4 && n % 3 != 0) {
    if (2 * t < n + 6) throw UnsupportedParameters(nt(n, t) + ": n = 4 mod 8 needs t >= (n+6)/2");
    const unsigned d = (t - (n + 4) / 2 - 1) / 2;
    return IntPoly::linear_root(1) * chebyshev_or_one(2 * d);
  }
  if (n % 8 == 4)
    throw UnsupportedParameters(nt(n, t) + ": n = 4 mod 8 but n = 0 mod 3, and n is not a power of 2");
  throw UnsupportedParameters(nt(n, t) + ": n = 0 mod 8 but n is not a power of 2");
}

GeneratorSpec GeneratorSpec::make(unsigned n, unsigned t, IntPoly d) {
  if (n == 0) throw InvalidGeneratorSpec("n must be >= 1");
  const bool even = n % 2 == 0;
  if (even && t % 2 == 0) throw InvalidGeneratorSpec("parity: even n needs t odd, got t = " + std::to_string(t));
  const long min_t = even ? (static_cast<long>(n) + 4) / 2 : (static_cast<long>(n) + 3) / 2;
  if (static_cast<long>(t) < min_t)
    throw InvalidGeneratorSpec("degree: t = " + std::to_string(t) + " is below " + std::to_string(min_t));
  const long want = static_cast<long>(t) - min_t;
  if (!d.is_monic()) throw InvalidGeneratorSpec("D must be monic");
  if (d.degree() != want)
    throw InvalidGeneratorSpec("degree: D has degree " + std::to_string(d.degree()) + ", expected " +
                               std::to_string(want));
  if (d.degree() > 0) {
    if (!is_separable(d)) throw InvalidGeneratorSpec("separability: D has a repeated root");
    const Rational two(2);
    if (sign_at(d, two) == 0 || sign_at(d, -two) == 0 ||
        sturm_count(d, -two, two) != static_cast<std::size_t>(d.degree()))
      throw InvalidGeneratorSpec("root location: D must have all roots in (-2, 2)");
  }
  const IntPoly c = cyclo_trace(n);
  if (gcd_q(c, d).degree() != 0) throw InvalidGeneratorSpec("coprimality: D shares a root with C_" + std::to_string(n));
  IntPoly fixed = c * d * (even ? IntPoly{-4, 0, 1} : IntPoly{-2, 1});
  return GeneratorSpec(n, t, std::move(d), std::move(fixed));
}

GeneratorSpec GeneratorSpec::automatic(unsigned n, unsigned t) { return make(n, t, theorem1_D(n, t)); }

IntPoly theorem3_polynomial(const GeneratorSpec& spec, const Integer& a) {
  return spec.fixed_factor() * IntPoly::linear_root(a) - IntPoly::constant(1);
}

namespace {

// Largest A_k, or nothing when there are no interior pairs.
std::optional<Rational> max_separation_bound(const GeneratorSpec& spec) {
  const IntPoly& fixed = spec.fixed_factor();
  std::vector<RootInterval> roots = isolate_roots(fixed);
  const std::size_t m = roots.size();
  if (m + 1 != spec.t()) throw InternalInvariantError("fixed factor has the wrong number of real roots");
  Rational width(1, 4);
  for (;;) {
    for (auto& iv : roots) iv = refine_root(fixed, iv, width);
    bool separated = true;
    for (std::size_t i = 0; i + 1 < m; ++i) separated = separated && roots[i].hi < roots[i + 1].lo;
    if (separated) break;
    width /= 4;
  }
  // Tighten so the endpoint distances are close to the true root distances.
  if (m > 1) {
    Rational gap = roots[1].lo - roots[0].hi;
    for (std::size_t i = 1; i + 1 < m; ++i) gap = std::min(gap, Rational(roots[i + 1].lo - roots[i].hi));
    for (auto& iv : roots) iv = refine_root(fixed, iv, gap / 64);
  }
  // 0-based index of the left root of each interior pair.
  std::vector<std::size_t> left;
  const std::size_t t = spec.t();
  if (t % 2 == 1)
    for (std::size_t k = 1; k <= (t - 1) / 2; ++k) left.push_back(2 * k - 2);
  else
    for (std::size_t k = 1; 2 * k <= t - 2; ++k) left.push_back(2 * k - 1);

  std::optional<Rational> best;
  for (auto i : left) {
    const Rational gamma = (roots[i].hi + roots[i + 1].lo) / 2;
    Rational product = 1;
    for (const auto& iv : roots) product *= gamma > iv.hi ? Rational(gamma - iv.hi) : Rational(iv.lo - gamma);
    Rational ak = abs(gamma) + 1 / product;
    ak.canonicalize();
    if (!best || ak > *best) best = ak;
  }
  return best;
}

}  // namespace

Rational theorem3_threshold(const GeneratorSpec& spec) {
  const auto a = max_separation_bound(spec);
  return a && *a > 3 ? *a : Rational(3);
}

Integer theorem3_first_shift(const GeneratorSpec& spec) {
  const auto a = max_separation_bound(spec);
  if (!a) return 3;
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), a->get_num_mpz_t(), a->get_den_mpz_t());
  return std::max(Integer(3), Integer(f + 1));
}

CertifyOutcome certify_salem(const IntPoly& salem, const std::vector<unsigned>& claimed, Provenance provenance,
                             const IrreducibilityOptions& opts) {
  CertifyOutcome out;
  out.verdict = classify_salem(salem, opts);
  if (!out.verdict.ok()) {
    out.reason = to_string(out.verdict.tag) + ": " + out.verdict.detail;
    return out;
  }
  SalemCertificate cert;
  cert.salem = *out.verdict.salem;
  cert.trace = *out.verdict.trace;
  cert.shift = provenance.shift;
  cert.irreducibility = *out.verdict.trace_verdict->irreducibility;
  cert.layout = *out.verdict.trace_verdict->layout;
  for (unsigned n : claimed) {
    UnitCertificate u = certify_power(salem, n);
    if (!u.is_unit_minus) {
      out.reason = "Norm(alpha^" + std::to_string(n) + " - 1) = " + u.norm_minus.get_str();
      return out;
    }
    cert.certificates.push_back(std::move(u));
  }
  cert.provenance = std::move(provenance);
  out.certificate = std::move(cert);
  return out;
}

GenerationResult generate_salem_units(const GeneratorSpec& spec, unsigned count, const std::optional<Integer>& a_start,
                                      const GeneratorOptions& opts, const std::string& construction) {
  if (count == 0) throw std::invalid_argument("count must be >= 1");
  GenerationResult result;
  Integer a = theorem3_first_shift(spec);
  if (a_start && *a_start > a) a = *a_start;
  unsigned consecutive_unresolved = 0;
  unsigned scanned = 0;
  for (; result.certificates.size() < count; ++a) {
    if (++scanned > opts.max_scanned)
      throw GenerationAborted("scanned " + std::to_string(opts.max_scanned) + " shifts, found only " +
                              std::to_string(result.certificates.size()) + " certificates");
    const IntPoly r = theorem3_polynomial(spec, a);
    Provenance prov{construction, spec.n(), spec.t(), spec.d(), a, {}};
    CertifyOutcome out = certify_salem(expand_trace(r), {spec.n()}, std::move(prov), opts.irreducibility);
    if (out.certificate) {
      consecutive_unresolved = 0;
      result.certificates.push_back(std::move(*out.certificate));
      continue;
    }
    if (!out.verdict.trace_verdict)
      throw InternalInvariantError("expansion of R_" + a.get_str() + " failed: " + out.reason);
    const TraceVerdict& tv = *out.verdict.trace_verdict;
    if (tv.ok()) throw InternalInvariantError("R_" + a.get_str() + " is a Salem trace but " + out.reason);
    if (tv.tag == TraceTag::WrongRootLayout)
      throw InternalInvariantError("R_" + a.get_str() + " beyond the threshold has " + tv.detail);
    result.skipped.push_back({a, tv.tag, tv.detail});
    if (tv.tag == TraceTag::Unresolved) {
      if (++consecutive_unresolved > opts.max_consecutive_unresolved)
        throw GenerationAborted(std::to_string(consecutive_unresolved) +
                                " consecutive shifts with unresolved irreducibility, last a = " + a.get_str() +
                                ": " + tv.detail);
    } else {
      consecutive_unresolved = 0;
    }
  }
  return result;
}

std::vector<std::pair<unsigned, unsigned>> theorem2_degrees(unsigned n, unsigned how_many) {
  if (n == 0 || n % 4 != 0) throw UnsupportedParameters("degree enumeration needs n = 0 mod 4");
  if (how_many == 0) throw std::invalid_argument("how_many must be >= 1");
  std::vector<std::pair<unsigned, unsigned>> out;
  for (unsigned v = 0; out.size() < how_many; ++v)
    if (std::gcd(n, 4 * v + 3) == 1) out.emplace_back(v, 2 * v + 3 + n / 2);
  return out;
}

GeneratorSpec theorem2_spec(unsigned n, unsigned v) {
  if (n == 0 || n % 4 != 0) throw UnsupportedParameters("degree enumeration needs n = 0 mod 4");
  return GeneratorSpec::make(n, 2 * v + 3 + n / 2, cyclo_trace(4 * v + 3));
}

std::string to_string(Family f) {
  switch (f) {
    case Family::F: return "F";
    case Family::G: return "G";
    case Family::H: return "H";
  }
  return "?";
}

std::optional<Family> parse_family(const std::string& name) {
  if (name.size() != 1) return std::nullopt;
  switch (std::toupper(static_cast<unsigned char>(name[0]))) {
    case 'F': return Family::F;
    case 'G': return Family::G;
    case 'H': return Family::H;
    default: return std::nullopt;
  }
}

IntPoly family(Family name, const Integer& a) {
  std::vector<Integer> c;
  switch (name) {
    case Family::F:
      // (x^6 + 1) - a(x^5 + x) - (x^4 + x^2) - (1 - 2a) x^3
      c = {1, -a, -1, Integer(2 * a - 1), -1, -a, 1};
      break;
    case Family::G:
      // (x^6 + 1) - a(x^5 + x) + a(x^4 + x^2) - 3x^3
      c = {1, -a, a, -3, a, -a, 1};
      break;
    case Family::H:
      // (x^10 + 1) - a(x^9 + x) - a(x^8 + x^2) - (1 - a)(x^6 + x^4) - (1 - 2a) x^5
      c = {1, -a, -a, 0, Integer(a - 1), Integer(2 * a - 1), Integer(a - 1), 0, -a, -a, 1};
      break;
  }
  return IntPoly(std::move(c));
}

std::vector<unsigned> family_exponents(Family name) {
  switch (name) {
    case Family::F: return {2};
    case Family::G: return {3};
    case Family::H: return {1, 2, 3, 4};
  }
  return {};
}

IntPoly family_g_trace(const Integer& a) {
  return IntPoly{-2, 1} * IntPoly{1, 1} * IntPoly::linear_root(a - 1) - IntPoly::constant(1);
}

IntPoly family_h_trace(const Integer& a) {
  return IntPoly{0, -4, 0, 1} * IntPoly{1, 1} * IntPoly::linear_root(a + 1) - IntPoly::constant(1);
}

Integer pair_form(const Integer& a, const Integer& b) { return a * a + b * b + a + b + 3 * a * b; }

namespace {

Integer exact_sqrt(const Integer& radicand) {
  if (radicand < 0 || mpz_perfect_square_p(radicand.get_mpz_t()) == 0)
    throw InternalInvariantError("radicand " + radicand.get_str() + " is not a perfect square");
  Integer r;
  mpz_sqrt(r.get_mpz_t(), radicand.get_mpz_t());
  return r;
}

Integer exact_half(const Integer& v) {
  if (mpz_odd_p(v.get_mpz_t()) != 0) throw InternalInvariantError(v.get_str() + " / 2 is not an integer");
  Integer h;
  mpz_divexact_ui(h.get_mpz_t(), v.get_mpz_t(), 2);
  return h;
}

}  // namespace

std::vector<RecurrencePair> prop4_pairs(unsigned how_many) {
  if (how_many == 0) throw std::invalid_argument("how_many must be >= 1");
  std::vector<RecurrencePair> out;
  Integer a = 0;
  for (unsigned k = 0; k < how_many; ++k) {
    const Integer b = exact_half(-(1 + 3 * a) + exact_sqrt(5 * a * a + 2 * a + 1));
    if (pair_form(a, b) != 0)
      throw InternalInvariantError("pair " + std::to_string(k) + " violates a^2 + b^2 + a + b + 3ab = 0");
    out.push_back({a, b, k});
    a = exact_half(-(1 + 3 * b) - exact_sqrt(5 * b * b + 2 * b + 1));
  }
  return out;
}

IntPoly prop4_trace(const RecurrencePair& pair) {
  if (pair_form(pair.a, pair.b) != 0)
    throw std::invalid_argument("(" + pair.a.get_str() + ", " + pair.b.get_str() +
                                ") violates a^2 + b^2 + a + b + 3ab = 0");
  const IntPoly base = IntPoly{-1, 1, 1} * IntPoly{-2, 1};
  return base + IntPoly({Integer(-(1 + 2 * pair.b + 4 * pair.a)), pair.b, pair.a});
}

}  // namespace salem
