#pragma once

// Constructors: Chebyshev and cyclotomic trace polynomials, coprimality
// predicates, the shifted-product generator with its explicit shift
// threshold, degree enumeration for n divisible by 4, the named families,
// and the integer recurrence for degree-6 numbers with alpha^5 - 1 a unit.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "salem/irreducible.hpp"
#include "salem/poly.hpp"
#include "salem/trace.hpp"
#include "salem/units.hpp"

namespace salem {

/// Normalized Chebyshev polynomial t_k(x + 1/x) = x^k + x^-k, k >= 1.
IntPoly chebyshev(unsigned k);

/// C_n: trace polynomial of (x^n - 1)/(x - 1) (n odd) or (x^n - 1)/(x^2 - 1)
/// (n even). C_1 = C_2 = 1.
IntPoly cyclo_trace(unsigned n);

/// gcd(t_k, C_n) = 1 over Q.
bool lemma1_coprime(unsigned k, unsigned n);
/// gcd(C_n, C_m) = 1 over Q.
bool lemma2_coprime(unsigned n, unsigned m);

/// The auxiliary factor D for (n, t); throws UnsupportedParameters naming
/// the failed condition when no construction applies.
IntPoly theorem1_D(unsigned n, unsigned t);

/// Validated parameters for R_a = C_n (x - 2) D (x - a) - 1 (odd n) or
/// C_n (x^2 - 4) D (x - a) - 1 (even n).
class GeneratorSpec {
 public:
  /// Throws InvalidGeneratorSpec naming the violated hypothesis.
  static GeneratorSpec make(unsigned n, unsigned t, IntPoly d);
  /// make(n, t, theorem1_D(n, t)).
  static GeneratorSpec automatic(unsigned n, unsigned t);

  unsigned n() const { return n_; }
  unsigned t() const { return t_; }
  const IntPoly& d() const { return d_; }
  /// The shift-independent factor: C_n (x - 2) D or C_n (x^2 - 4) D.
  const IntPoly& fixed_factor() const { return fixed_; }

 private:
  GeneratorSpec(unsigned n, unsigned t, IntPoly d, IntPoly fixed)
      : n_(n), t_(t), d_(std::move(d)), fixed_(std::move(fixed)) {}
  unsigned n_;
  unsigned t_;
  IntPoly d_;
  IntPoly fixed_;
};

/// R_a, monic of degree t.
IntPoly theorem3_polynomial(const GeneratorSpec& spec, const Integer& a);

/// Rational A >= 3 such that every integer a > A gives R_a with t - 1 roots
/// in (-2, 2) and one in (a, a + 1).
Rational theorem3_threshold(const GeneratorSpec& spec);

/// Smallest integer a >= 3 exceeding every separation bound.
Integer theorem3_first_shift(const GeneratorSpec& spec);

struct Provenance {
  std::string construction;  // "theorem3", "theorem2", "prop4", "family"
  std::optional<unsigned> n;
  std::optional<unsigned> t;
  std::optional<IntPoly> d;
  std::optional<Integer> shift;
  std::string label;  // free-form, e.g. "F_3" or "pair 2 (-6,15)"
  friend bool operator==(const Provenance&, const Provenance&) = default;
};

struct SalemCertificate {
  SalemPolynomial salem;
  IntPoly trace;
  std::optional<Integer> shift;
  /// One per claimed exponent, each with norm_minus == -1.
  std::vector<UnitCertificate> certificates;
  IrreducibilityVerdict irreducibility;
  RootLayout layout;
  Provenance provenance;
};

struct CertifyOutcome {
  std::optional<SalemCertificate> certificate;
  SalemVerdict verdict;
  /// Why no certificate was issued.
  std::string reason;
};

/// classify_salem, then norm -1 at every claimed exponent.
CertifyOutcome certify_salem(const IntPoly& salem, const std::vector<unsigned>& claimed, Provenance provenance,
                             const IrreducibilityOptions& opts = {});

struct GeneratorOptions {
  IrreducibilityOptions irreducibility;
  /// Abort after this many consecutive Unresolved shifts.
  unsigned max_consecutive_unresolved = 8;
  /// Abort after scanning this many shifts in total.
  unsigned max_scanned = 5000;
};

struct SkippedShift {
  Integer shift;
  TraceTag tag;
  std::string detail;
};

struct GenerationResult {
  std::vector<SalemCertificate> certificates;
  std::vector<SkippedShift> skipped;
};

/// Scans a upward from max(a_start, theorem3_first_shift) and certifies the
/// first `count` shifts whose R_a is a Salem trace polynomial with
/// Norm(alpha^n - 1) = -1. Throws GenerationAborted per the options.
GenerationResult generate_salem_units(const GeneratorSpec& spec, unsigned count,
                                      const std::optional<Integer>& a_start = std::nullopt,
                                      const GeneratorOptions& opts = {}, const std::string& construction = "theorem3");

/// First `how_many` (v, t) with gcd(n, 4v + 3) = 1, t = 2v + 3 + n/2.
/// n must be divisible by 4.
std::vector<std::pair<unsigned, unsigned>> theorem2_degrees(unsigned n, unsigned how_many);

/// Spec with D = C_{4v+3} and t = 2v + 3 + n/2.
GeneratorSpec theorem2_spec(unsigned n, unsigned v);

enum class Family { F, G, H };
std::string to_string(Family f);
/// Parses "F", "G" or "H" (case-insensitive).
std::optional<Family> parse_family(const std::string& name);

IntPoly family(Family name, const Integer& a);
/// Exponents each family member is claimed to certify: F {2}, G {3}, H {1,2,3,4}.
std::vector<unsigned> family_exponents(Family name);

/// (x - 2)(x + 1)(x - a + 1) - 1, the trace of G_a.
IntPoly family_g_trace(const Integer& a);
/// x (x^2 - 4)(x + 1)(x - a - 1) - 1, the trace of H_a.
IntPoly family_h_trace(const Integer& a);

struct RecurrencePair {
  Integer a;
  Integer b;
  unsigned index = 0;
};

/// a^2 + b^2 + a + b + 3ab
Integer pair_form(const Integer& a, const Integer& b);

/// First `how_many` pairs starting at (0, 0). Throws InternalInvariantError
/// if a radicand is not a perfect square or a half is not integral.
std::vector<RecurrencePair> prop4_pairs(unsigned how_many);

/// (x^2 + x - 1)(x - 2) + a x^2 + b x - (1 + 2b + 4a). Rejects pairs with
/// pair_form != 0.
IntPoly prop4_trace(const RecurrencePair& pair);

}  // namespace salem
