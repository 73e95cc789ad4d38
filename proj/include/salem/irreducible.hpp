#pragma once

// Certified irreducibility over Q for monic square-free integer polynomials.
//
// Stages: degree one; integer roots (which settles degree <= 3); a
// degree-pattern sieve over the factorizations modulo small primes; and an
// exhaustive Zassenhaus search (Hensel-lifted modular factors, coefficients
// bounded by Mignotte) up to a degree cap. Above the cap an inconclusive
// sieve yields Unresolved, never a guess.

#include <string>

#include "salem/poly.hpp"

namespace salem {

enum class IrreducibilityTag { Irreducible, Reducible, Unresolved };

std::string to_string(IrreducibilityTag tag);

struct IrreducibilityOptions {
  /// Largest degree for which the exhaustive search runs.
  int degree_cap = 24;
  /// Number of usable primes (not dividing the discriminant) in the sieve.
  int sieve_primes = 25;
  /// Skip this many usable primes first; gives disjoint prime sets.
  int prime_offset = 0;
  /// Run the exhaustive search even when the sieve already decided.
  bool force_exact = false;
};

struct IrreducibilityVerdict {
  IrreducibilityTag tag = IrreducibilityTag::Unresolved;
  /// Nontrivial monic factor when Reducible.
  IntPoly witness;
  /// How the verdict was reached (primes and degree patterns, or the
  /// exhaustive search parameters).
  std::string evidence;
};

/// Rejects non-monic, constant, or non-square-free input.
IrreducibilityVerdict is_irreducible(const IntPoly& p, const IrreducibilityOptions& opts = {});

}  // namespace salem
