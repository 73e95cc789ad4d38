#pragma once

// The trace transform S(x) = x^t T(x + 1/x) in both directions, reciprocity,
// and classification of trace / Salem polynomials.

#include <cstddef>
#include <optional>
#include <string>

#include "salem/irreducible.hpp"
#include "salem/poly.hpp"
#include "salem/roots.hpp"

namespace salem {

/// The polynomial t_k with t_k(x + 1/x) = x^k + x^(-k); t_0 = 2.
IntPoly symmetric_power_trace(unsigned k);

/// S(x) = x^t T(x + 1/x) for monic T of degree t. Non-monic input is rejected.
IntPoly expand_trace(const IntPoly& trace);

/// Inverse of expand_trace. Rejects non-reciprocal or odd-degree input.
IntPoly compress_trace(const IntPoly& salem);

/// Palindromic coefficient sequence: S(x) = x^deg S(1/x).
bool is_reciprocal(const IntPoly& p);

enum class TraceTag { SalemTrace, NotMonic, NotSeparable, WrongRootLayout, Reducible, Unresolved };
std::string to_string(TraceTag tag);

/// Root counts of a trace polynomial relative to [-2, 2].
struct RootLayout {
  std::size_t at_or_below_minus_two = 0;  // (-inf, -2]
  std::size_t inside = 0;                 // (-2, 2)
  std::size_t at_two = 0;                 // {2}
  std::size_t above_two = 0;              // (2, inf)
};

struct TraceVerdict {
  TraceTag tag = TraceTag::Unresolved;
  std::optional<RootLayout> layout;
  std::string detail;
  /// Set when irreducibility was examined.
  std::optional<IrreducibilityVerdict> irreducibility;

  bool ok() const { return tag == TraceTag::SalemTrace; }
};

/// Monic, separable, exactly one root in (2, inf), t - 1 roots in (-2, 2),
/// t >= 2, and irreducible. Otherwise the first failing reason.
TraceVerdict classify_trace(const IntPoly& trace, const IrreducibilityOptions& opts = {});

/// Certified Salem polynomial: irreducible, reciprocal, degree 2t >= 4, with
/// alpha > 1 isolated by alpha_interval (lo >= 1).
struct SalemPolynomial {
  IntPoly poly;
  unsigned half_degree = 0;
  RootInterval alpha_interval;
};

enum class SalemTag {
  Salem,
  NotMonic,
  NotReciprocal,
  OddDegree,
  DegreeTooSmall,
  NotSeparable,
  WrongRootLayout,
  Reducible,
  Unresolved
};
std::string to_string(SalemTag tag);

struct SalemVerdict {
  SalemTag tag = SalemTag::Unresolved;
  std::optional<SalemPolynomial> salem;
  /// Present once the trace polynomial could be formed.
  std::optional<IntPoly> trace;
  std::optional<TraceVerdict> trace_verdict;
  std::string detail;

  bool ok() const { return tag == SalemTag::Salem; }
};

SalemVerdict classify_salem(const IntPoly& poly, const IrreducibilityOptions& opts = {});

/// Decimal text of the root isolated by iv, rounded to `digits` places
/// (error below 10^-digits).
std::string approx_root(const IntPoly& p, const RootInterval& iv, unsigned digits);

}  // namespace salem
