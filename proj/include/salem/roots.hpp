#pragma once

// Real-root counting and isolation by exact Sturm sequences.

#include <cstddef>
#include <vector>

#include "salem/poly.hpp"

namespace salem {

/// Open interval (lo, hi) with rational endpoints isolating exactly one real
/// root of its polynomial; the polynomial is nonzero at both endpoints.
struct RootInterval {
  Rational lo;
  Rational hi;

  Rational width() const { return hi - lo; }
  bool contains(const Rational& x) const { return lo < x && x < hi; }
  friend bool operator==(const RootInterval&, const RootInterval&) = default;
};

/// Strict bound on root moduli: 1 + max|c_k| / |lead|.
Rational cauchy_bound(const IntPoly& p);

/// p, p', then negated remainders; each term is rescaled by a positive
/// constant (primitive part) to keep coefficients small.
class SturmSequence {
 public:
  explicit SturmSequence(const IntPoly& p);

  /// Sign variations at x.
  std::size_t variations(const Rational& x) const;
  std::size_t variations_at_minus_infinity() const;
  std::size_t variations_at_plus_infinity() const;

  /// Distinct real roots in (lo, hi). Endpoints must not be roots.
  std::size_t count(const Rational& lo, const Rational& hi) const;
  /// Distinct real roots in total.
  std::size_t count_all() const;

  const IntPoly& polynomial() const { return chain_.front(); }
  const std::vector<IntPoly>& chain() const { return chain_; }

 private:
  std::vector<IntPoly> chain_;
};

/// Number of distinct real roots of p in (lo, hi).
/// Throws EndpointRootError when p vanishes at an endpoint; the hint names a
/// nudged endpoint (shifted by 1/2^k) that is not a root.
std::size_t sturm_count(const IntPoly& p, const Rational& lo, const Rational& hi);

/// One isolating interval per distinct real root, in increasing order.
std::vector<RootInterval> isolate_roots(const IntPoly& p);

/// Bisect iv until its width is at most max_width. iv must isolate a root of p.
RootInterval refine_root(const IntPoly& p, RootInterval iv, const Rational& max_width);

}  // namespace salem
