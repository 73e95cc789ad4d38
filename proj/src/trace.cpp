#include "salem/trace.hpp"

#include <sstream>
#include <stdexcept>

namespace salem {

IntPoly symmetric_power_trace(unsigned k) {
  IntPoly prev = IntPoly::constant(2);
  if (k == 0) return prev;
  const IntPoly x{0, 1};
  IntPoly cur = x;
  for (unsigned j = 1; j < k; ++j) {
    IntPoly next = x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

IntPoly expand_trace(const IntPoly& trace) {
  if (!trace.is_monic()) throw std::invalid_argument("expand_trace needs a monic polynomial");
  const auto t = static_cast<std::size_t>(trace.degree());
  const IntPoly x2p1{1, 0, 1};
  IntPoly result;
  IntPoly power = IntPoly::constant(1);  // (x^2 + 1)^k
  for (std::size_t k = 0; k <= t; ++k) {
    const Integer c = trace.coeff(k);
    if (c != 0) result += power * IntPoly::monomial(c, t - k);
    power *= x2p1;
  }
  return result;
}

IntPoly compress_trace(const IntPoly& salem) {
  if (salem.is_zero()) throw std::invalid_argument("compress_trace of the zero polynomial");
  if (salem.degree() % 2 != 0) throw std::invalid_argument("compress_trace needs even degree");
  if (!is_reciprocal(salem)) throw std::invalid_argument("compress_trace needs a reciprocal polynomial");
  const auto t = static_cast<unsigned>(salem.degree() / 2);
  // x^-t S = c_t + sum_k c_{t+k} (x^k + x^-k), and x^k + x^-k = t_k(x + 1/x).
  IntPoly trace = IntPoly::constant(salem.coeff(t));
  for (unsigned k = 1; k <= t; ++k) {
    const Integer c = salem.coeff(t + k);
    if (c != 0) trace += symmetric_power_trace(k) * c;
  }
  return trace;
}

bool is_reciprocal(const IntPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("is_reciprocal of the zero polynomial");
  const auto c = p.coeffs();
  for (std::size_t i = 0, j = c.size() - 1; i < j; ++i, --j)
    if (c[i] != c[j]) return false;
  return true;
}

std::string to_string(TraceTag tag) {
  switch (tag) {
    case TraceTag::SalemTrace: return "SalemTrace";
    case TraceTag::NotMonic: return "NotMonic";
    case TraceTag::NotSeparable: return "NotSeparable";
    case TraceTag::WrongRootLayout: return "WrongRootLayout";
    case TraceTag::Reducible: return "Reducible";
    case TraceTag::Unresolved: return "Unresolved";
  }
  return "?";
}

std::string to_string(SalemTag tag) {
  switch (tag) {
    case SalemTag::Salem: return "Salem";
    case SalemTag::NotMonic: return "NotMonic";
    case SalemTag::NotReciprocal: return "NotReciprocal";
    case SalemTag::OddDegree: return "OddDegree";
    case SalemTag::DegreeTooSmall: return "DegreeTooSmall";
    case SalemTag::NotSeparable: return "NotSeparable";
    case SalemTag::WrongRootLayout: return "WrongRootLayout";
    case SalemTag::Reducible: return "Reducible";
    case SalemTag::Unresolved: return "Unresolved";
  }
  return "?";
}

namespace {

RootLayout root_layout(const IntPoly& trace) {
  RootLayout layout;
  IntPoly rest = trace;
  const Rational two(2), minus_two(-2);
  if (sign_at(rest, two) == 0) {
    layout.at_two = 1;
    rest = divrem(rest, IntPoly::linear_root(2)).quotient;
  }
  if (sign_at(rest, minus_two) == 0) {
    layout.at_or_below_minus_two = 1;
    rest = divrem(rest, IntPoly::linear_root(-2)).quotient;
  }
  if (rest.degree() <= 0) return layout;
  const SturmSequence sturm(rest);
  const Rational bound = cauchy_bound(rest) + 2;
  layout.at_or_below_minus_two += sturm.count(-bound, minus_two);
  layout.inside = sturm.count(minus_two, two);
  layout.above_two = sturm.count(two, bound);
  return layout;
}

std::string describe(const RootLayout& l) {
  std::ostringstream os;
  os << "roots: " << l.at_or_below_minus_two << " in (-inf,-2], " << l.inside << " in (-2,2), "
     << l.at_two << " at 2, " << l.above_two << " in (2,inf)";
  return os.str();
}

SalemTag from_trace_tag(TraceTag tag) {
  switch (tag) {
    case TraceTag::SalemTrace: return SalemTag::Salem;
    case TraceTag::NotMonic: return SalemTag::NotMonic;
    case TraceTag::NotSeparable: return SalemTag::NotSeparable;
    case TraceTag::WrongRootLayout: return SalemTag::WrongRootLayout;
    case TraceTag::Reducible: return SalemTag::Reducible;
    case TraceTag::Unresolved: return SalemTag::Unresolved;
  }
  return SalemTag::Unresolved;
}

Integer round_half_away(const Rational& q) {
  Rational shifted = abs(q) + Rational(1, 2);
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
  return q < 0 ? Integer(-r) : r;
}

std::string format_fixed(const Integer& scaled, unsigned digits) {
  Integer mag = abs(scaled);
  std::string s = mag.get_str();
  if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
  if (digits > 0) s.insert(s.size() - digits, ".");
  if (scaled < 0) s.insert(0, "-");
  return s;
}

}  // namespace

TraceVerdict classify_trace(const IntPoly& trace, const IrreducibilityOptions& opts) {
  if (trace.is_zero()) throw std::invalid_argument("classify_trace of the zero polynomial");
  TraceVerdict v;
  if (!trace.is_monic()) {
    v.tag = TraceTag::NotMonic;
    v.detail = "leading coefficient " + trace.lead().get_str();
    return v;
  }
  if (!is_separable(trace)) {
    v.tag = TraceTag::NotSeparable;
    v.detail = "repeated roots";
    return v;
  }
  const RootLayout layout = root_layout(trace);
  v.layout = layout;
  const auto t = static_cast<std::size_t>(trace.degree());
  if (t < 2) {
    v.tag = TraceTag::WrongRootLayout;
    v.detail = "degree below 2; " + describe(layout);
    return v;
  }
  if (layout.above_two != 1 || layout.inside != t - 1) {
    v.tag = TraceTag::WrongRootLayout;
    v.detail = describe(layout);
    return v;
  }
  const auto irr = is_irreducible(trace, opts);
  v.irreducibility = irr;
  switch (irr.tag) {
    case IrreducibilityTag::Irreducible:
      v.tag = TraceTag::SalemTrace;
      v.detail = describe(layout);
      break;
    case IrreducibilityTag::Reducible:
      v.tag = TraceTag::Reducible;
      v.detail = "factor " + irr.witness.to_string();
      break;
    case IrreducibilityTag::Unresolved:
      v.tag = TraceTag::Unresolved;
      v.detail = irr.evidence;
      break;
  }
  return v;
}

SalemVerdict classify_salem(const IntPoly& poly, const IrreducibilityOptions& opts) {
  if (poly.is_zero()) throw std::invalid_argument("classify_salem of the zero polynomial");
  SalemVerdict v;
  if (!poly.is_monic()) {
    v.tag = SalemTag::NotMonic;
    v.detail = "leading coefficient " + poly.lead().get_str();
    return v;
  }
  if (!is_reciprocal(poly)) {
    v.tag = SalemTag::NotReciprocal;
    v.detail = "coefficients are not palindromic";
    return v;
  }
  if (poly.degree() % 2 != 0) {
    v.tag = SalemTag::OddDegree;
    v.detail = "degree " + std::to_string(poly.degree());
    return v;
  }
  if (poly.degree() < 4) {
    v.tag = SalemTag::DegreeTooSmall;
    v.detail = "degree " + std::to_string(poly.degree()) + " < 4";
    return v;
  }
  IntPoly trace = compress_trace(poly);
  TraceVerdict tv = classify_trace(trace, opts);
  v.tag = from_trace_tag(tv.tag);
  v.detail = tv.detail;
  v.trace = trace;
  v.trace_verdict = tv;
  if (!tv.ok()) return v;

  auto roots = isolate_roots(poly);
  if (roots.empty()) throw std::logic_error("Salem polynomial without real roots");
  RootInterval alpha = roots.back();
  if (alpha.lo < 1) alpha.lo = 1;
  v.salem = SalemPolynomial{poly, static_cast<unsigned>(poly.degree() / 2), alpha};
  return v;
}

std::string approx_root(const IntPoly& p, const RootInterval& iv, unsigned digits) {
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  const Rational qscale(scale);
  Rational width = make_rational(1, scale);
  RootInterval cur = refine_root(p, iv, width);
  // Correct rounding needs both endpoints on the same side of a half-step.
  for (int round = 0; round < 256; ++round) {
    const Integer lo = round_half_away(cur.lo * qscale);
    const Integer hi = round_half_away(cur.hi * qscale);
    if (lo == hi) return format_fixed(lo, digits);
    if (hi - lo == 1) {
      const Rational boundary = (Rational(lo) + Rational(hi)) / 2 / qscale;
      if (sign_at(p, boundary) == 0) return format_fixed(round_half_away(boundary * qscale), digits);
    }
    const Rational mid = (cur.lo + cur.hi) / 2;
    if (sign_at(p, mid) == 0) return format_fixed(round_half_away(mid * qscale), digits);
    width /= 16;
    cur = refine_root(p, cur, width);
  }
  // Rational root sitting on a rounding boundary.
  return format_fixed(round_half_away((cur.lo + cur.hi) / 2 * qscale), digits);
}

}  // namespace salem
