#include "salem/roots.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

#include "salem/errors.hpp"

namespace salem {

namespace {

int sign_at_minus_infinity(const IntPoly& p) {
  const int s = sgn(p.lead());
  return (p.degree() % 2 == 0) ? s : -s;
}

template <typename SignFn>
std::size_t count_variations(const std::vector<IntPoly>& chain, SignFn sign_of) {
  std::size_t v = 0;
  int prev = 0;
  for (const auto& q : chain) {
    const int s = sign_of(q);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

Rational midpoint(const Rational& a, const Rational& b) { return (a + b) / 2; }

// A point strictly inside (lo, hi) where p does not vanish, close to the middle.
Rational split_point(const IntPoly& p, const Rational& lo, const Rational& hi) {
  Rational m = midpoint(lo, hi);
  Rational step = (hi - lo) / 4;
  while (sign_at(p, m) == 0) {
    m += step;
    step /= 2;
  }
  return m;
}

}  // namespace

Rational cauchy_bound(const IntPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("cauchy bound of the zero polynomial");
  Integer mx = 0;
  for (int k = 0; k < p.degree(); ++k) {
    Integer a = abs(p.coeff(static_cast<std::size_t>(k)));
    if (a > mx) mx = a;
  }
  return Rational(1) + make_rational(mx, abs(p.lead()));
}

SturmSequence::SturmSequence(const IntPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("Sturm sequence of the zero polynomial");
  chain_.push_back(p);
  IntPoly d = p.derivative();
  if (d.is_zero()) return;
  chain_.push_back(d.primitive_part());
  for (;;) {
    const IntPoly& a = chain_[chain_.size() - 2];
    const IntPoly& b = chain_.back();
    if (b.degree() == 0) break;
    // prem = lead(b)^(delta+1) * rem; undo the sign of that factor.
    IntPoly r = pseudo_remainder(a, b);
    if (r.is_zero()) break;
    const int delta = a.degree() - b.degree();
    const bool flip = b.lead() < 0 && (delta + 1) % 2 == 1;
    r = r.primitive_part();
    if (!flip) r = -r;
    chain_.push_back(std::move(r));
  }
}

std::size_t SturmSequence::variations(const Rational& x) const {
  return count_variations(chain_, [&](const IntPoly& q) { return sign_at(q, x); });
}

std::size_t SturmSequence::variations_at_minus_infinity() const {
  return count_variations(chain_, [](const IntPoly& q) { return sign_at_minus_infinity(q); });
}

std::size_t SturmSequence::variations_at_plus_infinity() const {
  return count_variations(chain_, [](const IntPoly& q) { return sgn(q.lead()); });
}

std::size_t SturmSequence::count(const Rational& lo, const Rational& hi) const {
  if (!(lo < hi)) return 0;
  return variations(lo) - variations(hi);
}

std::size_t SturmSequence::count_all() const {
  return variations_at_minus_infinity() - variations_at_plus_infinity();
}

std::size_t sturm_count(const IntPoly& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero()) throw std::invalid_argument("sturm_count of the zero polynomial");
  if (!(lo < hi)) throw std::invalid_argument("sturm_count needs lo < hi");
  for (const Rational* end : {&lo, &hi}) {
    if (sign_at(p, *end) != 0) continue;
    Rational nudge(1, 2);
    Rational moved = *end;
    for (;;) {
      moved = (end == &lo) ? Rational(*end - nudge) : Rational(*end + nudge);
      if (sign_at(p, moved) != 0) break;
      nudge /= 2;
    }
    std::ostringstream hint;
    hint << "endpoint " << *end << " is a root; retry with " << moved;
    throw EndpointRootError("sturm_count endpoint is a root of the polynomial", hint.str());
  }
  return SturmSequence(p).count(lo, hi);
}

std::vector<RootInterval> isolate_roots(const IntPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("isolate_roots of the zero polynomial");
  std::vector<RootInterval> out;
  if (p.degree() == 0) return out;
  const IntPoly sf = squarefree_part(p);
  const SturmSequence sturm(sf);
  const Rational bound = cauchy_bound(sf);

  // Depth-first, left half first, so intervals come out sorted.
  std::vector<std::pair<RootInterval, std::size_t>> stack;
  const std::size_t total = sturm.count(-bound, bound);
  if (total > 0) stack.push_back({{-bound, bound}, total});
  while (!stack.empty()) {
    auto [iv, n] = stack.back();
    stack.pop_back();
    if (n == 1) {
      out.push_back(iv);
      continue;
    }
    const Rational m = split_point(sf, iv.lo, iv.hi);
    const std::size_t left = sturm.count(iv.lo, m);
    const std::size_t right = n - left;
    if (right > 0) stack.push_back({{m, iv.hi}, right});
    if (left > 0) stack.push_back({{iv.lo, m}, left});
  }
  return out;
}

RootInterval refine_root(const IntPoly& p, RootInterval iv, const Rational& max_width) {
  if (max_width <= 0) throw std::invalid_argument("refinement width must be positive");
  const IntPoly sf = squarefree_part(p);
  int slo = sign_at(sf, iv.lo);
  const int shi = sign_at(sf, iv.hi);
  if (slo == 0 || shi == 0 || slo == shi)
    throw std::invalid_argument("interval does not isolate a simple root");
  while (iv.width() > max_width) {
    const Rational m = midpoint(iv.lo, iv.hi);
    const int sm = sign_at(sf, m);
    if (sm == 0) {
      // m is the root itself; m +- max_width/4 stays inside iv.
      const Rational quarter = max_width / 4;
      return {m - quarter, m + quarter};
    }
    if (sm == slo) {
      iv.lo = m;
      slo = sm;
    } else {
      iv.hi = m;
    }
  }
  return iv;
}

}  // namespace salem
