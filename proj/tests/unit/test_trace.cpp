#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "salem/forge.hpp"
#include "salem/trace.hpp"
#include "salem/units.hpp"

using namespace salem;

namespace {
const IntPoly kF0{1, 0, -1, -1, -1, 0, 1};
const IntPoly kQuartic{1, -1, -1, -1, 1};

Rational from_decimal(const std::string& text) {
  const auto dot = text.find('.');
  std::string digits = text;
  Integer scale = 1;
  if (dot != std::string::npos) {
    digits.erase(dot, 1);
    for (std::size_t k = dot + 1; k < text.size(); ++k) scale *= 10;
  }
  return make_rational(Integer(digits, 10), scale);
}
}  // namespace

TEST(Trace, Expand) {
  EXPECT_EQ(expand_trace(IntPoly{-3, 1}), (IntPoly{1, -3, 1}));
  EXPECT_EQ(expand_trace(IntPoly{-1, -4, 0, 1}), kF0);
  for (long a : {3, 4, 5}) EXPECT_EQ(expand_trace(family_g_trace(a)), family(Family::G, a)) << a;
  EXPECT_THROW(expand_trace(IntPoly{1, 2}), std::invalid_argument);
}

TEST(Trace, Compress) {
  EXPECT_EQ(compress_trace(kF0), (IntPoly{-1, -4, 0, 1}));
  EXPECT_EQ(compress_trace(kQuartic), (IntPoly{-3, -1, 1}));
  EXPECT_THROW(compress_trace(IntPoly{0, -1, 1}), std::invalid_argument);
  EXPECT_THROW(compress_trace(IntPoly{1, 1, 1, 1}), std::invalid_argument);
}

TEST(Trace, RoundTripAndReciprocity) {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 200; ++i) {
    const IntPoly t = oracle::random_poly(rng, 1 + i % 10, 25, true);
    const IntPoly s = expand_trace(t);
    EXPECT_EQ(s.degree(), 2 * t.degree());
    EXPECT_TRUE(is_reciprocal(s));
    EXPECT_TRUE(oracle::palindromic(s));
    EXPECT_EQ(s.reversed(), s);
    EXPECT_EQ(compress_trace(s), t);
  }
}

TEST(Trace, ExpandMatchesSubstitution) {
  // x^t T(x + 1/x) evaluated at a rational point.
  std::mt19937_64 rng(31);
  for (int i = 0; i < 50; ++i) {
    const IntPoly t = oracle::random_poly(rng, 1 + i % 6, 9, true);
    const Rational x = make_rational(static_cast<long>(rng() % 13) + 1, static_cast<long>(rng() % 7) + 1);
    Rational xt = 1;
    for (int k = 0; k < t.degree(); ++k) xt *= x;
    EXPECT_EQ(evaluate(expand_trace(t), x), xt * oracle::power_sum_eval(t, Rational(x + 1 / x)));
  }
}

TEST(Reciprocal, Examples) {
  EXPECT_TRUE(is_reciprocal(kF0));
  EXPECT_FALSE(is_reciprocal(IntPoly{0, -1, 1}));
  EXPECT_TRUE(is_reciprocal(IntPoly{1}));
  EXPECT_THROW(is_reciprocal(IntPoly()), std::invalid_argument);
}

TEST(ClassifyTrace, Examples) {
  EXPECT_EQ(classify_trace(IntPoly{-3, -1, 1}).tag, TraceTag::SalemTrace);
  EXPECT_EQ(classify_trace(IntPoly{5, -5, 1}).tag, TraceTag::SalemTrace);
  const auto v = classify_trace(IntPoly{-3, 0, 1});
  EXPECT_EQ(v.tag, TraceTag::WrongRootLayout);
  ASSERT_TRUE(v.layout);
  EXPECT_EQ(v.layout->above_two, 0U);
  EXPECT_EQ(v.layout->inside, 2U);
}

TEST(ClassifyTrace, Failures) {
  EXPECT_EQ(classify_trace(IntPoly{-3, -1, 2}).tag, TraceTag::NotMonic);
  EXPECT_EQ(classify_trace(IntPoly{1, -2, 1}).tag, TraceTag::NotSeparable);
  // (x - 3)(x^2 - 2): layout fine, reducible
  const auto r = classify_trace(IntPoly{-3, 1} * IntPoly{-2, 0, 1});
  EXPECT_EQ(r.tag, TraceTag::Reducible);
  // root exactly at 2
  const auto at2 = classify_trace(IntPoly{-2, 1} * IntPoly{-5, 1});
  EXPECT_EQ(at2.tag, TraceTag::WrongRootLayout);
  EXPECT_EQ(at2.layout->at_two, 1U);
  // root at -2 and below
  const auto low = classify_trace(IntPoly{2, 1} * IntPoly{-5, 1});
  EXPECT_EQ(low.layout->at_or_below_minus_two, 1U);
  EXPECT_EQ(classify_trace(IntPoly{-5, 1}).tag, TraceTag::WrongRootLayout);
}

TEST(ClassifySalem, Examples) {
  const auto v = classify_salem(kF0);
  ASSERT_TRUE(v.ok());
  EXPECT_EQ(v.salem->half_degree, 3U);
  EXPECT_GE(v.salem->alpha_interval.lo, 1);
  EXPECT_FALSE(classify_salem(IntPoly{-1, 0, 0, 0, 1}).ok());
  EXPECT_EQ(classify_salem(IntPoly{1, 1, 1, 1, 1}).tag, SalemTag::WrongRootLayout);
  EXPECT_EQ(classify_salem(IntPoly{1, -3, 1}).tag, SalemTag::DegreeTooSmall);
  EXPECT_EQ(classify_salem(IntPoly{1, 2, 2, 1}).tag, SalemTag::OddDegree);
  EXPECT_EQ(classify_salem(IntPoly{1, 0, 1, 0, 2}).tag, SalemTag::NotMonic);
  EXPECT_EQ(classify_salem(IntPoly{1, 0, 1, 0, -1, 1}).tag, SalemTag::NotReciprocal);
}

TEST(ClassifySalem, Invariants) {
  std::vector<IntPoly> salems{kF0, kQuartic};
  for (long a = 0; a <= 6; ++a) salems.push_back(family(Family::F, a));
  for (long a = 3; a <= 8; ++a) salems.push_back(family(Family::G, a));
  for (const auto& s : salems) {
    const auto v = classify_salem(s);
    ASSERT_TRUE(v.ok()) << s;
    const auto t = static_cast<std::size_t>(v.trace->degree());
    EXPECT_EQ(sturm_count(*v.trace, Rational(2), cauchy_bound(*v.trace) + 1), 1U);
    EXPECT_EQ(sturm_count(*v.trace, Rational(-2), Rational(2)), t - 1);
    EXPECT_LT(evaluate(s, Integer(1)), 0);
    EXPECT_GT(evaluate(s, Integer(-1)), 0);
    // one root > 1, one in (0, 1), all others on the unit circle
    const auto roots = oracle::numeric_roots(s);
    int outside = 0, inside = 0, circle = 0;
    for (auto r : roots) {
      const double m = std::abs(r);
      if (m > 1 + 1e-6) ++outside;
      else if (m < 1 - 1e-6) ++inside;
      else ++circle;
    }
    EXPECT_EQ(outside, 1);
    EXPECT_EQ(inside, 1);
    EXPECT_EQ(circle, s.degree() - 2);
  }
}

TEST(ApproxRoot, Examples) {
  const auto v = classify_salem(kF0);
  EXPECT_EQ(approx_root(kF0, v.salem->alpha_interval, 5), "1.40127");
  EXPECT_EQ(approx_root(kF0, v.salem->alpha_interval, 6), "1.401268");
  const auto roots = isolate_roots(IntPoly{5, -5, 1});
  EXPECT_EQ(approx_root(IntPoly{5, -5, 1}, roots[1], 3), "3.618");
  const auto q = classify_salem(kQuartic);
  EXPECT_EQ(approx_root(kQuartic, q.salem->alpha_interval, 5), "1.72208");
}

TEST(ApproxRoot, RationalRootsAndConsistency) {
  const IntPoly p = IntPoly{-1, 8};  // 1/8
  const auto iv = isolate_roots(p).at(0);
  EXPECT_EQ(approx_root(p, iv, 3), "0.125");
  EXPECT_EQ(approx_root(p, iv, 2), "0.13");
  EXPECT_EQ(approx_root(IntPoly{3, 2}, isolate_roots(IntPoly{3, 2}).at(0), 1), "-1.5");
  const auto v = classify_salem(kF0);
  Rational prev;
  for (unsigned d = 1; d <= 20; ++d) {
    const Rational cur = from_decimal(approx_root(kF0, v.salem->alpha_interval, d));
    if (d > 1) {
      Rational step(1);
      for (unsigned k = 1; k < d; ++k) step /= 10;
      EXPECT_LE(abs(cur - prev), step) << d;
    }
    prev = cur;
  }
}
