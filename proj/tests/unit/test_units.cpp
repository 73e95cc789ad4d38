#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "salem/errors.hpp"
#include "salem/forge.hpp"
#include "salem/units.hpp"

using namespace salem;

namespace {

const IntPoly kF0{1, 0, -1, -1, -1, 0, 1};
const IntPoly kQuartic{1, -1, -1, -1, 1};

std::vector<IntPoly> salem_corpus() {
  std::vector<IntPoly> out{kF0, kQuartic};
  for (long a = 0; a <= 8; ++a) out.push_back(family(Family::F, a));
  for (long a = 3; a <= 8; ++a) out.push_back(family(Family::G, a));
  for (long a = 3; a <= 6; ++a) out.push_back(family(Family::H, a));
  return out;
}

}  // namespace

TEST(Norm, F0Examples) {
  EXPECT_EQ(norm_pow_minus(kF0, 4), -1);
  EXPECT_EQ(norm_pow_minus(kF0, 2), -1);
  EXPECT_GT(abs(norm_pow_minus(kF0, 3)), 1);
  EXPECT_EQ(norm_pow_plus(kF0, 1), 1);
  EXPECT_EQ(norm_pow_plus(kF0, 2), 1);
  EXPECT_EQ(norm_pow_plus(kF0, 1), evaluate(kF0, Integer(-1)));
  EXPECT_EQ(norm_pow_minus(kF0, 2), evaluate(kF0, Integer(1)) * evaluate(kF0, Integer(-1)));
}

TEST(Norm, MatchesSylvesterAndFloatingProducts) {
  for (const auto& s : salem_corpus())
    for (unsigned n = 1; n <= 8; ++n) {
      IntPoly xn = IntPoly::monomial(1, n);
      const Integer minus = norm_pow_minus(s, n);
      EXPECT_EQ(minus, oracle::sylvester_resultant(s, xn - IntPoly{1}));
      EXPECT_EQ(norm_pow_plus(s, n), oracle::sylvester_resultant(s, xn + IntPoly{1}));
      const auto prod = oracle::numeric_root_product(s, xn - IntPoly{1});
      EXPECT_NEAR(prod.real(), minus.get_d(), 1e-6 * std::max(1.0, std::abs(minus.get_d())));
    }
}

TEST(Norm, RejectsBadInput) {
  EXPECT_THROW(norm_pow_minus(IntPoly{1, 2}, 2), std::invalid_argument);
  EXPECT_THROW(norm_pow_minus(kF0, 0), std::invalid_argument);
}

TEST(Exceptional, Examples) {
  EXPECT_TRUE(is_exceptional_power(kF0, 4));
  EXPECT_FALSE(is_exceptional_power(kF0, 3));
  EXPECT_TRUE(is_exceptional_power(kQuartic, 3));
}

TEST(Spectrum, Examples) {
  EXPECT_EQ(unit_spectrum(kF0, 6).members, (std::set<unsigned>{1, 2, 4}));
  const auto h = unit_spectrum(family(Family::H, 3), 4);
  EXPECT_EQ(h.members, (std::set<unsigned>{1, 2, 3, 4}));
  const IntPoly g = family(Family::G, 4);
  EXPECT_EQ(unit_spectrum(g, 1).members.count(1) == 1, evaluate(g, Integer(1)) == -1);
  EXPECT_THROW(unit_spectrum(kF0, 0), std::invalid_argument);
}

TEST(Spectrum, Laws) {
  for (const auto& s : salem_corpus()) {
    const auto spec = unit_spectrum(s, 12);
    ASSERT_EQ(spec.certificates.size(), 12U);
    for (const auto& c : spec.certificates) {
      EXPECT_LT(c.norm_minus, 0) << s << " n=" << c.n;
      EXPECT_GT(c.norm_plus, 0) << s << " n=" << c.n;
      EXPECT_EQ(c.is_unit_minus, c.norm_minus == -1);
      EXPECT_EQ(c.is_unit_minus, spec.members.count(c.n) == 1);
      EXPECT_EQ(c.is_unit_minus, is_exceptional_power(s, c.n));
      if (c.n % 2 == 0 && c.is_unit_minus) EXPECT_EQ(spec.members.count(2), 1U);
    }
    EXPECT_EQ(spec.certificates[1].norm_minus, spec.certificates[0].norm_minus * spec.certificates[0].norm_plus);
    // monotone under max_n
    const auto small = unit_spectrum(s, 5);
    for (unsigned n : small.members) EXPECT_EQ(spec.members.count(n), 1U);
    for (unsigned n : spec.members)
      if (n <= 5) EXPECT_EQ(small.members.count(n), 1U);
  }
}

TEST(Evertse, Values) {
  EXPECT_EQ(evertse_bound(1), 1029);
  EXPECT_EQ(evertse_bound(2), 352947);
  EXPECT_EQ(evertse_bound(4), Integer("41523861603"));
  EXPECT_THROW(evertse_bound(0), std::invalid_argument);
}

TEST(CoefficientIdentity, Examples) {
  EXPECT_TRUE(prop1_check(kF0, 2));
  EXPECT_TRUE(prop1_check(kF0, 4));
  EXPECT_FALSE(prop1_check(IntPoly{1, 2, 3, 2, 1}, 1));
  EXPECT_THROW(prop1_check(kF0, 5), std::invalid_argument);
  EXPECT_THROW(prop1_check(IntPoly{1, 2, 1, 1}, 1), std::invalid_argument);
}

TEST(TraceEvaluation, Examples) {
  EXPECT_TRUE(prop23_check(IntPoly{-3, -1, 1}, 3));
  EXPECT_TRUE(prop23_check(IntPoly{-1, -4, 0, 1}, 4));
  EXPECT_FALSE(prop23_check(IntPoly{-3, -1, 1}, 2));
  EXPECT_THROW(prop23_check(IntPoly{-3, -1, 1}, 5), std::invalid_argument);
}

TEST(StructuralForm, Examples) {
  EXPECT_EQ(structural_form(IntPoly{-1, -4, 0, 1}, 4), IntPoly{1});
  EXPECT_EQ(structural_form(IntPoly{1, -3, -1, 1}, 1), (IntPoly{-1, 1, 1}));
  EXPECT_THROW(structural_form(IntPoly{-3, -1, 1}, 2), NoStructuralForm);
}

TEST(StructuralForm, MatchesEvaluationCheckAndRecombines) {
  std::mt19937_64 rng(47);
  int hits = 0;
  for (int i = 0; i < 3000; ++i) {
    const unsigned n = std::vector<unsigned>{1, 2, 3, 4, 6}[static_cast<std::size_t>(i) % 5];
    // bias towards hits: build C_n (x-2 or x^2-4) Q - 1 half the time
    IntPoly t;
    if (i % 2 == 0) {
      const IntPoly fixed = cyclo_trace(n) * (n % 2 == 0 ? IntPoly{-4, 0, 1} : IntPoly{-2, 1});
      t = fixed * oracle::random_poly(rng, static_cast<int>(rng() % 4), 5, true) - IntPoly{1};
      if (rng() % 3 == 0) t = t + IntPoly{static_cast<long>(rng() % 3) - 1};
    } else {
      t = oracle::random_poly(rng, 1 + static_cast<int>(rng() % 6), 6, true);
    }
    const bool ok = prop23_check(t, n);
    try {
      const IntPoly q = structural_form(t, n);
      EXPECT_TRUE(ok) << t << " n=" << n;
      const IntPoly fixed = cyclo_trace(n) * (n % 2 == 0 ? IntPoly{-4, 0, 1} : IntPoly{-2, 1});
      EXPECT_EQ(fixed * q - IntPoly{1}, t);
      EXPECT_TRUE(q.is_monic());
      ++hits;
    } catch (const NoStructuralForm&) {
      EXPECT_FALSE(ok) << t << " n=" << n;
    }
  }
  EXPECT_GT(hits, 100);
}

TEST(Equivalence, CoefficientTraceNorm) {
  std::vector<IntPoly> corpus = salem_corpus();
  std::mt19937_64 rng(53);
  for (int i = 0; i < 200; ++i) corpus.push_back(oracle::random_reciprocal(rng, 2 + i % 5, 3));
  for (const auto& s : corpus) {
    const IntPoly t = compress_trace(s);
    const bool salem = classify_salem(s).ok();
    for (unsigned n = 1; n <= 4; ++n) {
      const bool p1 = prop1_check(s, n);
      EXPECT_EQ(p1, prop23_check(t, n)) << s << " n=" << n;
      if (salem) EXPECT_EQ(p1, is_exceptional_power(s, n)) << s << " n=" << n;
    }
    if (salem) EXPECT_EQ(prop23_check(t, 6), is_exceptional_power(s, 6)) << s;
  }
}
