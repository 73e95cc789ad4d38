#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "oracles.hpp"
#include "salem/errors.hpp"
#include "salem/forge.hpp"

using namespace salem;

TEST(Chebyshev, Values) {
  EXPECT_EQ(chebyshev(1), (IntPoly{0, 1}));
  EXPECT_EQ(chebyshev(2), (IntPoly{-2, 0, 1}));
  EXPECT_EQ(chebyshev(3), (IntPoly{0, -3, 0, 1}));
  EXPECT_THROW(chebyshev(0), std::invalid_argument);
}

TEST(Chebyshev, CosineIdentity) {
  for (unsigned k = 1; k <= 12; ++k) {
    const IntPoly t = chebyshev(k);
    EXPECT_TRUE(t.is_monic());
    EXPECT_EQ(t.degree(), static_cast<int>(k));
    EXPECT_TRUE(is_separable(t));
    EXPECT_EQ(sturm_count(t, Rational(-2), Rational(2)), k);
    for (int i = 0; i < 100; ++i) {
      const double theta = M_PI * i / 99.0;
      double v = 0, power = 1;
      for (const auto& c : t.coeffs()) {
        v += c.get_d() * power;
        power *= 2 * std::cos(theta);
      }
      EXPECT_NEAR(v, 2 * std::cos(k * theta), 1e-9);
    }
  }
}

TEST(CycloTrace, Values) {
  EXPECT_EQ(cyclo_trace(5), (IntPoly{-1, 1, 1}));
  EXPECT_EQ(cyclo_trace(6), (IntPoly{-1, 0, 1}));
  EXPECT_EQ(cyclo_trace(4), (IntPoly{0, 1}));
  EXPECT_EQ(cyclo_trace(1), IntPoly{1});
  EXPECT_EQ(cyclo_trace(2), IntPoly{1});
  EXPECT_EQ(cyclo_trace(3), (IntPoly{1, 1}));
}

TEST(CycloTrace, BasisIdentityAndRoots) {
  for (unsigned n = 1; n <= 24; ++n) {
    const IntPoly c = cyclo_trace(n);
    const IntPoly xn_minus_1 = IntPoly::monomial(1, n) - IntPoly{1};
    const IntPoly quotient = *exact_quotient(xn_minus_1, n % 2 ? IntPoly{-1, 1} : IntPoly{-1, 0, 1});
    EXPECT_EQ(expand_trace(c), quotient) << n;
    EXPECT_EQ(c.degree(), static_cast<int>(n % 2 ? (n - 1) / 2 : (n - 2) / 2));
    if (n >= 3) {
      EXPECT_TRUE(is_separable(c));
      EXPECT_EQ(sturm_count(c, Rational(-2), Rational(2)), static_cast<std::size_t>(c.degree()));
      // roots are 2cos(2 pi k / n)
      for (unsigned k = 1; 2 * k < n; ++k) {
        const double x = 2 * std::cos(2 * M_PI * k / n);
        double v = 0, power = 1;
        for (const auto& co : c.coeffs()) {
          v += co.get_d() * power;
          power *= x;
        }
        EXPECT_NEAR(v, 0.0, 1e-7) << n << " " << k;
      }
    }
  }
}

TEST(Coprimality, Examples) {
  EXPECT_TRUE(lemma1_coprime(2, 6));
  EXPECT_FALSE(lemma1_coprime(1, 4));
  for (unsigned k = 1; k <= 10; ++k) EXPECT_TRUE(lemma1_coprime(k, 1));
  EXPECT_FALSE(lemma2_coprime(5, 10));
  EXPECT_TRUE(lemma2_coprime(3, 4));
  EXPECT_TRUE(lemma2_coprime(2, 6));
}

TEST(Coprimality, BruteForce) {
  for (unsigned n = 1; n <= 24; ++n)
    for (unsigned m = 1; m <= 24; ++m) {
      const unsigned g = std::gcd(n, m);
      EXPECT_EQ(lemma2_coprime(n, m), g == 1 || g == 2) << n << "," << m;
    }
  for (unsigned k = 1; k <= 10; ++k)
    for (unsigned n = 1; n <= 24; ++n)
      if (n % 4 != 0) EXPECT_TRUE(lemma1_coprime(k, n)) << k << "," << n;
}

TEST(AuxiliaryFactor, Examples) {
  EXPECT_EQ(theorem1_D(3, 3), IntPoly{1});
  EXPECT_EQ(theorem1_D(4, 5), (IntPoly{1, 1}));
  EXPECT_EQ(theorem1_D(8, 7), (IntPoly{1, 1}));
  EXPECT_EQ(theorem1_D(20, 13), (IntPoly{-1, 1}));
  EXPECT_EQ(theorem1_D(5, 6), (IntPoly{-2, 0, 1}));
  EXPECT_EQ(theorem1_D(6, 7), (IntPoly{-2, 0, 1}));
  EXPECT_THROW(theorem1_D(12, 11), UnsupportedParameters);
  EXPECT_THROW(theorem1_D(2, 4), UnsupportedParameters);
  EXPECT_THROW(theorem1_D(5, 3), UnsupportedParameters);
  EXPECT_THROW(theorem1_D(4, 3), UnsupportedParameters);
  try {
    theorem1_D(12, 11);
  } catch (const UnsupportedParameters& e) {
    EXPECT_NE(std::string(e.what()).find("0 mod 3"), std::string::npos) << e.what();
  }
}

TEST(AuxiliaryFactor, SatisfiesGeneratorHypotheses) {
  for (unsigned n = 1; n <= 24; ++n)
    for (unsigned t = 2; t <= 20; ++t) {
      IntPoly d;
      try {
        d = theorem1_D(n, t);
      } catch (const UnsupportedParameters&) {
        continue;
      }
      EXPECT_NO_THROW(GeneratorSpec::make(n, t, d)) << n << "," << t;
    }
}

TEST(GeneratorSpec, Validation) {
  EXPECT_THROW(GeneratorSpec::make(2, 4, IntPoly{0, 1}), InvalidGeneratorSpec);
  EXPECT_THROW(GeneratorSpec::make(1, 3, IntPoly{1}), InvalidGeneratorSpec);            // degree
  EXPECT_THROW(GeneratorSpec::make(1, 4, IntPoly{0, 0, 1}), InvalidGeneratorSpec);      // repeated root
  EXPECT_THROW(GeneratorSpec::make(1, 4, IntPoly{-5, 0, 1}), InvalidGeneratorSpec);     // roots outside
  EXPECT_THROW(GeneratorSpec::make(1, 4, IntPoly{-4, 0, 1}), InvalidGeneratorSpec);     // roots at +-2
  EXPECT_THROW(GeneratorSpec::make(3, 4, IntPoly{1, 1}), InvalidGeneratorSpec);         // shares root with C_3
  EXPECT_THROW(GeneratorSpec::make(1, 3, IntPoly{1, 2}), InvalidGeneratorSpec);         // not monic
  EXPECT_NO_THROW(GeneratorSpec::make(1, 4, IntPoly{-2, 0, 1}));
  try {
    GeneratorSpec::make(6, 6, IntPoly{0, 1});
  } catch (const InvalidGeneratorSpec& e) {
    EXPECT_NE(std::string(e.what()).find("parity"), std::string::npos);
  }
}

TEST(ShiftedProduct, Polynomials) {
  const auto s12 = GeneratorSpec::automatic(1, 2);
  EXPECT_EQ(theorem3_polynomial(s12, 3), (IntPoly{5, -5, 1}));
  const auto s33 = GeneratorSpec::automatic(3, 3);
  for (long a = 3; a <= 8; ++a) EXPECT_EQ(theorem3_polynomial(s33, a), family_g_trace(a + 1));
  const auto s45 = GeneratorSpec::automatic(4, 5);
  for (long a = 3; a <= 8; ++a) EXPECT_EQ(theorem3_polynomial(s45, a), family_h_trace(a - 1));
}

TEST(ShiftedProduct, Thresholds) {
  EXPECT_EQ(theorem3_threshold(GeneratorSpec::automatic(3, 3)), Rational(3));
  EXPECT_EQ(theorem3_threshold(GeneratorSpec::automatic(1, 2)), Rational(3));
  EXPECT_EQ(theorem3_threshold(GeneratorSpec::make(2, 3, IntPoly{1})), Rational(3));
  EXPECT_EQ(theorem3_first_shift(GeneratorSpec::automatic(1, 2)), 3);
}

TEST(ShiftedProduct, ThresholdSoundness) {
  const std::vector<std::pair<unsigned, unsigned>> cases{{1, 2}, {3, 3}, {5, 4}, {7, 5}, {2, 3},
                                                         {6, 5}, {4, 5}, {8, 7}, {1, 6}, {3, 8}};
  for (auto [n, t] : cases) {
    const auto spec = GeneratorSpec::automatic(n, t);
    const Rational thr = theorem3_threshold(spec);
    EXPECT_GE(thr, 3);
    const Integer start = theorem3_first_shift(spec);
    EXPECT_GT(Rational(start), thr - 1);
    for (Integer a = start; a < start + 25; ++a) {
      const IntPoly r = theorem3_polynomial(spec, a);
      ASSERT_EQ(r.degree(), static_cast<int>(t));
      EXPECT_EQ(sturm_count(r, Rational(-2), Rational(2)), t - 1) << n << "," << t << " a=" << a;
      EXPECT_EQ(sturm_count(r, Rational(a), Rational(a + 1)), 1U) << n << "," << t << " a=" << a;
    }
    // distinct shifts give coprime polynomials
    for (Integer a = start; a < start + 6; ++a)
      EXPECT_EQ(gcd_q(theorem3_polynomial(spec, a), theorem3_polynomial(spec, a + 1)), IntPoly{1});
  }
}

TEST(ShiftedProduct, LargeSeparationBound) {
  // Fixed roots -sqrt3, sqrt3, 2: the gap (sqrt3, 2) is narrow, so A is far above 3.
  const auto spec = GeneratorSpec::make(1, 4, IntPoly{-3, 0, 1});
  const Rational thr = theorem3_threshold(spec);
  EXPECT_GT(thr, 15);
  EXPECT_LT(thr, 20);
  const Integer start = theorem3_first_shift(spec);
  EXPECT_GT(Rational(start), thr);
  EXPECT_LE(Rational(start - 1), thr);
  for (Integer a = start; a < start + 25; ++a) {
    const IntPoly r = theorem3_polynomial(spec, a);
    EXPECT_EQ(sturm_count(r, Rational(-2), Rational(2)), 3U) << a;
    EXPECT_EQ(sturm_count(r, Rational(a), Rational(a + 1)), 1U) << a;
  }
}

TEST(Generator, Examples) {
  const auto r12 = generate_salem_units(GeneratorSpec::automatic(1, 2), 1);
  ASSERT_EQ(r12.certificates.size(), 1U);
  const auto& c = r12.certificates[0];
  EXPECT_EQ(c.trace, (IntPoly{5, -5, 1}));
  EXPECT_EQ(c.salem.poly, expand_trace(IntPoly{5, -5, 1}));
  EXPECT_EQ(norm_pow_minus(c.salem.poly, 1), -1);

  const auto r23 = generate_salem_units(GeneratorSpec::automatic(2, 3), 3);
  ASSERT_EQ(r23.certificates.size(), 3U);
  for (const auto& cert : r23.certificates) {
    EXPECT_EQ(cert.salem.poly.degree(), 6);
    EXPECT_TRUE(is_exceptional_power(cert.salem.poly, 2));
  }
  const auto r65 = generate_salem_units(GeneratorSpec::automatic(6, 5), 1);
  ASSERT_EQ(r65.certificates.size(), 1U);
  EXPECT_EQ(r65.certificates[0].salem.poly.degree(), 10);
  EXPECT_TRUE(unit_spectrum(r65.certificates[0].salem.poly, 6).members.count(6));
}

TEST(Generator, CertificatesRevalidate) {
  for (auto [n, t] : std::vector<std::pair<unsigned, unsigned>>{{5, 4}, {7, 5}, {4, 5}, {8, 7}}) {
    const auto res = generate_salem_units(GeneratorSpec::automatic(n, t), 3, Integer(10));
    ASSERT_EQ(res.certificates.size(), 3U);
    Integer prev = 9;
    for (const auto& c : res.certificates) {
      EXPECT_GT(*c.shift, prev);
      prev = *c.shift;
      EXPECT_EQ(compress_trace(c.salem.poly), c.trace);
      EXPECT_TRUE(classify_salem(c.salem.poly).ok());
      ASSERT_EQ(c.certificates.size(), 1U);
      EXPECT_EQ(c.certificates[0].norm_minus, -1);
      EXPECT_EQ(c.provenance.construction, "theorem3");
      EXPECT_EQ(*c.provenance.n, n);
    }
  }
}

TEST(Generator, RejectsZeroCount) {
  EXPECT_THROW(generate_salem_units(GeneratorSpec::automatic(1, 2), 0), std::invalid_argument);
}

TEST(DegreeEnumeration, Degrees) {
  EXPECT_EQ(theorem2_degrees(12, 3), (std::vector<std::pair<unsigned, unsigned>>{{1, 11}, {2, 13}, {4, 17}}));
  EXPECT_EQ(theorem2_degrees(4, 1), (std::vector<std::pair<unsigned, unsigned>>{{0, 5}}));
  EXPECT_EQ(theorem2_degrees(8, 1), (std::vector<std::pair<unsigned, unsigned>>{{0, 7}}));
  EXPECT_THROW(theorem2_degrees(6, 1), UnsupportedParameters);
  for (auto [v, t] : theorem2_degrees(12, 3)) {
    EXPECT_TRUE(lemma2_coprime(12, 4 * v + 3));
    EXPECT_EQ(2 * t, 4 * v + 12 + 6);
  }
}

TEST(Family, Values) {
  EXPECT_EQ(family(Family::F, 0), (IntPoly{1, 0, -1, -1, -1, 0, 1}));
  EXPECT_EQ(family(Family::G, 3), (IntPoly{1, -3, 3, -3, 3, -3, 1}));
  for (long a : {3, 5, 10}) EXPECT_EQ(family(Family::H, a), expand_trace(family_h_trace(a)));
  EXPECT_EQ(parse_family("g"), Family::G);
  EXPECT_FALSE(parse_family("Q").has_value());
}

TEST(Recurrence, Pairs) {
  const auto p = prop4_pairs(6);
  ASSERT_EQ(p.size(), 6U);
  EXPECT_EQ(p[0].a, 0);
  EXPECT_EQ(p[0].b, 0);
  EXPECT_EQ(p[1].a, -1);
  EXPECT_EQ(p[1].b, 2);
  EXPECT_EQ(p[2].a, -6);
  EXPECT_EQ(p[2].b, 15);
  EXPECT_EQ(p[3].a, -40);
  EXPECT_EQ(p[3].b, 104);
  for (std::size_t k = 0; k < p.size(); ++k) {
    EXPECT_EQ(pair_form(p[k].a, p[k].b), 0);
    if (k >= 2) {
      EXPECT_LT(p[k].a, p[k - 1].a);
      EXPECT_GT(p[k].b, p[k - 1].b);
    }
  }
}

TEST(Recurrence, Traces) {
  EXPECT_EQ(prop4_trace({0, 0, 0}), (IntPoly{1, -3, -1, 1}));
  EXPECT_EQ(prop4_trace({-1, 2, 1}), (IntPoly{1, -1, -2, 1}));
  EXPECT_THROW(prop4_trace({1, 1, 0}), std::invalid_argument);
  const IntPoly base = IntPoly{-1, 1, 1} * IntPoly{-2, 1};
  for (const auto& pr : prop4_pairs(6)) {
    const IntPoly t = prop4_trace(pr);
    EXPECT_EQ(resultant(base, t), -1);
    EXPECT_TRUE(classify_trace(t).ok());
    EXPECT_TRUE(is_exceptional_power(expand_trace(t), 5));
  }
}
