#include <gtest/gtest.h>

#include "polydeg/errors.hpp"
#include "polydeg/picgen.hpp"
#include "support.hpp"

using namespace polydeg;
using testing_support::P;

TEST(Generators, GExamples) {
  for (unsigned e = 1; e <= 4; ++e) EXPECT_EQ(g_poly(1, e), P("-x1", VarContext::conjecture(e)));
  EXPECT_EQ(g_poly(2, 2), P("2*x1^2 - x2", VarContext::conjecture(2)));
  EXPECT_EQ(g_poly(3, 1), P("-5*x1^3", VarContext::conjecture(1)));
  EXPECT_EQ(g_poly(4, 2), P("14*x1^4 - 21*x1^2*x2 + 3*x2^2", VarContext::conjecture(2)));
}

TEST(Generators, GCatalan) {
  for (unsigned d = 1; d <= 20; ++d) {
    Rational c(testing_support::catalan(d));
    if (d % 2) c = -c;
    EXPECT_EQ(g_poly(d, 1), c * MultiPoly::variable(VarContext::conjecture(1), 0).pow(d)) << d;
  }
}

TEST(Generators, GMatchesDefiningSum) {
  for (unsigned d = 1; d <= 12; ++d)
    for (unsigned e = 1; e <= 4; ++e) EXPECT_EQ(g_poly(d, e), testing_support::oracle_g(d, e)) << d << "," << e;
}

TEST(Generators, AlphaExamples) {
  const auto c = VarContext::conjecture(2);
  for (long i = 0; i < 4; ++i) EXPECT_EQ(alpha_poly(i, i, 2), MultiPoly::constant(c, 1));
  EXPECT_EQ(alpha_poly(0, 1, 2), P("-4*x1", c));
  EXPECT_EQ(alpha_poly(0, 2, 2), P("15*x1^2 - 5*x2", c));
  EXPECT_TRUE(alpha_poly(3, 1, 2).is_zero());
  for (long i = -2; i <= 3; ++i)
    for (long j = i; j <= i + 6; ++j)
      for (unsigned e = 1; e <= 3; ++e) EXPECT_EQ(alpha_poly(i, j, e), testing_support::oracle_alpha(i, j, e));
}

TEST(Generators, AMinorExamples) {
  EXPECT_EQ(a_minor(2, 2), P("5*x1^2 + 5*x2", VarContext::conjecture(2)));
  EXPECT_EQ(a_minor(2, 1), P("-4*x1", VarContext::conjecture(1)));
  EXPECT_EQ(a_minor(1, 1), MultiPoly::constant(VarContext::conjecture(1), 1));
  for (unsigned d = 1; d <= 10; ++d) {
    Rational c(testing_support::fact(2 * d) / (testing_support::fact(d - 1) * testing_support::fact(d + 1)));
    if ((d - 1) % 2) c = -c;
    EXPECT_EQ(a_minor(d, 1), c * MultiPoly::variable(VarContext::conjecture(1), 0).pow(d - 1));
  }
}

TEST(Generators, AMinorMatchesLeibniz) {
  for (unsigned e = 2; e <= 4; ++e)
    for (unsigned d = 1; d <= 5; ++d) {
      std::vector<std::vector<MultiPoly>> m;
      for (unsigned i = 0; i < e; ++i) {
        m.emplace_back();
        for (unsigned c = 0; c < e; ++c) m.back().push_back(testing_support::oracle_alpha(i, d - 1 + c, e));
      }
      EXPECT_EQ(a_minor(d, e), testing_support::oracle_det(m)) << d << "," << e;
    }
}

TEST(GeneratorsProperty, IntegralityAndAlphaConsistency) {
  for (unsigned d = 1; d <= 12; ++d)
    for (unsigned e = 1; e <= 4; ++e) {
      MultiPoly g = g_poly(d, e);
      for (const auto& [m, c] : g.terms()) EXPECT_EQ(c.get_den(), 1);
      EXPECT_EQ(Rational(d + 1) * g, alpha_poly(-2, static_cast<long>(d) - 2, e));
    }
}

TEST(GeneratorsProperty, TruncationCoherence) {
  for (unsigned d = 1; d <= 12; ++d)
    for (unsigned e = 2; e <= 4; ++e) {
      VarContext lower = VarContext::conjecture(e - 1);
      MultiPoly reduced = substitute(g_poly(d, e), {{"x" + std::to_string(e), Rational(0)}}).rebased(lower);
      EXPECT_EQ(reduced, g_poly(d, e - 1)) << d << "," << e;
    }
}

TEST(Pic, DirectExamples) {
  EXPECT_TRUE(pic_direct(2, 2).overall.is_true());
  EXPECT_TRUE(pic_direct(2, 3).overall.is_true());
  for (unsigned d = 2; d <= 8; ++d) {
    PicReport r = pic_direct(d, 1);
    EXPECT_TRUE(r.overall.is_true()) << d;
    EXPECT_TRUE(r.clause_maximality.is_true());
    EXPECT_TRUE(r.clause_nonmembership.is_true());
  }
}

TEST(Pic, IncrementalExamples) {
  EXPECT_TRUE(pic_incremental(2, 2).overall.is_true());
  EXPECT_TRUE(pic_incremental(2, 3).overall.is_true());
  EXPECT_TRUE(pic_incremental(3, 2).overall.is_true());
  EXPECT_TRUE(pic_direct(3, 2).overall.is_true());
}

TEST(Pic, ClosedFormE1MatchesDirect) {
  for (unsigned d = 2; d <= 6; ++d) {
    EXPECT_TRUE(pic_closed_form_e1(d).overall.is_true());
    EXPECT_TRUE(pic_incremental(d, 1).overall.is_true());
  }
}

TEST(Pic, CertificatesVerify) {
  PicReport r = pic_direct(3, 3);
  ASSERT_TRUE(r.overall.is_true());
  ASSERT_EQ(r.certificates.size(), 3u);
  for (const auto& c : r.certificates) EXPECT_TRUE(verify_certificate(c)) << c.variable;
}

TEST(Pic, TinyBudgetIsIndeterminate) {
  PicOptions o;
  o.limits.max_pairs = 1;
  for (auto r : {pic_direct(3, 3, o), pic_incremental(3, 3, o)}) {
    EXPECT_TRUE(r.overall.is_indeterminate());
    EXPECT_FALSE(r.overall.is_false());
  }
}

TEST(Pic, CombineClauses) {
  Verdict t{Truth::true_, "", 0}, f{Truth::false_, "", 0}, i{Truth::indeterminate, "", 0};
  EXPECT_TRUE(combine_clauses(t, t).is_true());
  EXPECT_TRUE(combine_clauses(t, f).is_false());
  EXPECT_TRUE(combine_clauses(i, f).is_false());
  EXPECT_TRUE(combine_clauses(i, t).is_indeterminate());
}

TEST(PicProperty, MethodsNeverContradict) {
  for (unsigned e = 2; e <= 3; ++e)
    for (unsigned d = 2; d <= 5; ++d) {
      auto a = pic_direct(d, e).overall, b = pic_incremental(d, e).overall;
      EXPECT_FALSE((a.is_true() && b.is_false()) || (a.is_false() && b.is_true())) << d << "," << e;
    }
}

TEST(Edo, Examples) {
  EdoSeed s = edo_psi(3, 2, 1);
  EXPECT_EQ(s.c0, 3);
  EXPECT_EQ(edo_psi(3, 2, 2).c0, 12);
  EXPECT_EQ(edo_psi(2, 1, 1).c0, 2);
  EXPECT_THROW(edo_psi(3, 3, 1), UsageError);
  EXPECT_THROW(edo_psi(3, 2, 0), UsageError);
}

// The constant of the closed form differs from the evaluated c0 by d+e.
TEST(Edo, NormalizationRatio) {
  for (auto [d, e] : std::vector<std::pair<unsigned, unsigned>>{{2, 1}, {3, 1}, {3, 2}, {5, 2}, {4, 3}, {7, 3}, {5, 4}}) {
    EdoSeed s = edo_psi(d, e, ratio(3, 2));
    EXPECT_EQ(s.ratio, Rational(d + e)) << d << "," << e;
    EXPECT_EQ(s.c0 * (d + e), s.normalization);
  }
}

TEST(EdoProperty, AlphaStructure) {
  for (auto [d, e] : std::vector<std::pair<unsigned, unsigned>>{{3, 2}, {4, 3}, {5, 2}, {5, 4}, {7, 3}}) {
    const Rational t = ratio(-2, 3);
    EdoSeed s = edo_psi(d, e, t);
    for (long i = 0; i < static_cast<long>(e); ++i)
      for (long j = d - 1; j <= static_cast<long>(d + e) - 2; ++j) {
        Rational v = evaluate(alpha_poly(i, j, e), s.psi);
        if (j < i || (j - i) % e != 0) {
          EXPECT_EQ(v, 0) << i << "," << j;
          continue;
        }
        long n = (j - i) / e;
        Rational want(binomial(n + j + 2, n));
        mpq_class tn = 1;
        for (long k = 0; k < n; ++k) tn *= t;
        want *= tn;
        if (n % 2) want = -want;
        EXPECT_EQ(v, want) << i << "," << j;
        EXPECT_NE(v, 0);
      }
    for (unsigned i = 0; i + 2 <= e; ++i) EXPECT_EQ(evaluate(g_poly(d + i, e), s.psi), 0);
    EXPECT_NE(evaluate(a_minor(d, e), s.psi), 0);
  }
}
