#include <gtest/gtest.h>

#include <set>

#include "polydeg/errors.hpp"
#include "polydeg/groebner.hpp"
#include "polydeg/picgen.hpp"
#include "support.hpp"

using namespace polydeg;
using testing_support::P;
using testing_support::Random;

namespace {

const VarContext& X2() {
  static const VarContext ctx = VarContext::conjecture(2);
  return ctx;
}

std::vector<MultiPoly> example_gens() { return {P("2*x1^2 - x2", X2()), P("-5*x1^3 + 5*x1*x2", X2())}; }

std::set<std::string> as_text(const std::vector<MultiPoly>& v) {
  std::set<std::string> out;
  for (const auto& p : v) out.insert(to_string(p));
  return out;
}

GroebnerBasis gb_of(const std::vector<MultiPoly>& gens, PairStrategy s = PairStrategy::normal) {
  BuchbergerOptions opt;
  opt.strategy = s;
  opt.stop_on_unit = false;
  auto r = buchberger(gens, MonomialOrder::grevlex(gens.front().context().arity()), Limits{}, opt);
  EXPECT_TRUE(r.basis.has_value());
  return *r.basis;
}

// The generator families the PIC checks run on.
std::vector<std::vector<MultiPoly>> pic_corpus() {
  std::vector<std::vector<MultiPoly>> out;
  for (auto [d, e] : std::vector<std::pair<unsigned, unsigned>>{{2, 2}, {3, 2}, {5, 2}, {2, 3}, {3, 3}, {4, 3}, {2, 4}}) {
    out.push_back(g_family(d, e, e));
    auto lower = g_family(d, e, e - 1);
    if (!lower.empty()) out.push_back(lower);
    lower.push_back(a_minor(d, e));
    out.push_back(lower);
  }
  return out;
}

}  // namespace

TEST(MonomialOrder, Axioms) {
  Random rnd(21);
  for (auto order : {MonomialOrder::grevlex(3), MonomialOrder::lex(3), MonomialOrder(OrderKind::grevlex, {2, 0, 1}),
                     MonomialOrder(OrderKind::lex, {1, 2, 0})}) {
    for (int k = 0; k < 300; ++k) {
      Monomial a = rnd.monomial(3, 4), b = rnd.monomial(3, 4), c = rnd.monomial(3, 4);
      auto ab = order.compare(a, b);
      EXPECT_EQ(ab == 0, a == b);
      EXPECT_EQ(order.compare(b, a), 0 <=> ab);
      if (ab < 0) EXPECT_TRUE(order.compare(a * c, b * c) < 0);
      EXPECT_TRUE(order.compare(Monomial(3), a) <= 0);
      if (order.compare(a, b) < 0 && order.compare(b, c) < 0) EXPECT_TRUE(order.compare(a, c) < 0);
    }
  }
}

TEST(MonomialOrder, GrevlexTieBreak) {
  auto o = MonomialOrder::grevlex(3);
  // x1*x3 < x2^2 in grevlex, the opposite of lex
  EXPECT_TRUE(o.compare(Monomial({1, 0, 1}), Monomial({0, 2, 0})) < 0);
  EXPECT_TRUE(MonomialOrder::lex(3).compare(Monomial({1, 0, 1}), Monomial({0, 2, 0})) > 0);
}

TEST(NormalForm, Examples) {
  const auto& c = X2();
  auto o = MonomialOrder::grevlex(2);
  std::vector<MultiPoly> b1{P("2*x1^2 - x2", c)};
  EXPECT_EQ(normal_form(P("x2", c), b1, o), P("x2", c));
  std::vector<MultiPoly> b2{P("x1^2 - 1/2*x2", c)};
  EXPECT_EQ(normal_form(P("x1^2", c), b2, o), P("1/2*x2", c));
  EXPECT_TRUE(normal_form(MultiPoly(c), b2, o).is_zero());
}

TEST(NormalFormProperty, RemainderIsReducedAndCongruent) {
  VarContext c = VarContext::conjecture(3);
  Random rnd(22);
  auto o = MonomialOrder::grevlex(3);
  GroebnerBasis gb = gb_of(g_family(2, 3, 2));
  for (int k = 0; k < 30; ++k) {
    MultiPoly f = rnd.poly(c, 6, 4);
    MultiPoly r = normal_form(f, gb.elements(), o);
    for (const auto& [m, v] : r.terms())
      for (const auto& g : gb.elements()) EXPECT_FALSE(leading_monomial(g, o).divides(m));
    EXPECT_TRUE(normal_form(f - r, gb.elements(), o).is_zero());
  }
}

TEST(Buchberger, HandExample) {
  GroebnerBasis gb = gb_of(example_gens());
  EXPECT_EQ(as_text(gb.elements()), (std::set<std::string>{"x1^2 - 1/2*x2", "x1*x2", "x2^2"}));
  EXPECT_TRUE(is_reduced_groebner_basis(gb));
}

TEST(Buchberger, TrivialCases) {
  const auto& c = X2();
  EXPECT_EQ(as_text(gb_of({MultiPoly::constant(c, 1)}).elements()), std::set<std::string>{"1"});
  EXPECT_EQ(as_text(gb_of({P("x1", c), P("x2", c)}).elements()), (std::set<std::string>{"x1", "x2"}));
  EXPECT_EQ(as_text(gb_of({MultiPoly(c), P("x2", c), P("x1", c)}).elements()), (std::set<std::string>{"x1", "x2"}));
}

TEST(Buchberger, PairLimitGivesIndeterminate) {
  Limits l;
  l.max_pairs = 1;
  auto r = buchberger(g_family(3, 3, 3), MonomialOrder::grevlex(3), l);
  EXPECT_FALSE(r.basis.has_value());
  EXPECT_TRUE(r.verdict.is_indeterminate());
  EXPECT_FALSE(r.verdict.reason.empty());
}

TEST(Buchberger, DeadlineGivesIndeterminate) {
  Limits l;
  l.deadline = std::chrono::steady_clock::now() - std::chrono::seconds(1);
  auto r = buchberger(g_family(3, 3, 3), MonomialOrder::grevlex(3), l);
  EXPECT_TRUE(r.verdict.is_indeterminate());
}

TEST(Limits, Parse) {
  Limits l = Limits::parse("secs:2.5,pairs:10");
  EXPECT_EQ(l.max_pairs, 10u);
  EXPECT_DOUBLE_EQ(l.wall_clock_seconds, 2.5);
  EXPECT_THROW(Limits::parse("pairs:0"), UsageError);
  EXPECT_THROW(Limits::parse("bogus:1"), UsageError);
  EXPECT_THROW(Limits::parse("pairs"), UsageError);
}

TEST(IdealMember, Examples) {
  GroebnerBasis gb = gb_of(example_gens());
  EXPECT_TRUE(ideal_member(P("x1^3", X2()), gb));
  EXPECT_FALSE(ideal_member(P("x1^2", X2()), gb));
  EXPECT_TRUE(ideal_member(MultiPoly(X2()), gb));
}

// Modulo the ideal x1^2 = x2/2 and x1*x2 = 0, while x2 survives, so
// a*x1^2 + b*x1*x2 + c*x2 is a member exactly when c = -a/2.
TEST(IdealMember, DegreeTwoBruteForce) {
  GroebnerBasis gb = gb_of(example_gens());
  const auto& c = X2();
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b)
      for (int cc = -2; cc <= 2; ++cc) {
        MultiPoly f = Rational(a) * P("x1^2", c) + Rational(b) * P("x1*x2", c) + Rational(cc) * P("x2", c);
        bool expected = Rational(cc) == -Rational(a) / 2;
        EXPECT_EQ(ideal_member(f, gb), expected) << to_string(f);
      }
}

TEST(IdealMemberProperty, Absorption) {
  Random rnd(23);
  for (const auto& gens : pic_corpus()) {
    const VarContext& c = gens.front().context();
    GroebnerBasis gb = gb_of(gens);
    for (int k = 0; k < 5; ++k) {
      MultiPoly f(c), h(c);
      for (const auto& g : gens) {
        f += rnd.poly(c, 2, 2) * g;
        h += rnd.poly(c, 2, 2) * g;
      }
      EXPECT_TRUE(ideal_member(f * rnd.poly(c, 3, 2) + h, gb));
    }
  }
}

TEST(Strategy, NormalAndFifoAgreeOnCorpus) {
  for (const auto& gens : pic_corpus()) {
    GroebnerBasis a = gb_of(gens, PairStrategy::normal);
    GroebnerBasis b = gb_of(gens, PairStrategy::fifo);
    EXPECT_EQ(a, b);
    EXPECT_TRUE(is_reduced_groebner_basis(a));
  }
}

TEST(RadicalMember, Examples) {
  const auto& c = X2();
  auto r = radical_member(P("x2", c), example_gens(), Limits{});
  EXPECT_TRUE(r.verdict.is_true());
  ASSERT_TRUE(r.certificate.has_value());
  // x2^2 is already a basis element
  EXPECT_EQ(r.certificate->exponent, 2u);
  EXPECT_TRUE(verify_certificate(*r.certificate));

  EXPECT_TRUE(radical_member(P("x1", c), {P("2*x1^2 - x2", c)}, Limits{}).verdict.is_false());

  auto sq = radical_member(P("x1", c), {P("x1^2", c)}, Limits{});
  EXPECT_TRUE(sq.verdict.is_true());
  ASSERT_TRUE(sq.certificate.has_value());
  EXPECT_EQ(sq.certificate->exponent, 2u);
}

// x2^N reduced against the basis for N = 1..5: the first zero is at N = 2.
TEST(RadicalMember, ExponentByPowerSearch) {
  GroebnerBasis gb = gb_of(example_gens());
  auto o = MonomialOrder::grevlex(2);
  std::vector<bool> zero;
  for (unsigned n = 1; n <= 5; ++n) zero.push_back(normal_form(P("x2", X2()).pow(n), gb.elements(), o).is_zero());
  EXPECT_EQ(zero, (std::vector<bool>{false, true, true, true, true}));
}

TEST(RadicalMemberProperty, AgreesWithPowerSearch) {
  Random rnd(24);
  auto corpus = pic_corpus();
  for (const auto& gens : corpus) {
    const VarContext& c = gens.front().context();
    GroebnerBasis gb = gb_of(gens);
    auto o = MonomialOrder::grevlex(c.arity());
    std::vector<MultiPoly> candidates;
    for (std::size_t i = 0; i < c.arity(); ++i) candidates.push_back(MultiPoly::variable(c, i));
    for (int k = 0; k < 3; ++k) candidates.push_back(rnd.poly(c, 3, 2, true));
    for (const auto& f : candidates) {
      bool found = false;
      MultiPoly pw = f;
      for (int n = 1; n <= 8 && !found; ++n, pw = pw * f) found = normal_form(pw, gb.elements(), o).is_zero();
      Limits l;
      l.wall_clock_seconds = 3;
      Verdict v = radical_member(f, gens, l).verdict;
      if (found) EXPECT_FALSE(v.is_false()) << to_string(f);
      if (v.is_false()) EXPECT_FALSE(found) << to_string(f);
    }
  }
}

TEST(RadEqualsMax, Examples) {
  const auto& c = X2();
  EXPECT_TRUE(rad_equals_max(example_gens(), Limits{}).verdict.is_true());
  EXPECT_TRUE(rad_equals_max({P("2*x1^2 - x2", c)}, Limits{}).verdict.is_false());
  EXPECT_TRUE(rad_equals_max({P("x1 - 1", c)}, Limits{}).verdict.is_false());
}

TEST(RadEqualsMaxProperty, MaximalityAbsorbs) {
  Random rnd(25);
  int maximal = 0;
  for (auto [d, e] : std::vector<std::pair<unsigned, unsigned>>{{2, 2}, {3, 2}, {5, 2}, {2, 3}, {3, 3}, {4, 3}, {2, 4}}) {
    std::vector<MultiPoly> gens = g_family(d, e, e);
    if (!rad_equals_max(gens, Limits{}).verdict.is_true()) continue;
    ++maximal;
    const VarContext& c = gens.front().context();
    for (int k = 0; k < 10; ++k) {
      MultiPoly q = rnd.poly(c, 3, 3, true);
      EXPECT_TRUE(radical_member(q, gens, Limits{}).verdict.is_true()) << to_string(q);
    }
  }
  EXPECT_GE(maximal, 7);
}

TEST(Certificate, VerifyExamples) {
  GroebnerBasis gb = gb_of(example_gens());
  EXPECT_TRUE(verify_certificate(RadicalCertificate{"x2", 3, gb}));
  EXPECT_TRUE(verify_certificate(RadicalCertificate{"x2", 2, gb}));
  EXPECT_FALSE(verify_certificate(RadicalCertificate{"x2", 1, gb}));
  GroebnerBasis unit(X2(), MonomialOrder::grevlex(2), {MultiPoly::constant(X2(), 1)});
  EXPECT_TRUE(verify_certificate(RadicalCertificate{"x1", 1, unit}));
}

TEST(Certificate, RejectsNonBasis) {
  // generators that are not a Groebner basis: S-polynomial check fails
  GroebnerBasis bogus(X2(), MonomialOrder::grevlex(2), {P("x1^2 - 1/2*x2", X2()), P("x1*x2 - x2", X2())});
  EXPECT_FALSE(verify_certificate(RadicalCertificate{"x2", 3, bogus}));
}

TEST(Certificate, TextRoundTrip) {
  auto r = radical_member(P("x2", X2()), example_gens(), Limits{});
  ASSERT_TRUE(r.certificate.has_value());
  std::string text = write_certificate(*r.certificate);
  RadicalCertificate back = read_certificate(text);
  EXPECT_EQ(back.variable, "x2");
  EXPECT_EQ(back.exponent, 2u);
  EXPECT_EQ(back.basis, r.certificate->basis);
  EXPECT_TRUE(verify_certificate(back));
  EXPECT_THROW(read_certificate("garbage"), UsageError);
}
