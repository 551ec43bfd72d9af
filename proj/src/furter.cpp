#include "polydeg/furter.hpp"

#include "polydeg/errors.hpp"
#include "polydeg/picgen.hpp"

namespace polydeg {

namespace {

UniPoly lin(const Rational& c0, const Rational& c1) { return UniPoly({c0, c1}); }
UniPoly z() { return UniPoly::identity(); }

/// (x)_b rising factorial
Rational pochhammer(const Rational& x, unsigned b) {
  Rational out = 1;
  for (unsigned i = 0; i < b; ++i) out *= x + i;
  return out;
}

}  // namespace

PknPoly p_poly(unsigned k, unsigned n) {
  std::vector<Rational> c;
  for (unsigned b = 0; 2 * b <= n; ++b) c.emplace_back(multinomial(k + n - b, {k, b, n - 2 * b}));
  return PknPoly{k, n, UniPoly(std::move(c))};
}

UniPoly p_d(unsigned d) { return p_poly(d, d).poly; }

UniPoly hypergeom_expand(unsigned k, unsigned n) {
  const Rational a = ratio(-static_cast<long>(n), 2);
  const Rational b = a + ratio(1, 2);
  const Rational c = -Rational(k + n);
  std::vector<Rational> out;
  Rational pw = 1;  // (-4)^m
  Rational fact = 1;
  for (unsigned m = 0;; ++m) {
    Rational num = pochhammer(a, m) * pochhammer(b, m);
    if (num == 0) break;
    Rational den = pochhammer(c, m);
    if (den == 0) throw InternalInconsistency("2F1 lower parameter hits zero before termination");
    if (m > 0) fact *= m;
    out.push_back(num / (den * fact) * pw);
    pw *= -4;
  }
  return UniPoly(std::move(out)) * Rational(binomial(k + n, k));
}

MultiPoly rehomogenize(const UniPoly& p, unsigned n) {
  VarContext ctx = VarContext::conjecture(2);
  MultiPoly out(ctx);
  if (p.degree() > static_cast<long>(n / 2)) throw UsageError("degree too large to rehomogenize");
  for (long b = 0; b <= p.degree(); ++b) {
    Rational c = p[b];
    if ((n + b) % 2 == 1) c = -c;
    out.add_term(Monomial(std::vector<std::uint32_t>{static_cast<std::uint32_t>(n - 2 * b),
                                                     static_cast<std::uint32_t>(b)}),
                 c);
  }
  return out;
}

bool IdentityReport::all_passed() const {
  for (const auto& [name, ok] : results)
    if (!ok) return false;
  return true;
}

void IdentityReport::record(unsigned d, const std::string& name, bool ok, const std::string& difference) {
  for (auto& [n, v] : results)
    if (n == name) {
      v = v && ok;
      if (!ok && !first_failure) first_failure = IdentityFailure{d, name, difference};
      return;
    }
  results.emplace_back(name, ok);
  if (!ok && !first_failure) first_failure = IdentityFailure{d, name, difference};
}

UniPoly furter_D(unsigned d) {
  if (d < 2) throw UsageError("D needs d >= 2");
  return p_poly(d + 1, d - 1).poly * p_poly(d + 2, d - 1).poly - p_poly(d + 1, d - 2).poly * p_poly(d + 2, d).poly;
}

IdentityReport check_identities(unsigned d) {
  if (d < 2) throw UsageError("check_identities needs d >= 2");
  IdentityReport rep;
  auto multi = [&](const std::string& name, const MultiPoly& lhs, const MultiPoly& rhs) {
    rep.record(d, name, lhs == rhs, to_string(lhs - rhs));
  };
  auto uni = [&](const std::string& name, const UniPoly& lhs, const UniPoly& rhs) {
    rep.record(d, name, lhs == rhs, to_string(lhs - rhs));
  };

  for (unsigned i = 0; i <= 1; ++i)
    for (unsigned j = d - 1; j <= d; ++j)
      multi("(i) alpha_{i,j,2}", alpha_poly(i, j, 2), rehomogenize(p_poly(j + 2, j - i).poly, j - i));

  multi("(ii) g_{d,2}", g_poly(d, 2) * Rational(d + 1), rehomogenize(p_d(d), d));

  {
    const UniPoly D = furter_D(d);
    multi("(iii) a_{d,2}", a_minor(d, 2), rehomogenize(D, 2 * d - 2));
  }

  const UniPoly pd = p_d(d), pd1 = p_d(d + 1);
  const Rational dd(d);
  uni("(iv) first-derivative relation", Rational(2) * z() * lin(1, 3) * pd.derivative(),
      lin(4 * dd + 2, 3 * dd) * pd - Rational(d + 1) * pd1);
  uni("(v) second-derivative relation", z() * lin(1, 4) * pd.derivative().derivative(),
      Rational(2) * lin(dd, 2 * dd - 3) * pd.derivative() - dd * (dd - 1) * pd);

  const UniPoly P11 = pd1;  // P_{d+1,d+1}
  uni("(vi) P_{d+1,d-1} in terms of p_d, p_{d+1}", Rational(d + 1) * lin(1, 3) * p_poly(d + 1, d - 1).poly,
      Rational(d + 1) * P11 - Rational(3 * d + 2) * pd);

  {
    const Rational d1(d + 1), d2(d + 2);
    UniPoly lhs = Rational(2) * d1 * d1 * d2 * z() * lin(1, 3) * lin(1, 4) * furter_D(d);
    UniPoly rhs = d1 * d1 * d1 * lin(1, 4) * P11 * P11 -
                  Rational(3 * d) * Rational(3 * d + 2) * Rational(3 * d + 4) * z() * z() * pd * pd -
                  d1 * lin(2 + dd * (2 * dd + 3) * 2, 8 + dd * (2 * dd + 3) * 9) * pd * P11;
    uni("(vii) D in terms of p_d, p_{d+1}", lhs, rhs);
  }

  rep.clearing_factors = {"(vi): (d+1)(1+3z)", "(vii): 2(d+1)^2(d+2)z(1+3z)(1+4z)"};
  return rep;
}

IdentityReport closed_form_checks(unsigned d_max) {
  if (d_max < 1) throw UsageError("closed_form_checks needs d_max >= 1");
  IdentityReport rep;
  Rational third = 1, quarter = 1;
  for (unsigned d = 1; d <= d_max; ++d) {
    const UniPoly p = p_d(d);
    third *= Rational(3) * (Rational(1) - ratio(1, 3 * d));
    quarter *= ratio(3, 4) * ratio(9 * d * d - 1, d * (2 * d + 1));
    const Rational at_third = p.eval(ratio(-1, 3));
    const Rational at_quarter = p.eval(ratio(-1, 4));
    const Rational at_zero = p.eval(0);
    rep.record(d, "p_d(-1/3) product formula", at_third == third, to_string(at_third - third));
    rep.record(d, "p_d(-1/4) product formula", at_quarter == quarter, to_string(at_quarter - quarter));
    rep.record(d, "p_d(-1/3), p_d(-1/4) nonzero", at_third != 0 && at_quarter != 0, "0");
    rep.record(d, "p_d(0) = binom(2d,d)", at_zero == Rational(binomial(2 * d, d)) && at_zero != 0,
               to_string(at_zero - Rational(binomial(2 * d, d))));
  }
  return rep;
}

LambdaEvidence lambda_exists(unsigned d) {
  if (d < 2) throw UsageError("lambda_exists needs d >= 2");
  LambdaEvidence ev;
  const UniPoly p = p_d(d);
  ev.degree_p = p.degree();
  ev.squarefree = gcd(p, p.derivative()).degree() == 0;
  ev.internal_inconsistency = !ev.squarefree;
  const UniPoly q = p_d(d + 1) * furter_D(d) * z() * lin(1, 3) * lin(1, 4);
  ev.degree_gcd = gcd(p, q).degree();
  ev.exists = ev.squarefree && ev.degree_gcd < ev.degree_p;
  return ev;
}

}  // namespace polydeg
