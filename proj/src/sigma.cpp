#include "polydeg/sigma.hpp"

#include <sstream>

#include "polydeg/errors.hpp"
#include "polydeg/series.hpp"

namespace polydeg {

namespace {

constexpr std::size_t kY = 1, kZ = 2;

MultiPoly yz_term(const Rational& c, unsigned y, unsigned z) {
  Monomial m(3);
  m[kY] = y;
  m[kZ] = z;
  return MultiPoly::term(plane_context(), m, c);
}

Rational lookup(const PsiAssignment& psi, const std::string& name) {
  auto it = psi.find(name);
  if (it == psi.end()) throw UsageError("assignment has no value for " + name);
  return it->second;
}

PsiAssignment row0_as_x(unsigned e, const PsiAssignment& psi0) {
  PsiAssignment xs;
  for (unsigned s = 0; s < e; ++s) xs["x" + std::to_string(s + 1)] = lookup(psi0, u_name(0, s));
  return xs;
}

Rational constant_entry(const VTable& t, unsigned i, unsigned j) {
  const MultiPoly& p = t.at(i, j);
  if (!p.is_constant()) throw InternalInconsistency("specialized v-entry is not a constant");
  return p.constant_term();
}

void require_c(unsigned d, unsigned e, const std::vector<Rational>& c) {
  if (c.size() != d + e + 1)
    throw UsageError("expected " + std::to_string(d + e + 1) + " target constants c_0..c_" + std::to_string(d + e));
}

}  // namespace

TargetTable imposed_targets(unsigned d, unsigned e, const std::vector<Rational>& c) {
  if (c.size() < e) throw UsageError("need c_0..c_{e-1}");
  TargetTable t;
  for (unsigned r = 0; r < e; ++r)
    for (unsigned j = d - 1; j <= d + e - 2; ++j) t[{r, j}] = (j + r == d + e - 2) ? c[r] : Rational(0);
  return t;
}

PsiAssignment extend_psi_with_targets(unsigned d, unsigned e, const PsiAssignment& psi0,
                                      const TargetTable& targets) {
  if (d < 2 || e < 1) throw UsageError("needs d >= 2 and e >= 1");
  PsiAssignment psi;
  for (unsigned i = 0; i <= d + e; ++i)
    for (unsigned s = 0; s < e; ++s) psi[u_name(i, s)] = i == 0 ? lookup(psi0, u_name(0, s)) : Rational(0);
  const PsiAssignment xs = row0_as_x(e, psi0);
  if (evaluate(a_minor(d, e), xs) == 0) throw UsageError("a_{d,e} vanishes under psi0; the row systems are singular");

  std::vector<std::vector<Rational>> m(e, std::vector<Rational>(e));
  for (unsigned jj = 0; jj < e; ++jj)
    for (unsigned s = 0; s < e; ++s) m[jj][s] = evaluate(alpha_poly(s, d - 1 + jj, e), xs);

  auto target = [&](unsigned r, unsigned j) {
    auto it = targets.find({r, j});
    return it == targets.end() ? Rational(0) : it->second;
  };
  for (unsigned r = 1; r < e; ++r) {
    // row r is still zero, so v_{r,j} is its row-free part p_{r,j}
    VTable p = compute_v_specialized(d, e, psi);
    std::vector<Rational> b(e);
    for (unsigned jj = 0; jj < e; ++jj) b[jj] = target(r, d - 1 + jj) - constant_entry(p, r, d - 1 + jj);
    auto sol = solve_linear(m, b);
    if (!sol) throw InternalInconsistency("row system singular although a_{d,e} does not vanish");
    for (unsigned s = 0; s < e; ++s) psi[u_name(r, s)] = (*sol)[s];
  }

  VTable v = compute_v_specialized(d, e, psi);
  for (const auto& [rj, value] : targets) {
    if (rj.first == 0 || rj.first >= e) continue;
    if (constant_entry(v, rj.first, rj.second) != value)
      throw InternalInconsistency("round trip failed at v(" + std::to_string(rj.first) + "," +
                                  std::to_string(rj.second) + ")");
  }
  return psi;
}

PsiAssignment extend_psi(unsigned d, unsigned e, const PsiAssignment& psi0, const std::vector<Rational>& c) {
  if (c.size() + 1 != e) throw UsageError("extend_psi expects c_1..c_{e-1}");
  std::vector<Rational> full{0};
  full.insert(full.end(), c.begin(), c.end());
  return extend_psi_with_targets(d, e, psi0, imposed_targets(d, e, full));
}

SigmaBundle build_sigma(unsigned d, unsigned e, const PsiAssignment& psi, const std::vector<Rational>& c) {
  if (d < 2 || e < 1) throw UsageError("needs d >= 2 and e >= 1");
  require_c(d, e, c);
  const VarContext& ctx = plane_context();
  const unsigned k = d + e - 2;
  SigmaBundle b;
  b.d = d;
  b.e = e;
  b.psi = psi;
  b.c = c;

  for (unsigned i = 0; i <= d + e; ++i)
    for (unsigned s = 0; s < e; ++s) lookup(psi, u_name(i, s));
  VTable v = compute_v_specialized(d, e, psi);

  b.V = MultiPoly(ctx);
  for (unsigned i = 0; i <= k; ++i)
    for (unsigned j = 0; j + 2 <= d; ++j) b.V += yz_term(constant_entry(v, i, j), j + 2, i + j);
  b.U = MultiPoly(ctx);
  for (unsigned i = 0; i <= d + e; ++i)
    for (unsigned s = 0; s < e; ++s) b.U += yz_term(psi.at(u_name(i, s)), s + 2, i + s);
  b.T0 = MultiPoly(ctx);
  for (unsigned r = e; r <= d + e; ++r) b.T0 += yz_term(c[r], d + e - r, 0);

  const long kk = static_cast<long>(k);
  b.tau1 = triangular_map(LaurentPoly(b.T0) - LaurentPoly(b.V, kk));
  b.alpha = PlaneMap{LaurentPoly::X(), LaurentPoly::Y() + LaurentPoly::Z(kk + 1) * LaurentPoly::X(), MapKind::affine};
  b.tau2 = triangular_map(LaurentPoly(b.U, kk));
  b.sigma = compose(b.tau1, compose(b.alpha, b.tau2));

  LaurentPoly shifted_y = LaurentPoly::Y() + LaurentPoly::Z() * LaurentPoly(b.U);
  b.W = (LaurentPoly(b.U) - apply(LaurentPoly(b.V), LaurentPoly::X(), shifted_y)).polynomial();
  return b;
}

PlaneMap expected_limit(unsigned d, unsigned e, const std::vector<Rational>& c) {
  require_c(d, e, c);
  MultiPoly t(plane_context());
  for (unsigned r = 0; r <= d + e; ++r) t += yz_term(c[r], d + e - r, 0);
  return triangular_map(LaurentPoly(t));
}

SigmaReport check_sigma(const SigmaBundle& b) {
  SigmaReport rep;
  const unsigned d = b.d, e = b.e;
  const long k = static_cast<long>(d + e - 2);
  auto fail = [&](bool ok, const std::string& what) {
    if (!ok) rep.failures.push_back(what);
    return ok;
  };

  rep.integral = fail(b.sigma.first.is_polynomial() && b.sigma.second.is_polynomial(),
                      "sigma has negative Z-powers");
  rep.jacobian_ok = fail(jacobian_det(b.sigma) == LaurentPoly::constant(1), "Jacobian of sigma is not 1");

  LaurentPoly w(b.W);
  bool w_ok = w.is_zero() || w.min_z_exponent() >= k;
  MultiPoly expected_w(plane_context());
  for (unsigned r = 0; r <= d + e; ++r) expected_w += yz_term(b.c[r], d + e - r, static_cast<unsigned>(k));
  LaurentPoly diff = w + LaurentPoly(b.T0) * LaurentPoly::Z(k) - LaurentPoly(expected_w);
  w_ok = w_ok && (diff.is_zero() || diff.min_z_exponent() >= k + 1);
  rep.w_valuation_ok = fail(w_ok, "W fails the Z-valuation congruence");

  if (rep.integral) {
    PlaneMap want = expected_limit(d, e, b.c);
    rep.limit_matches = mod_z(b.sigma.first) == want.first.polynomial() &&
                        mod_z(b.sigma.second) == want.second.polynomial();
  }
  fail(rep.limit_matches, "sigma mod Z differs from (X + sum c_r Y^(d+e-r), Y)");

  rep.f_degree = (LaurentPoly(b.T0) - LaurentPoly(b.V, k)).degree_in_y();
  rep.g_degree = b.U.degree_in(kY);
  const bool top = b.psi.at(u_name(0, e - 1)) != 0;
  rep.degrees_ok = fail(rep.f_degree <= static_cast<long>(d) && (!top || rep.g_degree == static_cast<long>(e) + 1),
                        "degree bounds f <= d, g = e+1 fail");

  VTable v = compute_v_specialized(d, e, b.psi);
  bool hyp = true;
  for (const auto& [rj, value] : imposed_targets(d, e, b.c))
    if (constant_entry(v, rj.first, rj.second) != value) {
      hyp = false;
      rep.failures.push_back("v(" + std::to_string(rj.first) + "," + std::to_string(rj.second) +
                             ") misses its imposed value");
    }
  rep.hypotheses_ok = hyp;

  rep.overall = rep.integral && rep.jacobian_ok && rep.w_valuation_ok && rep.limit_matches && rep.degrees_ok &&
                rep.hypotheses_ok;
  return rep;
}

PipelineResult pipeline_from_psi0(unsigned d, unsigned e, const PsiAssignment& psi0,
                                  const std::vector<Rational>& tail) {
  if (d < 2 || e < 1) throw UsageError("needs d >= 2 and e >= 1");
  if (tail.size() != d + e) throw UsageError("expected " + std::to_string(d + e) + " constants c_1..c_" +
                                             std::to_string(d + e));
  PipelineResult out;
  for (unsigned s = 0; s < e; ++s) out.psi0[u_name(0, s)] = lookup(psi0, u_name(0, s));
  const PsiAssignment xs = row0_as_x(e, out.psi0);
  for (unsigned i = 0; i + 2 <= e; ++i)
    if (evaluate(g_poly(d + i, e), xs) != 0)
      throw UsageError("psi0 does not annihilate g_" + std::to_string(d + i) + "," + std::to_string(e));
  if (evaluate(g_poly(d + e - 1, e), xs) == 0) throw UsageError("psi0 annihilates g_{d+e-1,e}");
  if (evaluate(a_minor(d, e), xs) == 0) throw UsageError("psi0 annihilates a_{d,e}");

  // c_0 is whatever v_{0,d+e-2} takes under psi0
  VTable v0 = compute_v_specialized(d, e, out.psi0);
  std::vector<Rational> c{constant_entry(v0, 0, d + e - 2)};
  c.insert(c.end(), tail.begin(), tail.end());

  PsiAssignment psi = extend_psi(d, e, out.psi0, std::vector<Rational>(c.begin() + 1, c.begin() + e));
  out.bundle = build_sigma(d, e, psi, c);
  out.report = check_sigma(out.bundle);
  return out;
}

PipelineResult pipeline(unsigned d, unsigned e, const Rational& t, const std::vector<Rational>& tail) {
  if (d < 2 || e < 1) throw UsageError("needs d >= 2 and e >= 1");
  if ((d - 1) % e != 0)
    throw UsageError("no built-in seed for (d,e)=(" + std::to_string(d) + "," + std::to_string(e) +
                     ") since e does not divide d-1; supply psi0 explicitly");
  EdoSeed seed = edo_psi(d, e, t);
  PsiAssignment psi0;
  for (unsigned s = 0; s < e; ++s) psi0[u_name(0, s)] = seed.psi.at("x" + std::to_string(s + 1));
  PipelineResult out = pipeline_from_psi0(d, e, psi0, tail);
  out.seed = seed;
  return out;
}

std::string export_bundle(const SigmaBundle& b) {
  std::ostringstream out;
  out << "SIGMABUNDLE d=" << b.d << " e=" << b.e << '\n';
  out << "PSI\n";
  for (const auto& [name, value] : b.psi) out << name << " = " << to_string(value) << '\n';
  out << "C\n";
  for (std::size_t r = 0; r < b.c.size(); ++r) out << 'c' << r << " = " << to_string(b.c[r]) << '\n';
  auto map = [&](const char* title, const PlaneMap& m) {
    out << title << '\n' << to_string(m.first) << '\n' << to_string(m.second) << '\n';
  };
  map("TAU1", b.tau1);
  map("ALPHA", b.alpha);
  map("TAU2", b.tau2);
  map("SIGMA", b.sigma);
  out << "W\n" << to_string(b.W) << '\n';
  return out.str();
}

}  // namespace polydeg
