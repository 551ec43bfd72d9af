#include "polydeg/picgen.hpp"

#include <chrono>

#include "polydeg/errors.hpp"

namespace polydeg {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Verdict negate(Verdict v) {
  if (v.value == Truth::true_) v.value = Truth::false_;
  else if (v.value == Truth::false_) v.value = Truth::true_;
  return v;
}

}  // namespace

MultiPoly alpha_poly(long i, long j, unsigned e) {
  VarContext ctx = VarContext::conjecture(e);
  MultiPoly out(ctx);
  if (j < i) return out;
  if (j + 2 < 0) throw UsageError("alpha_poly needs j >= -2");
  const auto weight = static_cast<unsigned long>(j - i);
  const auto top = static_cast<unsigned long>(j + 2);
  for (const auto& a : weighted_compositions(weight, e)) {
    unsigned long len = 0;
    Monomial m(e);
    for (std::size_t k = 0; k < e; ++k) {
      len += a[k];
      m[k] = static_cast<std::uint32_t>(a[k]);
    }
    std::vector<unsigned long> parts(a.begin(), a.end());
    parts.push_back(top);
    Rational c(multinomial(len + top, parts));
    if (len % 2 == 1) c = -c;
    out.add_term(m, c);
  }
  return out;
}

MultiPoly g_poly(unsigned d, unsigned e) {
  if (d < 1 || e < 1) throw UsageError("g_poly needs d >= 1 and e >= 1");
  MultiPoly g = alpha_poly(-2, static_cast<long>(d) - 2, e) * ratio(1, d + 1);
  for (const auto& [m, c] : g.terms())
    if (c.get_den() != 1)
      throw InternalInconsistency("g_" + std::to_string(d) + "," + std::to_string(e) +
                                  " has a non-integral coefficient " + to_string(c));
  return g;
}

std::vector<MultiPoly> g_family(unsigned d, unsigned e, unsigned count) {
  std::vector<MultiPoly> out;
  out.reserve(count);
  for (unsigned k = 0; k < count; ++k) out.push_back(g_poly(d + k, e));
  return out;
}

PolyMatrix alpha_matrix(unsigned d, unsigned e) {
  if (e < 1) throw UsageError("alpha_matrix needs e >= 1");
  PolyMatrix m(e);
  for (unsigned i = 0; i < e; ++i)
    for (unsigned c = 0; c < e; ++c) m[i].push_back(alpha_poly(i, static_cast<long>(d) - 1 + c, e));
  return m;
}

MultiPoly a_minor(unsigned d, unsigned e) { return det_fraction_free(alpha_matrix(d, e)); }

std::string to_string(PicMethod m) { return m == PicMethod::direct ? "direct" : "incremental"; }

Verdict combine_clauses(const Verdict& a, const Verdict& b) {
  Verdict out;
  out.elapsed_seconds = a.elapsed_seconds + b.elapsed_seconds;
  if (a.is_false() || b.is_false()) {
    out.value = Truth::false_;
    out.reason = a.is_false() ? a.reason : b.reason;
  } else if (a.is_true() && b.is_true()) {
    out.value = Truth::true_;
  } else {
    out.value = Truth::indeterminate;
    out.reason = a.is_indeterminate() ? a.reason : b.reason;
  }
  return out;
}

Rational evaluate(const MultiPoly& p, const PsiAssignment& psi) {
  Rational out = 0;
  const VarContext& ctx = p.context();
  std::vector<Rational> values(ctx.arity());
  std::vector<bool> known(ctx.arity(), false);
  for (std::size_t i = 0; i < ctx.arity(); ++i) {
    auto it = psi.find(ctx.name(i));
    if (it != psi.end()) {
      values[i] = it->second;
      known[i] = true;
    }
  }
  for (const auto& [m, c] : p.terms()) {
    Rational t = c;
    for (std::size_t i = 0; i < m.arity() && t != 0; ++i) {
      if (m[i] == 0) continue;
      if (!known[i]) throw UsageError("no value for variable " + ctx.name(i));
      mpq_class pw;
      mpz_pow_ui(pw.get_num_mpz_t(), values[i].get_num_mpz_t(), m[i]);
      mpz_pow_ui(pw.get_den_mpz_t(), values[i].get_den_mpz_t(), m[i]);
      t *= pw;
    }
    out += t;
  }
  return out;
}

PicReport pic_closed_form_e1(unsigned d) {
  if (d < 2) throw UsageError("PIC needs d >= 2");
  auto start = Clock::now();
  PicReport r;
  r.d = d;
  r.e = 1;
  r.method = PicMethod::incremental;
  MultiPoly g = g_poly(d, 1);
  MultiPoly a = a_minor(d, 1);
  // g is c*x1^d with c != 0, so its radical is (x1)
  bool monomial = g.size() == 1 && g.terms().begin()->first[0] == d;
  r.clause_maximality.value = monomial ? Truth::true_ : Truth::false_;
  if (!monomial) r.clause_maximality.reason = "g_" + std::to_string(d) + ",1 is not a pure power of x1";
  // rad of the empty family is (0)
  r.clause_nonmembership.value = a.is_zero() ? Truth::false_ : Truth::true_;
  if (a.is_zero()) r.clause_nonmembership.reason = "a_" + std::to_string(d) + ",1 vanishes";
  r.clause_maximality.elapsed_seconds = seconds_since(start);
  r.overall = combine_clauses(r.clause_maximality, r.clause_nonmembership);
  r.overall.elapsed_seconds = seconds_since(start);
  r.clauses.push_back({"PIC(" + std::to_string(d) + ",1) closed form", r.overall});
  return r;
}

PicReport pic_direct(unsigned d, unsigned e, const PicOptions& options) {
  if (d < 2 || e < 1) throw UsageError("PIC needs d >= 2 and e >= 1");
  auto start = Clock::now();
  Limits lim = options.limits;
  lim.deadline = lim.effective_deadline(start);
  RadicalOptions ro;
  ro.strategy = options.strategy;
  ro.certificate_bound = options.certificate_bound ? options.certificate_bound : d * e + 4;

  PicReport r;
  r.d = d;
  r.e = e;
  r.method = PicMethod::direct;

  auto t0 = Clock::now();
  MaximalityResult mx = rad_equals_max(g_family(d, e, e), lim, ro);
  r.clause_maximality = mx.verdict;
  r.clause_maximality.elapsed_seconds = seconds_since(t0);
  r.certificates = std::move(mx.certificates);
  r.clauses.push_back({"rad(g_d..g_{d+e-1}) is maximal", r.clause_maximality});

  t0 = Clock::now();
  if (r.clause_maximality.is_false()) {
    r.clause_nonmembership.reason = "skipped: maximality clause is FALSE";
  } else if (Clock::now() > *lim.deadline) {
    r.clause_nonmembership.reason = "wall-clock budget exhausted";
  } else {
    RadicalOptions no_cert = ro;
    no_cert.certificate_bound = 0;
    RadicalResult nm = radical_member(a_minor(d, e), g_family(d, e, e - 1), lim, no_cert);
    r.clause_nonmembership = negate(nm.verdict);
    if (r.clause_nonmembership.is_false()) r.clause_nonmembership.reason = "a_{d,e} lies in the radical";
  }
  r.clause_nonmembership.elapsed_seconds = seconds_since(t0);
  r.clauses.push_back({"a_{d,e} not in rad(g_d..g_{d+e-2})", r.clause_nonmembership});

  r.overall = combine_clauses(r.clause_maximality, r.clause_nonmembership);
  r.overall.elapsed_seconds = seconds_since(start);
  return r;
}

namespace {

void incremental_into(unsigned d, unsigned e, const Limits& lim, const RadicalOptions& ro, PicReport& r,
                      Verdict& maximality, Verdict& nonmembership) {
  if (e == 1) {
    PicReport base = pic_closed_form_e1(d);
    r.clauses.push_back(base.clauses.front());
    maximality = base.clause_maximality;
    nonmembership = base.clause_nonmembership;
    return;
  }
  Verdict prev_max, prev_non;
  incremental_into(d, e - 1, lim, ro, r, prev_max, prev_non);
  Verdict prev = combine_clauses(prev_max, prev_non);
  std::string tag = "(" + std::to_string(d) + "," + std::to_string(e) + ")";
  std::string xe = "x" + std::to_string(e);
  if (!prev.is_true()) {
    maximality = nonmembership = Verdict{};
    maximality.reason = nonmembership.reason =
        "PIC(" + std::to_string(d) + "," + std::to_string(e - 1) + ") not established";
    return;
  }
  if (Clock::now() > *lim.deadline) {
    maximality = nonmembership = Verdict{};
    maximality.reason = nonmembership.reason = "wall-clock budget exhausted";
    return;
  }
  // the lemma only runs one way: a failed hypothesis proves nothing
  auto lift = [&](const Verdict& h) {
    Verdict v;
    v.elapsed_seconds = h.elapsed_seconds;
    if (h.is_true()) {
      v.value = Truth::true_;
    } else if (h.is_false()) {
      v.reason = "lemma hypothesis fails at " + tag + "; the lemma is sufficient only";
    } else {
      v.reason = h.reason;
    }
    return v;
  };
  VarContext ctx = VarContext::conjecture(e);
  MultiPoly x = MultiPoly::variable(ctx, e - 1);

  auto t0 = Clock::now();
  RadicalResult h1 = radical_member(x, g_family(d, e, e), lim, ro);
  h1.verdict.elapsed_seconds = seconds_since(t0);
  r.clauses.push_back({xe + " in rad(g_d..g_{d+e-1}) " + tag, h1.verdict});
  if (h1.certificate) r.certificates.push_back(*h1.certificate);

  t0 = Clock::now();
  if (Clock::now() > *lim.deadline) {
    maximality = lift(h1.verdict);
    nonmembership = Verdict{};
    nonmembership.reason = "wall-clock budget exhausted";
    return;
  }
  std::vector<MultiPoly> gens = g_family(d, e, e - 1);
  gens.push_back(a_minor(d, e));
  RadicalResult h2 = radical_member(x, gens, lim, ro);
  h2.verdict.elapsed_seconds = seconds_since(t0);
  r.clauses.push_back({xe + " in rad(g_d..g_{d+e-2}, a_{d,e}) " + tag, h2.verdict});

  maximality = lift(h1.verdict);
  nonmembership = lift(h2.verdict);
}

}  // namespace

PicReport pic_incremental(unsigned d, unsigned e, const PicOptions& options) {
  if (d < 2 || e < 1) throw UsageError("PIC needs d >= 2 and e >= 1");
  auto start = Clock::now();
  Limits lim = options.limits;
  lim.deadline = lim.effective_deadline(start);
  RadicalOptions ro;
  ro.strategy = options.strategy;
  ro.certificate_bound = options.certificate_bound ? options.certificate_bound : d * e + 4;

  PicReport r;
  r.d = d;
  r.e = e;
  r.method = PicMethod::incremental;
  incremental_into(d, e, lim, ro, r, r.clause_maximality, r.clause_nonmembership);
  r.overall = combine_clauses(r.clause_maximality, r.clause_nonmembership);
  r.overall.elapsed_seconds = seconds_since(start);
  return r;
}

EdoSeed edo_psi(unsigned d, unsigned e, const Rational& t) {
  if (d < 2 || e < 1) throw UsageError("edo_psi needs d >= 2 and e >= 1");
  if ((d - 1) % e != 0)
    throw UsageError("edo_psi needs e | d-1 (d=" + std::to_string(d) + ", e=" + std::to_string(e) + ")");
  if (t == 0) throw UsageError("edo_psi needs t != 0");
  EdoSeed s;
  s.m = (d - 1) / e;
  for (unsigned j = 1; j < e; ++j) s.psi["x" + std::to_string(j)] = 0;
  s.psi["x" + std::to_string(e)] = t;

  for (unsigned i = 0; i + 2 <= e; ++i)
    if (evaluate(g_poly(d + i, e), s.psi) != 0)
      throw InternalInconsistency("g_" + std::to_string(d + i) + "," + std::to_string(e) +
                                  " does not vanish at the specialization");
  s.c0 = evaluate(g_poly(d + e - 1, e), s.psi);
  if (s.c0 == 0) throw InternalInconsistency("g_{d+e-1,e} vanishes at the specialization");
  if (evaluate(a_minor(d, e), s.psi) == 0) throw InternalInconsistency("a_{d,e} vanishes at the specialization");

  mpq_class tp;
  mpz_pow_ui(tp.get_num_mpz_t(), t.get_num_mpz_t(), s.m + 1);
  mpz_pow_ui(tp.get_den_mpz_t(), t.get_den_mpz_t(), s.m + 1);
  s.normalization = Rational(binomial(d + e + s.m, s.m + 1)) * tp;
  if ((s.m + 1) % 2 == 1) s.normalization = -s.normalization;
  s.ratio = s.normalization / s.c0;
  return s;
}

}  // namespace polydeg
