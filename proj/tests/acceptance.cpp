// One pass/fail line per acceptance criterion. Exit status is nonzero if any
// criterion fails.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "polydeg/cli.hpp"
#include "polydeg/furter.hpp"
#include "polydeg/groebner.hpp"
#include "polydeg/picgen.hpp"
#include "polydeg/series.hpp"
#include "polydeg/sigma.hpp"
#include "support.hpp"

using namespace polydeg;
using testing_support::Random;

namespace {

using Clock = std::chrono::steady_clock;

struct Check {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

std::string de(unsigned d, unsigned e) { return "(" + std::to_string(d) + "," + std::to_string(e) + ")"; }

bool run_criterion(int id, const std::string& title, double budget_s, const std::function<void(Check&)>& body) {
  Check c;
  auto start = Clock::now();
  try {
    body(c);
  } catch (const std::exception& ex) {
    c.ok = false;
    c.detail = std::string("exception: ") + ex.what();
  }
  double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (c.ok && secs > budget_s) {
    c.ok = false;
    c.detail = "over the time budget";
  }
  std::ostringstream line;
  line << "criterion " << id << ": " << (c.ok ? "PASS" : "FAIL") << "  " << title << "  [" << std::fixed
       << std::setprecision(2) << secs << "s / " << budget_s << "s]";
  if (!c.detail.empty()) line << "  " << c.detail;
  std::cout << line.str() << std::endl;
  return c.ok;
}

void pic_both(Check& c, unsigned d, unsigned e) {
  PicReport a = pic_direct(d, e), b = pic_incremental(d, e);
  c.require(!a.overall.is_false() && !b.overall.is_false(), "FALSE verdict at " + de(d, e));
  c.require(a.overall.is_true(), "direct not TRUE at " + de(d, e) + ": " + a.overall.reason);
  c.require(b.overall.is_true(), "incremental not TRUE at " + de(d, e) + ": " + b.overall.reason);
  for (const auto& cert : a.certificates) c.require(verify_certificate(cert), "certificate rejected at " + de(d, e));
}

std::vector<Rational> random_tail(Random& rnd, unsigned n) {
  std::vector<Rational> out;
  for (unsigned k = 0; k < n; ++k) out.push_back(rnd.rational());
  return out;
}

std::string run_json(const std::vector<std::string>& args) {
  std::vector<const char*> argv{"polydeg"};
  for (const auto& a : args) argv.push_back(a.c_str());
  cli::RunConfig cfg = cli::parse_args(static_cast<int>(argv.size()), argv.data());
  std::ostringstream log;
  return cli::run(cfg, log).json;
}

}  // namespace

int main() {
  bool all = true;

  all &= run_criterion(1, "PIC(d,3) for 2<=d<=6 and PIC(d,4) for 2<=d<=3, both methods", 900, [](Check& c) {
    for (unsigned d = 2; d <= 6; ++d) pic_both(c, d, 3);
    for (unsigned d = 2; d <= 3; ++d) pic_both(c, d, 4);
  });

  all &= run_criterion(2, "PIC(d,1) closed form and Catalan leading coefficient, 2<=d<=30", 1, [](Check& c) {
    const VarContext ctx = VarContext::conjecture(1);
    for (unsigned d = 2; d <= 30; ++d) {
      c.require(pic_closed_form_e1(d).overall.is_true(), "closed form not TRUE at d=" + std::to_string(d));
      MultiPoly g = g_poly(d, 1);
      Monomial m(std::vector<std::uint32_t>{d});
      Rational lead = g.coefficient(m);
      c.require(g.size() == 1, "g_{d,1} is not a monomial at d=" + std::to_string(d));
      c.require(abs(lead) * (d + 1) == Rational(binomial(2 * d, d)), "Catalan identity fails at d=" + std::to_string(d));
    }
  });

  all &= run_criterion(3, "PIC(d,2) for 2<=d<=15, direct and incremental agree", 300, [](Check& c) {
    for (unsigned d = 2; d <= 15; ++d) pic_both(c, d, 2);
  });

  all &= run_criterion(4, "generator identities for 1<=d<=12, 2<=e<=4", 10, [](Check& c) {
    for (unsigned d = 1; d <= 12; ++d)
      for (unsigned e = 2; e <= 4; ++e) {
        MultiPoly g = g_poly(d, e);
        c.require(Rational(d + 1) * g == alpha_poly(-2, static_cast<long>(d) - 2, e),
                  "(d+1)g != alpha_{-2,d-2} at " + de(d, e));
        c.require(g == testing_support::oracle_g(d, e), "g differs from its defining sum at " + de(d, e));
        MultiPoly reduced =
            substitute(g, {{"x" + std::to_string(e), Rational(0)}}).rebased(VarContext::conjecture(e - 1));
        c.require(reduced == g_poly(d, e - 1), "g_{d,e} != g_{d,e-1} mod x_e at " + de(d, e));
      }
  });

  all &= run_criterion(5, "series inversion oracles, v_{i,j} lemma, grading", 120, [](Check& c) {
    for (unsigned d = 2; d <= 6; ++d)
      for (unsigned e = 1; d + e <= 7; ++e) {
        YSeries f = shifted_map(build_U(d, e));
        c.require(invert_lagrange(f) == invert_iterative(f), "inversion methods differ at " + de(d, e));
      }
    Random rnd(2024);
    VarContext ctx({"Z"});
    for (int k = 0; k < 20; ++k) {
      unsigned order = static_cast<unsigned>(rnd.integer(2, 10));
      YSeries f = YSeries::identity(ctx, order);
      for (unsigned j = 2; j <= order; ++j) f.coeff(j) = MultiPoly::constant(ctx, rnd.rational(5));
      YSeries g = invert_lagrange(f);
      c.require(g == invert_iterative(f), "inversion methods differ on a random series");
      c.require(f.compose(g) == YSeries::identity(ctx, order), "random inverse is not two-sided");
    }
    for (auto [d, e] : std::vector<std::pair<unsigned, unsigned>>{{2, 1}, {3, 1}, {2, 2}, {3, 2}, {2, 3}}) {
      LemmaReport r = check_vij_lemma(compute_v(d, e));
      c.require(r.ok, "lemma fails at " + de(d, e) + (r.failures.empty() ? "" : ": " + r.failures.front()));
      c.require(grading_invariants(d, e).ok, "grading fails at " + de(d, e));
    }
  });

  all &= run_criterion(6, "end-to-end sigma witnesses, 5 random c-vectors per instance", 180, [](Check& c) {
    PipelineResult ex = pipeline(2, 1, 1, {0, 0, 0});
    c.require(ex.report.overall, "(2,1) example run fails");
    c.require(ex.bundle.sigma.first.is_polynomial() &&
                  mod_z(ex.bundle.sigma.first) == parse_poly("X - 2*Y^3", plane_context()) &&
                  mod_z(ex.bundle.sigma.second) == parse_poly("Y", plane_context()),
              "(2,1) limit is not (X - 2Y^3, Y)");
    Random rnd(7);
    for (auto [d, e, t] : std::vector<std::tuple<unsigned, unsigned, long>>{
             {2, 1, 1}, {3, 1, 1}, {5, 1, 2}, {3, 2, 1}, {5, 2, 1}, {4, 3, 1}})
      for (int k = 0; k < 5; ++k) {
        PipelineResult p = pipeline(d, e, t, random_tail(rnd, d + e));
        const SigmaReport& r = p.report;
        c.require(r.integral && r.jacobian_ok && r.w_valuation_ok && r.limit_matches && r.degrees_ok &&
                      r.hypotheses_ok && r.overall,
                  "pipeline fails at " + de(d, e) + (r.failures.empty() ? "" : ": " + r.failures.front()));
        PlaneMap want = expected_limit(d, e, p.bundle.c);
        c.require(r.integral && mod_z(p.bundle.sigma.first) == want.first.polynomial() &&
                      mod_z(p.bundle.sigma.second) == want.second.polynomial(),
                  "limit mismatch at " + de(d, e));
      }
  });

  all &= run_criterion(7, "negative controls", 60, [](Check& c) {
    Random rnd(8);
    for (auto [d, e] : std::vector<std::pair<unsigned, unsigned>>{{3, 2}, {5, 2}, {4, 3}}) {
      PipelineResult p = pipeline(d, e, 1, random_tail(rnd, d + e));
      c.require(p.report.overall, "baseline run fails at " + de(d, e));
      PsiAssignment psi0;
      for (unsigned s = 0; s < e; ++s) psi0[u_name(0, s)] = p.psi0.at(u_name(0, s));
      // one imposed v-value off by one
      for (const auto& [rj, value] : imposed_targets(d, e, p.bundle.c)) {
        if (rj.first == 0) continue;
        TargetTable bad = imposed_targets(d, e, p.bundle.c);
        bad[rj] += 1;
        SigmaReport r = check_sigma(build_sigma(d, e, extend_psi_with_targets(d, e, psi0, bad), p.bundle.c));
        c.require(!r.hypotheses_ok && !r.overall, "corrupted v-value not detected at " + de(d, e));
      }
      // one c-coefficient off by one, psi unchanged
      for (unsigned r = 0; r < e; ++r) {
        std::vector<Rational> bad = p.bundle.c;
        bad[r] += 1;
        SigmaReport rep = check_sigma(build_sigma(d, e, p.bundle.psi, bad));
        c.require(!rep.overall && !rep.hypotheses_ok, "corrupted c_" + std::to_string(r) + " not detected at " + de(d, e));
        if (r == 0) c.require(!rep.limit_matches, "corrupted c_0 leaves the limit matching at " + de(d, e));
      }
    }
    PicReport pr = pic_direct(3, 3);
    bool tested = false;
    for (const auto& cert : pr.certificates) {
      c.require(verify_certificate(cert), "genuine certificate rejected");
      if (cert.exponent < 2) continue;
      RadicalCertificate small = cert;
      small.exponent = cert.exponent - 1;
      c.require(!verify_certificate(small), "undersized exponent accepted for " + cert.variable);
      tested = true;
    }
    c.require(tested, "no certificate with exponent >= 2 to shrink");
  });

  all &= run_criterion(8, "hypergeometric identity suite up to d=25", 120, [](Check& c) {
    for (unsigned k = 0; k <= 20; ++k)
      for (unsigned n = 0; n <= 20; ++n)
        c.require(hypergeom_expand(k, n) == p_poly(k, n).poly, "2F1 expansion differs at " + de(k, n));
    for (unsigned d = 2; d <= 25; ++d) {
      IdentityReport r = check_identities(d);
      c.require(r.all_passed(), "identity " + (r.first_failure ? r.first_failure->name : std::string("?")) +
                                    " fails at d=" + std::to_string(d));
      c.require(lambda_exists(d).exists, "lambda_exists false at d=" + std::to_string(d));
    }
    c.require(closed_form_checks(25).all_passed(), "closed forms fail");
    for (unsigned d = 1; d <= 25; ++d) {
      c.require(gcd(p_d(d), p_d(d + 1)).degree() == 0, "gcd(p_d, p_{d+1}) != 1 at d=" + std::to_string(d));
      c.require(gcd(p_d(d), p_d(d).derivative()).degree() == 0, "p_d not squarefree at d=" + std::to_string(d));
    }
  });

  all &= run_criterion(9, "deterministic reports and strategy-independent bases", 300, [](Check& c) {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"pic", "--d", "2..5", "--e", "2..3", "--jobs", "2"},
             {"gens", "--d", "2..4", "--e", "1..3"},
             {"series-verify", "--d", "2..3", "--e", "1..2"},
             {"sigma", "--d", "3", "--e", "2", "--c", "1,2/3,0,-1,5", "--out", "/dev/null"},
             {"furter", "--d", "2..8"},
             {"nagata"}}) {
      std::string a = cli::mask_timings(run_json(args)), b = cli::mask_timings(run_json(args));
      c.require(a == b, "report differs between runs for " + args[0]);
    }
    std::vector<std::pair<unsigned, unsigned>> corpus;
    for (unsigned d = 2; d <= 15; ++d) corpus.emplace_back(d, 2);
    for (unsigned d = 2; d <= 6; ++d) corpus.emplace_back(d, 3);
    for (unsigned d = 2; d <= 3; ++d) corpus.emplace_back(d, 4);
    for (auto [d, e] : corpus) {
      std::vector<std::vector<MultiPoly>> ideals{g_family(d, e, e)};
      ideals.push_back(g_family(d, e, e - 1));
      ideals.back().push_back(a_minor(d, e));
      for (const auto& gens : ideals) {
        BuchbergerOptions normal, fifo;
        normal.stop_on_unit = fifo.stop_on_unit = false;
        fifo.strategy = PairStrategy::fifo;
        auto order = MonomialOrder::grevlex(e);
        auto a = buchberger(gens, order, Limits{}, normal), b = buchberger(gens, order, Limits{}, fifo);
        c.require(a.basis && b.basis && *a.basis == *b.basis, "strategies disagree at " + de(d, e));
      }
    }
  });

  return all ? 0 : 1;
}
