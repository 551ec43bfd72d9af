#pragma once

#include <map>
#include <string>
#include <vector>

#include "polydeg/groebner.hpp"
#include "polydeg/matrix.hpp"
#include "polydeg/multipoly.hpp"

namespace polydeg {

/// g_{d,e} in Q[x1..xe]; throws InternalInconsistency if a coefficient is
/// not an integer.
MultiPoly g_poly(unsigned d, unsigned e);

/// alpha_{i,j,e}; zero when j < i.
MultiPoly alpha_poly(long i, long j, unsigned e);

/// The e x e matrix (alpha_{i,j,e}) with rows 0 <= i <= e-1 and columns
/// d-1 <= j <= d+e-2.
PolyMatrix alpha_matrix(unsigned d, unsigned e);

/// a_{d,e} = det(alpha_matrix(d, e)).
MultiPoly a_minor(unsigned d, unsigned e);

/// g_{d,e}, ..., g_{d+count-1,e}
std::vector<MultiPoly> g_family(unsigned d, unsigned e, unsigned count);

enum class PicMethod { direct, incremental };
std::string to_string(PicMethod m);

struct Clause {
  std::string name;
  Verdict verdict;
};

struct PicReport {
  unsigned d = 0;
  unsigned e = 0;
  PicMethod method = PicMethod::direct;
  Verdict clause_maximality;
  Verdict clause_nonmembership;
  Verdict overall;
  /// Every check that was run, in order (includes recursive levels).
  std::vector<Clause> clauses;
  std::vector<RadicalCertificate> certificates;
};

struct PicOptions {
  Limits limits;
  PairStrategy strategy = PairStrategy::normal;
  /// 0 selects the default bound d*e + 4.
  unsigned long certificate_bound = 0;
};

/// TRUE iff both clauses are TRUE, FALSE if either is FALSE.
Verdict combine_clauses(const Verdict& a, const Verdict& b);

PicReport pic_direct(unsigned d, unsigned e, const PicOptions& options = {});
PicReport pic_incremental(unsigned d, unsigned e, const PicOptions& options = {});

/// PIC(d,1) from the closed form of g_{d,1} and a_{d,1}; no Groebner run.
PicReport pic_closed_form_e1(unsigned d);

using PsiAssignment = std::map<std::string, Rational>;

struct EdoSeed {
  PsiAssignment psi;  ///< x_j -> 0 for j < e, x_e -> t
  Rational c0;        ///< g_{d+e-1,e} evaluated under psi
  /// (-1)^{m+1} binom(d+e+m, m+1) t^{m+1}, the constant the closed-form
  /// specialization is normalized against; differs from c0 by `ratio`.
  Rational normalization;
  Rational ratio;
  unsigned m = 0;
};

/// Specialization for e | d-1. Asserts the three specialization hypotheses
/// hold under it (InternalInconsistency otherwise).
EdoSeed edo_psi(unsigned d, unsigned e, const Rational& t);

/// Evaluates a polynomial at a total assignment of its variables.
Rational evaluate(const MultiPoly& p, const PsiAssignment& psi);

}  // namespace polydeg
