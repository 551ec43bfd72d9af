#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polydeg/picgen.hpp"
#include "polydeg/planemap.hpp"

namespace polydeg {

using TargetTable = std::map<std::pair<unsigned, unsigned>, Rational>;

/// Values the construction imposes on v_{r,j}: for rows 0 <= r <= e-1 and
/// the window d-1 <= j <= d+e-2, c_r at j = d+e-2-r and 0 elsewhere.
/// `c` holds c_0..c_{d+e} (only c_0..c_{e-1} are read).
TargetTable imposed_targets(unsigned d, unsigned e, const std::vector<Rational>& c);

/// Solves rows 1..e-1 of the assignment so that v_{r,j} hits `targets`
/// (rows >= 1 of the table are read); rows >= e are set to 0. psi0 gives
/// u_0_0..u_0_{e-1}. Throws UsageError if a_{d,e} vanishes under psi0 and
/// InternalInconsistency if the round trip fails.
PsiAssignment extend_psi_with_targets(unsigned d, unsigned e, const PsiAssignment& psi0,
                                      const TargetTable& targets);

/// `c` holds c_1..c_{e-1}.
PsiAssignment extend_psi(unsigned d, unsigned e, const PsiAssignment& psi0, const std::vector<Rational>& c);

struct SigmaBundle {
  unsigned d = 0;
  unsigned e = 0;
  PsiAssignment psi;
  std::vector<Rational> c;  ///< c_0..c_{d+e}
  PlaneMap tau1, alpha, tau2, sigma;
  MultiPoly V, U, W, T0;  ///< over plane_context()
};

struct SigmaReport {
  bool integral = false;
  bool jacobian_ok = false;
  bool w_valuation_ok = false;
  bool limit_matches = false;
  long f_degree = 0;
  long g_degree = 0;
  bool degrees_ok = false;
  /// v_{r,j} under psi equals imposed_targets(d, e, c).
  bool hypotheses_ok = false;
  bool overall = false;
  std::vector<std::string> failures;
};

SigmaBundle build_sigma(unsigned d, unsigned e, const PsiAssignment& psi, const std::vector<Rational>& c);
SigmaReport check_sigma(const SigmaBundle& b);

/// (X + sum_r c_r Y^{d+e-r}, Y)
PlaneMap expected_limit(unsigned d, unsigned e, const std::vector<Rational>& c);

struct PipelineResult {
  std::optional<EdoSeed> seed;
  PsiAssignment psi0;
  SigmaBundle bundle;
  SigmaReport report;
};

/// Edo-seeded run; `tail` holds c_1..c_{d+e}. c_0 is derived.
PipelineResult pipeline(unsigned d, unsigned e, const Rational& t, const std::vector<Rational>& tail);
/// Same with a caller-supplied psi0 on u_0_0..u_0_{e-1}.
PipelineResult pipeline_from_psi0(unsigned d, unsigned e, const PsiAssignment& psi0,
                                  const std::vector<Rational>& tail);

/// Sections TAU1, ALPHA, TAU2, SIGMA (two component lines each) and W.
std::string export_bundle(const SigmaBundle& b);

}  // namespace polydeg
