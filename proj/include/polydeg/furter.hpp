#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polydeg/multipoly.hpp"
#include "polydeg/unipoly.hpp"

namespace polydeg {

struct PknPoly {
  unsigned k = 0;
  unsigned n = 0;
  UniPoly poly;
};

/// P_{k,n}(z) = sum_b multinomial(k+n-b; k, b, n-2b) z^b
PknPoly p_poly(unsigned k, unsigned n);
/// p_d = P_{d,d}
UniPoly p_d(unsigned d);

/// binom(k+n, k) * 2F1(-n/2, -n/2+1/2; -k-n; -4z), term by term.
UniPoly hypergeom_expand(unsigned k, unsigned n);

/// (-x1)^n P(-x2/x1^2) as a polynomial in x1, x2 (needs deg P <= n/2).
MultiPoly rehomogenize(const UniPoly& p, unsigned n);

struct IdentityFailure {
  unsigned d = 0;
  std::string name;
  std::string difference;
};

struct IdentityReport {
  std::vector<std::pair<std::string, bool>> results;
  std::optional<IdentityFailure> first_failure;
  /// Factors multiplied through to make both sides polynomial.
  std::vector<std::string> clearing_factors;

  bool all_passed() const;
  void record(unsigned d, const std::string& name, bool ok, const std::string& difference);
};

IdentityReport check_identities(unsigned d);
IdentityReport closed_form_checks(unsigned d_max);

/// P_{d+1,d-1} P_{d+2,d-1} - P_{d+1,d-2} P_{d+2,d}
UniPoly furter_D(unsigned d);

struct LambdaEvidence {
  bool exists = false;
  bool squarefree = false;
  /// Set if p_d has a repeated root (never expected).
  bool internal_inconsistency = false;
  long degree_p = 0;
  long degree_gcd = 0;
};

LambdaEvidence lambda_exists(unsigned d);

}  // namespace polydeg
