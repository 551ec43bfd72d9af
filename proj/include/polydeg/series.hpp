#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polydeg/multipoly.hpp"

namespace polydeg {

/// Power series in Y truncated after Y^order, coefficients in Q[ctx].
class YSeries {
public:
  YSeries(VarContext ctx, unsigned order);
  /// The series Y.
  static YSeries identity(const VarContext& ctx, unsigned order);

  unsigned order() const { return order_; }
  const VarContext& context() const { return ctx_; }
  const MultiPoly& operator[](std::size_t k) const { return coeffs_.at(k); }
  MultiPoly& coeff(std::size_t k) { return coeffs_.at(k); }

  /// this(inner(Y)), truncated; inner must have zero constant term.
  YSeries compose(const YSeries& inner) const;

  YSeries& operator+=(const YSeries& q);
  YSeries& operator-=(const YSeries& q);
  friend YSeries operator+(YSeries p, const YSeries& q) { return p += q; }
  friend YSeries operator-(YSeries p, const YSeries& q) { return p -= q; }
  friend YSeries operator*(const YSeries& p, const YSeries& q);
  friend YSeries operator*(YSeries p, const MultiPoly& c);
  friend bool operator==(const YSeries&, const YSeries&) = default;

private:
  VarContext ctx_;
  unsigned order_;
  std::vector<MultiPoly> coeffs_;
};

std::string u_name(unsigned i, unsigned j);

/// u_i_j for 0 <= i <= d+e, 0 <= j <= e-1 (row-major), then Z.
VarContext u_context(unsigned d, unsigned e);

/// U = sum u_{i,j} Y^{j+2} Z^{i+j}, truncated at Y^{d+e}.
YSeries build_U(unsigned d, unsigned e);

/// U with each u_{i,j} replaced by values[u_name(i,j)] (missing names are 0);
/// coefficients live in Q[Z].
YSeries build_U_specialized(unsigned d, unsigned e, const std::map<std::string, Rational>& values);

/// Y + Z*U over the context of U.
YSeries shifted_map(const YSeries& u);

YSeries invert_iterative(const YSeries& f);
YSeries invert_lagrange(const YSeries& f);

struct VTable {
  unsigned d = 0;
  unsigned e = 0;
  VarContext ctx;
  /// (i, j) -> coefficient of Y^{j+2} Z^{i+j} in U(I(Y,Z),Z), for
  /// 0 <= i <= d+e and 0 <= j <= d+e-2.
  std::map<std::pair<unsigned, unsigned>, MultiPoly> entries;

  const MultiPoly& at(unsigned i, unsigned j) const { return entries.at({i, j}); }
};

/// Extracts the table from U(I) (either symbolic or specialized).
VTable extract_v(const YSeries& ui, unsigned d, unsigned e);

VTable compute_v(unsigned d, unsigned e);
/// Table of the specialized U; entries are rationals (constants in Q[Z]).
VTable compute_v_specialized(unsigned d, unsigned e, const std::map<std::string, Rational>& values);

/// "v i j : <poly>" per entry, ordered by (i, j).
std::string export_vtable(const VTable& t);

struct LemmaReport {
  bool ok = true;
  /// Measured s with v_{0,j} = s * g_{j+1,e}(u_{0,0},...,u_{0,e-1}); 0 if no
  /// single sign fits.
  int v0_sign = 0;
  std::vector<std::string> failures;
};

LemmaReport check_vij_lemma(const VTable& t);

struct GradingReport {
  bool ok = true;
  std::optional<std::string> witness;
};

/// Monomial scans: Y^a Z^b in I needs a >= 1 and b >= a-1; in U(I) a >= 2
/// and b >= a-2.
GradingReport scan_grading(const YSeries& s, unsigned min_y, long shift);
GradingReport grading_invariants(unsigned d, unsigned e);

}  // namespace polydeg
