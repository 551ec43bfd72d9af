#include "polydeg/matrix.hpp"

#include "polydeg/errors.hpp"

namespace polydeg {

namespace {

const VarContext& check_square(const PolyMatrix& m) {
  static const VarContext empty;
  if (m.empty()) throw UsageError("determinant of an empty matrix");
  const VarContext& ctx = m[0].empty() ? empty : m[0][0].context();
  for (const auto& row : m) {
    if (row.size() != m.size()) throw UsageError("determinant requires a square matrix");
    for (const auto& x : row)
      if (!(x.context() == ctx)) throw UsageError("matrix entries must share a context");
  }
  return ctx;
}

MultiPoly cofactor_rec(const PolyMatrix& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  MultiPoly det(m[0][0].context());
  for (std::size_t col = 0; col < n; ++col) {
    if (m[0][col].is_zero()) continue;
    PolyMatrix minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<MultiPoly> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != col) row.push_back(m[r][c]);
      minor.push_back(std::move(row));
    }
    MultiPoly t = m[0][col] * cofactor_rec(minor);
    if (col % 2 == 0) det += t;
    else det -= t;
  }
  return det;
}

}  // namespace

MultiPoly det_cofactor(const PolyMatrix& m) {
  check_square(m);
  return cofactor_rec(m);
}

MultiPoly det_fraction_free(const PolyMatrix& input) {
  const VarContext& ctx = check_square(input);
  const std::size_t n = input.size();
  if (n <= 3) return cofactor_rec(input);

  PolyMatrix a = input;
  MultiPoly prev_pivot = MultiPoly::constant(ctx, 1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t swap = k + 1;
      while (swap < n && a[swap][k].is_zero()) ++swap;
      if (swap == n) return MultiPoly(ctx);
      std::swap(a[k], a[swap]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        MultiPoly num = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        a[i][j] = exact_quotient(num, prev_pivot);
      }
      a[i][k] = MultiPoly(ctx);
    }
    prev_pivot = a[k][k];
  }
  MultiPoly det = a[n - 1][n - 1];
  return negate ? -det : det;
}

std::optional<std::vector<Rational>> solve_linear(std::vector<std::vector<Rational>> a,
                                                  std::vector<Rational> b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw UsageError("solve_linear: dimension mismatch");
  for (const auto& row : a)
    if (row.size() != n) throw UsageError("solve_linear: matrix must be square");
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

}  // namespace polydeg
