#pragma once

#include <vector>

#include "polydeg/multipoly.hpp"

namespace polydeg {

/// Row-major square matrix of polynomials over a common context.
using PolyMatrix = std::vector<std::vector<MultiPoly>>;

/// Determinant by Bareiss fraction-free elimination; dimensions <= 3 use
/// cofactor expansion directly. Throws UsageError for non-square input.
MultiPoly det_fraction_free(const PolyMatrix& m);

/// Plain Laplace expansion along the first row.
MultiPoly det_cofactor(const PolyMatrix& m);

/// Solves A x = b over Q by Gaussian elimination. Returns nullopt when A is
/// singular.
std::optional<std::vector<Rational>> solve_linear(std::vector<std::vector<Rational>> a,
                                                  std::vector<Rational> b);

}  // namespace polydeg
