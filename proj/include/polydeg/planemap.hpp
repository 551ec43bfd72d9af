#pragma once

#include <string>

#include "polydeg/multipoly.hpp"

namespace polydeg {

/// X, Y, Z (shared instance).
const VarContext& plane_context();

/// num * Z^-shift with num in Q[X,Y,Z]. Kept canonical: shift >= 0, and
/// when shift > 0 the numerator is not divisible by Z.
class LaurentPoly {
public:
  LaurentPoly() : num_(plane_context()) {}
  LaurentPoly(MultiPoly num, long shift = 0);

  static LaurentPoly constant(const Rational& c);
  static LaurentPoly X();
  static LaurentPoly Y();
  static LaurentPoly Z(long power = 1);

  const MultiPoly& numerator() const { return num_; }
  long shift() const { return shift_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return shift_ == 0; }
  /// The polynomial value; throws UsageError when shift > 0.
  const MultiPoly& polynomial() const;

  /// Smallest Z-exponent over terms (can be negative); 0 for zero.
  long min_z_exponent() const;
  long degree_in_y() const;
  /// Derivative in X or Y (context index 0 or 1).
  LaurentPoly derivative(std::size_t var) const;
  LaurentPoly pow(unsigned long k) const;

  LaurentPoly& operator+=(const LaurentPoly& q);
  LaurentPoly& operator-=(const LaurentPoly& q);
  friend LaurentPoly operator+(LaurentPoly p, const LaurentPoly& q) { return p += q; }
  friend LaurentPoly operator-(LaurentPoly p, const LaurentPoly& q) { return p -= q; }
  friend LaurentPoly operator-(const LaurentPoly& p) { return LaurentPoly(-p.num_, p.shift_); }
  friend LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

private:
  void normalize();
  MultiPoly num_;
  long shift_ = 0;
};

/// Value at X -> x, Y -> y (Z stays).
LaurentPoly apply(const LaurentPoly& f, const LaurentPoly& x, const LaurentPoly& y);

/// Reduction modulo Z of a polynomial (Z-free part); requires shift 0.
MultiPoly mod_z(const LaurentPoly& f);

/// "Z^-k *(...)" when shifted, the plain polynomial otherwise.
std::string to_string(const LaurentPoly& p);
LaurentPoly parse_laurent(std::string_view text);

enum class MapKind { triangular, affine, composite, general };
std::string to_string(MapKind k);

struct PlaneMap {
  LaurentPoly first;
  LaurentPoly second;
  MapKind kind = MapKind::general;

  friend bool operator==(const PlaneMap& a, const PlaneMap& b) {
    return a.first == b.first && a.second == b.second;
  }
};

PlaneMap identity_map();
/// (X + T, Y); T must not involve X.
PlaneMap triangular_map(const LaurentPoly& t);

/// (F1, G1) o (F2, G2) = (F1(F2, G2), G1(F2, G2)).
PlaneMap compose(const PlaneMap& outer, const PlaneMap& inner);
LaurentPoly jacobian_det(const PlaneMap& m);

}  // namespace polydeg
