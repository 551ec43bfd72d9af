#pragma once

#include <string>
#include <vector>

#include "polydeg/rational.hpp"

namespace polydeg {

/// Dense univariate polynomial over Q, lowest degree first. The highest
/// stored coefficient is nonzero unless the polynomial is zero (empty).
class UniPoly {
public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);
  static UniPoly constant(const Rational& c) { return UniPoly({c}); }
  /// z
  static UniPoly identity() { return UniPoly({0, 1}); }

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  Rational operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
  Rational leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

  Rational eval(const Rational& z) const;
  UniPoly derivative() const;
  UniPoly monic() const;

  UniPoly& operator+=(const UniPoly& q);
  UniPoly& operator-=(const UniPoly& q);
  UniPoly& operator*=(const Rational& c);
  friend UniPoly operator+(UniPoly p, const UniPoly& q) { return p += q; }
  friend UniPoly operator-(UniPoly p, const UniPoly& q) { return p -= q; }
  friend UniPoly operator*(const UniPoly& p, const UniPoly& q);
  friend UniPoly operator*(UniPoly p, const Rational& c) { return p *= c; }
  friend UniPoly operator*(const Rational& c, UniPoly p) { return p *= c; }
  friend bool operator==(const UniPoly&, const UniPoly&) = default;

  /// Euclidean division; divisor must be nonzero.
  static void divmod(const UniPoly& a, const UniPoly& b, UniPoly& quot, UniPoly& rem);

private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Monic gcd; gcd(0, 0) = 0.
UniPoly gcd(const UniPoly& a, const UniPoly& b);

std::string to_string(const UniPoly& p, const std::string& var = "z");

}  // namespace polydeg
