#include "polydeg/unipoly.hpp"

#include <algorithm>

#include "polydeg/errors.hpp"

namespace polydeg {

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational UniPoly::eval(const Rational& z) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

UniPoly UniPoly::derivative() const {
  std::vector<Rational> d;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d.push_back(coeffs_[i] * static_cast<unsigned long>(i));
  return UniPoly(std::move(d));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  UniPoly r = *this;
  Rational lc = leading();
  for (auto& c : r.coeffs_) c /= lc;
  return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& q) {
  if (coeffs_.size() < q.coeffs_.size()) coeffs_.resize(q.coeffs_.size());
  for (std::size_t i = 0; i < q.coeffs_.size(); ++i) coeffs_[i] += q.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& q) {
  if (coeffs_.size() < q.coeffs_.size()) coeffs_.resize(q.coeffs_.size());
  for (std::size_t i = 0; i < q.coeffs_.size(); ++i) coeffs_[i] -= q.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& p, const UniPoly& q) {
  if (p.is_zero() || q.is_zero()) return {};
  std::vector<Rational> r(p.coeffs_.size() + q.coeffs_.size() - 1);
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < q.coeffs_.size(); ++j) r[i + j] += p.coeffs_[i] * q.coeffs_[j];
  return UniPoly(std::move(r));
}

void UniPoly::divmod(const UniPoly& a, const UniPoly& b, UniPoly& quot, UniPoly& rem) {
  if (b.is_zero()) throw UsageError("UniPoly::divmod: division by zero polynomial");
  rem = a;
  std::vector<Rational> q(std::max<long>(a.degree() - b.degree() + 1, 0));
  const Rational lc = b.leading();
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    std::size_t shift = static_cast<std::size_t>(rem.degree() - b.degree());
    Rational f = rem.leading() / lc;
    q[shift] = f;
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) rem.coeffs_[i + shift] -= f * b.coeffs_[i];
    rem.trim();
  }
  quot = UniPoly(std::move(q));
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a, y = b;
  while (!y.is_zero()) {
    UniPoly q, r;
    UniPoly::divmod(x, y, q, r);
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

std::string to_string(const UniPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t i = p.coefficients().size(); i-- > 0;) {
    const Rational& c = p.coefficients()[i];
    if (c == 0) continue;
    bool neg = c < 0;
    out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
    first = false;
    Rational mag = abs(c);
    if (i == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

}  // namespace polydeg
