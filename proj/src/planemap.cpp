#include "polydeg/planemap.hpp"

#include <limits>
#include <map>

#include "polydeg/errors.hpp"

namespace polydeg {

namespace {

constexpr std::size_t kX = 0, kY = 1, kZ = 2;

MultiPoly times_z(const MultiPoly& p, long k) {
  if (k == 0) return p;
  MultiPoly out(p.context());
  for (const auto& [m, c] : p.terms()) {
    Monomial n = m;
    n[kZ] += static_cast<std::uint32_t>(k);
    out.add_term(n, c);
  }
  return out;
}

}  // namespace

const VarContext& plane_context() {
  static const VarContext ctx({"X", "Y", "Z"});
  return ctx;
}

LaurentPoly::LaurentPoly(MultiPoly num, long shift) : num_(num.rebased(plane_context())), shift_(shift) {
  normalize();
}

void LaurentPoly::normalize() {
  if (num_.is_zero()) {
    shift_ = 0;
    return;
  }
  if (shift_ < 0) {
    num_ = times_z(num_, -shift_);
    shift_ = 0;
    return;
  }
  if (shift_ == 0) return;
  long common = shift_;
  for (const auto& [m, c] : num_.terms()) common = std::min<long>(common, m[kZ]);
  if (common == 0) return;
  MultiPoly out(num_.context());
  for (const auto& [m, c] : num_.terms()) {
    Monomial n = m;
    n[kZ] -= static_cast<std::uint32_t>(common);
    out.add_term(n, c);
  }
  num_ = std::move(out);
  shift_ -= common;
}

LaurentPoly LaurentPoly::constant(const Rational& c) { return LaurentPoly(MultiPoly::constant(plane_context(), c)); }
LaurentPoly LaurentPoly::X() { return LaurentPoly(MultiPoly::variable(plane_context(), kX)); }
LaurentPoly LaurentPoly::Y() { return LaurentPoly(MultiPoly::variable(plane_context(), kY)); }
LaurentPoly LaurentPoly::Z(long power) {
  return LaurentPoly(MultiPoly::constant(plane_context(), 1), -power);
}

const MultiPoly& LaurentPoly::polynomial() const {
  if (shift_ != 0) throw UsageError("Laurent polynomial has negative Z-powers: " + polydeg::to_string(*this));
  return num_;
}

long LaurentPoly::min_z_exponent() const {
  if (num_.is_zero()) return 0;
  long best = std::numeric_limits<long>::max();
  for (const auto& [m, c] : num_.terms()) best = std::min<long>(best, m[kZ]);
  return best - shift_;
}

long LaurentPoly::degree_in_y() const { return num_.degree_in(kY); }

LaurentPoly LaurentPoly::derivative(std::size_t var) const {
  if (var == kZ) throw UsageError("Laurent derivative only in X or Y");
  return LaurentPoly(num_.derivative(var), shift_);
}

LaurentPoly LaurentPoly::pow(unsigned long k) const { return LaurentPoly(num_.pow(k), shift_ * static_cast<long>(k)); }

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& q) {
  const long s = std::max(shift_, q.shift_);
  num_ = times_z(num_, s - shift_) + times_z(q.num_, s - q.shift_);
  shift_ = s;
  normalize();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& q) { return *this += -q; }

LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q) {
  return LaurentPoly(p.num_ * q.num_, p.shift_ + q.shift_);
}

LaurentPoly apply(const LaurentPoly& f, const LaurentPoly& x, const LaurentPoly& y) {
  std::map<std::uint32_t, LaurentPoly> xp, yp;
  auto power = [](std::map<std::uint32_t, LaurentPoly>& cache, const LaurentPoly& base, std::uint32_t k) {
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;
    LaurentPoly v = base.pow(k);
    cache.emplace(k, v);
    return v;
  };
  LaurentPoly out;
  for (const auto& [m, c] : f.numerator().terms()) {
    Monomial zpart(3);
    zpart[kZ] = m[kZ];
    LaurentPoly t(MultiPoly::term(plane_context(), zpart, c), f.shift());
    if (m[kX]) t = t * power(xp, x, m[kX]);
    if (m[kY]) t = t * power(yp, y, m[kY]);
    out += t;
  }
  return out;
}

MultiPoly mod_z(const LaurentPoly& f) {
  const MultiPoly& p = f.polynomial();
  MultiPoly out(p.context());
  for (const auto& [m, c] : p.terms())
    if (m[kZ] == 0) out.add_term(m, c);
  return out;
}

std::string to_string(const LaurentPoly& p) {
  if (p.shift() == 0) return to_string(p.numerator());
  return "Z^-" + std::to_string(p.shift()) + " *(" + to_string(p.numerator()) + ")";
}

LaurentPoly parse_laurent(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.rfind("Z^-", 0) == 0) {
    auto star = text.find('*');
    if (star == std::string_view::npos || text.back() != ')')
      throw UsageError("malformed Laurent expression: " + std::string(text));
    long k = std::stol(std::string(text.substr(3, star - 3)));
    auto body = trim(text.substr(star + 1));
    if (body.empty() || body.front() != '(') throw UsageError("malformed Laurent expression: " + std::string(text));
    body = body.substr(1, body.size() - 2);
    return LaurentPoly(parse_poly(body, plane_context()), k);
  }
  return LaurentPoly(parse_poly(text, plane_context()));
}

std::string to_string(MapKind k) {
  switch (k) {
    case MapKind::triangular: return "triangular";
    case MapKind::affine: return "affine";
    case MapKind::composite: return "composite";
    case MapKind::general: break;
  }
  return "general";
}

PlaneMap identity_map() { return PlaneMap{LaurentPoly::X(), LaurentPoly::Y(), MapKind::affine}; }

PlaneMap triangular_map(const LaurentPoly& t) {
  if (t.numerator().degree_in(kX) > 0) throw UsageError("triangular part must not involve X");
  return PlaneMap{LaurentPoly::X() + t, LaurentPoly::Y(), MapKind::triangular};
}

PlaneMap compose(const PlaneMap& outer, const PlaneMap& inner) {
  return PlaneMap{apply(outer.first, inner.first, inner.second), apply(outer.second, inner.first, inner.second),
                  MapKind::composite};
}

LaurentPoly jacobian_det(const PlaneMap& m) {
  return m.first.derivative(kX) * m.second.derivative(kY) - m.first.derivative(kY) * m.second.derivative(kX);
}

}  // namespace polydeg
