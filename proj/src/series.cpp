#include "polydeg/series.hpp"

#include <sstream>

#include "polydeg/errors.hpp"
#include "polydeg/picgen.hpp"

namespace polydeg {

YSeries::YSeries(VarContext ctx, unsigned order) : ctx_(std::move(ctx)), order_(order) {
  coeffs_.assign(order + 1, MultiPoly(ctx_));
}

YSeries YSeries::identity(const VarContext& ctx, unsigned order) {
  YSeries s(ctx, order);
  if (order >= 1) s.coeffs_[1] = MultiPoly::constant(ctx, 1);
  return s;
}

YSeries& YSeries::operator+=(const YSeries& q) {
  if (q.order_ != order_) throw UsageError("series truncation orders differ");
  for (unsigned k = 0; k <= order_; ++k) coeffs_[k] += q.coeffs_[k];
  return *this;
}

YSeries& YSeries::operator-=(const YSeries& q) {
  if (q.order_ != order_) throw UsageError("series truncation orders differ");
  for (unsigned k = 0; k <= order_; ++k) coeffs_[k] -= q.coeffs_[k];
  return *this;
}

YSeries operator*(const YSeries& p, const YSeries& q) {
  if (q.order_ != p.order_) throw UsageError("series truncation orders differ");
  YSeries out(p.ctx_, p.order_);
  for (unsigned a = 0; a <= p.order_; ++a) {
    if (p.coeffs_[a].is_zero()) continue;
    for (unsigned b = 0; a + b <= p.order_; ++b) {
      if (q.coeffs_[b].is_zero()) continue;
      out.coeffs_[a + b] += p.coeffs_[a] * q.coeffs_[b];
    }
  }
  return out;
}

YSeries operator*(YSeries p, const MultiPoly& c) {
  for (auto& x : p.coeffs_) x = x * c;
  return p;
}

YSeries YSeries::compose(const YSeries& inner) const {
  if (!inner[0].is_zero()) throw UsageError("inner series must have zero constant term");
  // Horner in Y
  YSeries acc(ctx_, order_);
  for (unsigned k = order_ + 1; k-- > 0;) {
    acc = acc * inner;
    acc.coeffs_[0] += coeffs_[k];
  }
  return acc;
}

std::string u_name(unsigned i, unsigned j) { return "u_" + std::to_string(i) + "_" + std::to_string(j); }

VarContext u_context(unsigned d, unsigned e) {
  std::vector<std::string> names;
  for (unsigned i = 0; i <= d + e; ++i)
    for (unsigned j = 0; j < e; ++j) names.push_back(u_name(i, j));
  names.push_back("Z");
  return VarContext(std::move(names));
}

namespace {

void require_de(unsigned d, unsigned e) {
  if (d < 2 || e < 1) throw UsageError("needs d >= 2 and e >= 1");
}

MultiPoly z_power(const VarContext& ctx, unsigned k) {
  Monomial m(ctx.arity());
  m[ctx.index("Z")] = k;
  return MultiPoly::term(ctx, m, 1);
}

void require_inverse_input(const YSeries& f) {
  if (f.order() < 1 || !f[0].is_zero() || !(f[1] == MultiPoly::constant(f.context(), 1)))
    throw UsageError("series must be Y + (terms of Y-order >= 2)");
}

}  // namespace

YSeries build_U(unsigned d, unsigned e) {
  require_de(d, e);
  VarContext ctx = u_context(d, e);
  YSeries u(ctx, d + e);
  const std::size_t z = ctx.index("Z");
  for (unsigned i = 0; i <= d + e; ++i)
    for (unsigned j = 0; j < e && j + 2 <= d + e; ++j) {
      Monomial m(ctx.arity());
      m[ctx.index(u_name(i, j))] = 1;
      m[z] = i + j;
      u.coeff(j + 2).add_term(m, 1);
    }
  return u;
}

YSeries build_U_specialized(unsigned d, unsigned e, const std::map<std::string, Rational>& values) {
  require_de(d, e);
  VarContext ctx({"Z"});
  YSeries u(ctx, d + e);
  for (unsigned i = 0; i <= d + e; ++i)
    for (unsigned j = 0; j < e && j + 2 <= d + e; ++j) {
      auto it = values.find(u_name(i, j));
      if (it == values.end() || it->second == 0) continue;
      u.coeff(j + 2).add_term(Monomial(std::vector<std::uint32_t>{i + j}), it->second);
    }
  return u;
}

YSeries shifted_map(const YSeries& u) {
  return YSeries::identity(u.context(), u.order()) + u * z_power(u.context(), 1);
}

YSeries invert_iterative(const YSeries& f) {
  require_inverse_input(f);
  YSeries g = YSeries::identity(f.context(), f.order());
  for (unsigned n = 2; n <= f.order(); ++n) {
    // g_n is still zero, so [Y^n] f(g) = (lower-order contribution); cancel it
    YSeries fg = f.compose(g);
    g.coeff(n) -= fg[n];
  }
  return g;
}

YSeries invert_lagrange(const YSeries& f) {
  require_inverse_input(f);
  const unsigned order = f.order();
  const VarContext& ctx = f.context();
  YSeries h = YSeries::identity(ctx, order);
  // powers[k][a] = f_k^a where f_k is the coefficient of Y^{k+1}
  std::vector<std::vector<MultiPoly>> powers(order);
  for (unsigned k = 1; k < order; ++k) powers[k].push_back(MultiPoly::constant(ctx, 1));
  auto power = [&](unsigned k, unsigned long a) -> const MultiPoly& {
    while (powers[k].size() <= a) powers[k].push_back(powers[k].back() * f[k + 1]);
    return powers[k][a];
  };
  for (unsigned j = 1; j < order; ++j) {
    MultiPoly sum(ctx);
    for (const auto& a : weighted_compositions(j, j)) {
      unsigned long len = 0;
      bool vanishes = false;
      for (unsigned k = 1; k <= j; ++k) {
        len += a[k - 1];
        if (a[k - 1] > 0 && f[k + 1].is_zero()) vanishes = true;
      }
      if (vanishes) continue;
      std::vector<unsigned long> parts(a.begin(), a.end());
      parts.push_back(j);
      Rational c(multinomial(len + j, parts));
      if (len % 2 == 1) c = -c;
      MultiPoly term = MultiPoly::constant(ctx, c);
      for (unsigned k = 1; k <= j; ++k)
        if (a[k - 1] > 0) term = term * power(k, a[k - 1]);
      sum += term;
    }
    h.coeff(j + 1) = sum * ratio(1, j + 1);
  }
  return h;
}

VTable extract_v(const YSeries& ui, unsigned d, unsigned e) {
  require_de(d, e);
  if (ui.order() < d + e) throw UsageError("series truncated below Y^(d+e)");
  VTable t;
  t.d = d;
  t.e = e;
  t.ctx = ui.context();
  const std::size_t z = t.ctx.index("Z");
  for (unsigned j = 0; j + 2 <= d + e; ++j) {
    std::vector<MultiPoly> by_z = ui[j + 2].coefficients_in(z);
    for (unsigned i = 0; i <= d + e; ++i) {
      const unsigned k = i + j;
      t.entries.emplace(std::make_pair(i, j), k < by_z.size() ? by_z[k] : MultiPoly(t.ctx));
    }
  }
  return t;
}

VTable compute_v(unsigned d, unsigned e) {
  YSeries u = build_U(d, e);
  YSeries inv = invert_lagrange(shifted_map(u));
  return extract_v(u.compose(inv), d, e);
}

VTable compute_v_specialized(unsigned d, unsigned e, const std::map<std::string, Rational>& values) {
  YSeries u = build_U_specialized(d, e, values);
  YSeries inv = invert_lagrange(shifted_map(u));
  return extract_v(u.compose(inv), d, e);
}

std::string export_vtable(const VTable& t) {
  std::ostringstream out;
  for (const auto& [ij, p] : t.entries) out << "v " << ij.first << ' ' << ij.second << " : " << to_string(p) << '\n';
  return out.str();
}

namespace {

std::string at(unsigned i, unsigned j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace

LemmaReport check_vij_lemma(const VTable& t) {
  LemmaReport r;
  const unsigned d = t.d, e = t.e;
  const VarContext& ctx = t.ctx;
  Bindings to_u0;
  for (unsigned s = 0; s < e; ++s) to_u0["x" + std::to_string(s + 1)] = MultiPoly::variable(ctx, u_name(0, s));

  // row index of every u-variable, -1 for anything else
  std::vector<long> row(ctx.arity(), -1);
  for (unsigned i = 0; i <= d + e; ++i)
    for (unsigned s = 0; s < e; ++s)
      if (auto k = ctx.find(u_name(i, s))) row[*k] = i;

  bool plus = true, minus = true;
  for (const auto& [ij, v] : t.entries) {
    const auto [i, j] = ij;
    if (i == 0) {
      MultiPoly g = substitute(g_poly(j + 1, e), to_u0, ctx);
      bool p = v == g, m = v == -g;
      plus = plus && p;
      minus = minus && m;
      if (!p && !m) r.failures.push_back("v" + at(i, j) + " is not +-g_" + std::to_string(j + 1));
      continue;
    }
    std::vector<MultiPoly> linear(e, MultiPoly(ctx));
    for (const auto& [m, c] : v.terms()) {
      unsigned long block = 0;
      long top_row = -1;
      std::size_t block_var = 0;
      for (std::size_t k = 0; k < m.arity(); ++k) {
        if (m[k] == 0 || row[k] < 0) continue;
        if (row[k] == static_cast<long>(i)) {
          block += m[k];
          block_var = k;
        } else {
          top_row = std::max(top_row, row[k]);
        }
      }
      if (block > 1) {
        r.failures.push_back("v" + at(i, j) + " has degree > 1 in row " + std::to_string(i));
        break;
      }
      if (top_row >= static_cast<long>(i)) {
        r.failures.push_back("v" + at(i, j) + " involves row " + std::to_string(top_row));
        break;
      }
      if (block == 1) {
        Monomial rest = m;
        rest[block_var] = 0;
        unsigned s = 0;
        while (ctx.name(block_var) != u_name(i, s)) ++s;
        linear[s].add_term(rest, c);
      }
    }
    for (unsigned s = 0; s < e; ++s) {
      MultiPoly want = substitute(alpha_poly(s, j, e), to_u0, ctx);
      if (!(linear[s] == want))
        r.failures.push_back("coefficient of " + u_name(i, s) + " in v" + at(i, j) + " is not alpha_" +
                             std::to_string(s) + "," + std::to_string(j));
    }
  }
  r.v0_sign = plus ? 1 : (minus ? -1 : 0);
  r.ok = r.failures.empty() && r.v0_sign != 0;
  return r;
}

GradingReport scan_grading(const YSeries& s, unsigned min_y, long shift) {
  GradingReport r;
  const std::size_t z = s.context().index("Z");
  for (unsigned a = 0; a <= s.order(); ++a)
    for (const auto& [m, c] : s[a].terms()) {
      const long b = m[z];
      if (a < min_y || b < static_cast<long>(a) - shift) {
        r.ok = false;
        r.witness = "Y^" + std::to_string(a) + "*Z^" + std::to_string(b);
        return r;
      }
    }
  return r;
}

GradingReport grading_invariants(unsigned d, unsigned e) {
  YSeries u = build_U(d, e);
  YSeries inv = invert_lagrange(shifted_map(u));
  GradingReport r = scan_grading(inv, 1, 1);
  if (!r.ok) {
    r.witness = "I: " + *r.witness;
    return r;
  }
  r = scan_grading(u.compose(inv), 2, 2);
  if (!r.ok) r.witness = "U(I): " + *r.witness;
  return r;
}

}  // namespace polydeg
