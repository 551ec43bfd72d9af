#include "engine.hpp"

#include <algorithm>

#include "polydeg/errors.hpp"

namespace polydeg::detail {

void Kernel::sort_desc(Poly& p) const {
  std::sort(p.begin(), p.end(), [this](const Term& a, const Term& b) { return cmp(a.m, b.m) > 0; });
}

mpz_class Kernel::make_primitive(Poly& p) const {
  if (p.empty()) return 1;
  mpz_class g = 0;
  for (const auto& t : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
    if (g == 1) break;
  }
  if (p.front().c < 0) g = -g;
  if (g != 1) {
    for (auto& t : p) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), g.get_mpz_t());
  }
  return g;
}

Poly Kernel::combine(const mpz_class& a, const Poly& p, std::size_t p_from, const mpz_class& b, const Poly& q,
                     std::size_t q_from, const Mono& shift) const {
  Poly out;
  out.reserve((p.size() - p_from) + (q.size() - q_from));
  const bool a_one = a == 1;
  std::size_t i = p_from, j = q_from;
  Mono qm;
  bool have_qm = false;
  while (i < p.size() || j < q.size()) {
    if (j < q.size() && !have_qm) {
      qm = mul(q[j].m, shift);
      have_qm = true;
    }
    int c = i >= p.size() ? -1 : (j >= q.size() ? 1 : cmp(p[i].m, qm));
    if (c > 0) {
      Term t{p[i].m, mpz_class()};
      if (a_one) t.c = p[i].c;
      else mpz_mul(t.c.get_mpz_t(), a.get_mpz_t(), p[i].c.get_mpz_t());
      out.push_back(std::move(t));
      ++i;
    } else if (c < 0) {
      Term t{qm, mpz_class()};
      mpz_mul(t.c.get_mpz_t(), b.get_mpz_t(), q[j].c.get_mpz_t());
      mpz_neg(t.c.get_mpz_t(), t.c.get_mpz_t());
      out.push_back(std::move(t));
      ++j;
      have_qm = false;
    } else {
      Term t{qm, mpz_class()};
      if (a_one) t.c = p[i].c;
      else mpz_mul(t.c.get_mpz_t(), a.get_mpz_t(), p[i].c.get_mpz_t());
      mpz_submul(t.c.get_mpz_t(), b.get_mpz_t(), q[j].c.get_mpz_t());
      if (t.c != 0) out.push_back(std::move(t));
      ++i;
      ++j;
      have_qm = false;
    }
  }
  return out;
}

Poly Kernel::reduce(Poly f, const std::vector<const Poly*>& reducers, bool full, mpq_class* scale) const {
  mpz_class num = 1;  // accumulated multipliers
  mpz_class den = 1;  // accumulated content divisions
  Poly done;
  Poly cur = std::move(f);
  std::size_t pos = 0;
  unsigned long steps = 0;
  mpz_class g, a, b;
  while (pos < cur.size()) {
    const Term& lt = cur[pos];
    const Poly* best = nullptr;
    for (const Poly* r : reducers) {
      if (r->empty() || !divides(r->front().m, lt.m)) continue;
      if (!best || r->size() < best->size()) best = r;
    }
    if (!best) {
      if (!full) break;
      done.push_back(std::move(cur[pos]));
      ++pos;
      continue;
    }
    const Term& rt = best->front();
    mpz_gcd(g.get_mpz_t(), lt.c.get_mpz_t(), rt.c.get_mpz_t());
    mpz_divexact(a.get_mpz_t(), rt.c.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(b.get_mpz_t(), lt.c.get_mpz_t(), g.get_mpz_t());
    if (a < 0) {
      a = -a;
      b = -b;
    }
    Mono shift = quot(lt.m, rt.m);
    cur = combine(a, cur, pos + 1, b, *best, 1, shift);
    pos = 0;
    if (a != 1) {
      for (auto& t : done) t.c *= a;
      num *= a;
    }
    if (++steps % 64 == 0) {
      check_deadline();
      // keep coefficients from drifting: pull out the common content
      mpz_class c = 0;
      for (const auto& t : done) {
        mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), t.c.get_mpz_t());
        if (c == 1) break;
      }
      if (c != 1)
        for (const auto& t : cur) {
          mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), t.c.get_mpz_t());
          if (c == 1) break;
        }
      if (c > 1) {
        for (auto& t : done) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), c.get_mpz_t());
        for (auto& t : cur) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), c.get_mpz_t());
        den *= c;
      }
    }
  }
  if (pos > 0) cur.erase(cur.begin(), cur.begin() + static_cast<std::ptrdiff_t>(pos));
  if (!done.empty()) {
    done.insert(done.end(), std::make_move_iterator(cur.begin()), std::make_move_iterator(cur.end()));
    cur = std::move(done);
  }
  mpz_class content = make_primitive(cur);
  den *= content;
  if (scale) {
    *scale = mpq_class(num, den);
    scale->canonicalize();
  }
  return cur;
}

Poly Kernel::spoly(const Poly& p, const Poly& q) const {
  const Term& lp = p.front();
  const Term& lq = q.front();
  Mono l = lcm(lp.m, lq.m);
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), lp.c.get_mpz_t(), lq.c.get_mpz_t());
  mpz_class a = lq.c / g;  // multiplier for p
  mpz_class b = lp.c / g;  // multiplier for q
  // a * (l/lp) * p - b * (l/lq) * q; shift p first
  Mono sp = quot(l, lp.m);
  Poly shifted;
  shifted.reserve(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i) shifted.push_back(Term{mul(p[i].m, sp), p[i].c});
  return combine(a, shifted, 0, b, q, 1, quot(l, lq.m));
}

Poly to_kernel(const Kernel& k, const MultiPoly& p, const std::vector<std::size_t>& perm, mpq_class* factor) {
  if (perm.size() > kMaxVars)
    throw UsageError("Groebner engine supports at most " + std::to_string(kMaxVars) + " variables");
  mpz_class den_lcm = 1;
  for (const auto& [m, c] : p.terms()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  Poly out;
  out.reserve(p.size());
  for (const auto& [m, c] : p.terms()) {
    Term t;
    for (std::size_t kv = 0; kv < perm.size(); ++kv) {
      auto e = m[perm[kv]];
      if (e > 0xFFFF) throw UsageError("exponent too large for the Groebner engine");
      t.m.e[kv] = static_cast<std::uint16_t>(e);
    }
    t.m.finalize(perm.size());
    t.c = den_lcm / c.get_den() * c.get_num();
    out.push_back(std::move(t));
  }
  k.sort_desc(out);
  mpz_class content = k.make_primitive(out);
  if (factor) {
    *factor = mpq_class(den_lcm, content);
    factor->canonicalize();
  }
  return out;
}

MultiPoly from_kernel(const Poly& p, const VarContext& ctx, const std::vector<std::size_t>& perm,
                      bool make_monic) {
  MultiPoly out(ctx);
  if (p.empty()) return out;
  mpq_class lead(p.front().c);
  for (const auto& t : p) {
    Monomial m(ctx.arity());
    for (std::size_t kv = 0; kv < perm.size(); ++kv) m[perm[kv]] = t.m.e[kv];
    mpq_class c(t.c);
    if (make_monic) c /= lead;
    out.add_term(m, c);
  }
  return out;
}

}  // namespace polydeg::detail
