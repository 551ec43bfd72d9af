#pragma once

// Shared helpers for the test binaries: independent reference
// implementations and seeded random generators.

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "polydeg/multipoly.hpp"
#include "polydeg/rational.hpp"

namespace testing_support {

using polydeg::Integer;
using polydeg::Monomial;
using polydeg::MultiPoly;
using polydeg::Rational;
using polydeg::VarContext;

inline MultiPoly P(const std::string& text, const VarContext& ctx) { return polydeg::parse_poly(text, ctx); }

inline Integer fact(unsigned long n) {
  Integer r = 1;
  for (unsigned long k = 2; k <= n; ++k) r *= k;
  return r;
}

/// n! / prod(parts!) straight from factorials.
inline Integer multi(const std::vector<unsigned long>& parts) {
  unsigned long n = 0;
  for (auto p : parts) n += p;
  Integer r = fact(n);
  for (auto p : parts) r /= fact(p);
  return r;
}

/// Every a in N^len with sum_k k*a_k == weight, found by odometer search.
inline std::vector<std::vector<unsigned long>> brute_compositions(unsigned long weight, std::size_t len) {
  std::vector<std::vector<unsigned long>> out;
  std::vector<unsigned long> a(len, 0);
  std::function<void(std::size_t, unsigned long)> rec = [&](std::size_t k, unsigned long left) {
    if (k == len) {
      if (left == 0) out.push_back(a);
      return;
    }
    for (unsigned long v = 0; v * (k + 1) <= left; ++v) {
      a[k] = v;
      rec(k + 1, left - v * (k + 1));
    }
    a[k] = 0;
  };
  rec(0, weight);
  return out;
}

/// g_{d,e} from its defining sum, built term by term.
inline MultiPoly oracle_g(unsigned d, unsigned e) {
  VarContext ctx = VarContext::conjecture(e);
  MultiPoly g(ctx);
  for (const auto& a : brute_compositions(d, e)) {
    unsigned long len = std::accumulate(a.begin(), a.end(), 0UL);
    std::vector<unsigned long> parts = a;
    parts.push_back(d);
    Rational c(multi(parts));
    c /= d + 1;
    if (len % 2) c = -c;
    std::vector<std::uint32_t> exps(a.begin(), a.end());
    g.add_term(Monomial(exps), c);
  }
  return g;
}

/// alpha_{i,j,e} from its defining sum.
inline MultiPoly oracle_alpha(long i, long j, unsigned e) {
  VarContext ctx = VarContext::conjecture(e);
  MultiPoly out(ctx);
  if (j < i) return out;
  for (const auto& a : brute_compositions(j - i, e)) {
    unsigned long len = std::accumulate(a.begin(), a.end(), 0UL);
    std::vector<unsigned long> parts = a;
    parts.push_back(j + 2);
    Rational c(multi(parts));
    if (len % 2) c = -c;
    out.add_term(Monomial(std::vector<std::uint32_t>(a.begin(), a.end())), c);
  }
  return out;
}

/// Leibniz permutation expansion.
inline MultiPoly oracle_det(const std::vector<std::vector<MultiPoly>>& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  MultiPoly sum(m[0][0].context());
  do {
    int sign = 1;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if (perm[a] > perm[b]) sign = -sign;
    MultiPoly term = MultiPoly::constant(sum.context(), sign);
    for (std::size_t r = 0; r < n; ++r) term = term * m[r][perm[r]];
    sum += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum;
}

inline Integer catalan(unsigned n) { return fact(2 * n) / (fact(n) * fact(n + 1)); }

class Random {
public:
  explicit Random(unsigned seed) : gen_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }

  Rational rational(long bound = 9) {
    long n = integer(-bound, bound);
    long d = integer(1, bound);
    return polydeg::ratio(n, d);
  }

  Rational nonzero_rational(long bound = 9) {
    for (;;) {
      Rational q = rational(bound);
      if (q != 0) return q;
    }
  }

  Monomial monomial(std::size_t arity, unsigned max_exp) {
    Monomial m(arity);
    for (std::size_t k = 0; k < arity; ++k) m[k] = static_cast<std::uint32_t>(integer(0, max_exp));
    return m;
  }

  MultiPoly poly(const VarContext& ctx, unsigned terms, unsigned max_exp, bool zero_constant = false) {
    MultiPoly p(ctx);
    for (unsigned k = 0; k < terms; ++k) {
      Monomial m = monomial(ctx.arity(), max_exp);
      if (zero_constant && m.is_one()) continue;
      p.add_term(m, rational());
    }
    return p;
  }

  std::mt19937& engine() { return gen_; }

private:
  std::mt19937 gen_;
};

}  // namespace testing_support
