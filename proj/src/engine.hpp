// Internal Groebner kernel: dense small exponent vectors, integer
// coefficients kept primitive, fraction-free reduction.
#pragma once

#include <gmpxx.h>

#include <array>
#include <chrono>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "polydeg/groebner.hpp"

namespace polydeg::detail {

constexpr std::size_t kMaxVars = 16;

struct Mono {
  std::array<std::uint16_t, kMaxVars> e{};
  std::uint32_t deg = 0;
  std::uint64_t mask = 0;

  void finalize(std::size_t n) {
    deg = 0;
    mask = 0;
    for (std::size_t i = 0; i < n; ++i) {
      deg += e[i];
      // four threshold bits per variable; monotone in the exponent
      if (e[i] > 0) mask |= 1ULL << (4 * i);
      if (e[i] > 1) mask |= 1ULL << (4 * i + 1);
      if (e[i] > 3) mask |= 1ULL << (4 * i + 2);
      if (e[i] > 7) mask |= 1ULL << (4 * i + 3);
    }
  }
};

struct Term {
  Mono m;
  mpz_class c;
};

using Poly = std::vector<Term>;

struct LimitHit : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Kernel {
public:
  Kernel(OrderKind kind, std::size_t n) : kind_(kind), n_(n) {}

  std::size_t arity() const { return n_; }

  /// -1, 0, 1 for a < b, a == b, a > b.
  int cmp(const Mono& a, const Mono& b) const {
    if (kind_ == OrderKind::grevlex) {
      if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
      for (std::size_t i = n_; i-- > 0;)
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
      return 0;
    }
    for (std::size_t i = 0; i < n_; ++i)
      if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
    return 0;
  }

  bool divides(const Mono& a, const Mono& b) const {
    if (a.mask & ~b.mask) return false;
    for (std::size_t i = 0; i < n_; ++i)
      if (a.e[i] > b.e[i]) return false;
    return true;
  }

  Mono mul(const Mono& a, const Mono& b) const {
    Mono r;
    for (std::size_t i = 0; i < n_; ++i) r.e[i] = static_cast<std::uint16_t>(a.e[i] + b.e[i]);
    r.finalize(n_);
    return r;
  }

  Mono quot(const Mono& a, const Mono& b) const {
    Mono r;
    for (std::size_t i = 0; i < n_; ++i) r.e[i] = static_cast<std::uint16_t>(a.e[i] - b.e[i]);
    r.finalize(n_);
    return r;
  }

  Mono lcm(const Mono& a, const Mono& b) const {
    Mono r;
    for (std::size_t i = 0; i < n_; ++i) r.e[i] = std::max(a.e[i], b.e[i]);
    r.finalize(n_);
    return r;
  }

  bool coprime(const Mono& a, const Mono& b) const {
    for (std::size_t i = 0; i < n_; ++i)
      if (a.e[i] != 0 && b.e[i] != 0) return false;
    return true;
  }

  bool equal(const Mono& a, const Mono& b) const {
    if (a.deg != b.deg || a.mask != b.mask) return false;
    for (std::size_t i = 0; i < n_; ++i)
      if (a.e[i] != b.e[i]) return false;
    return true;
  }

  void set_deadline(std::chrono::steady_clock::time_point d) { deadline_ = d; }
  void check_deadline() const {
    if (std::chrono::steady_clock::now() > deadline_) throw LimitHit("wall-clock budget exhausted");
  }

  void sort_desc(Poly& p) const;
  /// Divides out the content and makes the leading coefficient positive.
  /// Returns the divisor applied (signed).
  mpz_class make_primitive(Poly& p) const;

  /// a*p - b*q, where p and q are sorted; q's monomials are shifted by `shift`.
  Poly combine(const mpz_class& a, const Poly& p, std::size_t p_from, const mpz_class& b, const Poly& q,
               std::size_t q_from, const Mono& shift) const;

  /// Reduces f (sorted) by the reducers. With `full`, every term is reduced,
  /// otherwise only the leading term. The result is primitive. If `scale` is
  /// given it receives s with result == s * (f - (element of the ideal)).
  Poly reduce(Poly f, const std::vector<const Poly*>& reducers, bool full, mpq_class* scale = nullptr) const;

  Poly spoly(const Poly& p, const Poly& q) const;

private:
  OrderKind kind_;
  std::size_t n_;
  std::chrono::steady_clock::time_point deadline_ = std::chrono::steady_clock::time_point::max();
};

/// Conversion between MultiPoly and the kernel representation. Kernel
/// variable k is context variable perm[k].
/// If `factor` is given it receives r with kernel form == r * p.
Poly to_kernel(const Kernel& k, const MultiPoly& p, const std::vector<std::size_t>& perm,
               mpq_class* factor = nullptr);
MultiPoly from_kernel(const Poly& p, const VarContext& ctx, const std::vector<std::size_t>& perm,
                      bool make_monic);

}  // namespace polydeg::detail
