#pragma once

#include <chrono>
#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "polydeg/multipoly.hpp"

namespace polydeg {

enum class OrderKind { lex, grevlex };

/// Lex or grevlex over a permutation of the context variables:
/// permutation()[0] is the context index of the largest variable.
class MonomialOrder {
public:
  MonomialOrder(OrderKind kind, std::vector<std::size_t> permutation);
  static MonomialOrder grevlex(std::size_t arity);
  static MonomialOrder lex(std::size_t arity);

  OrderKind kind() const { return kind_; }
  std::size_t arity() const { return perm_.size(); }
  const std::vector<std::size_t>& permutation() const { return perm_; }
  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;

  /// Same order with one extra variable appended as the least variable.
  MonomialOrder with_least_variable() const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

private:
  OrderKind kind_;
  std::vector<std::size_t> perm_;
};

std::string to_string(OrderKind kind);

struct Limits {
  unsigned long max_pairs = 5'000'000;
  unsigned long max_total_degree = 1000;
  double wall_clock_seconds = 3600.0;
  /// Absolute deadline shared by several runs (a whole PIC task, say).
  std::optional<std::chrono::steady_clock::time_point> deadline;

  /// Parses "pairs:N,deg:N,secs:N" (any subset, any order).
  static Limits parse(std::string_view text);
  std::chrono::steady_clock::time_point effective_deadline(std::chrono::steady_clock::time_point start) const;
};

enum class Truth { true_, false_, indeterminate };
std::string to_string(Truth t);

struct Verdict {
  Truth value = Truth::indeterminate;
  std::string reason;
  double elapsed_seconds = 0.0;

  bool is_true() const { return value == Truth::true_; }
  bool is_false() const { return value == Truth::false_; }
  bool is_indeterminate() const { return value == Truth::indeterminate; }
};

enum class PairStrategy { normal, fifo };

/// Reduced monic Groebner basis. Elements are sorted by ascending leading
/// monomial, so equal ideals give identical element lists.
class GroebnerBasis {
public:
  GroebnerBasis(VarContext ctx, MonomialOrder order, std::vector<MultiPoly> elements);

  const VarContext& context() const { return ctx_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<MultiPoly>& elements() const { return elements_; }
  bool is_unit() const;

  friend bool operator==(const GroebnerBasis&, const GroebnerBasis&) = default;

private:
  VarContext ctx_;
  MonomialOrder order_;
  std::vector<MultiPoly> elements_;
};

struct BuchbergerStats {
  unsigned long pairs_created = 0;
  unsigned long pairs_reduced = 0;
  unsigned long zero_reductions = 0;
  unsigned long max_basis_size = 0;
  unsigned long max_lcm_degree = 0;
  double elapsed_seconds = 0.0;
};

struct BuchbergerResult {
  std::optional<GroebnerBasis> basis;  ///< empty iff a limit was hit
  Verdict verdict;                     ///< TRUE on completion, INDETERMINATE on a limit
  BuchbergerStats stats;
};

struct BuchbergerOptions {
  PairStrategy strategy = PairStrategy::normal;
  /// Stop as soon as a nonzero constant enters the basis.
  bool stop_on_unit = true;
};

BuchbergerResult buchberger(const std::vector<MultiPoly>& gens, const MonomialOrder& order,
                            const Limits& limits, const BuchbergerOptions& options = {});

/// Remainder of f on division by `basis` (no term divisible by a leading
/// monomial of the basis; f - r in the ideal).
MultiPoly normal_form(const MultiPoly& f, std::span<const MultiPoly> basis, const MonomialOrder& order);

/// Leading monomial of a nonzero polynomial under `order`.
Monomial leading_monomial(const MultiPoly& p, const MonomialOrder& order);

bool ideal_member(const MultiPoly& f, const GroebnerBasis& gb);

/// Checks the reduced-basis invariants: monic leaders, no leader divides a
/// term of another element, every S-polynomial reduces to zero.
bool is_reduced_groebner_basis(const GroebnerBasis& gb);

/// Witness x_i^N in I, checkable by normal-form reduction alone.
struct RadicalCertificate {
  std::string variable;
  unsigned long exponent = 0;
  GroebnerBasis basis;
};

struct RadicalOptions {
  PairStrategy strategy = PairStrategy::normal;
  /// Exponents 1..bound are tried when f is a single variable; 0 disables.
  unsigned long certificate_bound = 16;
};

struct RadicalResult {
  Verdict verdict;
  std::optional<RadicalCertificate> certificate;
};

/// f in rad(gens) via the Rabinowitsch trick with `t` appended as the least
/// variable of the default grevlex order.
RadicalResult radical_member(const MultiPoly& f, const std::vector<MultiPoly>& gens, const Limits& limits,
                             const RadicalOptions& options = {});

struct MaximalityResult {
  Verdict verdict;
  std::vector<RadicalCertificate> certificates;
};

/// rad(gens) == (x_1, ..., x_n) for the full context of the generators.
MaximalityResult rad_equals_max(const std::vector<MultiPoly>& gens, const Limits& limits,
                                const RadicalOptions& options = {});

/// Reduction-only re-check of a certificate (no Buchberger run).
bool verify_certificate(const RadicalCertificate& cert);

/// "RADCERT var=<name> N=<nat> order=grevlex vars=<a,b,...>" followed by one
/// basis polynomial per line.
std::string write_certificate(const RadicalCertificate& cert);
RadicalCertificate read_certificate(std::string_view text);

}  // namespace polydeg
