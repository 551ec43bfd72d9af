#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "polydeg/rational.hpp"

namespace polydeg {

/// Ordered, immutable list of variable names. Copies share storage.
class VarContext {
public:
  VarContext();
  explicit VarContext(std::vector<std::string> names);

  /// x1, ..., xe
  static VarContext conjecture(std::size_t e);

  std::size_t arity() const { return data_->names.size(); }
  const std::string& name(std::size_t i) const { return data_->names.at(i); }
  const std::vector<std::string>& names() const { return data_->names; }
  std::optional<std::size_t> find(std::string_view name) const;
  /// Throws UsageError for an unknown name.
  std::size_t index(std::string_view name) const;
  bool contains(std::string_view name) const { return find(name).has_value(); }

  /// New context with `extra` appended after the existing names.
  VarContext extended(const std::vector<std::string>& extra) const;

  friend bool operator==(const VarContext& a, const VarContext& b);

private:
  struct Data {
    std::vector<std::string> names;
    std::unordered_map<std::string, std::size_t> index;
  };
  std::shared_ptr<const Data> data_;
};

class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::size_t arity) : exps_(arity, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}

  std::size_t arity() const { return exps_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  std::uint32_t& operator[](std::size_t i) { return exps_[i]; }
  const std::vector<std::uint32_t>& exponents() const { return exps_; }

  unsigned long total_degree() const;
  bool is_one() const;
  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// Exact quotient; caller guarantees divisibility.
  Monomial operator/(const Monomial& other) const;

  auto operator<=>(const Monomial&) const = default;

private:
  std::vector<std::uint32_t> exps_;
};

/// Sparse polynomial with exact rational coefficients. Stored terms are
/// never zero, so equality of term maps is equality of polynomials.
class MultiPoly {
public:
  using TermMap = std::map<Monomial, Rational>;

  MultiPoly() = default;
  explicit MultiPoly(VarContext ctx) : ctx_(std::move(ctx)) {}

  static MultiPoly constant(const VarContext& ctx, const Rational& c);
  static MultiPoly variable(const VarContext& ctx, std::string_view name);
  static MultiPoly variable(const VarContext& ctx, std::size_t index);
  static MultiPoly term(const VarContext& ctx, Monomial m, const Rational& c);

  const VarContext& context() const { return ctx_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational coefficient(const Monomial& m) const;
  Rational constant_term() const;

  /// Adds c*m into the polynomial, dropping the term if it cancels.
  void add_term(const Monomial& m, const Rational& c);

  /// -1 for the zero polynomial.
  long total_degree() const;
  /// Highest exponent of variable `var` among stored terms; -1 for zero.
  long degree_in(std::size_t var) const;
  MultiPoly derivative(std::size_t var) const;
  MultiPoly pow(unsigned long k) const;

  /// Coefficients of powers of `var`: result[k] is free of `var` and
  /// p = sum_k result[k] * var^k.
  std::vector<MultiPoly> coefficients_in(std::size_t var) const;

  /// Re-expresses over `target` by variable name. Throws UsageError if a
  /// variable actually occurring in the polynomial is missing from `target`.
  MultiPoly rebased(const VarContext& target) const;

  MultiPoly& operator+=(const MultiPoly& q);
  MultiPoly& operator-=(const MultiPoly& q);
  MultiPoly& operator*=(const MultiPoly& q);
  MultiPoly& operator*=(const Rational& c);

  friend MultiPoly operator+(MultiPoly p, const MultiPoly& q) { return p += q; }
  friend MultiPoly operator-(MultiPoly p, const MultiPoly& q) { return p -= q; }
  friend MultiPoly operator*(const MultiPoly& p, const MultiPoly& q);
  friend MultiPoly operator*(MultiPoly p, const Rational& c) { return p *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly p) { return p *= c; }
  friend MultiPoly operator-(MultiPoly p);

  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

private:
  void require_same_context(const MultiPoly& q, const char* op) const;

  VarContext ctx_;
  TermMap terms_;
};

/// Value for a substituted variable: a polynomial over the target context
/// or a rational constant.
using Binding = std::variant<Rational, MultiPoly>;
using Bindings = std::map<std::string, Binding>;

/// Image of p under the ring map sending each bound variable to its binding
/// and each unbound variable to the same-named variable of `target`.
MultiPoly substitute(const MultiPoly& p, const Bindings& bindings, const VarContext& target);
MultiPoly substitute(const MultiPoly& p, const Bindings& bindings);

/// Max over terms of <weights, exponents>; nullopt stands for -infinity.
std::optional<long> weighted_degree(const MultiPoly& p, std::span<const long> weights);

/// q must divide p exactly; throws InternalInconsistency otherwise.
MultiPoly exact_quotient(const MultiPoly& p, const MultiPoly& q);

/// Canonical text: terms in descending grevlex order (context order
/// x_0 > x_1 > ...), e.g. "2*x1^2 - x2".
std::string to_string(const MultiPoly& p);
MultiPoly parse_poly(std::string_view text, const VarContext& ctx);

/// Descending grevlex comparison on equal-arity monomials; used for text output.
std::strong_ordering grevlex_compare(const Monomial& a, const Monomial& b);

}  // namespace polydeg
