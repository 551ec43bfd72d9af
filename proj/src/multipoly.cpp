#include "polydeg/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "polydeg/errors.hpp"

namespace polydeg {

// ---------------------------------------------------------------- VarContext

VarContext::VarContext() : VarContext(std::vector<std::string>{}) {}

VarContext::VarContext(std::vector<std::string> names) {
  auto data = std::make_shared<Data>();
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i].empty()) throw UsageError("empty variable name");
    if (!data->index.emplace(names[i], i).second)
      throw UsageError("duplicate variable name '" + names[i] + "'");
  }
  data->names = std::move(names);
  data_ = std::move(data);
}

VarContext VarContext::conjecture(std::size_t e) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= e; ++i) names.push_back("x" + std::to_string(i));
  return VarContext(std::move(names));
}

std::optional<std::size_t> VarContext::find(std::string_view name) const {
  auto it = data_->index.find(std::string(name));
  if (it == data_->index.end()) return std::nullopt;
  return it->second;
}

std::size_t VarContext::index(std::string_view name) const {
  auto i = find(name);
  if (!i) throw UsageError("unknown variable '" + std::string(name) + "'");
  return *i;
}

VarContext VarContext::extended(const std::vector<std::string>& extra) const {
  std::vector<std::string> names = data_->names;
  names.insert(names.end(), extra.begin(), extra.end());
  return VarContext(std::move(names));
}

bool operator==(const VarContext& a, const VarContext& b) {
  return a.data_ == b.data_ || a.data_->names == b.data_->names;
}

// ------------------------------------------------------------------ Monomial

unsigned long Monomial::total_degree() const {
  return std::accumulate(exps_.begin(), exps_.end(), 0UL);
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](auto x) { return x == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += other.exps_[i];
  return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= other.exps_[i];
  return r;
}

std::strong_ordering grevlex_compare(const Monomial& a, const Monomial& b) {
  auto da = a.total_degree(), db = b.total_degree();
  if (da != db) return da <=> db;
  for (std::size_t i = a.arity(); i-- > 0;) {
    if (a[i] != b[i]) return b[i] <=> a[i];
  }
  return std::strong_ordering::equal;
}

// ----------------------------------------------------------------- MultiPoly

MultiPoly MultiPoly::constant(const VarContext& ctx, const Rational& c) {
  MultiPoly p(ctx);
  p.add_term(Monomial(ctx.arity()), c);
  return p;
}

MultiPoly MultiPoly::variable(const VarContext& ctx, std::string_view name) {
  return variable(ctx, ctx.index(name));
}

MultiPoly MultiPoly::variable(const VarContext& ctx, std::size_t index) {
  if (index >= ctx.arity()) throw UsageError("variable index out of range");
  Monomial m(ctx.arity());
  m[index] = 1;
  return term(ctx, std::move(m), 1);
}

MultiPoly MultiPoly::term(const VarContext& ctx, Monomial m, const Rational& c) {
  if (m.arity() != ctx.arity()) throw UsageError("monomial arity does not match context");
  MultiPoly p(ctx);
  p.add_term(m, c);
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational MultiPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational MultiPoly::constant_term() const { return coefficient(Monomial(ctx_.arity())); }

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

long MultiPoly::total_degree() const {
  long d = -1;
  for (const auto& [m, c] : terms_) d = std::max<long>(d, static_cast<long>(m.total_degree()));
  return d;
}

long MultiPoly::degree_in(std::size_t var) const {
  long d = -1;
  for (const auto& [m, c] : terms_) d = std::max<long>(d, m[var]);
  return d;
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
  MultiPoly r(ctx_);
  for (const auto& [m, c] : terms_) {
    if (m[var] == 0) continue;
    Monomial dm = m;
    dm[var] -= 1;
    r.add_term(dm, c * m[var]);
  }
  return r;
}

MultiPoly MultiPoly::pow(unsigned long k) const {
  MultiPoly result = constant(ctx_, 1);
  MultiPoly base = *this;
  while (k > 0) {
    if (k & 1UL) result *= base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

std::vector<MultiPoly> MultiPoly::coefficients_in(std::size_t var) const {
  std::vector<MultiPoly> out;
  for (const auto& [m, c] : terms_) {
    std::size_t k = m[var];
    if (out.size() <= k) out.resize(k + 1, MultiPoly(ctx_));
    Monomial rest = m;
    rest[var] = 0;
    out[k].add_term(rest, c);
  }
  return out;
}

MultiPoly MultiPoly::rebased(const VarContext& target) const {
  if (target == ctx_) return *this;
  std::vector<std::optional<std::size_t>> map(ctx_.arity());
  for (std::size_t i = 0; i < ctx_.arity(); ++i) map[i] = target.find(ctx_.name(i));
  MultiPoly r(target);
  for (const auto& [m, c] : terms_) {
    Monomial tm(target.arity());
    for (std::size_t i = 0; i < m.arity(); ++i) {
      if (m[i] == 0) continue;
      if (!map[i]) throw UsageError("variable '" + ctx_.name(i) + "' absent from target context");
      tm[*map[i]] = m[i];
    }
    r.add_term(tm, c);
  }
  return r;
}

void MultiPoly::require_same_context(const MultiPoly& q, const char* op) const {
  if (!(ctx_ == q.ctx_)) throw UsageError(std::string("context mismatch in ") + op);
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& q) {
  require_same_context(q, "add");
  for (const auto& [m, c] : q.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& q) {
  require_same_context(q, "sub");
  for (const auto& [m, c] : q.terms_) add_term(m, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& p, const MultiPoly& q) {
  p.require_same_context(q, "mul");
  MultiPoly r(p.ctx_);
  for (const auto& [mp, cp] : p.terms_)
    for (const auto& [mq, cq] : q.terms_) r.add_term(mp * mq, cp * cq);
  return r;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& q) { return *this = *this * q; }

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coef] : terms_) coef *= c;
  return *this;
}

MultiPoly operator-(MultiPoly p) {
  for (auto& [m, c] : p.terms_) c = -c;
  return p;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  return a.ctx_ == b.ctx_ && a.terms_ == b.terms_;
}

// -------------------------------------------------------------- substitute

MultiPoly substitute(const MultiPoly& p, const Bindings& bindings, const VarContext& target) {
  const VarContext& src = p.context();
  std::vector<std::optional<MultiPoly>> images(src.arity());
  for (const auto& [name, value] : bindings) {
    auto idx = src.find(name);
    if (!idx) throw UsageError("substitute: variable '" + name + "' not in the polynomial's context");
    if (const auto* q = std::get_if<Rational>(&value)) {
      images[*idx] = MultiPoly::constant(target, *q);
    } else {
      const auto& poly = std::get<MultiPoly>(value);
      images[*idx] = poly.rebased(target);
    }
  }
  for (std::size_t i = 0; i < src.arity(); ++i) {
    if (images[i]) continue;
    auto t = target.find(src.name(i));
    if (t) {
      images[i] = MultiPoly::variable(target, *t);
    } else {
      // only an error if the variable actually occurs
      bool occurs = std::any_of(p.terms().begin(), p.terms().end(),
                                [i](const auto& kv) { return kv.first[i] != 0; });
      if (occurs)
        throw UsageError("substitute: unbound variable '" + src.name(i) + "' absent from target context");
    }
  }
  // cache powers per variable
  std::vector<std::vector<MultiPoly>> powers(src.arity());
  auto power = [&](std::size_t var, std::uint32_t k) -> const MultiPoly& {
    auto& pw = powers[var];
    if (pw.empty()) pw.push_back(MultiPoly::constant(target, 1));
    while (pw.size() <= k) pw.push_back(pw.back() * *images[var]);
    return pw[k];
  };
  MultiPoly result(target);
  for (const auto& [m, c] : p.terms()) {
    MultiPoly t = MultiPoly::constant(target, c);
    for (std::size_t i = 0; i < m.arity() && !t.is_zero(); ++i)
      if (m[i] != 0) t *= power(i, m[i]);
    result += t;
  }
  return result;
}

MultiPoly substitute(const MultiPoly& p, const Bindings& bindings) {
  return substitute(p, bindings, p.context());
}

std::optional<long> weighted_degree(const MultiPoly& p, std::span<const long> weights) {
  if (weights.size() != p.context().arity())
    throw UsageError("weighted_degree: weight vector length does not match arity");
  std::optional<long> best;
  for (const auto& [m, c] : p.terms()) {
    long w = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) w += weights[i] * static_cast<long>(m[i]);
    if (!best || w > *best) best = w;
  }
  return best;
}

MultiPoly exact_quotient(const MultiPoly& p, const MultiPoly& q) {
  if (q.is_zero()) throw InternalInconsistency("exact_quotient: division by zero");
  if (!(p.context() == q.context())) throw UsageError("context mismatch in exact_quotient");
  // lex-leading terms are the map's last entries
  const auto& [qm, qc] = *q.terms().rbegin();
  MultiPoly rem = p;
  MultiPoly quot(p.context());
  while (!rem.is_zero()) {
    const auto& [rm, rc] = *rem.terms().rbegin();
    if (!qm.divides(rm)) throw InternalInconsistency("exact_quotient: division is not exact");
    MultiPoly t = MultiPoly::term(p.context(), rm / qm, rc / qc);
    quot += t;
    rem -= t * q;
  }
  return quot;
}

// -------------------------------------------------------------------- text

std::string to_string(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::vector<const std::pair<const Monomial, Rational>*> order;
  for (const auto& kv : p.terms()) order.push_back(&kv);
  std::sort(order.begin(), order.end(),
            [](auto* a, auto* b) { return grevlex_compare(a->first, b->first) > 0; });
  std::string out;
  bool first = true;
  for (const auto* kv : order) {
    const Monomial& m = kv->first;
    Rational c = kv->second;
    bool negative = c < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    Rational mag = abs(c);
    std::string factors;
    for (std::size_t i = 0; i < m.arity(); ++i) {
      if (m[i] == 0) continue;
      if (!factors.empty()) factors += "*";
      factors += p.context().name(i);
      if (m[i] > 1) factors += "^" + std::to_string(m[i]);
    }
    if (factors.empty()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += factors;
    } else {
      out += mag.get_str() + "*" + factors;
    }
  }
  return out;
}

namespace {

class PolyParser {
public:
  PolyParser(std::string_view text, const VarContext& ctx) : s_(text), ctx_(ctx) {}

  MultiPoly parse() {
    MultiPoly result(ctx_);
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool negate = false;
    if (peek() == '-' || peek() == '+') {
      negate = peek() == '-';
      ++pos_;
      skip_ws();
    }
    while (true) {
      auto [m, c] = sterm();
      result.add_term(m, negate ? Rational(-c) : c);
      skip_ws();
      if (at_end()) break;
      char op = peek();
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      negate = op == '-';
      ++pos_;
      skip_ws();
    }
    return result;
  }

private:
  std::pair<Monomial, Rational> sterm() {
    Monomial m(ctx_.arity());
    Rational c = 1;
    bool need_factor = true;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      c = coeff();
      need_factor = false;
      skip_ws();
      if (at_end() || peek() != '*') return {m, c};
      ++pos_;
      skip_ws();
      need_factor = true;
    }
    while (need_factor) {
      factor(m);
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_ws();
      } else {
        need_factor = false;
      }
    }
    return {m, c};
  }

  Rational coeff() {
    std::string num = digits();
    std::string den = "1";
    skip_ws();
    if (!at_end() && peek() == '/') {
      ++pos_;
      skip_ws();
      den = digits();
    }
    return parse_rational(num + "/" + den);
  }

  void factor(Monomial& m) {
    std::size_t start = pos_;
    if (at_end() || !(std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_'))
      fail("expected variable");
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
    std::string name(s_.substr(start, pos_ - start));
    auto idx = ctx_.find(name);
    if (!idx) fail("unknown variable '" + name + "'");
    skip_ws();
    unsigned long e = 1;
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_ws();
      e = std::stoul(digits());
    }
    m[*idx] += static_cast<std::uint32_t>(e);
  }

  std::string digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(s_.substr(start, pos_ - start));
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  [[noreturn]] void fail(const std::string& msg) const {
    throw UsageError("parse_poly: " + msg + " at offset " + std::to_string(pos_) + " in '" +
                     std::string(s_) + "'");
  }

  std::string_view s_;
  const VarContext& ctx_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_poly(std::string_view text, const VarContext& ctx) { return PolyParser(text, ctx).parse(); }

}  // namespace polydeg
