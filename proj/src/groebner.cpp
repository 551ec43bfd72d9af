#include "polydeg/groebner.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "engine.hpp"
#include "polydeg/errors.hpp"

namespace polydeg {

using detail::Kernel;
using detail::LimitHit;
using detail::Mono;
using detail::Poly;
using detail::Term;
using Clock = std::chrono::steady_clock;

// ------------------------------------------------------------ MonomialOrder

MonomialOrder::MonomialOrder(OrderKind kind, std::vector<std::size_t> permutation)
    : kind_(kind), perm_(std::move(permutation)) {
  std::vector<std::size_t> sorted = perm_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != i) throw UsageError("monomial order: not a permutation");
}

MonomialOrder MonomialOrder::grevlex(std::size_t arity) {
  std::vector<std::size_t> p(arity);
  std::iota(p.begin(), p.end(), 0);
  return MonomialOrder(OrderKind::grevlex, std::move(p));
}

MonomialOrder MonomialOrder::lex(std::size_t arity) {
  std::vector<std::size_t> p(arity);
  std::iota(p.begin(), p.end(), 0);
  return MonomialOrder(OrderKind::lex, std::move(p));
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  const std::size_t n = perm_.size();
  if (kind_ == OrderKind::grevlex) {
    auto da = a.total_degree(), db = b.total_degree();
    if (da != db) return da <=> db;
    for (std::size_t k = n; k-- > 0;) {
      auto x = a[perm_[k]], y = b[perm_[k]];
      if (x != y) return y <=> x;
    }
    return std::strong_ordering::equal;
  }
  for (std::size_t k = 0; k < n; ++k) {
    auto x = a[perm_[k]], y = b[perm_[k]];
    if (x != y) return x <=> y;
  }
  return std::strong_ordering::equal;
}

MonomialOrder MonomialOrder::with_least_variable() const {
  std::vector<std::size_t> p = perm_;
  p.push_back(p.size());
  return MonomialOrder(kind_, std::move(p));
}

std::string to_string(OrderKind kind) { return kind == OrderKind::lex ? "lex" : "grevlex"; }

// ------------------------------------------------------------------- Limits

Limits Limits::parse(std::string_view text) {
  Limits l;
  std::string s(text);
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto colon = item.find(':');
    if (colon == std::string::npos) throw UsageError("limits: expected key:value in '" + item + "'");
    std::string key = item.substr(0, colon), value = item.substr(colon + 1);
    try {
      if (key == "pairs") l.max_pairs = std::stoul(value);
      else if (key == "deg") l.max_total_degree = std::stoul(value);
      else if (key == "secs") l.wall_clock_seconds = std::stod(value);
      else throw UsageError("limits: unknown key '" + key + "'");
    } catch (const std::logic_error& e) {
      if (dynamic_cast<const UsageError*>(&e)) throw;
      throw UsageError("limits: bad value in '" + item + "'");
    }
  }
  if (l.max_pairs == 0 || l.max_total_degree == 0 || !(l.wall_clock_seconds > 0))
    throw UsageError("limits must be positive");
  return l;
}

Clock::time_point Limits::effective_deadline(Clock::time_point start) const {
  auto budget = std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(wall_clock_seconds));
  auto d = start + budget;
  if (deadline && *deadline < d) d = *deadline;
  return d;
}

std::string to_string(Truth t) {
  switch (t) {
    case Truth::true_: return "TRUE";
    case Truth::false_: return "FALSE";
    default: return "INDETERMINATE";
  }
}

// ------------------------------------------------------------ GroebnerBasis

GroebnerBasis::GroebnerBasis(VarContext ctx, MonomialOrder order, std::vector<MultiPoly> elements)
    : ctx_(std::move(ctx)), order_(std::move(order)), elements_(std::move(elements)) {
  if (order_.arity() != ctx_.arity()) throw UsageError("Groebner basis: order arity does not match context");
  for (const auto& g : elements_)
    if (!(g.context() == ctx_)) throw UsageError("Groebner basis: element over a different context");
}

bool GroebnerBasis::is_unit() const {
  return elements_.size() == 1 && elements_[0].is_constant() && !elements_[0].is_zero();
}

Monomial leading_monomial(const MultiPoly& p, const MonomialOrder& order) {
  if (p.is_zero()) throw UsageError("leading monomial of the zero polynomial");
  const Monomial* best = nullptr;
  for (const auto& [m, c] : p.terms())
    if (!best || order.compare(m, *best) > 0) best = &m;
  return *best;
}

// --------------------------------------------------------------- Buchberger

namespace {

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Pair {
  std::size_t i, j;
  Mono lcm;
  unsigned long seq;
};

class Buchberger {
public:
  Buchberger(const Kernel& k, const Limits& limits, const BuchbergerOptions& opts, BuchbergerStats& stats)
      : k_(k), limits_(limits), opts_(opts), stats_(stats) {}

  /// Returns false if the ideal is the unit ideal (early exit).
  bool run(std::vector<Poly> gens) {
    std::sort(gens.begin(), gens.end(),
              [this](const Poly& a, const Poly& b) { return k_.cmp(a.front().m, b.front().m) < 0; });
    for (auto& g : gens) {
      Poly h = k_.reduce(std::move(g), active_ptrs(), true);
      if (h.empty()) continue;
      if (h.front().m.deg == 0) return unit();
      update(std::move(h));
    }
    while (!pairs_.empty()) {
      std::size_t idx = select();
      Pair p = pairs_[idx];
      pairs_[idx] = pairs_.back();
      pairs_.pop_back();
      if (++stats_.pairs_reduced > limits_.max_pairs) throw LimitHit("pair budget exhausted");
      if (p.lcm.deg > limits_.max_total_degree) throw LimitHit("total-degree bound exceeded");
      stats_.max_lcm_degree = std::max<unsigned long>(stats_.max_lcm_degree, p.lcm.deg);
      k_.check_deadline();
      Poly s = k_.spoly(polys_[p.i], polys_[p.j]);
      Poly h = k_.reduce(std::move(s), active_ptrs(), true);
      if (h.empty()) {
        ++stats_.zero_reductions;
        continue;
      }
      if (h.front().m.deg == 0) return unit();
      update(std::move(h));
    }
    return true;
  }

  /// Interreduced, primitive basis sorted by ascending leading monomial.
  std::vector<Poly> reduced_basis() {
    if (unit_) {
      Poly one(1);
      one[0].c = 1;
      one[0].m.finalize(k_.arity());
      return {one};
    }
    std::vector<Poly> minimal;
    for (std::size_t i : active_) minimal.push_back(polys_[i]);
    std::sort(minimal.begin(), minimal.end(),
              [this](const Poly& a, const Poly& b) { return k_.cmp(a.front().m, b.front().m) < 0; });
    std::vector<Poly> out;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      std::vector<const Poly*> others;
      for (std::size_t j = 0; j < minimal.size(); ++j)
        if (j != i) others.push_back(&minimal[j]);
      Poly head(minimal[i].begin(), minimal[i].begin() + 1);
      Poly tail(minimal[i].begin() + 1, minimal[i].end());
      // reduce the tail only; the leader is not divisible by another leader
      mpq_class scale;
      Poly rt = tail.empty() ? Poly{} : k_.reduce(std::move(tail), others, true, &scale);
      Poly full;
      if (rt.empty()) {
        full = head;
      } else {
        // head + rt/scale, cleared to integers: scale*head + rt
        mpz_class sn = scale.get_num(), sd = scale.get_den();
        Term h0 = head[0];
        h0.c *= sn;
        full.push_back(std::move(h0));
        for (auto& t : rt) {
          t.c *= sd;
          full.push_back(std::move(t));
        }
      }
      k_.make_primitive(full);
      out.push_back(std::move(full));
    }
    return out;
  }

private:
  bool unit() {
    unit_ = true;
    return false;
  }

  std::vector<const Poly*> active_ptrs() const {
    std::vector<const Poly*> r;
    r.reserve(active_.size());
    for (std::size_t i : active_) r.push_back(&polys_[i]);
    return r;
  }

  const Mono& lm(std::size_t i) const { return polys_[i].front().m; }

  std::size_t select() const {
    std::size_t best = 0;
    for (std::size_t i = 1; i < pairs_.size(); ++i) {
      const Pair& a = pairs_[i];
      const Pair& b = pairs_[best];
      bool better;
      if (opts_.strategy == PairStrategy::fifo) {
        better = a.seq < b.seq;
      } else if (a.lcm.deg != b.lcm.deg) {
        better = a.lcm.deg < b.lcm.deg;
      } else {
        int c = k_.cmp(a.lcm, b.lcm);
        better = c < 0 || (c == 0 && a.seq < b.seq);
      }
      if (better) best = i;
    }
    return best;
  }

  // Gebauer-Moeller update
  void update(Poly h) {
    const std::size_t hi = polys_.size();
    polys_.push_back(std::move(h));
    const Mono& lh = lm(hi);

    struct Cand {
      std::size_t g;
      Mono lcm;
      bool coprime;
    };
    std::vector<Cand> c;
    for (std::size_t g : active_) c.push_back({g, k_.lcm(lh, lm(g)), k_.coprime(lh, lm(g))});

    std::vector<Cand> d;
    for (std::size_t a = 0; a < c.size(); ++a) {
      bool keep = c[a].coprime;
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < c.size() && keep; ++b)
          if (k_.divides(c[b].lcm, c[a].lcm)) keep = false;
        for (std::size_t b = 0; b < d.size() && keep; ++b)
          if (k_.divides(d[b].lcm, c[a].lcm)) keep = false;
      }
      if (keep) d.push_back(c[a]);
    }

    std::vector<Pair> kept;
    kept.reserve(pairs_.size() + d.size());
    for (const Pair& p : pairs_) {
      bool drop = k_.divides(lh, p.lcm) && !k_.equal(k_.lcm(lm(p.i), lh), p.lcm) &&
                  !k_.equal(k_.lcm(lh, lm(p.j)), p.lcm);
      if (!drop) kept.push_back(p);
    }
    for (const Cand& x : d) {
      if (x.coprime) continue;
      kept.push_back(Pair{x.g, hi, x.lcm, seq_++});
      ++stats_.pairs_created;
    }
    pairs_ = std::move(kept);

    std::vector<std::size_t> next;
    for (std::size_t g : active_)
      if (!k_.divides(lh, lm(g))) next.push_back(g);
    next.push_back(hi);
    active_ = std::move(next);
    stats_.max_basis_size = std::max<unsigned long>(stats_.max_basis_size, active_.size());
  }

  const Kernel& k_;
  const Limits& limits_;
  const BuchbergerOptions& opts_;
  BuchbergerStats& stats_;
  std::vector<Poly> polys_;
  std::vector<std::size_t> active_;
  std::vector<Pair> pairs_;
  unsigned long seq_ = 0;
  bool unit_ = false;
};

const VarContext& common_context(const std::vector<MultiPoly>& gens) {
  if (gens.empty()) throw UsageError("buchberger: empty generator list");
  for (const auto& g : gens)
    if (!(g.context() == gens[0].context())) throw UsageError("buchberger: generators over different contexts");
  return gens[0].context();
}

}  // namespace

BuchbergerResult buchberger(const std::vector<MultiPoly>& gens, const MonomialOrder& order, const Limits& limits,
                            const BuchbergerOptions& options) {
  const auto start = Clock::now();
  const VarContext& ctx = common_context(gens);
  if (order.arity() != ctx.arity()) throw UsageError("buchberger: order arity does not match context");
  Kernel k(order.kind(), ctx.arity());
  k.set_deadline(limits.effective_deadline(start));

  std::vector<Poly> kg;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    kg.push_back(detail::to_kernel(k, g, order.permutation()));
  }

  BuchbergerResult result;
  if (kg.empty()) {
    result.basis = GroebnerBasis(ctx, order, {});
    result.verdict = {Truth::true_, "zero ideal", seconds_since(start)};
    result.stats.elapsed_seconds = result.verdict.elapsed_seconds;
    return result;
  }
  Buchberger bb(k, limits, options, result.stats);
  try {
    bool complete = bb.run(std::move(kg));
    (void)complete;
    std::vector<MultiPoly> elems;
    for (const auto& p : bb.reduced_basis()) elems.push_back(detail::from_kernel(p, ctx, order.permutation(), true));
    result.basis = GroebnerBasis(ctx, order, std::move(elems));
    result.verdict = {Truth::true_, "completed", 0.0};
  } catch (const LimitHit& e) {
    result.basis.reset();
    result.verdict = {Truth::indeterminate, e.what(), 0.0};
  }
  result.stats.elapsed_seconds = seconds_since(start);
  result.verdict.elapsed_seconds = result.stats.elapsed_seconds;
  return result;
}

// -------------------------------------------------------------- normal form

MultiPoly normal_form(const MultiPoly& f, std::span<const MultiPoly> basis, const MonomialOrder& order) {
  const VarContext& ctx = f.context();
  if (order.arity() != ctx.arity()) throw UsageError("normal_form: order arity does not match context");
  if (f.is_zero()) return f;
  Kernel k(order.kind(), ctx.arity());
  std::vector<Poly> kb;
  for (const auto& g : basis) {
    if (!(g.context() == ctx)) throw UsageError("normal_form: basis element over a different context");
    if (!g.is_zero()) kb.push_back(detail::to_kernel(k, g, order.permutation()));
  }
  std::vector<const Poly*> ptrs;
  for (const auto& p : kb) ptrs.push_back(&p);
  mpq_class f_scale;
  Poly kf = detail::to_kernel(k, f, order.permutation(), &f_scale);
  mpq_class scale;
  Poly r = k.reduce(std::move(kf), ptrs, true, &scale);
  // r = scale * f_scale * (f - element of the ideal)
  MultiPoly out = detail::from_kernel(r, ctx, order.permutation(), false);
  mpq_class undo = 1 / (scale * f_scale);
  out *= undo;
  return out;
}

bool ideal_member(const MultiPoly& f, const GroebnerBasis& gb) {
  return normal_form(f.rebased(gb.context()), gb.elements(), gb.order()).is_zero();
}

bool is_reduced_groebner_basis(const GroebnerBasis& gb) {
  const auto& els = gb.elements();
  const auto& order = gb.order();
  for (const auto& g : els)
    if (g.is_zero()) return false;
  std::vector<Monomial> leads;
  for (const auto& g : els) {
    Monomial lm = leading_monomial(g, order);
    if (g.coefficient(lm) != 1) return false;
    leads.push_back(lm);
  }
  for (std::size_t i = 0; i < els.size(); ++i)
    for (std::size_t j = 0; j < els.size(); ++j) {
      if (i == j) continue;
      for (const auto& [m, c] : els[i].terms())
        if (leads[j].divides(m)) return false;
    }
  Kernel k(order.kind(), gb.context().arity());
  std::vector<Poly> kb;
  for (const auto& g : els) kb.push_back(detail::to_kernel(k, g, order.permutation()));
  std::vector<const Poly*> ptrs;
  for (const auto& p : kb) ptrs.push_back(&p);
  for (std::size_t i = 0; i < kb.size(); ++i)
    for (std::size_t j = i + 1; j < kb.size(); ++j) {
      if (k.coprime(kb[i].front().m, kb[j].front().m)) continue;  // Buchberger's first criterion
      if (!k.reduce(k.spoly(kb[i], kb[j]), ptrs, true).empty()) return false;
    }
  return true;
}

// ------------------------------------------------------- radical membership

namespace {

std::string fresh_name(const VarContext& ctx, std::string base) {
  while (ctx.contains(base)) base += "_";
  return base;
}

/// Index of the variable if p is exactly one variable, else nullopt.
std::optional<std::size_t> single_variable(const MultiPoly& p) {
  if (p.size() != 1) return std::nullopt;
  const auto& [m, c] = *p.terms().begin();
  if (c != 1 || m.total_degree() != 1) return std::nullopt;
  for (std::size_t i = 0; i < m.arity(); ++i)
    if (m[i] == 1) return i;
  return std::nullopt;
}

Verdict rabinowitsch(const MultiPoly& f, const std::vector<MultiPoly>& gens, const VarContext& ctx,
                     const Limits& limits, PairStrategy strategy) {
  const std::string t = fresh_name(ctx, "t");
  VarContext ext = ctx.extended({t});
  std::vector<MultiPoly> sys;
  for (const auto& g : gens) sys.push_back(g.rebased(ext));
  MultiPoly tv = MultiPoly::variable(ext, t);
  sys.push_back(MultiPoly::constant(ext, 1) - tv * f.rebased(ext));
  auto order = MonomialOrder::grevlex(ctx.arity()).with_least_variable();
  auto res = buchberger(sys, order, limits, {strategy, true});
  Verdict v;
  v.elapsed_seconds = res.verdict.elapsed_seconds;
  if (!res.basis) {
    v.value = Truth::indeterminate;
    v.reason = res.verdict.reason;
  } else if (res.basis->is_unit()) {
    v.value = Truth::true_;
    v.reason = "Groebner basis of gens + (1 - " + t + "*f) is {1}";
  } else {
    v.value = Truth::false_;
    v.reason = "Groebner basis of gens + (1 - " + t + "*f) has " + std::to_string(res.basis->elements().size()) +
               " elements, not {1}";
  }
  return v;
}

/// Smallest N <= bound with var^N reducing to zero, using reduction only.
std::optional<unsigned long> smallest_power_in(std::size_t var, const GroebnerBasis& gb, unsigned long bound,
                                               Clock::time_point deadline) {
  const auto& order = gb.order();
  Kernel k(order.kind(), gb.context().arity());
  k.set_deadline(deadline);
  std::vector<Poly> kb;
  for (const auto& g : gb.elements()) kb.push_back(detail::to_kernel(k, g, order.permutation()));
  std::vector<const Poly*> ptrs;
  for (const auto& p : kb) ptrs.push_back(&p);
  MultiPoly x = MultiPoly::variable(gb.context(), var);
  Poly kx = detail::to_kernel(k, x, order.permutation());
  Poly r = detail::to_kernel(k, MultiPoly::constant(gb.context(), 1), order.permutation());
  for (unsigned long n = 1; n <= bound; ++n) {
    // r <- NF(x * r); NF is multiplicative modulo the ideal
    Poly prod;
    for (const auto& t : r) prod.push_back(detail::Term{k.mul(t.m, kx.front().m), t.c});
    r = k.reduce(std::move(prod), ptrs, true);
    if (r.empty()) return n;
  }
  return std::nullopt;
}

}  // namespace

RadicalResult radical_member(const MultiPoly& f, const std::vector<MultiPoly>& gens, const Limits& limits,
                             const RadicalOptions& options) {
  const auto start = Clock::now();
  const VarContext& ctx = f.context();
  for (const auto& g : gens)
    if (!(g.context() == ctx)) throw UsageError("radical_member: f and generators must share a context");
  Limits lim = limits;
  lim.deadline = limits.effective_deadline(start);

  RadicalResult out;
  out.verdict = rabinowitsch(f, gens, ctx, lim, options.strategy);
  auto var = single_variable(f);
  if (out.verdict.is_true() && var && options.certificate_bound > 0 && !gens.empty()) {
    try {
      auto gb = buchberger(gens, MonomialOrder::grevlex(ctx.arity()), lim, {options.strategy, false});
      if (gb.basis) {
        auto n = smallest_power_in(*var, *gb.basis, options.certificate_bound, *lim.deadline);
        if (n) out.certificate = RadicalCertificate{ctx.name(*var), *n, *gb.basis};
      }
    } catch (const LimitHit&) {
      // certificate is optional
    }
  }
  out.verdict.elapsed_seconds = seconds_since(start);
  return out;
}

MaximalityResult rad_equals_max(const std::vector<MultiPoly>& gens, const Limits& limits,
                                const RadicalOptions& options) {
  const auto start = Clock::now();
  const VarContext& ctx = common_context(gens);
  MaximalityResult out;
  for (const auto& g : gens) {
    if (g.constant_term() != 0) {
      out.verdict = {Truth::false_, "generator " + to_string(g) + " has a nonzero constant term", 0.0};
      out.verdict.elapsed_seconds = seconds_since(start);
      return out;
    }
  }
  Limits lim = limits;
  lim.deadline = limits.effective_deadline(start);
  bool indeterminate = false;
  std::string reason;
  for (std::size_t i = 0; i < ctx.arity(); ++i) {
    Verdict v = rabinowitsch(MultiPoly::variable(ctx, i), gens, ctx, lim, options.strategy);
    if (v.is_false()) {
      out.verdict = {Truth::false_, ctx.name(i) + " is not in the radical: " + v.reason, 0.0};
      out.verdict.elapsed_seconds = seconds_since(start);
      return out;
    }
    if (v.is_indeterminate()) {
      indeterminate = true;
      reason = ctx.name(i) + ": " + v.reason;
      break;
    }
  }
  if (indeterminate) {
    out.verdict = {Truth::indeterminate, reason, seconds_since(start)};
    return out;
  }
  out.verdict = {Truth::true_, "every variable lies in the radical", 0.0};
  if (options.certificate_bound > 0) {
    try {
      auto gb = buchberger(gens, MonomialOrder::grevlex(ctx.arity()), lim, {options.strategy, false});
      if (gb.basis) {
        for (std::size_t i = 0; i < ctx.arity(); ++i) {
          auto n = smallest_power_in(i, *gb.basis, options.certificate_bound, *lim.deadline);
          if (n) out.certificates.push_back(RadicalCertificate{ctx.name(i), *n, *gb.basis});
        }
      }
    } catch (const LimitHit&) {
    }
  }
  out.verdict.elapsed_seconds = seconds_since(start);
  return out;
}

bool verify_certificate(const RadicalCertificate& cert) {
  try {
    const auto& gb = cert.basis;
    auto idx = gb.context().find(cert.variable);
    if (!idx || cert.exponent == 0) return false;
    if (!is_reduced_groebner_basis(gb)) return false;
    MultiPoly p = MultiPoly::variable(gb.context(), *idx).pow(cert.exponent);
    return normal_form(p, gb.elements(), gb.order()).is_zero();
  } catch (const std::exception&) {
    return false;
  }
}

// ---------------------------------------------------------- certificate I/O

std::string write_certificate(const RadicalCertificate& cert) {
  const auto& gb = cert.basis;
  std::ostringstream os;
  os << "RADCERT var=" << cert.variable << " N=" << cert.exponent << " order=" << to_string(gb.order().kind())
     << " vars=";
  const auto& perm = gb.order().permutation();
  for (std::size_t k = 0; k < perm.size(); ++k) os << (k ? "," : "") << gb.context().name(perm[k]);
  os << "\n";
  for (const auto& g : gb.elements()) os << to_string(g) << "\n";
  return os.str();
}

RadicalCertificate read_certificate(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::string header;
  if (!std::getline(is, header)) throw UsageError("certificate: empty input");
  std::istringstream hs(header);
  std::string magic;
  hs >> magic;
  if (magic != "RADCERT") throw UsageError("certificate: missing RADCERT header");
  std::string var, order_name, vars;
  std::optional<unsigned long> n;
  std::string field;
  while (hs >> field) {
    auto eq = field.find('=');
    if (eq == std::string::npos) throw UsageError("certificate: malformed header field '" + field + "'");
    std::string key = field.substr(0, eq), value = field.substr(eq + 1);
    if (key == "var") var = value;
    else if (key == "N") {
      try {
        n = std::stoul(value);
      } catch (const std::exception&) {
        throw UsageError("certificate: bad exponent '" + value + "'");
      }
    } else if (key == "order") order_name = value;
    else if (key == "vars") vars = value;
    else throw UsageError("certificate: unknown header field '" + key + "'");
  }
  if (var.empty() || !n || order_name.empty() || vars.empty()) throw UsageError("certificate: incomplete header");
  OrderKind kind;
  if (order_name == "grevlex") kind = OrderKind::grevlex;
  else if (order_name == "lex") kind = OrderKind::lex;
  else throw UsageError("certificate: unknown order '" + order_name + "'");
  std::vector<std::string> names;
  std::stringstream vs(vars);
  std::string nm;
  while (std::getline(vs, nm, ',')) names.push_back(nm);
  VarContext ctx(names);
  std::vector<MultiPoly> elems;
  std::string line;
  while (std::getline(is, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    elems.push_back(parse_poly(line, ctx));
  }
  MonomialOrder order = kind == OrderKind::grevlex ? MonomialOrder::grevlex(ctx.arity()) : MonomialOrder::lex(ctx.arity());
  return RadicalCertificate{var, *n, GroebnerBasis(ctx, order, std::move(elems))};
}

}  // namespace polydeg
