#pragma once

#include "logaq/poly.hpp"

#include <algorithm>
#include <cstddef>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace logaq {

using Column = std::vector<Poly>;

/// Full reduction of `f` by `basis` (every term, not just the leading one).
inline Poly reduce(const PolyRing& ring, const Poly& f, const std::vector<Poly>& basis) {
  Poly rem;
  Poly p = f;
  while (!p.is_zero()) {
    const Term lt = p.lead();
    const Poly* divisor = nullptr;
    for (const auto& g : basis) {
      const Term& lg = g.lead();
      if (lg.pos == lt.pos && divides(lg.mono, lt.mono)) {
        divisor = &g;
        break;
      }
    }
    if (divisor) {
      Rational c = ring.field().div(lt.coef, divisor->lead().coef);
      p = ring.combine(p, ring.mul_term(*divisor, quotient(lt.mono, divisor->lead().mono), Rational(1)),
                       ring.field().neg(c));
    } else {
      rem.terms.push_back(lt);
      p.terms.erase(p.terms.begin());
    }
  }
  return rem;
}

/// Division with quotients: f = sum q_k basis_k + remainder (ring elements only).
struct DivisionResult {
  std::vector<Poly> quotients;
  Poly remainder;
};

inline DivisionResult divide(const PolyRing& ring, const Poly& f, const std::vector<Poly>& basis) {
  DivisionResult out{std::vector<Poly>(basis.size()), {}};
  Poly p = f;
  while (!p.is_zero()) {
    const Term lt = p.lead();
    bool hit = false;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      const Term& lg = basis[k].lead();
      if (lg.pos == lt.pos && divides(lg.mono, lt.mono)) {
        Rational c = ring.field().div(lt.coef, lg.coef);
        Exponent q = quotient(lt.mono, lg.mono);
        out.quotients[k] = ring.add(out.quotients[k], ring.monomial(q, c));
        p = ring.combine(p, ring.mul_term(basis[k], q, Rational(1)), ring.field().neg(c));
        hit = true;
        break;
      }
    }
    if (!hit) {
      out.remainder.terms.push_back(lt);
      p.terms.erase(p.terms.begin());
    }
  }
  return out;
}

inline Poly s_polynomial(const PolyRing& ring, const Poly& f, const Poly& g) {
  Exponent l = lcm(f.lead().mono, g.lead().mono);
  Poly a = ring.mul_term(f, quotient(l, f.lead().mono), ring.field().inv(f.lead().coef));
  Poly b = ring.mul_term(g, quotient(l, g.lead().mono), ring.field().inv(g.lead().coef));
  return ring.sub(a, b);
}

/// Reduced Gröbner basis (monic, sorted by decreasing leading term) of the ideal or
/// submodule generated by `gens`. Buchberger with the chain criterion; the coprime
/// criterion is used only when `ideal_case` is set (all terms at position 0).
inline std::vector<Poly> groebner_basis(const PolyRing& ring, const std::vector<Poly>& gens, bool ideal_case = false) {
  std::vector<Poly> g;
  struct Pair {
    std::size_t i, j;
  };
  std::vector<Pair> pending;
  std::set<std::pair<std::size_t, std::size_t>> pending_set;

  auto insert = [&](Poly p) {
    std::size_t n = g.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (g[i].lead().pos != p.lead().pos) continue;
      pending.push_back({i, n});
      pending_set.insert({i, n});
    }
    g.push_back(std::move(p));
  };

  for (const auto& f : gens) {
    Poly r = reduce(ring, f, g);
    if (!r.is_zero()) insert(ring.monic(r));
  }

  auto lcm_of = [&](const Pair& p) { return lcm(g[p.i].lead().mono, g[p.j].lead().mono); };

  while (!pending.empty()) {
    // Normal selection strategy: smallest lcm first (position-over-term).
    std::size_t best = 0;
    Exponent best_lcm = lcm_of(pending[0]);
    for (std::size_t k = 1; k < pending.size(); ++k) {
      Exponent l = lcm_of(pending[k]);
      int c = ring.compare(g[pending[k].i].lead().pos, l, g[pending[best].i].lead().pos, best_lcm);
      if (c < 0) {
        best = k;
        best_lcm = std::move(l);
      }
    }
    Pair pr = pending[best];
    pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(best));
    pending_set.erase({pr.i, pr.j});

    const Exponent& li = g[pr.i].lead().mono;
    const Exponent& lj = g[pr.j].lead().mono;
    if (ideal_case) {
      bool coprime = true;
      for (std::size_t v = 0; v < li.size(); ++v)
        if (li[v] > 0 && lj[v] > 0) coprime = false;
      if (coprime) continue;
    }
    bool chain = false;
    for (std::size_t k = 0; k < g.size() && !chain; ++k) {
      if (k == pr.i || k == pr.j || g[k].lead().pos != g[pr.i].lead().pos) continue;
      if (!divides(g[k].lead().mono, best_lcm)) continue;
      auto key = [](std::size_t a, std::size_t b) { return a < b ? std::make_pair(a, b) : std::make_pair(b, a); };
      if (!pending_set.count(key(pr.i, k)) && !pending_set.count(key(pr.j, k))) chain = true;
    }
    if (chain) continue;

    Poly r = reduce(ring, s_polynomial(ring, g[pr.i], g[pr.j]), g);
    if (!r.is_zero()) insert(ring.monic(r));
  }

  // Minimalize, then inter-reduce.
  std::vector<Poly> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j || g[j].lead().pos != g[i].lead().pos) continue;
      if (!divides(g[j].lead().mono, g[i].lead().mono)) continue;
      // Equal leading terms: keep the earlier one.
      if (g[j].lead().mono == g[i].lead().mono && j > i) continue;
      redundant = true;
    }
    if (!redundant) minimal.push_back(g[i]);
  }
  std::vector<Poly> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Poly> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    Poly tail = minimal[i];
    Term lt = tail.lead();
    tail.terms.erase(tail.terms.begin());
    Poly r = reduce(ring, tail, others);
    r.terms.insert(r.terms.begin(), lt);
    reduced.push_back(ring.monic(r));
  }
  std::sort(reduced.begin(), reduced.end(),
            [&ring](const Poly& a, const Poly& b) { return ring.compare(a.lead(), b.lead()) > 0; });
  return reduced;
}

// ---------------------------------------------------------------------------

class PresentedAlgebra;
using AlgebraPtr = std::shared_ptr<const PresentedAlgebra>;

/// k[x_1..x_n]/I with a cached reduced Gröbner basis (degrevlex on the declared order).
class PresentedAlgebra {
 public:
  PresentedAlgebra(PolyRing ring, std::vector<Poly> ideal_gens, std::vector<long> weights = {})
      : ring_(std::move(ring)), ideal_gens_(std::move(ideal_gens)), weights_(std::move(weights)) {
    if (weights_.empty()) weights_.assign(ring_.nvars(), 1);
    if (weights_.size() != ring_.nvars()) throw std::invalid_argument("one weight per variable is required");
    for (long w : weights_)
      if (w <= 0) throw std::invalid_argument("weights must be positive");
    std::erase_if(ideal_gens_, [](const Poly& p) { return p.is_zero(); });
    gb_ = groebner_basis(ring_, ideal_gens_, true);
    homogeneous_ = std::all_of(gb_.begin(), gb_.end(), [&](const Poly& p) { return PolyRing::is_homogeneous(p, weights_); });
  }

  static AlgebraPtr make(Field field, std::vector<std::string> names, std::vector<Poly> ideal_gens = {},
                         std::vector<long> weights = {}) {
    return std::make_shared<const PresentedAlgebra>(PolyRing(field, std::move(names)), std::move(ideal_gens),
                                                    std::move(weights));
  }

  const PolyRing& ring() const { return ring_; }
  const Field& field() const { return ring_.field(); }
  std::size_t nvars() const { return ring_.nvars(); }
  const std::vector<std::string>& names() const { return ring_.names(); }
  const std::vector<Poly>& ideal_gens() const { return ideal_gens_; }
  const std::vector<Poly>& gb() const { return gb_; }
  const std::vector<long>& weights() const { return weights_; }
  bool is_homogeneous() const { return homogeneous_; }

  Poly normal_form(const Poly& p) const { return reduce(ring_, p, gb_); }
  bool is_zero(const Poly& p) const { return normal_form(p).is_zero(); }
  bool equal(const Poly& a, const Poly& b) const { return is_zero(ring_.sub(a, b)); }
  Poly mul(const Poly& a, const Poly& b) const { return normal_form(ring_.mul(a, b)); }

  Column normal_form(const Column& c) const {
    Column out;
    out.reserve(c.size());
    for (const auto& p : c) out.push_back(normal_form(p));
    return out;
  }

  /// Ideal generators placed at every position 0..rank-1 (the relations I * A^rank).
  std::vector<Poly> ideal_at_positions(std::size_t rank) const {
    std::vector<Poly> out;
    for (std::size_t p = 0; p < rank; ++p)
      for (const auto& g : gb_) out.push_back(ring_.at_position(g, static_cast<int>(p)));
    return out;
  }

  /// Same presentation over a different coefficient field.
  AlgebraPtr with_field(Field f) const {
    PolyRing r = ring_.with_field(f);
    std::vector<Poly> gens;
    for (const auto& g : ideal_gens_) gens.push_back(transport(g, r));
    return std::make_shared<const PresentedAlgebra>(r, gens, weights_);
  }

  std::string to_string() const {
    std::string s = field().name() + "[";
    for (std::size_t i = 0; i < names().size(); ++i) s += (i ? "," : "") + names()[i];
    s += "]";
    if (!gb_.empty()) {
      s += "/(";
      for (std::size_t i = 0; i < gb_.size(); ++i) s += (i ? ", " : "") + ring_.to_string(gb_[i]);
      s += ")";
    }
    return s;
  }

 private:
  PolyRing ring_;
  std::vector<Poly> ideal_gens_;
  std::vector<long> weights_;
  std::vector<Poly> gb_;
  bool homogeneous_ = true;
};

/// k-algebra map given by the image of each source variable (polynomials in the target ring).
struct AlgebraMap {
  AlgebraPtr source;
  AlgebraPtr target;
  std::vector<Poly> images;

  Poly apply(const Poly& p) const {
    const PolyRing& tr = target->ring();
    std::vector<std::vector<Poly>> powers(images.size());
    auto power = [&](std::size_t v, int e) -> const Poly& {
      auto& cache = powers[v];
      if (cache.empty()) cache.push_back(tr.one());
      while (cache.size() <= static_cast<std::size_t>(e)) cache.push_back(target->mul(cache.back(), images[v]));
      return cache[static_cast<std::size_t>(e)];
    };
    Poly acc;
    for (const auto& t : p.terms) {
      Poly term = tr.constant(t.coef, 0);
      for (std::size_t v = 0; v < t.mono.size(); ++v)
        if (t.mono[v] > 0) term = target->mul(term, power(v, t.mono[v]));
      acc = tr.add(acc, tr.at_position(term, t.pos));
    }
    return target->normal_form(acc);
  }

  Column apply(const Column& c) const {
    Column out;
    out.reserve(c.size());
    for (const auto& p : c) out.push_back(apply(p));
    return out;
  }

  /// Checks that every source relation maps to zero.
  bool is_well_defined() const {
    for (const auto& g : source->gb())
      if (!apply(g).is_zero()) return false;
    return true;
  }
};

struct KernelResult {
  /// Reduced Gröbner basis of the preimage ideal in the source polynomial ring (contains the source ideal).
  std::vector<Poly> ambient_gb;
  /// Elements of `ambient_gb` that are nonzero in the source algebra, in normal form.
  std::vector<Poly> generators;
};

/// Kernel of an algebra map by elimination: graph ideal in k[target vars, source vars]
/// under a block order, keep the elements free of target variables.
inline KernelResult algebra_map_kernel(const AlgebraMap& f) {
  const PolyRing& sr = f.source->ring();
  const PolyRing& tr = f.target->ring();
  const std::size_t nt = tr.nvars(), ns = sr.nvars();
  std::vector<std::string> names;
  for (const auto& n : tr.names()) names.push_back("T:" + n);
  for (const auto& n : sr.names()) names.push_back("S:" + n);
  PolyRing prod(sr.field(), names, MonomialOrder::elimination(nt));

  std::vector<std::size_t> tmap(nt), smap(ns);
  for (std::size_t i = 0; i < nt; ++i) tmap[i] = i;
  for (std::size_t i = 0; i < ns; ++i) smap[i] = nt + i;

  std::vector<Poly> gens;
  for (const auto& g : f.target->gb()) gens.push_back(reindex(g, prod, tmap));
  for (std::size_t i = 0; i < ns; ++i)
    gens.push_back(prod.sub(prod.variable(nt + i), reindex(f.images.at(i), prod, tmap)));
  for (const auto& g : f.source->gb()) gens.push_back(reindex(g, prod, smap));

  std::vector<Poly> gb = groebner_basis(prod, gens, true);
  KernelResult out;
  for (const auto& g : gb) {
    bool free_of_target = true;
    for (const auto& t : g.terms)
      for (std::size_t i = 0; i < nt; ++i)
        if (t.mono[i] != 0) free_of_target = false;
    if (!free_of_target) continue;
    std::vector<Term> ts;
    for (const auto& t : g.terms) ts.push_back(Term{0, Exponent(t.mono.begin() + static_cast<std::ptrdiff_t>(nt), t.mono.end()), t.coef});
    out.ambient_gb.push_back(sr.from_terms(std::move(ts)));
  }
  out.ambient_gb = groebner_basis(sr, out.ambient_gb, true);
  for (const auto& g : out.ambient_gb) {
    Poly nf = f.source->normal_form(g);
    if (nf.is_zero()) continue;
    if (std::none_of(out.generators.begin(), out.generators.end(), [&](const Poly& h) { return h == nf; }))
      out.generators.push_back(nf);
  }
  return out;
}

// ---------------------------------------------------------------------------

/// Submodule of A^rank generated by columns, with a Gröbner basis of the augmented
/// module {(g_i ; e_i)} + I*A^rank under position-over-term with the ambient
/// positions first. Gives normal forms, membership, lifts, and syzygies.
class SubmoduleGB {
 public:
  SubmoduleGB(AlgebraPtr algebra, std::size_t rank, std::vector<Column> gens, bool track = true)
      : algebra_(std::move(algebra)), rank_(rank), gens_(std::move(gens)), track_(track) {
    const PolyRing& r = algebra_->ring();
    std::vector<Poly> input;
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      if (gens_[i].size() != rank_) throw std::invalid_argument("generator has wrong length");
      Poly v = r.embed(gens_[i], 0);
      if (track_) v = r.add(v, r.constant(1, static_cast<int>(rank_ + i)));
      input.push_back(std::move(v));
    }
    for (auto& p : algebra_->ideal_at_positions(rank_)) input.push_back(std::move(p));
    gb_ = groebner_basis(r, input, false);
  }

  const AlgebraPtr& algebra() const { return algebra_; }
  std::size_t rank() const { return rank_; }
  const std::vector<Column>& generators() const { return gens_; }

  /// Elements of the basis whose leading term lies in the ambient block: a Gröbner
  /// basis of the submodule itself (plus I*A^rank).
  std::vector<Poly> ambient_basis() const {
    std::vector<Poly> out;
    for (const auto& g : gb_)
      if (g.lead().pos < static_cast<int>(rank_)) {
        Poly top;
        for (const auto& t : g.terms)
          if (t.pos < static_cast<int>(rank_)) top.terms.push_back(t);
        out.push_back(std::move(top));
      }
    return out;
  }

  Column normal_form(const Column& v) const {
    const PolyRing& r = algebra_->ring();
    Poly red = reduce(r, r.embed(v, 0), gb_);
    return r.extract(red, rank_, 0);
  }

  bool contains(const Column& v) const {
    Column nf = normal_form(v);
    return std::all_of(nf.begin(), nf.end(), [](const Poly& p) { return p.is_zero(); });
  }

  /// Coefficients c with sum c_i g_i = v in A^rank, or nullopt if v is not in the span.
  std::optional<Column> lift(const Column& v) const {
    if (!track_) throw std::logic_error("lift requires a tracked submodule basis");
    const PolyRing& r = algebra_->ring();
    Poly red = reduce(r, r.embed(v, 0), gb_);
    for (const auto& t : red.terms)
      if (t.pos < static_cast<int>(rank_)) return std::nullopt;
    Column w = r.extract(red, gens_.size(), static_cast<int>(rank_));
    Column c;
    for (auto& p : w) c.push_back(algebra_->normal_form(r.negate(p)));
    return c;
  }

  /// Generators of {c : sum c_i g_i = 0 in A^rank}.
  std::vector<Column> syzygies() const {
    if (!track_) throw std::logic_error("syzygies require a tracked submodule basis");
    const PolyRing& r = algebra_->ring();
    std::vector<Column> out;
    for (const auto& g : gb_) {
      if (g.lead().pos < static_cast<int>(rank_)) continue;
      Column c = algebra_->normal_form(r.extract(g, gens_.size(), static_cast<int>(rank_)));
      if (std::all_of(c.begin(), c.end(), [](const Poly& p) { return p.is_zero(); })) continue;
      out.push_back(std::move(c));
    }
    return out;
  }

 private:
  AlgebraPtr algebra_;
  std::size_t rank_;
  std::vector<Column> gens_;
  bool track_;
  std::vector<Poly> gb_;
};

/// Schreyer syzygies of a monic ideal Gröbner basis: one per pair with equal positions,
/// (L/lt_i) e_i - (L/lt_j) e_j - sum q_k e_k from the standard representation of the
/// S-polynomial. Integral input stays integral because every divisor is monic.
inline std::vector<Column> schreyer_syzygies(const PolyRing& ring, const std::vector<Poly>& gb) {
  std::vector<Column> out;
  for (std::size_t i = 0; i < gb.size(); ++i)
    for (std::size_t j = i + 1; j < gb.size(); ++j) {
      if (gb[i].lead().coef != 1 || gb[j].lead().coef != 1)
        throw std::invalid_argument("schreyer_syzygies expects a monic basis");
      Exponent l = lcm(gb[i].lead().mono, gb[j].lead().mono);
      Poly s = s_polynomial(ring, gb[i], gb[j]);
      DivisionResult d = divide(ring, s, gb);
      if (!d.remainder.is_zero()) throw std::logic_error("schreyer_syzygies: input is not a Gröbner basis");
      Column col(gb.size());
      col[i] = ring.monomial(quotient(l, gb[i].lead().mono));
      col[j] = ring.monomial(quotient(l, gb[j].lead().mono), Rational(-1));
      for (std::size_t k = 0; k < gb.size(); ++k) col[k] = ring.sub(col[k], d.quotients[k]);
      out.push_back(std::move(col));
    }
  return out;
}

}  // namespace logaq
