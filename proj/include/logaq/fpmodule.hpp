#pragma once

#include "logaq/groebner.hpp"

#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

namespace logaq {

/// Raised when a construction fails one of its own consistency checks.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// ---------------------------------------------------------------------------
// Columns over a presented algebra.

inline Column zero_column(std::size_t n) { return Column(n); }

inline Column unit_column(std::size_t n, std::size_t i, const Poly& one) {
  Column c(n);
  c.at(i) = one;
  return c;
}

inline bool is_zero_column(const Column& c) {
  return std::all_of(c.begin(), c.end(), [](const Poly& p) { return p.is_zero(); });
}

/// a + s * b in the algebra, entries in normal form.
inline Column column_axpy(const PresentedAlgebra& alg, const Column& a, const Poly& s, const Column& b) {
  Column out = a;
  if (out.size() < b.size()) out.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i)
    if (!b[i].is_zero()) out[i] = alg.normal_form(alg.ring().add(out[i], alg.ring().mul(s, b[i])));
  return out;
}

inline Column column_scale(const PresentedAlgebra& alg, const Column& a, const Poly& s) {
  Column out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = alg.mul(s, a[i]);
  return out;
}

/// Generators of the syzygies of the given columns of A^n.
inline std::vector<Column> syzygies(const AlgebraPtr& alg, std::size_t n, const std::vector<Column>& gens) {
  if (gens.empty()) return {};
  return SubmoduleGB(alg, n, gens).syzygies();
}

/// tau(e_i) e_j - tau(e_j) e_i for i < j.
inline std::vector<Column> koszul_columns(const PresentedAlgebra& alg, const std::vector<Poly>& tau) {
  std::vector<Column> out;
  std::size_t n = tau.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Column c(n);
      c[j] = alg.normal_form(tau[i]);
      c[i] = alg.normal_form(alg.ring().negate(tau[j]));
      if (!is_zero_column(c)) out.push_back(std::move(c));
    }
  return out;
}

// ---------------------------------------------------------------------------

/// Cokernel of a matrix: A^n modulo the span of the relation columns.
class FpModule {
 public:
  FpModule() = default;
  FpModule(AlgebraPtr ring, std::size_t n, std::vector<Column> rels = {})
      : ring_(std::move(ring)), n_(n), cache_(std::make_shared<Cache>()) {
    for (auto& c : rels) {
      if (c.size() != n_) throw std::invalid_argument("relation column has the wrong length");
      Column nf = ring_->normal_form(c);
      if (!is_zero_column(nf)) rels_.push_back(std::move(nf));
    }
  }

  static FpModule free(AlgebraPtr ring, std::size_t n) { return FpModule(std::move(ring), n); }

  const AlgebraPtr& ring() const { return ring_; }
  const PresentedAlgebra& algebra() const { return *ring_; }
  std::size_t n_gens() const { return n_; }
  const std::vector<Column>& relations() const { return rels_; }
  bool is_free() const { return rels_.empty(); }

  const SubmoduleGB& relation_gb() const {
    std::call_once(cache_->once, [&] { cache_->gb = std::make_shared<SubmoduleGB>(ring_, n_, rels_, false); });
    return *cache_->gb;
  }

  Column normal_form(const Column& v) const {
    if (rels_.empty()) return ring_->normal_form(v);
    return relation_gb().normal_form(v);
  }
  bool is_zero(const Column& v) const { return is_zero_column(normal_form(v)); }

  Column generator(std::size_t i) const { return unit_column(n_, i, ring_->ring().one()); }

 private:
  struct Cache {
    std::once_flag once;
    std::shared_ptr<SubmoduleGB> gb;
  };
  AlgebraPtr ring_;
  std::size_t n_ = 0;
  std::vector<Column> rels_;
  std::shared_ptr<Cache> cache_;
};

/// Module map; column j is the image of source generator j in target coordinates.
struct ModHom {
  FpModule source;
  FpModule target;
  std::vector<Column> matrix;

  ModHom() = default;
  ModHom(FpModule s, FpModule t, std::vector<Column> m, bool check = true)
      : source(std::move(s)), target(std::move(t)), matrix(std::move(m)) {
    if (matrix.size() != source.n_gens()) throw std::invalid_argument("module map needs one column per source generator");
    for (auto& c : matrix) {
      if (c.size() != target.n_gens()) throw std::invalid_argument("module map column has the wrong length");
      c = target.algebra().normal_form(c);
    }
    if (check && !is_well_defined()) throw std::invalid_argument("module map does not respect source relations");
  }

  Column apply(const Column& v) const {
    const PresentedAlgebra& alg = target.algebra();
    Column out = zero_column(target.n_gens());
    for (std::size_t j = 0; j < v.size(); ++j)
      if (!v[j].is_zero()) out = column_axpy(alg, out, v[j], matrix[j]);
    return out;
  }

  bool is_well_defined() const {
    for (const auto& r : source.relations())
      if (!target.is_zero(apply(r))) return false;
    return true;
  }

  bool is_zero() const {
    for (const auto& c : matrix)
      if (!target.is_zero(c)) return false;
    return true;
  }
};

inline ModHom compose(const ModHom& g, const ModHom& f) {
  std::vector<Column> m;
  for (const auto& c : f.matrix) m.push_back(g.apply(c));
  return ModHom(f.source, g.target, m, false);
}

inline ModHom identity_map(const FpModule& m) {
  std::vector<Column> cols;
  for (std::size_t i = 0; i < m.n_gens(); ++i) cols.push_back(m.generator(i));
  return ModHom(m, m, cols, false);
}

inline ModHom zero_map(const FpModule& s, const FpModule& t) {
  return ModHom(s, t, std::vector<Column>(s.n_gens(), zero_column(t.n_gens())), false);
}

/// (<gens> + <rels>) / <rels> inside A^n, presented on the given generators.
inline FpModule subquotient(const AlgebraPtr& alg, std::size_t n, const std::vector<Column>& gens,
                            const std::vector<Column>& rels) {
  std::vector<Column> all = gens;
  all.insert(all.end(), rels.begin(), rels.end());
  std::vector<Column> out;
  for (auto& s : syzygies(alg, n, all)) {
    s.resize(gens.size());
    out.push_back(std::move(s));
  }
  return FpModule(alg, gens.size(), out);
}

struct KernelModule {
  FpModule module;
  std::vector<Column> generators;  ///< in source coordinates
  ModHom inclusion;
};

/// Elements v of the source free cover with h(v) = 0 in the target.
inline std::vector<Column> kernel_generators(const ModHom& h) {
  std::size_t m = h.source.n_gens();
  std::vector<Column> all = h.matrix;
  all.insert(all.end(), h.target.relations().begin(), h.target.relations().end());
  std::vector<Column> out;
  for (auto& s : syzygies(h.target.ring(), h.target.n_gens(), all)) {
    s.resize(m);
    if (!is_zero_column(s)) out.push_back(std::move(s));
  }
  return out;
}

inline KernelModule kernel(const ModHom& h) {
  std::vector<Column> k = kernel_generators(h);
  FpModule km = subquotient(h.source.ring(), h.source.n_gens(), k, h.source.relations());
  return {km, k, ModHom(km, h.source, k, false)};
}

inline FpModule cokernel(const ModHom& h) {
  std::vector<Column> rels = h.target.relations();
  rels.insert(rels.end(), h.matrix.begin(), h.matrix.end());
  return FpModule(h.target.ring(), h.target.n_gens(), rels);
}

/// Image of h as a submodule of the target.
inline FpModule image(const ModHom& h) {
  return subquotient(h.target.ring(), h.target.n_gens(), h.matrix, h.target.relations());
}

inline FpModule direct_sum(const FpModule& a, const FpModule& b) {
  std::size_t n = a.n_gens() + b.n_gens();
  std::vector<Column> rels;
  for (auto c : a.relations()) {
    c.resize(n);
    rels.push_back(std::move(c));
  }
  for (const auto& c : b.relations()) {
    Column d(n);
    std::copy(c.begin(), c.end(), d.begin() + static_cast<std::ptrdiff_t>(a.n_gens()));
    rels.push_back(std::move(d));
  }
  return FpModule(a.ring(), n, rels);
}

struct Pushout {
  FpModule module;
  ModHom leg_a;  ///< A -> pushout
  ModHom leg_c;  ///< C -> pushout
};

/// (A + C) / {(alpha(p), -beta(p))}.
inline Pushout pushout(const ModHom& alpha, const ModHom& beta) {
  if (alpha.source.n_gens() != beta.source.n_gens()) throw std::invalid_argument("pushout legs need a common source");
  const FpModule& a = alpha.target;
  const FpModule& c = beta.target;
  const PresentedAlgebra& alg = a.algebra();
  FpModule sum = direct_sum(a, c);
  std::vector<Column> rels = sum.relations();
  std::size_t n = sum.n_gens();
  for (std::size_t p = 0; p < alpha.matrix.size(); ++p) {
    Column col(n);
    for (std::size_t i = 0; i < a.n_gens(); ++i) col[i] = alpha.matrix[p][i];
    for (std::size_t i = 0; i < c.n_gens(); ++i) col[a.n_gens() + i] = alg.ring().negate(beta.matrix[p][i]);
    rels.push_back(std::move(col));
  }
  FpModule po(a.ring(), n, rels);
  std::vector<Column> la, lc;
  for (std::size_t i = 0; i < a.n_gens(); ++i) la.push_back(po.generator(i));
  for (std::size_t i = 0; i < c.n_gens(); ++i) lc.push_back(po.generator(a.n_gens() + i));
  return {po, ModHom(a, po, la, false), ModHom(c, po, lc, false)};
}

/// Base change along a surjection R -> B: same generators, relations mapped.
inline FpModule base_change(const FpModule& m, const AlgebraMap& to) {
  std::vector<Column> rels;
  for (const auto& c : m.relations()) rels.push_back(to.apply(c));
  return FpModule(to.target, m.n_gens(), rels);
}

inline ModHom base_change(const ModHom& h, const AlgebraMap& to) {
  std::vector<Column> cols;
  for (const auto& c : h.matrix) cols.push_back(to.apply(c));
  return ModHom(base_change(h.source, to), base_change(h.target, to), cols, false);
}

// ---------------------------------------------------------------------------
// Coefficients: T (x) M on presentations. Generator (i of T, j of M) has index j*t + i.

inline FpModule tensor(const FpModule& t, const FpModule& m) {
  std::size_t tn = t.n_gens(), mn = m.n_gens(), n = tn * mn;
  std::vector<Column> rels;
  for (const auto& r : t.relations())
    for (std::size_t j = 0; j < mn; ++j) {
      Column c(n);
      for (std::size_t i = 0; i < tn; ++i) c[j * tn + i] = r[i];
      rels.push_back(std::move(c));
    }
  for (const auto& r : m.relations())
    for (std::size_t i = 0; i < tn; ++i) {
      Column c(n);
      for (std::size_t j = 0; j < mn; ++j) c[j * tn + i] = r[j];
      rels.push_back(std::move(c));
    }
  return FpModule(m.ring(), n, rels);
}

inline ModHom tensor(const FpModule& t, const ModHom& h) {
  std::size_t tn = t.n_gens();
  FpModule s = tensor(t, h.source), tg = tensor(t, h.target);
  std::vector<Column> cols(s.n_gens(), zero_column(tg.n_gens()));
  for (std::size_t j = 0; j < h.source.n_gens(); ++j)
    for (std::size_t i = 0; i < tn; ++i)
      for (std::size_t k = 0; k < h.target.n_gens(); ++k) cols[j * tn + i][k * tn + i] = h.matrix[j][k];
  return ModHom(s, tg, cols, false);
}

/// Whether t is the algebra itself on one free generator, so tensoring is the identity.
inline bool is_unit_coefficients(const FpModule& t) { return t.n_gens() == 1 && t.is_free(); }

// ---------------------------------------------------------------------------

/// C2 -> C1 -> C0.
struct Complex3 {
  FpModule c2, c1, c0;
  ModHom d2, d1;

  /// d1 d2 = 0 in C0.
  bool is_complex() const {
    for (const auto& c : d2.matrix)
      if (!c0.is_zero(d1.apply(c))) return false;
    return true;
  }

  Complex3 with_coefficients(const FpModule& t) const {
    if (is_unit_coefficients(t)) return *this;
    ModHom t2 = tensor(t, d2), t1 = tensor(t, d1);
    return {t2.source, t2.target, t1.target, t2, ModHom(t2.target, t1.target, t1.matrix, false)};
  }

  FpModule homology(int i) const {
    switch (i) {
      case 0:
        return cokernel(d1);
      case 1: {
        std::vector<Column> rels = c1.relations();
        rels.insert(rels.end(), d2.matrix.begin(), d2.matrix.end());
        return subquotient(c1.ring(), c1.n_gens(), kernel_generators(d1), rels);
      }
      case 2:
        return kernel(d2).module;
      default:
        throw std::out_of_range("homology degree must be 0, 1 or 2");
    }
  }
};

// ---------------------------------------------------------------------------
// Canonical reports.

/// Integer polynomial in s, coefficient of s^i at index i.
using SeriesPoly = std::vector<Integer>;

namespace detail {

inline void trim(SeriesPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline SeriesPoly series_sub(SeriesPoly a, const SeriesPoly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

inline SeriesPoly series_mul(const SeriesPoly& a, const SeriesPoly& b) {
  if (a.empty() || b.empty()) return {};
  SeriesPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

inline SeriesPoly series_shift(const SeriesPoly& a, long k) {
  if (a.empty()) return {};
  SeriesPoly out(static_cast<std::size_t>(k), 0);
  out.insert(out.end(), a.begin(), a.end());
  return out;
}

/// Exact division by (1 - s^w), or nullopt.
inline std::optional<SeriesPoly> divide_one_minus(const SeriesPoly& a, long w) {
  // a = (1 - s^w) q  <=>  q_i = a_i + q_{i-w}.
  if (a.empty()) return SeriesPoly{};
  std::size_t uw = static_cast<std::size_t>(w);
  if (a.size() <= uw) return std::nullopt;
  SeriesPoly q(a.size() - uw);
  for (std::size_t i = 0; i < q.size(); ++i) q[i] = a[i] + (i >= uw ? q[i - uw] : Integer(0));
  for (std::size_t i = q.size(); i < a.size(); ++i)
    if (a[i] != (i >= uw && i - uw < q.size() ? Integer(-q[i - uw]) : Integer(0))) return std::nullopt;
  return q;
}

inline std::vector<Exponent> minimalize(std::vector<Exponent> gens) {
  std::sort(gens.begin(), gens.end(), [](const Exponent& a, const Exponent& b) {
    long da = total_degree(a), db = total_degree(b);
    return da != db ? da < db : a < b;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Exponent> out;
  for (const auto& g : gens)
    if (std::none_of(out.begin(), out.end(), [&](const Exponent& h) { return divides(h, g); })) out.push_back(g);
  return out;
}

/// Numerator of the Hilbert series of k[x]/(monomials) over prod (1 - s^{w_i}).
inline SeriesPoly hilbert_numerator(std::vector<Exponent> gens, const std::vector<long>& w) {
  gens = minimalize(std::move(gens));
  if (gens.empty()) return {1};
  for (const auto& g : gens)
    if (total_degree(g) == 0) return {};
  bool disjoint = true;
  std::vector<int> used(w.size(), 0);
  for (const auto& g : gens)
    for (std::size_t i = 0; i < g.size(); ++i)
      if (g[i] > 0 && used[i]++) disjoint = false;
  if (disjoint) {
    SeriesPoly acc{1};
    for (const auto& g : gens) {
      SeriesPoly f(static_cast<std::size_t>(PolyRing::weighted_degree(g, w)) + 1);
      f[0] = 1;
      f.back() -= 1;
      acc = series_mul(acc, f);
    }
    return acc;
  }
  // Pivot on the last generator: N(L) = N(L') - s^deg(m) N(L' : m).
  Exponent m = gens.back();
  gens.pop_back();
  std::vector<Exponent> colon;
  for (const auto& g : gens) {
    Exponent q(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) q[i] = std::max(0, g[i] - m[i]);
    colon.push_back(q);
  }
  SeriesPoly a = hilbert_numerator(gens, w);
  SeriesPoly b = hilbert_numerator(colon, w);
  return series_sub(a, series_shift(b, PolyRing::weighted_degree(m, w)));
}

}  // namespace detail

/// Hilbert series as numerator / prod (1 - s^d) with all cancellable factors removed.
struct HilbertSeries {
  SeriesPoly numerator;
  std::vector<long> denominator;  ///< the d's, sorted

  bool operator==(const HilbertSeries&) const = default;

  std::string to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < numerator.size(); ++i) {
      if (numerator[i] == 0) continue;
      Integer c = numerator[i];
      if (!first) os << (c < 0 ? " - " : " + ");
      else if (c < 0) os << "-";
      os << Integer(abs(c)).get_str();
      if (i > 0) os << "*s" << (i > 1 ? "^" + std::to_string(i) : "");
      first = false;
    }
    if (first) os << "0";
    if (denominator.empty()) return os.str();
    std::string num = os.str();
    std::ostringstream out;
    out << "(" << num << ")/";
    std::map<long, int> mult;
    for (long d : denominator) ++mult[d];
    for (const auto& [d, k] : mult) {
      out << "(1-s" << (d > 1 ? "^" + std::to_string(d) : "") << ")";
      if (k > 1) out << "^" << k;
    }
    return out.str();
  }
};

struct FittingIdeal {
  std::size_t index = 0;
  std::vector<std::string> generators;  ///< reduced Gröbner basis in the algebra
  bool is_unit = false;
  bool is_zero = false;
};

struct HomologyReport {
  std::size_t n_gens = 0;
  std::vector<std::vector<std::string>> relations;  ///< reduced Gröbner basis of the relation module
  std::optional<std::size_t> k_dim;                 ///< nullopt when infinite
  std::optional<std::vector<long>> shifts;          ///< generator degrees when graded
  std::optional<HilbertSeries> hilbert;
  std::vector<FittingIdeal> fitting;                 ///< F_0, F_1, ... up to the first unit ideal
  bool fitting_complete = true;

  bool is_zero() const { return n_gens == 0; }

  std::string k_dim_string() const { return k_dim ? std::to_string(*k_dim) : "infinite"; }

  /// Smallest j with F_j nonzero; the rank when the module has one.
  std::optional<std::size_t> fitting_rank() const {
    for (const auto& f : fitting)
      if (!f.is_zero) return f.index;
    return std::nullopt;
  }
};

/// Equality through the available proxies: k-dimension, Fitting ideals, and Hilbert
/// series when both sides are graded.
inline bool same_proxies(const HomologyReport& a, const HomologyReport& b) {
  if (a.k_dim != b.k_dim) return false;
  if (a.fitting_complete && b.fitting_complete) {
    std::size_t n = std::min(a.fitting.size(), b.fitting.size());
    for (std::size_t i = 0; i < n; ++i)
      if (a.fitting[i].generators != b.fitting[i].generators) return false;
    if (a.fitting.size() != b.fitting.size()) return false;
  }
  if (a.hilbert && b.hilbert && !(*a.hilbert == *b.hilbert)) return false;
  return true;
}

/// Drops generators killed by a relation with a nonzero constant entry, substituting
/// them out of the remaining relations. The first such relation and entry are used.
inline FpModule prune(const FpModule& m) {
  const PresentedAlgebra& alg = m.algebra();
  const PolyRing& r = alg.ring();
  std::size_t n = m.n_gens();
  std::vector<Column> rels = m.relations();
  if (!alg.gb().empty() && r.is_constant(alg.gb()[0])) return FpModule(m.ring(), 0);
  while (true) {
    std::optional<std::pair<std::size_t, std::size_t>> pick;
    for (std::size_t k = 0; k < rels.size() && !pick; ++k)
      for (std::size_t i = 0; i < n && !pick; ++i)
        if (!rels[k][i].is_zero() && r.is_constant(rels[k][i])) pick = {k, i};
    if (!pick) break;
    auto [k, i] = *pick;
    Column piv = rels[k];
    Rational inv = r.field().inv(piv[i].terms[0].coef);
    std::vector<Column> next;
    for (std::size_t s = 0; s < rels.size(); ++s) {
      if (s == k) continue;
      Column c = rels[s];
      if (!c[i].is_zero()) c = column_axpy(alg, c, r.scale(c[i], r.field().neg(inv)), piv);
      c.erase(c.begin() + static_cast<std::ptrdiff_t>(i));
      if (!is_zero_column(c)) next.push_back(std::move(c));
    }
    rels = std::move(next);
    --n;
  }
  return FpModule(m.ring(), n, rels);
}

struct ReportOptions {
  bool fitting = true;
  std::size_t max_minors = 2000;
};

namespace detail {

/// All m x m minors of the n x r matrix (columns given), via a determinant recursion over
/// column subsets for each row subset. Returns nullopt when the count exceeds `cap`.
inline std::optional<std::vector<Poly>> minors(const PresentedAlgebra& alg, const std::vector<Column>& cols,
                                               std::size_t n, std::size_t m, std::size_t cap) {
  std::size_t r = cols.size();
  if (m == 0) return std::vector<Poly>{alg.ring().one()};
  if (m > n || m > r) return std::vector<Poly>{};
  if (r > 64) return std::nullopt;
  auto choose = [](std::size_t a, std::size_t b) {
    double c = 1;
    for (std::size_t i = 0; i < b; ++i) c = c * static_cast<double>(a - i) / static_cast<double>(i + 1);
    return c;
  };
  if (choose(n, m) * choose(r, m) > static_cast<double>(cap)) return std::nullopt;
  const PolyRing& ring = alg.ring();
  std::vector<Poly> out;
  std::vector<bool> rsel(n, false);
  std::fill(rsel.begin(), rsel.begin() + static_cast<std::ptrdiff_t>(m), true);
  do {
    std::vector<std::size_t> rows;
    for (std::size_t i = 0; i < n; ++i)
      if (rsel[i]) rows.push_back(i);
    // det over rows[0..k) and column bitmask S with |S| = k.
    std::map<std::uint64_t, Poly> level{{0, ring.one()}};
    for (std::size_t k = 0; k < m; ++k) {
      std::map<std::uint64_t, Poly> next;
      for (const auto& [mask, d] : level) {
        if (d.is_zero()) continue;
        for (std::size_t c = 0; c < r; ++c) {
          if (mask & (std::uint64_t{1} << c)) continue;
          const Poly& a = cols[c][rows[k]];
          if (a.is_zero()) continue;
          // Sign: number of chosen columns greater than c.
          int above = 0;
          for (std::size_t c2 = c + 1; c2 < r; ++c2)
            if (mask & (std::uint64_t{1} << c2)) ++above;
          Poly term = alg.mul(a, d);
          if (above % 2) term = ring.negate(term);
          std::uint64_t key = mask | (std::uint64_t{1} << c);
          next[key] = ring.add(next[key], term);
        }
      }
      level = std::move(next);
    }
    for (const auto& [mask, d] : level) {
      Poly nf = alg.normal_form(d);
      if (!nf.is_zero()) out.push_back(nf);
    }
  } while (std::prev_permutation(rsel.begin(), rsel.end()));
  return out;
}

inline std::optional<std::vector<long>> detect_shifts(const PresentedAlgebra& alg, std::size_t n,
                                                      const std::vector<Column>& rels) {
  if (!alg.is_homogeneous()) return std::nullopt;
  const auto& w = alg.weights();
  std::vector<std::vector<std::pair<std::size_t, long>>> adj(n);
  for (const auto& c : rels) {
    std::optional<std::pair<std::size_t, long>> first;
    for (std::size_t p = 0; p < n; ++p) {
      if (c[p].is_zero()) continue;
      auto d = PolyRing::homogeneous_degree(c[p], w);
      if (!d) return std::nullopt;
      if (!first) {
        first = {p, *d};
        continue;
      }
      // shift_p + d_p = shift_q + d_q.
      long diff = first->second - *d;
      adj[first->first].push_back({p, diff});
      adj[p].push_back({first->first, -diff});
    }
  }
  std::vector<std::optional<long>> shift(n);
  for (std::size_t s = 0; s < n; ++s) {
    if (shift[s]) continue;
    std::vector<std::size_t> comp{s};
    shift[s] = 0;
    for (std::size_t idx = 0; idx < comp.size(); ++idx) {
      std::size_t p = comp[idx];
      for (auto [q, diff] : adj[p]) {
        long want = *shift[p] + diff;
        if (!shift[q]) {
          shift[q] = want;
          comp.push_back(q);
        } else if (*shift[q] != want) {
          return std::nullopt;
        }
      }
    }
    long lo = *shift[comp[0]];
    for (auto p : comp) lo = std::min(lo, *shift[p]);
    for (auto p : comp) *shift[p] -= lo;
  }
  std::vector<long> out;
  for (auto& s : shift) out.push_back(*s);
  return out;
}

}  // namespace detail

/// Lead monomials per position of a module Gröbner basis (including ideal parts).
inline std::vector<std::vector<Exponent>> leads_by_position(const std::vector<Poly>& basis, std::size_t n) {
  std::vector<std::vector<Exponent>> out(n);
  for (const auto& g : basis) out.at(static_cast<std::size_t>(g.lead().pos)).push_back(g.lead().mono);
  return out;
}

/// k-dimension of a module, nullopt when infinite.
inline std::optional<std::size_t> dim_over_k(const FpModule& m) {
  FpModule p = prune(m);
  std::size_t nv = p.algebra().nvars();
  if (p.n_gens() == 0) return 0;
  auto leads = leads_by_position(p.relation_gb().ambient_basis(), p.n_gens());
  std::vector<long> ones(nv, 1);
  Integer total = 0;
  for (const auto& l : leads) {
    SeriesPoly num = detail::hilbert_numerator(l, ones);
    for (std::size_t i = 0; i < nv; ++i) {
      auto q = detail::divide_one_minus(num, 1);
      if (!q) return std::nullopt;
      num = *q;
    }
    for (const auto& c : num) total += c;
  }
  return static_cast<std::size_t>(total.get_ui());
}

inline HomologyReport make_report(const FpModule& m, const ReportOptions& opt = {}) {
  HomologyReport rep;
  FpModule p = prune(m);
  const PresentedAlgebra& alg = p.algebra();
  const PolyRing& r = alg.ring();
  rep.n_gens = p.n_gens();
  std::size_t n = p.n_gens();
  if (n == 0) {
    rep.k_dim = 0;
    rep.shifts = std::vector<long>{};
    rep.hilbert = HilbertSeries{};
    rep.fitting.push_back({0, {r.to_string(r.one())}, true, false});
    return rep;
  }
  std::vector<Poly> basis = p.relation_gb().ambient_basis();
  std::vector<Column> gb_rels;
  for (const auto& g : basis) {
    bool ideal_part = false;
    for (const auto& ig : alg.gb())
      if (g == r.at_position(ig, g.lead().pos)) ideal_part = true;
    if (ideal_part) continue;
    gb_rels.push_back(r.extract(g, n, 0));
    std::vector<std::string> col;
    for (const auto& e : gb_rels.back()) col.push_back(r.to_string(e));
    rep.relations.push_back(std::move(col));
  }
  rep.k_dim = dim_over_k(p);

  rep.shifts = detail::detect_shifts(alg, n, gb_rels);
  if (rep.shifts) {
    auto leads = leads_by_position(basis, n);
    SeriesPoly num;
    for (std::size_t q = 0; q < n; ++q) {
      SeriesPoly part = detail::series_shift(detail::hilbert_numerator(leads[q], alg.weights()), (*rep.shifts)[q]);
      num = detail::series_sub(num, detail::series_sub({}, part));
    }
    std::vector<long> den = alg.weights();
    std::sort(den.begin(), den.end());
    std::vector<long> kept;
    for (long d : den) {
      auto q = detail::divide_one_minus(num, d);
      if (q && !num.empty()) num = *q;
      else kept.push_back(d);
    }
    if (num.empty()) kept.clear();
    rep.hilbert = HilbertSeries{num, kept};
  }

  if (opt.fitting) {
    std::vector<Column> cols = p.relations();
    for (std::size_t j = 0; j <= n; ++j) {
      auto ms = detail::minors(alg, cols, n, n - j, opt.max_minors);
      if (!ms) {
        rep.fitting_complete = false;
        break;
      }
      std::vector<Poly> gens = alg.gb();
      gens.insert(gens.end(), ms->begin(), ms->end());
      std::vector<Poly> gb = groebner_basis(r, gens, true);
      FittingIdeal f;
      f.index = j;
      for (const auto& g : gb) {
        Poly nf = alg.normal_form(g);
        if (!nf.is_zero()) f.generators.push_back(r.to_string(nf));
      }
      f.is_unit = gb.size() == 1 && r.is_constant(gb[0]);
      f.is_zero = f.generators.empty();
      rep.fitting.push_back(std::move(f));
      if (rep.fitting.back().is_unit) break;
    }
  }
  return rep;
}

}  // namespace logaq
