#pragma once

#include "logaq/logls.hpp"

namespace logaq {

/// Whether every variable of the target is the image of a source polynomial
/// (normal form modulo the graph ideal under elimination of the target variables).
inline bool is_surjective(const AlgebraMap& f) {
  const PolyRing& sr = f.source->ring();
  const PolyRing& tr = f.target->ring();
  std::size_t nt = tr.nvars(), ns = sr.nvars();
  std::vector<std::string> names;
  for (const auto& n : tr.names()) names.push_back("T:" + n);
  for (const auto& n : sr.names()) names.push_back("S:" + n);
  PolyRing prod(sr.field(), names, MonomialOrder::elimination(nt));
  std::vector<std::size_t> tmap(nt), smap(ns);
  for (std::size_t i = 0; i < nt; ++i) tmap[i] = i;
  for (std::size_t i = 0; i < ns; ++i) smap[i] = nt + i;
  std::vector<Poly> gens;
  for (const auto& g : f.target->gb()) gens.push_back(reindex(g, prod, tmap));
  for (std::size_t i = 0; i < ns; ++i) gens.push_back(prod.sub(prod.variable(nt + i), reindex(f.images.at(i), prod, tmap)));
  for (const auto& g : f.source->gb()) gens.push_back(reindex(g, prod, smap));
  std::vector<Poly> gb = groebner_basis(prod, gens, true);
  for (std::size_t y = 0; y < nt; ++y) {
    Poly r = reduce(prod, prod.variable(y), gb);
    for (const auto& t : r.terms)
      for (std::size_t i = 0; i < nt; ++i)
        if (t.mono[i] != 0) return false;
  }
  return true;
}

/// Coordinates in a simplified presentation of ker(h) for elements given in source coordinates.
struct GroupKernel {
  KernelData kernel;
  SimplifiedGroup simple;

  std::size_t n_gens() const { return simple.group.n_gens(); }
  std::vector<Integer> torsion() const { return simple.group.torsion(); }
  IntVector coordinates(const IntVector& w) const {
    auto y = int_solve(kernel.inclusion.matrix, w);
    if (!y) throw std::logic_error("element is not in the kernel lattice");
    return simple.from_old * *y;
  }
};

inline GroupKernel group_kernel(const AbHom& h) {
  GroupKernel g{kernel(h), {}};
  g.simple = simplify(g.kernel.group);
  return g;
}

/// (C, Q) -> (B, N) with C -> B and Q -> N surjective.
struct LogSurjection {
  PrelogMorphism f;
  std::vector<Poly> a;            ///< generators of ker(C -> B)
  std::vector<Exponent> b_lead;   ///< binomial generators x^lead - x^trail of ker(k[Q] -> k[N])
  std::vector<Exponent> b_trail;
  GroupKernel kergp;              ///< ker(Q^gp -> N^gp)

  explicit LogSurjection(PrelogMorphism m) : f(std::move(m)) {
    if (!is_surjective(f.ring_map)) throw std::invalid_argument("the ring map is not surjective");
    const FpMonoid& n = f.target.monoid;
    AlgebraPtr kn = monoid_algebra(n, Field::rationals());
    const PolyRing& nr = kn->ring();
    for (std::size_t i = 0; i < n.size(); ++i) {
      bool hit = false;
      for (const auto& e : f.monoid_map.images) hit = hit || kn->equal(nr.monomial(e), nr.monomial(n.unit(i)));
      if (!hit) throw std::invalid_argument("monoid generator \"" + n.gens[i] + "\" has no preimage");
    }
    a = algebra_map_kernel(f.ring_map).generators;

    const FpMonoid& q = f.source.monoid;
    PolyRing qr(Field::rationals(), q.gens);
    auto free_q = std::make_shared<const PresentedAlgebra>(qr, std::vector<Poly>{});
    std::vector<Poly> images;
    for (const auto& e : f.monoid_map.images) images.push_back(nr.monomial(e));
    AlgebraPtr kq = monoid_algebra(q, Field::rationals());
    for (const auto& g : algebra_map_kernel(AlgebraMap{free_q, kn, images}).ambient_gb) {
      if (g.terms.size() != 2 || g.terms[0].coef != 1 || g.terms[1].coef != -1)
        throw ConsistencyError("kernel of k[Q] -> k[N] has a non-binomial basis element");
      if (kq->is_zero(g)) continue;
      b_lead.push_back(g.terms[0].mono);
      b_trail.push_back(g.terms[1].mono);
    }
    kergp = group_kernel(f.monoid_map.gp());
  }

  const AlgebraPtr& c() const { return f.source.algebra; }
  const AlgebraPtr& b() const { return f.target.algebra; }
};

/// Tor_n^C(B, B) from an iterated-syzygy resolution of B over C, tensored with B.
inline HomologyReport tor_over_c(const LogSurjection& s, int n, const ReportOptions& opt = {}) {
  if (n < 0 || n > 4) throw std::out_of_range("Tor degree must be between 0 and 4");
  const AlgebraPtr& c = s.c();
  const AlgebraPtr& b = s.b();
  // maps[i] : F_{i+1} -> F_i over C, columns in F_i coordinates.
  std::vector<std::vector<Column>> maps;
  std::vector<std::size_t> ranks{1};
  std::vector<Column> first;
  for (const auto& g : s.a) first.push_back({g});
  maps.push_back(first);
  ranks.push_back(first.size());
  while (static_cast<int>(maps.size()) < n + 1) {
    const auto& prev = maps.back();
    std::vector<Column> next = prev.empty() ? std::vector<Column>{} : syzygies(c, ranks[ranks.size() - 2], prev);
    maps.push_back(next);
    ranks.push_back(next.size());
  }
  auto to_b = [&](const std::vector<Column>& cols) {
    std::vector<Column> out;
    for (const auto& col : cols) out.push_back(s.f.ring_map.apply(col));
    return out;
  };
  auto free = [&](std::size_t i) { return FpModule::free(b, ranks[i]); };
  // Degrees n + 1 -> n -> n - 1 (the last is zero for n = 0).
  FpModule top = free(static_cast<std::size_t>(n) + 1), mid = free(static_cast<std::size_t>(n));
  FpModule low = n == 0 ? FpModule::free(b, 0) : free(static_cast<std::size_t>(n) - 1);
  ModHom d2(top, mid, to_b(maps[static_cast<std::size_t>(n)]), false);
  std::vector<Column> d1cols = n == 0 ? std::vector<Column>(1, Column{}) : to_b(maps[static_cast<std::size_t>(n) - 1]);
  ModHom d1(mid, low, d1cols, false);
  return make_report(Complex3{top, mid, low, d2, d1}.homology(1), opt);
}

/// W_1 = ker(Q^gp -> N^gp) (x) B, W_2 = Tor_1(ker, B), zero otherwise.
inline FpModule w_term(const LogSurjection& s, int n) {
  const AlgebraPtr& b = s.b();
  const PolyRing& r = b->ring();
  auto tors = s.kergp.torsion();
  if (n == 1) {
    std::size_t m = s.kergp.n_gens();
    std::vector<Column> rels;
    for (std::size_t j = 0; j < tors.size(); ++j) {
      Column c(m);
      c[j] = integer_constant(r, tors[j]);
      rels.push_back(std::move(c));
    }
    return FpModule(b, m, rels);
  }
  if (n == 2) {
    // The d-torsion of B is B when d vanishes in k and zero otherwise.
    std::vector<Column> rels;
    for (std::size_t j = 0; j < tors.size(); ++j)
      if (!vanishes_in_char(tors[j], b->field().characteristic())) rels.push_back(unit_column(tors.size(), j, r.one()));
    return FpModule(b, tors.size(), rels);
  }
  return FpModule::free(b, 0);
}

inline HomologyReport w_terms(const LogSurjection& s, int n, const ReportOptions& opt = {}) {
  return make_report(w_term(s, n), opt);
}

/// coker(B (x) b/b^2 -> a/a^2 + ker(Q^gp -> N^gp) (x) B).
inline FpModule conormal_module(const LogSurjection& s) {
  const AlgebraPtr& c = s.c();
  const AlgebraPtr& b = s.b();
  const PolyRing& br = b->ring();
  std::size_t na = s.a.size(), nk = s.kergp.n_gens(), n = na + nk;

  std::vector<Column> rels;
  std::vector<Column> a_cols;
  for (const auto& g : s.a) a_cols.push_back({g});
  for (const auto& z : syzygies(c, 1, a_cols)) {
    Column col = s.f.ring_map.apply(z);
    col.resize(n);
    rels.push_back(std::move(col));
  }
  auto tors = s.kergp.torsion();
  for (std::size_t j = 0; j < tors.size(); ++j) {
    Column col(n);
    col[na + j] = integer_constant(br, tors[j]);
    rels.push_back(std::move(col));
  }

  SubmoduleGB a_span(c, 1, a_cols);
  const PolyRing& cr = c->ring();
  for (std::size_t k = 0; k < s.b_lead.size(); ++k) {
    Poly lifted = c->normal_form(cr.sub(s.f.source.value(s.b_lead[k]), s.f.source.value(s.b_trail[k])));
    auto coeff = a_span.lift({lifted});
    if (!coeff) throw ConsistencyError("image of a binomial of ker(k[Q] -> k[N]) is not in ker(C -> B)");
    Column col = s.f.ring_map.apply(*coeff);
    col.resize(n);
    IntVector w(s.f.source.monoid.size());
    for (std::size_t j = 0; j < w.size(); ++j) w[j] = s.b_lead[k][j] - s.b_trail[k][j];
    IntVector coords = s.kergp.coordinates(w);
    Poly lam = s.f.target.value(s.f.monoid_map(s.b_trail[k]));
    for (std::size_t j = 0; j < nk; ++j) col[na + j] = b->mul(lam, integer_constant(br, coords[j]));
    rels.push_back(std::move(col));
  }
  return FpModule(b, n, rels);
}

/// H1 of the log complex with coefficients B against the conormal module.
inline CheckReport check_edge_identity(const LogSurjection& s, const ReportOptions& opt = {}) {
  CheckReport rep{"edge identity", {}};
  auto h1 = log_homology(s.f, 1, FpModule::free(s.b(), 1), {}, opt);
  auto cn = make_report(conormal_module(s), opt);
  rep.add("H1 = conormal (dim " + h1.k_dim_string() + " vs " + cn.k_dim_string() + ")", same_proxies(h1, cn));
  return rep;
}

}  // namespace logaq
