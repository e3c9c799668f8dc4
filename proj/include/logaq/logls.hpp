#pragma once

#include "logaq/aqclassic.hpp"
#include "logaq/kcomplex.hpp"

#include <array>
#include <string>
#include <utility>

namespace logaq {

/// Named pass/fail items of a verification.
struct CheckReport {
  std::string name;
  std::vector<std::pair<std::string, bool>> items;

  void add(std::string what, bool ok) { items.emplace_back(std::move(what), ok); }
  bool passed() const {
    return std::all_of(items.begin(), items.end(), [](const auto& i) { return i.second; });
  }
  void merge(const CheckReport& other, const std::string& prefix = "") {
    for (const auto& [w, ok] : other.items) items.emplace_back(prefix + w, ok);
  }
};

/// Choices that must not affect the homology.
struct LogChoices {
  std::vector<Exponent> x_elements;  ///< empty: the generators of N in order
  IdealChoice ideal = IdealChoice::GroebnerBasis;
};

/// Whether two maps with the same source and target agree.
inline bool same_map(const ModHom& a, const ModHom& b) {
  const PresentedAlgebra& alg = a.target.algebra();
  Poly minus_one = alg.ring().constant(-1);
  for (std::size_t j = 0; j < a.matrix.size(); ++j)
    if (!a.target.is_zero(column_axpy(alg, a.matrix[j], minus_one, b.matrix[j]))) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Monoid side: J = ker(k[P0] -> k[N]), 0 -> V -> G -> J, V0 the Koszul relations.

struct MonoidSide {
  PolyRing integral;            ///< Q[P0 generators], no relations
  AlgebraPtr integral_target;   ///< Q[N]
  AlgebraMap integral_h;        ///< x^p -> n^h(p)
  AlgebraPtr kp0;               ///< k[P0]
  std::vector<Exponent> lead, trail;  ///< generator k of G maps to x^lead - x^trail
  std::vector<Poly> pi;               ///< those binomials in k[P0]
  std::vector<Column> v_integral;     ///< generators of V over Z[P0], kept in Q[P0 gens]
  std::vector<Column> v, v0;          ///< over k[P0]
};

inline MonoidSide build_monoid_side(const FactorizationData& d, const Field& k) {
  Field q = Field::rationals();
  const FpMonoid& n = d.h.target;
  MonoidSide m{PolyRing(q, d.p0.gens), monoid_algebra(n, q), {}, monoid_algebra(d.p0, k), {}, {}, {}, {}, {}, {}};
  auto free_q = std::make_shared<const PresentedAlgebra>(m.integral, std::vector<Poly>{});
  std::vector<Poly> images;
  for (const auto& e : d.h.images) images.push_back(m.integral_target->ring().monomial(e));
  m.integral_h = AlgebraMap{free_q, m.integral_target, images};

  std::vector<Poly> js = algebra_map_kernel(m.integral_h).ambient_gb;
  AlgebraPtr p0q = monoid_algebra(d.p0, q);
  std::vector<std::size_t> g_index;  // position in js of each generator of G
  for (std::size_t i = 0; i < js.size(); ++i) {
    const Poly& b = js[i];
    if (b.terms.size() != 2 || b.terms[0].coef != 1 || b.terms[1].coef != -1)
      throw ConsistencyError("kernel of the monoid algebra map has a non-binomial basis element " + m.integral.to_string(b));
    if (p0q->is_zero(b)) continue;
    g_index.push_back(i);
    m.lead.push_back(b.terms[0].mono);
    m.trail.push_back(b.terms[1].mono);
  }

  // Syzygies of G modulo I_M: the G-part of the syzygies of the full basis, and of the
  // expressions of the generators of I_M in that basis.
  auto g_part = [&](const Column& c) {
    Column out;
    for (auto i : g_index) out.push_back(c[i]);
    return out;
  };
  std::vector<Column> raw;
  for (const auto& s : schreyer_syzygies(m.integral, js)) raw.push_back(g_part(s));
  for (const auto& r : p0q->ideal_gens()) {
    DivisionResult dv = divide(m.integral, r, js);
    if (!dv.remainder.is_zero()) throw ConsistencyError("relation of P0 is not in the kernel of k[P0] -> k[N]");
    raw.push_back(g_part(dv.quotients));
  }

  const PolyRing& kr = m.kp0->ring();
  for (std::size_t i = 0; i < m.lead.size(); ++i) m.pi.push_back(kr.sub(kr.monomial(m.lead[i]), kr.monomial(m.trail[i])));
  for (const auto& c : raw) {
    Column ck;
    for (const auto& p : c) {
      for (const auto& t : p.terms)
        if (t.coef.get_den() != 1) throw ConsistencyError("syzygy of the binomial kernel is not integral");
      ck.push_back(transport(p, kr));
    }
    ck = m.kp0->normal_form(ck);
    if (is_zero_column(ck)) continue;
    Poly s;
    for (std::size_t i = 0; i < ck.size(); ++i) s = kr.add(s, kr.mul(ck[i], m.pi[i]));
    if (!m.kp0->is_zero(s)) throw ConsistencyError("generator of V does not map to zero in J");
    m.v_integral.push_back(c);
    m.v.push_back(std::move(ck));
  }
  m.v0 = koszul_columns(*m.kp0, m.pi);
  return m;
}

// ---------------------------------------------------------------------------
// The three faces and the maps between them, all over B.

struct Diagram1 {
  PrelogMorphism morphism;
  FactorizationData fac;
  KData group;
  MonoidSide mon;
  AlgebraMap p0_to_b;   ///< x^p -> alpha_B(h(p))
  LsData front;         ///< U/U0 -> F/IF -> B (x) Omega_{R|A}
  Complex3 back;        ///< B (x) V/V0 -> B (x) G -> B (x) Omega_{k[P0]|k[M]}
  Complex3 right;       ///< B (x) W1 -> B (x) Q1 -> B (x) P0^gp/M^gp
  std::array<ModHom, 3> alpha, beta;  ///< indexed by degree
};

/// a - f(a), x - alpha_B(h(x)) and the relations of B, all in R = A[X, Y].
inline std::vector<Poly> factorization_raw_ideal(const PrelogMorphism& f, const FactorizationData& d) {
  const PolyRing& rr = d.r->ring();
  std::size_t off = d.n_a + d.n_x;
  std::vector<Poly> raw;
  for (std::size_t i = 0; i < d.n_a; ++i) raw.push_back(rr.sub(rr.variable(i), lift_from_target(f.ring_map.images[i], rr, off)));
  for (std::size_t j = 0; j < d.n_x; ++j)
    raw.push_back(rr.sub(rr.variable(d.x_var(j)), lift_from_target(f.target.value(d.x_elements[j]), rr, off)));
  for (const auto& g : f.target.algebra->ideal_gens()) raw.push_back(lift_from_target(g, rr, off));
  return raw;
}

/// Image in B of an element of Z[N] given in Q[N] with integral coefficients.
inline Poly monoid_element_to_b(const Poly& p, const PrelogRing& target) {
  const PresentedAlgebra& b = *target.algebra;
  Poly acc;
  for (const auto& t : p.terms) {
    if (t.coef.get_den() != 1) throw ConsistencyError("non-integral coefficient in Z[N]");
    acc = b.ring().add(acc, b.ring().scale(target.value(t.mono), b.field().from_integer(t.coef.get_num())));
  }
  return b.normal_form(acc);
}

inline std::vector<Column> unit_columns(std::size_t count, std::size_t rank, const PolyRing& r) {
  std::vector<Column> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(unit_column(rank, i, r.one()));
  return out;
}

/// Commutativity, rows composing to zero, and split injectivity of alpha_0, alpha_1.
inline CheckReport check_diagram(const Diagram1& d) {
  CheckReport rep{"diagram", {}};
  const Complex3& fr = d.front.complex;
  rep.add("front row composes to zero", fr.is_complex());
  rep.add("back row composes to zero", d.back.is_complex());
  rep.add("right row composes to zero", d.right.is_complex());
  rep.add("delta2 alpha2 = alpha1 d2", same_map(compose(fr.d2, d.alpha[2]), compose(d.alpha[1], d.back.d2)));
  rep.add("delta1 alpha1 = alpha0 d1", same_map(compose(fr.d1, d.alpha[1]), compose(d.alpha[0], d.back.d1)));
  rep.add("D2 beta2 = beta1 d2", same_map(compose(d.right.d2, d.beta[2]), compose(d.beta[1], d.back.d2)));
  rep.add("D1 beta1 = beta0 d1", same_map(compose(d.right.d1, d.beta[1]), compose(d.beta[0], d.back.d1)));
  for (int i : {0, 1, 2}) {
    rep.add("alpha" + std::to_string(i) + " well defined", d.alpha[i].is_well_defined());
    rep.add("beta" + std::to_string(i) + " well defined", d.beta[i].is_well_defined());
  }
  // alpha_1, alpha_0 are coordinate inclusions into free modules; the projection retracts them.
  for (int i : {0, 1}) {
    const ModHom& a = d.alpha[i];
    std::vector<Column> proj;
    const PolyRing& r = a.target.algebra().ring();
    for (std::size_t j = 0; j < a.target.n_gens(); ++j)
      proj.push_back(j < a.source.n_gens() ? unit_column(a.source.n_gens(), j, r.one()) : zero_column(a.source.n_gens()));
    ModHom retraction(a.target, a.source, proj, false);
    rep.add("alpha" + std::to_string(i) + " split injective",
            retraction.is_well_defined() && same_map(compose(retraction, a), identity_map(a.source)));
  }
  return rep;
}

inline Diagram1 build_diagram1(const PrelogMorphism& f, const LogChoices& choices = {}) {
  const Field& k = f.field();
  const AlgebraPtr& b = f.target.algebra;
  const PolyRing& br = b->ring();
  FactorizationData fac = choose_log_factorization(f, choices.x_elements);
  KData grp = build_kdata(fac);
  MonoidSide mon = build_monoid_side(fac, k);

  std::vector<Poly> p0_images;
  for (const auto& e : fac.h.images) p0_images.push_back(f.target.value(e));
  AlgebraMap p0_to_b{mon.kp0, b, p0_images};

  // Back face.
  const PolyRing& kr = mon.kp0->ring();
  std::size_t ng = mon.pi.size(), nm = grp.n_m;
  FpModule back2 = base_change(subquotient(mon.kp0, ng, mon.v, mon.v0), p0_to_b);
  FpModule back1 = FpModule::free(b, ng), back0 = FpModule::free(b, fac.n_x);
  std::vector<Column> bd2, bd1;
  for (const auto& v : mon.v) bd2.push_back(p0_to_b.apply(v));
  for (const auto& g : mon.pi) {
    Column c;
    for (std::size_t x = 0; x < fac.n_x; ++x) c.push_back(p0_to_b.apply(kr.derivative(g, nm + x)));
    bd1.push_back(std::move(c));
  }
  ModHom back_d2(back2, back1, bd2, false), back_d1(back1, back0, bd1, false);
  if (!back_d2.is_well_defined()) throw ConsistencyError("B (x) V/V0 -> B (x) G is not well defined");
  Complex3 back{back2, back1, back0, back_d2, back_d1};

  // Right face.
  Complex3 right = d_complex(grp, b);

  // Front face, with G placed first in F and V first among the generators of U.
  AlgebraMap iota{mon.kp0, fac.r, fac.alpha_r};
  std::vector<Poly> tau;
  for (const auto& g : mon.pi) tau.push_back(iota.apply(g));
  for (auto& g : choose_ideal_generators(fac.r_to_b, factorization_raw_ideal(f, fac), choices.ideal)) tau.push_back(std::move(g));
  std::vector<Column> prefix;
  for (const auto& v : mon.v) {
    Column c = iota.apply(v);
    c.resize(tau.size());
    prefix.push_back(std::move(c));
  }
  std::vector<std::size_t> omega;
  for (std::size_t x = 0; x < fac.n_x; ++x) omega.push_back(fac.x_var(x));
  for (std::size_t y = 0; y < fac.n_y; ++y) omega.push_back(fac.y_var(y));
  LsData front = build_ls(fac.r, fac.r_to_b, omega, tau, prefix);
  const Complex3& fc = front.complex;

  std::array<ModHom, 3> alpha{ModHom(back0, fc.c0, unit_columns(fac.n_x, fc.c0.n_gens(), br), false),
                              ModHom(back1, fc.c1, unit_columns(ng, fc.c1.n_gens(), br), false),
                              ModHom(back2, fc.c2, unit_columns(mon.v.size(), fc.c2.n_gens(), br), false)};

  // beta_0(dx) = alpha_B(h(x)) e_x.
  std::vector<Column> b0;
  for (std::size_t x = 0; x < fac.n_x; ++x) {
    Column c(fac.n_x);
    c[x] = f.target.value(fac.x_elements[x]);
    b0.push_back(std::move(c));
  }
  // beta_1(g) = alpha_B(h(p')) (x) s(p - p'), s the coordinate section W0 -> Q1.
  std::vector<IntVector> sections;
  std::vector<Column> b1;
  for (std::size_t i = 0; i < ng; ++i) {
    IntVector w(fac.p0.size());
    for (std::size_t j = 0; j < w.size(); ++j) w[j] = mon.lead[i][j] - mon.trail[i][j];
    sections.push_back(grp.q1_coordinates(w));
    Poly lam = f.target.value(fac.h(mon.trail[i]));
    Column c;
    for (const auto& s : sections.back()) c.push_back(b->mul(lam, integer_constant(br, s)));
    b1.push_back(std::move(c));
  }
  // beta_2: the Z[N] (x) Q1 image of each generator of V lies in Z[N] (x) W1; divide by d_j.
  const PresentedAlgebra& qn = *mon.integral_target;
  const PolyRing& qnr = qn.ring();
  std::vector<Column> b2;
  for (const auto& v : mon.v_integral) {
    std::vector<Poly> comp(grp.q1_rank());
    for (std::size_t i = 0; i < ng; ++i) {
      if (v[i].is_zero()) continue;
      Poly coef = qn.mul(mon.integral_h.apply(v[i]), qnr.monomial(fac.h(mon.trail[i])));
      for (std::size_t j = 0; j < comp.size(); ++j)
        comp[j] = qnr.combine(comp[j], coef, Rational(sections[i][j]));
    }
    Column c;
    for (std::size_t j = 0; j < comp.size(); ++j) {
      Poly cj = qn.normal_form(comp[j]);
      if (j >= grp.w1_rank()) {
        if (!cj.is_zero()) throw ConsistencyError("image of V has a nonzero component outside W1");
        continue;
      }
      const Integer& dj = grp.torsion[j];
      for (auto& t : cj.terms) {
        if (t.coef.get_den() != 1 || t.coef.get_num() % dj != 0)
          throw ConsistencyError("image of V is not divisible by the torsion order " + dj.get_str());
        t.coef /= dj;
      }
      c.push_back(monoid_element_to_b(cj, f.target));
    }
    b2.push_back(std::move(c));
  }
  std::array<ModHom, 3> beta{ModHom(back0, right.c0, b0, false), ModHom(back1, right.c1, b1, false),
                             ModHom(back2, right.c2, b2, false)};

  Diagram1 d{f, std::move(fac), std::move(grp), std::move(mon), std::move(p0_to_b), std::move(front), back, right, alpha, beta};
  CheckReport rep = check_diagram(d);
  for (const auto& [what, ok] : rep.items)
    if (!ok) throw ConsistencyError("diagram check failed: " + what);
  return d;
}

// ---------------------------------------------------------------------------
// The pushout complex.

struct LogLsComplex {
  Complex3 complex;
  std::array<ModHom, 3> gamma;    ///< front face -> pushout
  std::array<ModHom, 3> epsilon;  ///< right face -> pushout
};

inline LogLsComplex assemble_log_ls(const Diagram1& d) {
  const Complex3& fr = d.front.complex;
  const Complex3& rt = d.right;
  std::array<Pushout, 3> po{pushout(d.alpha[0], d.beta[0]), pushout(d.alpha[1], d.beta[1]), pushout(d.alpha[2], d.beta[2])};
  auto differential = [&](int i, const ModHom& delta, const ModHom& dd) {
    const FpModule& s = po[i].module;
    const FpModule& t = po[i - 1].module;
    std::size_t fa = delta.target.n_gens();
    std::vector<Column> cols;
    for (const auto& c : delta.matrix) {
      Column col = c;
      col.resize(t.n_gens());
      cols.push_back(std::move(col));
    }
    for (const auto& c : dd.matrix) {
      Column col(t.n_gens());
      std::copy(c.begin(), c.end(), col.begin() + static_cast<std::ptrdiff_t>(fa));
      cols.push_back(std::move(col));
    }
    ModHom h(s, t, cols, false);
    if (!h.is_well_defined()) throw ConsistencyError("induced differential on the pushout is not well defined");
    return h;
  };
  LogLsComplex out{Complex3{po[2].module, po[1].module, po[0].module, differential(2, fr.d2, rt.d2), differential(1, fr.d1, rt.d1)},
                   {po[0].leg_a, po[1].leg_a, po[2].leg_a},
                   {po[0].leg_c, po[1].leg_c, po[2].leg_c}};
  if (!out.complex.is_complex()) throw ConsistencyError("pushout complex does not compose to zero");
  return out;
}

inline LogLsComplex log_ls(const PrelogMorphism& f, const LogChoices& choices = {}) {
  return assemble_log_ls(build_diagram1(f, choices));
}

inline std::array<HomologyReport, 3> log_homology_all(const PrelogMorphism& f, const FpModule& t,
                                                      const LogChoices& choices = {}, const ReportOptions& opt = {}) {
  Complex3 c = log_ls(f, choices).complex.with_coefficients(t);
  return {make_report(c.homology(0), opt), make_report(c.homology(1), opt), make_report(c.homology(2), opt)};
}

inline HomologyReport log_homology(const PrelogMorphism& f, int i, const FpModule& t, const LogChoices& choices = {},
                                   const ReportOptions& opt = {}) {
  return make_report(log_ls(f, choices).complex.with_coefficients(t).homology(i), opt);
}

/// (Omega_{B|A} + B (x) N^gp) / (d alpha(n) - alpha(n) (x) n, 1 (x) image of M): the log differentials.
inline FpModule log_differentials(const PrelogMorphism& f) {
  const AlgebraPtr& b = f.target.algebra;
  const PolyRing& br = b->ring();
  const FpMonoid& n = f.target.monoid;
  std::size_t ny = b->nvars(), nn = n.size(), total = ny + nn;
  auto d_of = [&](const Poly& p) {
    Column c(total);
    for (std::size_t y = 0; y < ny; ++y) c[y] = br.derivative(p, y);
    return c;
  };
  auto group_vector = [&](const std::vector<long>& e) {
    Column c(total);
    for (std::size_t i = 0; i < nn; ++i) c[ny + i] = integer_constant(br, Integer(e[i]));
    return c;
  };
  std::vector<Column> rels;
  for (const auto& g : b->ideal_gens()) rels.push_back(d_of(g));
  for (const auto& a : f.ring_map.images) rels.push_back(d_of(a));
  for (std::size_t i = 0; i < nn; ++i) {
    Column c = d_of(f.target.alpha[i]);
    c[ny + i] = br.sub(c[ny + i], f.target.alpha[i]);
    rels.push_back(std::move(c));
  }
  for (const auto& e : f.monoid_map.images) rels.push_back(group_vector(std::vector<long>(e.begin(), e.end())));
  for (const auto& [x, y] : n.relations) {
    std::vector<long> diff(nn);
    for (std::size_t i = 0; i < nn; ++i) diff[i] = x[i] - y[i];
    rels.push_back(group_vector(diff));
  }
  return FpModule(b, total, rels);
}

// ---------------------------------------------------------------------------
// Checks.

/// Whether the monoid map is a bijection on generators that identifies the relations.
inline bool is_monoid_isomorphism(const MonoidHom& h) {
  std::size_t n = h.source.size();
  if (h.target.size() != n) return false;
  std::vector<std::size_t> perm(n);
  std::vector<bool> hit(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    auto it = std::find(h.images[i].begin(), h.images[i].end(), 1);
    if (it == h.images[i].end() || std::count(h.images[i].begin(), h.images[i].end(), 0) != static_cast<long>(n - 1))
      return false;
    perm[i] = static_cast<std::size_t>(it - h.images[i].begin());
    if (hit[perm[i]]) return false;
    hit[perm[i]] = true;
  }
  std::vector<Exponent> inv(n, Exponent(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[perm[i]][i] = 1;
  return h.is_well_defined() && MonoidHom(h.target, h.source, inv, false).is_well_defined();
}

inline CheckReport check_strict_reduction(const PrelogMorphism& f, const FpModule& t, const ReportOptions& opt = {}) {
  CheckReport rep{"strict reduction", {}};
  if (!is_monoid_isomorphism(f.monoid_map)) throw std::invalid_argument("the monoid map is not an isomorphism");
  auto log = log_homology_all(f, t, {}, opt);
  for (int i : {0, 1, 2}) {
    auto cl = aq_classical(f.ring_map, i, t, IdealChoice::GroebnerBasis, opt);
    rep.add("H" + std::to_string(i) + " log = classical (dim " + log[i].k_dim_string() + " vs " + cl.k_dim_string() + ")",
            same_proxies(log[i], cl));
  }
  return rep;
}

/// dim over k when finite, else the rank of a free module, else nothing.
inline std::optional<std::size_t> size_measure(const FpModule& m) {
  if (auto d = dim_over_k(m)) return d;
  FpModule p = prune(m);
  if (p.is_free()) return p.n_gens();
  return std::nullopt;
}

/// Split injectivity of epsilon_0, epsilon_1, cokernels of alpha and epsilon, and the size identity.
inline CheckReport check_compatibility_sequence(const PrelogMorphism& f, const FpModule& t, const LogChoices& choices = {},
                                                const ReportOptions& opt = {}) {
  CheckReport rep{"compatibility sequence", {}};
  Diagram1 d = build_diagram1(f, choices);
  LogLsComplex ls = assemble_log_ls(d);
  std::array<const FpModule*, 3> logc{&ls.complex.c0, &ls.complex.c1, &ls.complex.c2};
  std::array<const FpModule*, 3> frontc{&d.front.complex.c0, &d.front.complex.c1, &d.front.complex.c2};
  std::array<const FpModule*, 3> rightc{&d.right.c0, &d.right.c1, &d.right.c2};
  std::array<const FpModule*, 3> backc{&d.back.c0, &d.back.c1, &d.back.c2};

  for (int i : {0, 1}) {
    // rho(l, e) = e + beta(r(l)) with r the coordinate projection onto the back face.
    const ModHom& a = d.alpha[i];
    const ModHom& bt = d.beta[i];
    const ModHom& eps = ls.epsilon[i];
    std::vector<Column> cols;
    for (std::size_t j = 0; j < a.target.n_gens(); ++j)
      cols.push_back(j < a.source.n_gens() ? bt.matrix[j] : zero_column(bt.target.n_gens()));
    for (std::size_t j = 0; j < bt.target.n_gens(); ++j) cols.push_back(bt.target.generator(j));
    ModHom rho(*logc[i], bt.target, cols, false);
    rep.add("epsilon" + std::to_string(i) + " split injective",
            rho.is_well_defined() && same_map(compose(rho, eps), identity_map(eps.source)));
  }
  for (int i : {0, 1, 2}) {
    auto ca = make_report(cokernel(tensor(t, d.alpha[i])), opt);
    auto ce = make_report(cokernel(tensor(t, ls.epsilon[i])), opt);
    rep.add("coker alpha" + std::to_string(i) + " = coker epsilon" + std::to_string(i), same_proxies(ca, ce));
  }
  for (int i : {0, 1}) {
    auto l = size_measure(tensor(t, *logc[i])), fr = size_measure(tensor(t, *frontc[i]));
    auto r = size_measure(tensor(t, *rightc[i])), bk = size_measure(tensor(t, *backc[i]));
    if (l && fr && r && bk)
      rep.add("size identity in degree " + std::to_string(i) + ": " + std::to_string(*l) + " = " + std::to_string(*fr) +
                  " + " + std::to_string(*r) + " - " + std::to_string(*bk),
              *l + *bk == *fr + *r);
  }
  return rep;
}

/// d o d = 0, the diagram checks, degree 0 free on X and Y, and H0 against the log differentials.
inline CheckReport check_structure(const PrelogMorphism& f, const FpModule& t, const ReportOptions& opt = {}) {
  CheckReport rep{"structure", {}};
  Diagram1 d = build_diagram1(f);
  rep.merge(check_diagram(d));
  LogLsComplex ls = assemble_log_ls(d);
  rep.add("d o d = 0", ls.complex.is_complex());
  FpModule z = prune(ls.complex.c0);
  rep.add("degree 0 free of rank |X| + |Y|", z.is_free() && z.n_gens() == d.fac.n_x + d.fac.n_y);
  rep.add("H0 = log differentials",
          same_proxies(make_report(ls.complex.with_coefficients(t).homology(0), opt),
                       make_report(tensor(t, log_differentials(f)), opt)));
  rep.merge(check_compatibility_sequence(f, t, {}, opt));
  return rep;
}

/// Alternative generating sets, free covers and orderings.
inline std::vector<std::pair<std::string, LogChoices>> alternative_choices(const PrelogMorphism& f) {
  const FpMonoid& n = f.target.monoid;
  std::vector<std::pair<std::string, LogChoices>> out;
  std::vector<Exponent> gens, rev;
  for (std::size_t i = 0; i < n.size(); ++i) gens.push_back(n.unit(i));
  rev.assign(gens.rbegin(), gens.rend());
  Exponent sum(n.size(), 0);
  for (auto& s : sum) s = 1;
  std::vector<Exponent> extra = gens;
  extra.push_back(sum);
  out.push_back({"X with an extra element", {extra, IdealChoice::GroebnerBasis}});
  if (n.size() > 1) out.push_back({"X reversed", {rev, IdealChoice::GroebnerBasis}});
  out.push_back({"F from raw generators", {{}, IdealChoice::RawGenerators}});
  out.push_back({"F with a redundant generator", {{}, IdealChoice::ExtraGenerator}});
  out.push_back({"F reversed", {{}, IdealChoice::Reversed}});
  return out;
}

inline CheckReport check_choice_independence(const PrelogMorphism& f, const FpModule& t, const ReportOptions& opt = {}) {
  CheckReport rep{"choice independence", {}};
  auto base = log_homology_all(f, t, {}, opt);
  for (const auto& [name, ch] : alternative_choices(f)) {
    auto alt = log_homology_all(f, t, ch, opt);
    for (int i : {0, 1, 2}) rep.add(name + ": H" + std::to_string(i), same_proxies(base[i], alt[i]));
  }
  return rep;
}

}  // namespace logaq
