#pragma once

#include "logaq/fpmodule.hpp"
#include "logaq/monoids.hpp"

#include <set>
#include <stdexcept>

namespace logaq {

/// How the free cover F of the ideal I is chosen.
enum class IdealChoice {
  GroebnerBasis,   ///< reduced Gröbner basis of I
  RawGenerators,   ///< the generators read off the presentation of B
  ExtraGenerator,  ///< Gröbner basis plus the (redundant) sum of its elements
  Reversed,        ///< Gröbner basis in reverse order
};

/// U/U0 -> F/IF -> B (x) Omega_{R|A} for a surjection R -> B with R polynomial over A.
struct LsData {
  AlgebraPtr r;
  AlgebraMap r_to_b;
  std::vector<std::size_t> omega_vars;  ///< variables of R over A, in order
  std::vector<Poly> tau;                ///< image in I of each basis element of F
  std::vector<Column> u_gens;           ///< generators of U = ker(tau), over R
  std::vector<Column> u0_gens;          ///< Koszul relations
  Complex3 complex;                     ///< over B
};

/// Builds the complex. `u_prefix` are known kernel elements placed first among the
/// generators of U (the log construction uses this for the image of V).
inline LsData build_ls(AlgebraPtr r, AlgebraMap r_to_b, std::vector<std::size_t> omega_vars, std::vector<Poly> tau,
                       std::vector<Column> u_prefix = {}) {
  LsData d{std::move(r), std::move(r_to_b), std::move(omega_vars), std::move(tau), {}, {}, {}};
  const PresentedAlgebra& ra = *d.r;
  const PolyRing& ring = ra.ring();
  std::size_t nf = d.tau.size();
  for (auto& t : d.tau) t = ra.normal_form(t);

  std::vector<Column> tau_cols;
  for (const auto& t : d.tau) tau_cols.push_back({t});
  for (auto& c : u_prefix) {
    Poly s;
    for (std::size_t k = 0; k < nf; ++k) s = ring.add(s, ring.mul(c[k], d.tau[k]));
    if (!ra.is_zero(s)) throw ConsistencyError("prescribed element of U is not in the kernel of tau");
    d.u_gens.push_back(ra.normal_form(c));
  }
  for (auto& s : syzygies(d.r, 1, tau_cols)) d.u_gens.push_back(std::move(s));
  d.u0_gens = koszul_columns(ra, d.tau);

  const AlgebraPtr& b = d.r_to_b.target;
  FpModule u_mod = base_change(subquotient(d.r, nf, d.u_gens, d.u0_gens), d.r_to_b);
  FpModule f_mod = FpModule::free(b, nf);
  FpModule omega = FpModule::free(b, d.omega_vars.size());

  std::vector<Column> d2;
  for (const auto& u : d.u_gens) d2.push_back(d.r_to_b.apply(u));
  std::vector<Column> d1;
  for (const auto& t : d.tau) {
    Column c;
    for (auto v : d.omega_vars) c.push_back(d.r_to_b.apply(ring.derivative(t, v)));
    d1.push_back(std::move(c));
  }
  ModHom delta2(u_mod, f_mod, d2, false), delta1(f_mod, omega, d1, false);
  if (!delta2.is_well_defined()) throw ConsistencyError("U/U0 -> F/IF is not well defined");
  d.complex = Complex3{u_mod, f_mod, omega, delta2, delta1};
  if (!d.complex.is_complex()) throw ConsistencyError("classical complex does not compose to zero");
  return d;
}

/// Lift of a polynomial in the variables of B to R, where B's variable i is R's variable offset + i.
inline Poly lift_from_target(const Poly& p, const PolyRing& r, std::size_t offset) {
  std::vector<std::size_t> map(p.terms.empty() ? 0 : p.terms[0].mono.size());
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = offset + i;
  return reindex(p, r, map);
}

/// Generators of I = ker(R -> B) according to the choice. `raw` is the presentation-derived set.
inline std::vector<Poly> choose_ideal_generators(const AlgebraMap& r_to_b, const std::vector<Poly>& raw,
                                                 IdealChoice choice) {
  const PresentedAlgebra& r = *r_to_b.source;
  if (choice == IdealChoice::RawGenerators) {
    std::vector<Poly> out;
    for (const auto& g : raw) {
      Poly nf = r.normal_form(g);
      if (!nf.is_zero()) out.push_back(nf);
    }
    return out;
  }
  std::vector<Poly> gens = algebra_map_kernel(r_to_b).generators;
  if (choice == IdealChoice::Reversed) std::reverse(gens.begin(), gens.end());
  if (choice == IdealChoice::ExtraGenerator && !gens.empty()) {
    Poly sum;
    for (const auto& g : gens) sum = r.ring().add(sum, g);
    gens.push_back(r.normal_form(sum));
  }
  return gens;
}

/// R = A[Y] with Y the variables of B, and the surjection R -> B.
struct ClassicalPresentation {
  AlgebraPtr r;
  AlgebraMap r_to_b;
  std::vector<std::size_t> y_vars;
  std::vector<Poly> raw_ideal;  ///< a - f(a)(Y) and the relations of B in Y
};

inline ClassicalPresentation classical_presentation(const AlgebraMap& f) {
  const PresentedAlgebra& a = *f.source;
  const PresentedAlgebra& b = *f.target;
  std::set<std::string> taken(a.names().begin(), a.names().end());
  std::vector<std::string> names = a.names();
  for (const auto& y : b.names()) names.push_back(fresh_name(y, taken));
  PolyRing rr(a.field(), names);
  std::vector<std::size_t> amap(a.nvars());
  for (std::size_t i = 0; i < a.nvars(); ++i) amap[i] = i;
  std::vector<Poly> rel;
  for (const auto& g : a.gb()) rel.push_back(reindex(g, rr, amap));
  std::vector<long> weights = a.weights();
  weights.insert(weights.end(), b.weights().begin(), b.weights().end());
  ClassicalPresentation cp;
  cp.r = std::make_shared<const PresentedAlgebra>(rr, rel, weights);
  std::vector<Poly> images;
  for (std::size_t i = 0; i < a.nvars(); ++i) images.push_back(f.images[i]);
  for (std::size_t i = 0; i < b.nvars(); ++i) {
    images.push_back(b.ring().variable(i));
    cp.y_vars.push_back(a.nvars() + i);
  }
  cp.r_to_b = AlgebraMap{cp.r, f.target, images};
  for (std::size_t i = 0; i < a.nvars(); ++i)
    cp.raw_ideal.push_back(rr.sub(rr.variable(i), lift_from_target(f.images[i], rr, a.nvars())));
  for (const auto& g : b.ideal_gens()) cp.raw_ideal.push_back(lift_from_target(g, rr, a.nvars()));
  return cp;
}

inline LsData classical_ls(const AlgebraMap& f, IdealChoice choice = IdealChoice::GroebnerBasis) {
  ClassicalPresentation cp = classical_presentation(f);
  std::vector<Poly> tau = choose_ideal_generators(cp.r_to_b, cp.raw_ideal, choice);
  return build_ls(cp.r, cp.r_to_b, cp.y_vars, tau);
}

/// B modulo the ideal of all its variables.
inline FpModule residue_coefficients(const AlgebraPtr& b) {
  std::vector<Column> rels;
  for (std::size_t i = 0; i < b->nvars(); ++i) rels.push_back({b->ring().variable(i)});
  return FpModule(b, 1, rels);
}

inline HomologyReport aq_classical(const AlgebraMap& f, int i, const FpModule& t,
                                   IdealChoice choice = IdealChoice::GroebnerBasis, const ReportOptions& opt = {}) {
  return make_report(classical_ls(f, choice).complex.with_coefficients(t).homology(i), opt);
}

}  // namespace logaq
