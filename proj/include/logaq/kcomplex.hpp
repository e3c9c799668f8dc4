#pragma once

#include "logaq/abgroup.hpp"
#include "logaq/fpmodule.hpp"
#include "logaq/monoids.hpp"

#include <tuple>

namespace logaq {

/// Group side of a log factorization: W0 = ker(P0^gp -> N^gp), a free cover Q1 of W0 on the
/// simplified generators, and W1 = ker(Q1 -> W0) with basis d_j e_j over the torsion generators.
struct KData {
  std::size_t n_m = 0, n_x = 0;  ///< P0 generators: those of M, then X
  AbHom h_gp;
  KernelData w0;
  SimplifiedGroup w0s;
  std::vector<Integer> torsion;  ///< d_j for the first torsion.size() generators of Q1
  IntMatrix q1_in_p0;            ///< P0^gp coordinates of each generator of Q1

  std::size_t q1_rank() const { return w0s.group.n_gens(); }
  std::size_t w1_rank() const { return torsion.size(); }

  /// Coordinates in Q1 of an element of W0 given in P0^gp coordinates.
  IntVector q1_coordinates(const IntVector& w) const {
    auto y = int_solve(w0.inclusion.matrix, w);
    if (!y) throw std::logic_error("element is not in the kernel lattice");
    return w0s.from_old * *y;
  }
};

inline KData build_kdata(const FactorizationData& d) {
  KData k;
  k.n_x = d.n_x;
  k.n_m = d.p0.size() - d.n_x;
  k.h_gp = d.h.gp();
  k.w0 = kernel(k.h_gp);
  k.w0s = simplify(k.w0.group);
  k.torsion = k.w0s.group.torsion();
  k.q1_in_p0 = k.w0.inclusion.matrix * k.w0s.to_old;
  return k;
}

inline Poly integer_constant(const PolyRing& r, const Integer& n) { return r.constant(r.field().from_integer(n)); }

/// B (x) W1 -> B (x) Q1 -> B (x) P0^gp/M^gp, all free: inclusion, then projection to X.
inline Complex3 d_complex(const KData& k, const AlgebraPtr& b) {
  const PolyRing& r = b->ring();
  FpModule w1 = FpModule::free(b, k.w1_rank()), q1 = FpModule::free(b, k.q1_rank()), px = FpModule::free(b, k.n_x);
  std::vector<Column> d2;
  for (std::size_t j = 0; j < k.w1_rank(); ++j) {
    Column c(k.q1_rank());
    c[j] = integer_constant(r, k.torsion[j]);
    d2.push_back(std::move(c));
  }
  std::vector<Column> d1;
  for (std::size_t j = 0; j < k.q1_rank(); ++j) {
    Column c(k.n_x);
    for (std::size_t x = 0; x < k.n_x; ++x) c[x] = integer_constant(r, k.q1_in_p0(k.n_m + x, j));
    d1.push_back(std::move(c));
  }
  return Complex3{w1, q1, px, ModHom(w1, q1, d2, false), ModHom(q1, px, d1, false)};
}

/// The K complex: d_complex with coefficients in t.
inline Complex3 build_k(const KData& k, const FpModule& t) { return d_complex(k, t.ring()).with_coefficients(t); }

struct KDims {
  std::size_t h0 = 0, h1 = 0, h2 = 0;
  bool operator==(const KDims&) const = default;
};

/// H2 = Tor1(T, ker), H0 = T (x) coker, dim H1 = dim T (x) ker + dim Tor1(T, coker).
inline KDims closed_form_dims(const MonoidHom& f, std::size_t t_dim, unsigned long p) {
  AbHom g = f.gp();
  FpAbGroup ker = kernel(g).group, coker = cokernel(g);
  return {tensor_dim_over_field(coker, t_dim, p),
          tensor_dim_over_field(ker, t_dim, p) + tor1_dim_over_field(coker, t_dim, p),
          tor1_dim_over_field(ker, t_dim, p)};
}

struct KClosedFormResult {
  std::optional<KDims> direct;  ///< nullopt if some homology is infinite-dimensional
  KDims closed;
  bool passed = false;
};

/// Compares the chain-level homology of K with the closed forms for a finite-dimensional T.
inline KClosedFormResult check_prop12(const PrelogMorphism& f, const FpModule& t) {
  KClosedFormResult res;
  auto t_dim = dim_over_k(t);
  if (!t_dim) throw std::invalid_argument("coefficients must be finite-dimensional over the field");
  KData k = build_kdata(choose_log_factorization(f));
  Complex3 kc = build_k(k, t);
  if (!kc.is_complex()) throw ConsistencyError("K does not compose to zero");
  auto h0 = dim_over_k(kc.homology(0)), h1 = dim_over_k(kc.homology(1)), h2 = dim_over_k(kc.homology(2));
  if (h0 && h1 && h2) res.direct = KDims{*h0, *h1, *h2};
  res.closed = closed_form_dims(f.monoid_map, *t_dim, f.field().characteristic());
  res.passed = res.direct && *res.direct == res.closed;
  return res;
}

}  // namespace logaq
