#pragma once

#include "logaq/abgroup.hpp"
#include "logaq/groebner.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

namespace logaq {

/// Commutative monoid: generators and relations sum(a_i g_i) = sum(b_i g_i).
struct FpMonoid {
  std::vector<std::string> gens;
  std::vector<std::pair<Exponent, Exponent>> relations;

  FpMonoid() = default;
  FpMonoid(std::vector<std::string> g, std::vector<std::pair<Exponent, Exponent>> rel = {})
      : gens(std::move(g)), relations(std::move(rel)) {
    std::set<std::string> seen;
    for (const auto& n : gens)
      if (!seen.insert(n).second) throw std::invalid_argument("duplicate monoid generator \"" + n + "\"");
    for (const auto& [a, b] : relations) {
      if (a.size() != gens.size() || b.size() != gens.size())
        throw std::invalid_argument("monoid relation has the wrong length");
      for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] < 0 || b[i] < 0) throw std::invalid_argument("monoid relation has a negative exponent");
    }
  }

  std::size_t size() const { return gens.size(); }

  Exponent unit(std::size_t i) const {
    Exponent e(gens.size(), 0);
    e.at(i) = 1;
    return e;
  }
};

/// The group on the same generators with one relation row a - b per monoid relation.
inline FpAbGroup group_completion(const FpMonoid& m) {
  IntMatrix rel(m.relations.size(), m.size());
  for (std::size_t i = 0; i < m.relations.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) rel(i, j) = m.relations[i].first[j] - m.relations[i].second[j];
  return FpAbGroup(m.size(), rel);
}

inline FpMonoid free_adjunction(const FpMonoid& m, const std::vector<std::string>& x_names) {
  std::vector<std::string> gens = m.gens;
  gens.insert(gens.end(), x_names.begin(), x_names.end());
  std::vector<std::pair<Exponent, Exponent>> rel;
  for (auto [a, b] : m.relations) {
    a.resize(gens.size(), 0);
    b.resize(gens.size(), 0);
    rel.emplace_back(std::move(a), std::move(b));
  }
  return FpMonoid(gens, rel);
}

/// k[m]: one variable per generator modulo the binomials x^a - x^b.
inline AlgebraPtr monoid_algebra(const FpMonoid& m, Field field, std::vector<std::string> names = {}) {
  if (names.empty()) names = m.gens;
  PolyRing r(field, names);
  std::vector<Poly> gens;
  for (const auto& [a, b] : m.relations) gens.push_back(r.sub(r.monomial(a), r.monomial(b)));
  return std::make_shared<const PresentedAlgebra>(r, gens);
}

/// Monoid homomorphism: images[i] is the exponent vector of the image of source generator i.
struct MonoidHom {
  FpMonoid source;
  FpMonoid target;
  std::vector<Exponent> images;

  MonoidHom() = default;
  MonoidHom(FpMonoid s, FpMonoid t, std::vector<Exponent> im, bool check = true)
      : source(std::move(s)), target(std::move(t)), images(std::move(im)) {
    if (images.size() != source.size()) throw std::invalid_argument("one image per monoid generator is required");
    for (const auto& e : images) {
      if (e.size() != target.size()) throw std::invalid_argument("monoid image has the wrong length");
      for (int v : e)
        if (v < 0) throw std::invalid_argument("monoid image has a negative exponent");
    }
    if (check && !is_well_defined()) throw std::invalid_argument("monoid map does not respect source relations");
  }

  Exponent operator()(const Exponent& a) const {
    Exponent out(target.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < out.size(); ++j) out[j] += a[i] * images[i][j];
    return out;
  }

  bool is_well_defined() const {
    AlgebraPtr alg = monoid_algebra(target, Field::rationals());
    const PolyRing& r = alg->ring();
    for (const auto& [a, b] : source.relations)
      if (!alg->equal(r.monomial((*this)(a)), r.monomial((*this)(b)))) return false;
    return true;
  }

  AbHom gp() const {
    IntMatrix m(target.size(), source.size());
    for (std::size_t i = 0; i < source.size(); ++i)
      for (std::size_t j = 0; j < target.size(); ++j) m(j, i) = images[i][j];
    return AbHom(group_completion(source), group_completion(target), m);
  }
};

inline MonoidHom compose(const MonoidHom& g, const MonoidHom& f) {
  std::vector<Exponent> im;
  for (const auto& e : f.images) im.push_back(g(e));
  return MonoidHom(f.source, g.target, im, false);
}

/// Algebra with a multiplicative map from a monoid: alpha[i] is the image of generator i.
struct PrelogRing {
  AlgebraPtr algebra;
  FpMonoid monoid;
  std::vector<Poly> alpha;

  PrelogRing() = default;
  PrelogRing(AlgebraPtr a, FpMonoid m, std::vector<Poly> al)
      : algebra(std::move(a)), monoid(std::move(m)), alpha(std::move(al)) {
    if (alpha.size() != monoid.size()) throw std::invalid_argument("one alpha value per monoid generator is required");
    for (auto& p : alpha) p = algebra->normal_form(p);
    for (std::size_t i = 0; i < monoid.relations.size(); ++i)
      if (!algebra->equal(value(monoid.relations[i].first), value(monoid.relations[i].second)))
        throw std::invalid_argument("alpha does not respect relation " + std::to_string(i + 1));
  }

  /// alpha of the monoid element with exponent vector e.
  Poly value(const Exponent& e) const {
    Poly acc = algebra->ring().one();
    for (std::size_t i = 0; i < e.size(); ++i)
      for (int k = 0; k < e[i]; ++k) acc = algebra->mul(acc, alpha[i]);
    return acc;
  }
};

struct PrelogMorphism {
  PrelogRing source;
  PrelogRing target;
  AlgebraMap ring_map;
  MonoidHom monoid_map;

  PrelogMorphism() = default;
  PrelogMorphism(PrelogRing s, PrelogRing t, std::vector<Poly> ring_images, MonoidHom mm)
      : source(std::move(s)), target(std::move(t)), ring_map{source.algebra, target.algebra, std::move(ring_images)},
        monoid_map(std::move(mm)) {
    if (ring_map.images.size() != source.algebra->nvars())
      throw std::invalid_argument("one ring image per source variable is required");
    if (!ring_map.is_well_defined()) throw std::invalid_argument("ring map does not respect source relations");
    if (monoid_map.source.gens != source.monoid.gens || monoid_map.target.gens != target.monoid.gens)
      throw std::invalid_argument("monoid map does not match the source and target monoids");
    for (std::size_t i = 0; i < source.monoid.size(); ++i) {
      Poly lhs = target.value(monoid_map.images[i]);
      Poly rhs = ring_map.apply(source.alpha[i]);
      if (!target.algebra->equal(lhs, rhs))
        throw std::invalid_argument("alpha is not compatible with the maps at generator \"" + source.monoid.gens[i] + "\"");
    }
  }

  const Field& field() const { return source.algebra->field(); }
};

inline std::string fresh_name(const std::string& base, std::set<std::string>& taken) {
  std::string name = base;
  for (int k = 1; taken.count(name); ++k) name = base + "_" + std::to_string(k);
  taken.insert(name);
  return name;
}

/// A factorization A -> R -> B with R a polynomial algebra over A and a surjective
/// monoid map P0 = M + N^X -> N. X maps onto a generating set of N; Y are the variables of B.
struct FactorizationData {
  FpMonoid p0;
  MonoidHom h;
  AlgebraPtr r;                  ///< A[X, Y]: A variables, then X, then Y
  std::size_t n_a = 0, n_x = 0, n_y = 0;
  AlgebraMap a_to_r;             ///< inclusion of A
  AlgebraMap r_to_b;             ///< a -> f(a), x -> alpha_B(n_x), y -> y
  std::vector<Poly> alpha_r;     ///< P0 -> R: m -> alpha_A(m), x -> x
  std::vector<std::string> x_names;
  std::vector<Exponent> x_elements;  ///< h(x) for each x in X

  std::size_t x_var(std::size_t i) const { return n_a + i; }
  std::size_t y_var(std::size_t i) const { return n_a + n_x + i; }
};

/// `x_elements` lists the elements of N (as exponent vectors) adjoined as X; empty
/// means one per generator of N, in order. The list must contain every generator.
inline FactorizationData choose_log_factorization(const PrelogMorphism& f, std::vector<Exponent> x_elements = {}) {
  FactorizationData d;
  const auto& a = *f.source.algebra;
  const auto& b = *f.target.algebra;
  const FpMonoid& n = f.target.monoid;
  if (x_elements.empty())
    for (std::size_t i = 0; i < n.size(); ++i) x_elements.push_back(n.unit(i));
  for (std::size_t i = 0; i < n.size(); ++i)
    if (std::find(x_elements.begin(), x_elements.end(), n.unit(i)) == x_elements.end())
      throw std::invalid_argument("X must contain every generator of the target monoid");
  d.x_elements = x_elements;
  d.n_a = a.nvars();
  d.n_x = x_elements.size();
  d.n_y = b.nvars();

  std::set<std::string> taken(a.names().begin(), a.names().end());
  taken.insert(f.source.monoid.gens.begin(), f.source.monoid.gens.end());
  std::vector<std::string> names = a.names();
  for (const auto& e : x_elements) {
    std::string base = "x";
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) base += "_" + n.gens[i] + (e[i] > 1 ? std::to_string(e[i]) : "");
    d.x_names.push_back(fresh_name(base, taken));
  }
  names.insert(names.end(), d.x_names.begin(), d.x_names.end());
  for (const auto& y : b.names()) names.push_back(fresh_name(y, taken));

  PolyRing rr(a.field(), names);
  std::vector<std::size_t> amap(d.n_a);
  for (std::size_t i = 0; i < d.n_a; ++i) amap[i] = i;
  std::vector<Poly> rel;
  for (const auto& g : a.gb()) rel.push_back(reindex(g, rr, amap));
  std::vector<long> weights = a.weights();
  for (std::size_t i = 0; i < d.n_x; ++i) weights.push_back(1);
  for (long w : b.weights()) weights.push_back(w);
  d.r = std::make_shared<const PresentedAlgebra>(rr, rel, weights);

  d.p0 = free_adjunction(f.source.monoid, d.x_names);
  std::vector<Exponent> him;
  for (const auto& e : f.monoid_map.images) him.push_back(e);
  for (const auto& e : x_elements) him.push_back(e);
  d.h = MonoidHom(d.p0, n, him, false);

  std::vector<Poly> a_images;
  for (std::size_t i = 0; i < d.n_a; ++i) a_images.push_back(rr.variable(i));
  d.a_to_r = AlgebraMap{f.source.algebra, d.r, a_images};

  std::vector<Poly> to_b = f.ring_map.images;
  for (const auto& e : x_elements) to_b.push_back(f.target.value(e));
  for (std::size_t i = 0; i < d.n_y; ++i) to_b.push_back(b.ring().variable(i));
  d.r_to_b = AlgebraMap{d.r, f.target.algebra, to_b};

  for (const auto& p : f.source.alpha) d.alpha_r.push_back(reindex(p, rr, amap));
  for (std::size_t i = 0; i < d.n_x; ++i) d.alpha_r.push_back(rr.variable(d.x_var(i)));
  return d;
}

}  // namespace logaq
