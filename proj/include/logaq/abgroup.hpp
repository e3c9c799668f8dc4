#pragma once

#include "logaq/exactlinalg.hpp"

#include <sstream>
#include <stdexcept>

namespace logaq {

/// Abelian group given by generators and relation rows.
class FpAbGroup {
 public:
  FpAbGroup() = default;
  FpAbGroup(std::size_t n_gens, IntMatrix relations) : n_gens_(n_gens), relations_(std::move(relations)) {
    if (relations_.rows() == 0) relations_ = IntMatrix(0, n_gens_);
    if (relations_.cols() != n_gens_) throw std::invalid_argument("relation width differs from generator count");
    compute_invariants();
  }

  static FpAbGroup free(std::size_t n) { return FpAbGroup(n, IntMatrix(0, n)); }
  static FpAbGroup cyclic(const Integer& d) { return FpAbGroup(1, IntMatrix::from_rows({{d}}, 1)); }

  std::size_t n_gens() const { return n_gens_; }
  const IntMatrix& relations() const { return relations_; }
  std::size_t rank() const { return rank_; }
  /// Invariant factors greater than one, in divisibility order.
  const std::vector<Integer>& torsion() const { return torsion_; }
  const SnfResult& snf_data() const { return snf_; }

  bool is_trivial() const { return rank_ == 0 && torsion_.empty(); }

  /// True when x (generator coordinates) lies in the relation lattice.
  bool is_zero(const IntVector& x) const { return int_solve(relations_.transpose(), x).has_value(); }

  std::string to_string() const {
    std::ostringstream os;
    bool first = true;
    if (rank_ > 0) {
      os << "Z";
      if (rank_ > 1) os << "^" << rank_;
      first = false;
    }
    for (const auto& d : torsion_) {
      os << (first ? "" : " + ") << "Z/" << d.get_str();
      first = false;
    }
    if (first) os << "0";
    return os.str();
  }

 private:
  void compute_invariants() {
    snf_ = snf(relations_);
    torsion_.clear();
    for (const auto& d : snf_.invariant_factors)
      if (d != 1) torsion_.push_back(d);
    rank_ = n_gens_ - snf_.rank();
  }

  std::size_t n_gens_ = 0;
  IntMatrix relations_;
  SnfResult snf_;
  std::size_t rank_ = 0;
  std::vector<Integer> torsion_;
};

/// Homomorphism given on generators: column j is the image of source generator j.
struct AbHom {
  FpAbGroup source;
  FpAbGroup target;
  IntMatrix matrix;

  AbHom() = default;
  AbHom(FpAbGroup s, FpAbGroup t, IntMatrix m) : source(std::move(s)), target(std::move(t)), matrix(std::move(m)) {
    if (matrix.rows() != target.n_gens() || matrix.cols() != source.n_gens())
      throw std::invalid_argument("homomorphism matrix has the wrong shape");
    for (std::size_t i = 0; i < source.relations().rows(); ++i)
      if (!target.is_zero(matrix * source.relations().row(i)))
        throw std::invalid_argument("homomorphism does not respect source relations");
  }

  IntVector operator()(const IntVector& x) const { return matrix * x; }

  bool is_zero() const {
    for (std::size_t j = 0; j < matrix.cols(); ++j)
      if (!target.is_zero(matrix.column(j))) return false;
    return true;
  }
};

inline AbHom compose(const AbHom& g, const AbHom& f) { return AbHom(f.source, g.target, g.matrix * f.matrix); }

inline FpAbGroup direct_sum(const FpAbGroup& a, const FpAbGroup& b) {
  IntMatrix rel(a.relations().rows() + b.relations().rows(), a.n_gens() + b.n_gens());
  for (std::size_t i = 0; i < a.relations().rows(); ++i)
    for (std::size_t j = 0; j < a.n_gens(); ++j) rel(i, j) = a.relations()(i, j);
  for (std::size_t i = 0; i < b.relations().rows(); ++i)
    for (std::size_t j = 0; j < b.n_gens(); ++j) rel(a.relations().rows() + i, a.n_gens() + j) = b.relations()(i, j);
  return FpAbGroup(a.n_gens() + b.n_gens(), rel);
}

/// A group isomorphic to g whose generators carry the nontrivial invariant factors:
/// torsion generators first (relations d_i e_i), free generators after.
struct SimplifiedGroup {
  FpAbGroup group;
  IntMatrix to_old;    ///< old generator coordinates of each new generator
  IntMatrix from_old;  ///< new coordinates of each old generator
};

inline SimplifiedGroup simplify(const FpAbGroup& g) {
  const SnfResult& s = g.snf_data();
  std::vector<std::size_t> keep;
  std::vector<Integer> factors;
  for (std::size_t j = 0; j < s.rank(); ++j)
    if (s.invariant_factors[j] != 1) {
      keep.push_back(j);
      factors.push_back(s.invariant_factors[j]);
    }
  for (std::size_t j = s.rank(); j < g.n_gens(); ++j) keep.push_back(j);
  std::size_t n = keep.size();
  IntMatrix rel(factors.size(), n);
  for (std::size_t i = 0; i < factors.size(); ++i) rel(i, i) = factors[i];
  IntMatrix to_old(g.n_gens(), n), from_old(n, g.n_gens());
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t r = 0; r < g.n_gens(); ++r) {
      to_old(r, c) = s.v_inv(keep[c], r);
      from_old(c, r) = s.v(r, keep[c]);
    }
  return {FpAbGroup(n, rel), to_old, from_old};
}

struct KernelData {
  FpAbGroup group;
  AbHom inclusion;
};

/// Kernel of h. Generators are a basis of the preimage lattice of the target relations,
/// so the inclusion is a basis change followed by the source presentation.
inline KernelData kernel(const AbHom& h) {
  std::size_t ns = h.source.n_gens(), nt = h.target.n_gens();
  const IntMatrix& rt = h.target.relations();
  std::size_t nr = rt.rows();
  IntMatrix big(nt, ns + nr);
  for (std::size_t i = 0; i < nt; ++i) {
    for (std::size_t j = 0; j < ns; ++j) big(i, j) = h.matrix(i, j);
    for (std::size_t k = 0; k < nr; ++k) big(i, ns + k) = -rt(k, i);
  }
  IntMatrix sol = int_kernel(big);
  IntMatrix proj(ns, sol.cols());
  for (std::size_t i = 0; i < ns; ++i)
    for (std::size_t j = 0; j < sol.cols(); ++j) proj(i, j) = sol(i, j);
  IntMatrix basis = lattice_basis(proj);
  std::size_t m = basis.cols();
  const IntMatrix& rs = h.source.relations();
  IntMatrix rel(rs.rows(), m);
  for (std::size_t i = 0; i < rs.rows(); ++i) {
    auto c = int_solve(basis, rs.row(i));
    if (!c) throw std::logic_error("source relation outside the kernel lattice");
    for (std::size_t j = 0; j < m; ++j) rel(i, j) = (*c)[j];
  }
  FpAbGroup k(m, rel);
  return {k, AbHom(k, h.source, basis)};
}

inline FpAbGroup cokernel(const AbHom& h) {
  const IntMatrix& rt = h.target.relations();
  IntMatrix rel(rt.rows() + h.matrix.cols(), h.target.n_gens());
  for (std::size_t i = 0; i < rt.rows(); ++i)
    for (std::size_t j = 0; j < rt.cols(); ++j) rel(i, j) = rt(i, j);
  for (std::size_t c = 0; c < h.matrix.cols(); ++c)
    for (std::size_t j = 0; j < h.target.n_gens(); ++j) rel(rt.rows() + c, j) = h.matrix(j, c);
  return FpAbGroup(h.target.n_gens(), rel);
}

/// Whether the integer d is zero in a field of characteristic p (p = 0 for Q).
inline bool vanishes_in_char(const Integer& d, unsigned long p) { return p != 0 && d % p == 0; }

inline std::size_t torsion_count_in_char(const FpAbGroup& g, unsigned long p) {
  std::size_t n = 0;
  for (const auto& d : g.torsion())
    if (vanishes_in_char(d, p)) ++n;
  return n;
}

/// dim_k (T (x)_Z g) for a k-vector space T of dimension t_dim.
inline std::size_t tensor_dim_over_field(const FpAbGroup& g, std::size_t t_dim, unsigned long p) {
  return t_dim * (g.rank() + torsion_count_in_char(g, p));
}

/// dim_k Tor_1^Z(T, g) for a k-vector space T of dimension t_dim.
inline std::size_t tor1_dim_over_field(const FpAbGroup& g, std::size_t t_dim, unsigned long p) {
  return t_dim * torsion_count_in_char(g, p);
}

}  // namespace logaq
