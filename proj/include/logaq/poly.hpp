#pragma once

#include "logaq/field.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace logaq {

using Exponent = std::vector<int>;

enum class OrderKind { DegRevLex, Lex, Block };

/// Monomial order on exponent vectors. `Block` compares the first `block_size`
/// variables by degrevlex and breaks ties by degrevlex on the rest, so every
/// monomial involving the first block dominates all monomials free of it.
struct MonomialOrder {
  OrderKind kind = OrderKind::DegRevLex;
  std::size_t block_size = 0;

  static MonomialOrder degrevlex() { return {}; }
  static MonomialOrder lex() { return {OrderKind::Lex, 0}; }
  static MonomialOrder elimination(std::size_t first_block) { return {OrderKind::Block, first_block}; }

  static int grevlex(const Exponent& a, const Exponent& b, std::size_t lo, std::size_t hi) {
    long da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) {
      da += a[i];
      db += b[i];
    }
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t i = hi; i-- > lo;)
      if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    return 0;
  }

  int compare(const Exponent& a, const Exponent& b) const {
    switch (kind) {
      case OrderKind::DegRevLex:
        return grevlex(a, b, 0, a.size());
      case OrderKind::Lex:
        for (std::size_t i = 0; i < a.size(); ++i)
          if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
        return 0;
      case OrderKind::Block: {
        int c = grevlex(a, b, 0, block_size);
        return c != 0 ? c : grevlex(a, b, block_size, a.size());
      }
    }
    return 0;
  }

  friend bool operator==(const MonomialOrder& x, const MonomialOrder& y) {
    return x.kind == y.kind && x.block_size == y.block_size;
  }
};

/// One term c * x^mono * e_pos. Ring elements use pos == 0.
struct Term {
  int pos = 0;
  Exponent mono;
  Rational coef;
};

/// Sparse polynomial or free-module vector, terms sorted strictly decreasing
/// under the owning ring's position-over-term order, no zero coefficients.
struct Poly {
  std::vector<Term> terms;

  bool is_zero() const { return terms.empty(); }
  const Term& lead() const { return terms.front(); }
  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.terms.size() != b.terms.size()) return false;
    for (std::size_t i = 0; i < a.terms.size(); ++i)
      if (a.terms[i].pos != b.terms[i].pos || a.terms[i].mono != b.terms[i].mono ||
          a.terms[i].coef != b.terms[i].coef)
        return false;
    return true;
  }
};

/// Polynomial ring k[x_1..x_n] with a monomial order; all arithmetic goes through it.
class PolyRing {
 public:
  PolyRing() = default;
  PolyRing(Field field, std::vector<std::string> names, MonomialOrder order = MonomialOrder::degrevlex())
      : field_(field), names_(std::move(names)), order_(order) {}

  const Field& field() const { return field_; }
  const std::vector<std::string>& names() const { return names_; }
  std::size_t nvars() const { return names_.size(); }
  const MonomialOrder& order() const { return order_; }

  std::optional<std::size_t> index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return i;
    return std::nullopt;
  }

  PolyRing with_field(Field f) const { return PolyRing(f, names_, order_); }
  PolyRing with_order(MonomialOrder o) const { return PolyRing(field_, names_, o); }

  // Position-over-term comparison; a smaller position index is a larger term.
  int compare(int pa, const Exponent& a, int pb, const Exponent& b) const {
    if (pa != pb) return pa < pb ? 1 : -1;
    return order_.compare(a, b);
  }
  int compare(const Term& a, const Term& b) const { return compare(a.pos, a.mono, b.pos, b.mono); }

  // Constructors ------------------------------------------------------------

  Poly zero() const { return {}; }
  Poly constant(const Rational& c, int pos = 0) const {
    Rational v = field_.normalize(c);
    if (v == 0) return {};
    return Poly{{Term{pos, Exponent(nvars(), 0), v}}};
  }
  Poly one() const { return constant(1); }
  Poly variable(std::size_t i) const {
    Exponent e(nvars(), 0);
    e.at(i) = 1;
    return Poly{{Term{0, e, Rational(1)}}};
  }
  Poly monomial(const Exponent& e, const Rational& c = 1, int pos = 0) const {
    Rational v = field_.normalize(c);
    if (v == 0) return {};
    return Poly{{Term{pos, e, v}}};
  }

  /// Builds a polynomial from arbitrary (possibly repeated, unsorted) terms.
  Poly from_terms(std::vector<Term> ts) const {
    std::sort(ts.begin(), ts.end(), [this](const Term& a, const Term& b) { return compare(a, b) > 0; });
    Poly out;
    for (auto& t : ts) {
      if (!out.terms.empty() && out.terms.back().pos == t.pos && out.terms.back().mono == t.mono) {
        out.terms.back().coef = field_.add(out.terms.back().coef, t.coef);
      } else {
        t.coef = field_.normalize(t.coef);
        out.terms.push_back(std::move(t));
      }
    }
    std::erase_if(out.terms, [](const Term& t) { return t.coef == 0; });
    return out;
  }

  /// Re-sorts after an order change or coefficient change of field.
  Poly normalize(const Poly& p) const { return from_terms(p.terms); }

  // Arithmetic ---------------------------------------------------------------

  Poly add(const Poly& a, const Poly& b) const { return combine(a, b, Rational(1)); }
  Poly sub(const Poly& a, const Poly& b) const { return combine(a, b, Rational(-1)); }

  /// a + c * b, merged in one pass.
  Poly combine(const Poly& a, const Poly& b, const Rational& c) const {
    Rational cn = field_.normalize(c);
    if (cn == 0 || b.is_zero()) return a;
    Poly out;
    out.terms.reserve(a.terms.size() + b.terms.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms.size() || j < b.terms.size()) {
      int cmp;
      if (i == a.terms.size())
        cmp = -1;
      else if (j == b.terms.size())
        cmp = 1;
      else
        cmp = compare(a.terms[i], b.terms[j]);
      if (cmp > 0) {
        out.terms.push_back(a.terms[i++]);
      } else if (cmp < 0) {
        Term t = b.terms[j++];
        t.coef = field_.mul(t.coef, cn);
        out.terms.push_back(std::move(t));
      } else {
        Rational v = field_.add(a.terms[i].coef, field_.mul(b.terms[j].coef, cn));
        if (v != 0) out.terms.push_back(Term{a.terms[i].pos, a.terms[i].mono, v});
        ++i;
        ++j;
      }
    }
    return out;
  }

  Poly scale(const Poly& p, const Rational& c) const {
    Rational cn = field_.normalize(c);
    if (cn == 0) return {};
    Poly out = p;
    for (auto& t : out.terms) t.coef = field_.mul(t.coef, cn);
    return out;
  }

  Poly negate(const Poly& p) const { return scale(p, Rational(-1)); }

  /// p * c x^e, optionally moving every term to position `new_pos`.
  Poly mul_term(const Poly& p, const Exponent& e, const Rational& c, std::optional<int> new_pos = {}) const {
    Poly out;
    Rational cn = field_.normalize(c);
    if (cn == 0) return out;
    out.terms.reserve(p.terms.size());
    for (const auto& t : p.terms) {
      Term u{new_pos ? *new_pos : t.pos, t.mono, field_.mul(t.coef, cn)};
      for (std::size_t k = 0; k < e.size(); ++k) u.mono[k] += e[k];
      out.terms.push_back(std::move(u));
    }
    // Multiplying by a monomial preserves the order within a position; moving
    // everything to a single position keeps it as well.
    return out;
  }

  /// Product of a ring element `a` (pos 0) with a ring element or vector `b`.
  Poly mul(const Poly& a, const Poly& b) const {
    Poly acc;
    if (a.terms.size() > b.terms.size() && is_ring_element(b) && is_ring_element(a)) return mul(b, a);
    for (const auto& t : a.terms) acc = add(acc, mul_term(b, t.mono, t.coef));
    return acc;
  }

  Poly pow(const Poly& p, unsigned e) const {
    Poly result = one();
    Poly base = p;
    while (e) {
      if (e & 1u) result = mul(result, base);
      e >>= 1;
      if (e) base = mul(base, base);
    }
    return result;
  }

  Poly monic(const Poly& p) const {
    if (p.is_zero()) return p;
    return scale(p, field_.inv(p.lead().coef));
  }

  Poly derivative(const Poly& p, std::size_t var) const {
    std::vector<Term> ts;
    for (const auto& t : p.terms) {
      if (t.mono[var] == 0) continue;
      Term u = t;
      u.coef = field_.mul(u.coef, Rational(u.mono[var]));
      u.mono[var] -= 1;
      if (u.coef != 0) ts.push_back(std::move(u));
    }
    return from_terms(std::move(ts));
  }

  static bool is_ring_element(const Poly& p) {
    return std::all_of(p.terms.begin(), p.terms.end(), [](const Term& t) { return t.pos == 0; });
  }

  /// Component at position `pos`, returned as a ring element.
  Poly component(const Poly& v, int pos) const {
    Poly out;
    for (const auto& t : v.terms)
      if (t.pos == pos) out.terms.push_back(Term{0, t.mono, t.coef});
    return out;
  }

  /// Ring element placed at position `pos`.
  Poly at_position(const Poly& p, int pos) const {
    Poly out = p;
    for (auto& t : out.terms) t.pos = pos;
    return out;
  }

  /// Dense column -> vector with positions offset, offset+1, ...
  Poly embed(const std::vector<Poly>& column, int offset = 0) const {
    Poly out;
    for (std::size_t i = 0; i < column.size(); ++i)
      for (const auto& t : column[i].terms) out.terms.push_back(Term{offset + static_cast<int>(i), t.mono, t.coef});
    return out;  // positions increase so the concatenation is already sorted
  }

  /// Vector -> dense column of `n` ring elements taken from positions offset..offset+n-1.
  std::vector<Poly> extract(const Poly& v, std::size_t n, int offset = 0) const {
    std::vector<Poly> col(n);
    for (const auto& t : v.terms) {
      int k = t.pos - offset;
      if (k >= 0 && static_cast<std::size_t>(k) < n) col[static_cast<std::size_t>(k)].terms.push_back(Term{0, t.mono, t.coef});
    }
    return col;
  }

  // Degrees ------------------------------------------------------------------

  static long weighted_degree(const Exponent& e, const std::vector<long>& weights) {
    long d = 0;
    for (std::size_t i = 0; i < e.size(); ++i) d += static_cast<long>(e[i]) * (i < weights.size() ? weights[i] : 1);
    return d;
  }

  /// Degree if `p` is homogeneous under `weights` (zero counts as homogeneous of any degree: nullopt + true).
  static std::optional<long> homogeneous_degree(const Poly& p, const std::vector<long>& weights) {
    if (p.is_zero()) return std::nullopt;
    long d = weighted_degree(p.terms.front().mono, weights);
    for (const auto& t : p.terms)
      if (weighted_degree(t.mono, weights) != d) throw std::domain_error("inhomogeneous");
    return d;
  }

  static bool is_homogeneous(const Poly& p, const std::vector<long>& weights) {
    try {
      homogeneous_degree(p, weights);
      return true;
    } catch (const std::domain_error&) {
      return false;
    }
  }

  bool is_constant(const Poly& p) const {
    return p.terms.size() == 1 &&
           std::all_of(p.terms[0].mono.begin(), p.terms[0].mono.end(), [](int x) { return x == 0; });
  }

  // Printing -----------------------------------------------------------------

  std::string mono_to_string(const Exponent& e) const {
    std::string s;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!s.empty()) s += "*";
      s += names_[i];
      if (e[i] != 1) s += "^" + std::to_string(e[i]);
    }
    return s;
  }

  /// Canonical form: terms in decreasing order, every coefficient explicit.
  std::string to_string(const Poly& p) const {
    if (p.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& t : p.terms) {
      Rational c = t.coef;
      bool negative = c < 0;
      if (negative) c = -c;
      std::string body = c.get_str();
      std::string m = mono_to_string(t.mono);
      if (!m.empty()) body += "*" + m;
      if (first)
        s += negative ? "-" + body : body;
      else
        s += negative ? " - " + body : " + " + body;
      first = false;
    }
    return s;
  }

 private:
  Field field_;
  std::vector<std::string> names_;
  MonomialOrder order_;
};

inline bool divides(const Exponent& a, const Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline Exponent lcm(const Exponent& a, const Exponent& b) {
  Exponent c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = std::max(a[i], b[i]);
  return c;
}

inline Exponent quotient(const Exponent& a, const Exponent& b) {
  Exponent c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}

inline long total_degree(const Exponent& e) {
  long d = 0;
  for (int x : e) d += x;
  return d;
}

/// Moves a polynomial into another ring with the same variables (different order or field).
inline Poly transport(const Poly& p, const PolyRing& to) {
  std::vector<Term> ts = p.terms;
  return to.from_terms(std::move(ts));
}

/// Renames variables: variable i of the source becomes variable map[i] of `to`.
inline Poly reindex(const Poly& p, const PolyRing& to, const std::vector<std::size_t>& map) {
  std::vector<Term> ts;
  ts.reserve(p.terms.size());
  for (const auto& t : p.terms) {
    Exponent e(to.nvars(), 0);
    for (std::size_t i = 0; i < t.mono.size(); ++i) e[map.at(i)] += t.mono[i];
    ts.push_back(Term{t.pos, std::move(e), t.coef});
  }
  return to.from_terms(std::move(ts));
}

}  // namespace logaq
