#pragma once

// Input files: a field, a source and a target pre-log ring, and the morphism.

#include "logaq/io/poly_parser.hpp"
#include "logaq/io/toml.hpp"
#include "logaq/fpmodule.hpp"
#include "logaq/monoids.hpp"

#include <optional>
#include <set>
#include <sstream>

namespace logaq::io {

struct RingSpec {
  std::vector<std::string> vars;
  std::vector<std::string> relations;  ///< canonical polynomial strings
  std::vector<long> weights;           ///< empty: all one
  bool operator==(const RingSpec&) const = default;
};

struct MonoidSpec {
  std::vector<std::string> gens;
  std::vector<std::pair<Exponent, Exponent>> relations;
  std::map<std::string, std::string> alpha;
  bool operator==(const MonoidSpec&) const = default;
};

struct SideSpec {
  RingSpec ring;
  MonoidSpec monoid;
  bool operator==(const SideSpec&) const = default;
};

struct MetaSpec {
  std::string name;
  std::string description;
  std::vector<std::string> suites;  ///< verify suites this instance belongs to
  bool operator==(const MetaSpec&) const = default;
};

struct InputSpec {
  std::string field = "Q";
  MetaSpec meta;
  SideSpec source, target;
  std::map<std::string, std::string> ring_map;
  std::map<std::string, Exponent> monoid_map;
  bool operator==(const InputSpec&) const = default;

  bool in_suite(const std::string& s) const {
    return std::find(meta.suites.begin(), meta.suites.end(), s) != meta.suites.end();
  }
};

namespace detail {

inline void only_keys(const Table& t, std::initializer_list<const char*> allowed, const std::string& where) {
  for (const auto& [k, v] : t) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || k == a;
    if (!ok) throw InputError("unknown key \"" + k + "\" in " + where, v.pos);
  }
}

inline const Value* find(const Table& t, const std::string& k) {
  auto it = t.find(k);
  return it == t.end() ? nullptr : &it->second;
}

inline bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'')) return false;
  return true;
}

inline std::vector<std::string> names(const Value& v, const std::string& what) {
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (const auto& x : v.as_array(what)) {
    const std::string& s = x.as_string(what + " entry");
    if (!is_identifier(s)) throw InputError("invalid name \"" + s + "\" in " + what, x.pos);
    if (!seen.insert(s).second) throw InputError("duplicate name \"" + s + "\" in " + what, x.pos);
    out.push_back(s);
  }
  return out;
}

inline Exponent exponent(const Value& v, std::size_t len, const std::string& what) {
  const Array& a = v.as_array(what);
  if (a.size() != len)
    throw InputError(what + " has " + std::to_string(a.size()) + " entries, expected " + std::to_string(len), v.pos);
  Exponent e;
  for (const auto& x : a) {
    long long n = x.as_int(what + " entry");
    if (n < 0 || n > 1000000) throw InputError(what + " entries must be nonnegative", x.pos);
    e.push_back(static_cast<int>(n));
  }
  return e;
}

inline std::string canonical_poly(const PolyRing& r, const Value& v, const std::string& what) {
  const std::string& s = v.as_string(what);
  try {
    return r.to_string(parse_poly(r, s));
  } catch (const PolyParseError& e) {
    throw InputError(what + ": " + e.what(), v.pos);
  }
}

inline SideSpec parse_side(const Table& t, const Field& k, const std::string& where) {
  only_keys(t, {"ring", "monoid"}, "[" + where + "]");
  SideSpec s;
  PolyRing r(k, {});
  if (const Value* rv = find(t, "ring")) {
    const Table& rt = rv->as_table(where + ".ring");
    only_keys(rt, {"vars", "relations", "weights"}, "[" + where + ".ring]");
    if (const Value* v = find(rt, "vars")) s.ring.vars = names(*v, where + ".ring.vars");
    r = PolyRing(k, s.ring.vars);
    if (const Value* v = find(rt, "relations"))
      for (const auto& x : v->as_array(where + ".ring.relations"))
        s.ring.relations.push_back(canonical_poly(r, x, where + ".ring relation"));
    if (const Value* v = find(rt, "weights")) {
      for (const auto& x : v->as_array(where + ".ring.weights")) {
        long long w = x.as_int("weight");
        if (w <= 0) throw InputError("weights must be positive", x.pos);
        s.ring.weights.push_back(static_cast<long>(w));
      }
      if (s.ring.weights.size() != s.ring.vars.size())
        throw InputError("one weight per variable is required", v->pos);
    }
  }
  if (const Value* mv = find(t, "monoid")) {
    const Table& mt = mv->as_table(where + ".monoid");
    only_keys(mt, {"gens", "relations", "alpha"}, "[" + where + ".monoid]");
    if (const Value* v = find(mt, "gens")) s.monoid.gens = names(*v, where + ".monoid.gens");
    std::size_t n = s.monoid.gens.size();
    if (const Value* v = find(mt, "relations"))
      for (const auto& rel : v->as_array(where + ".monoid.relations")) {
        const Array& pair = rel.as_array("monoid relation");
        if (pair.size() != 2) throw InputError("a monoid relation is a pair of exponent vectors", rel.pos);
        s.monoid.relations.emplace_back(exponent(pair[0], n, "monoid relation side"),
                                        exponent(pair[1], n, "monoid relation side"));
      }
    if (const Value* v = find(mt, "alpha")) {
      for (const auto& [g, p] : v->as_table(where + ".monoid.alpha")) {
        if (std::find(s.monoid.gens.begin(), s.monoid.gens.end(), g) == s.monoid.gens.end())
          throw InputError("alpha given for unknown generator \"" + g + "\"", p.pos);
        s.monoid.alpha[g] = canonical_poly(r, p, "alpha of \"" + g + "\"");
      }
    }
    for (const auto& g : s.monoid.gens)
      if (!s.monoid.alpha.count(g)) throw InputError("alpha is missing for generator \"" + g + "\"", mv->pos);
  }
  return s;
}

inline std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

inline std::string exponent_string(const Exponent& e) {
  std::string s = "[";
  for (std::size_t i = 0; i < e.size(); ++i) s += (i ? ", " : "") + std::to_string(e[i]);
  return s + "]";
}

inline std::string name_list(const std::vector<std::string>& v, bool quote) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + (quote ? quoted(v[i]) : v[i]);
  return s + "]";
}

}  // namespace detail

inline InputSpec parse_input(const std::string& text) {
  using namespace detail;
  Table root = parse_toml(text);
  only_keys(root, {"field", "meta", "source", "target", "morphism"}, "the top level");
  InputSpec spec;
  Field k = Field::rationals();
  if (const Value* v = find(root, "field")) {
    spec.field = v->as_string("field");
    try {
      k = parse_field(spec.field);
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what(), v->pos);
    }
  }
  if (const Value* v = find(root, "meta")) {
    const Table& m = v->as_table("meta");
    only_keys(m, {"name", "description", "suites"}, "[meta]");
    if (const Value* x = find(m, "name")) spec.meta.name = x->as_string("meta.name");
    if (const Value* x = find(m, "description")) spec.meta.description = x->as_string("meta.description");
    if (const Value* x = find(m, "suites"))
      for (const auto& s : x->as_array("meta.suites")) spec.meta.suites.push_back(s.as_string("suite"));
  }
  for (const char* side : {"source", "target"}) {
    const Value* v = find(root, side);
    if (!v) throw InputError(std::string("missing section [") + side + "]");
    (std::string(side) == "source" ? spec.source : spec.target) = parse_side(v->as_table(side), k, side);
  }
  PolyRing tr(k, spec.target.ring.vars);
  const Value* mv = find(root, "morphism");
  Table empty;
  const Table& mt = mv ? mv->as_table("morphism") : empty;
  Position mpos = mv ? mv->pos : Position{0, 0};
  only_keys(mt, {"ring_map", "monoid_map"}, "[morphism]");
  if (const Value* v = find(mt, "ring_map"))
    for (const auto& [x, p] : v->as_table("morphism.ring_map")) {
      const auto& vars = spec.source.ring.vars;
      if (std::find(vars.begin(), vars.end(), x) == vars.end())
        throw InputError("ring_map given for unknown variable \"" + x + "\"", p.pos);
      spec.ring_map[x] = canonical_poly(tr, p, "image of \"" + x + "\"");
    }
  for (const auto& x : spec.source.ring.vars)
    if (!spec.ring_map.count(x)) throw InputError("ring_map is missing variable \"" + x + "\"", mpos);
  if (const Value* v = find(mt, "monoid_map"))
    for (const auto& [g, e] : v->as_table("morphism.monoid_map")) {
      const auto& gens = spec.source.monoid.gens;
      if (std::find(gens.begin(), gens.end(), g) == gens.end())
        throw InputError("monoid_map given for unknown generator \"" + g + "\"", e.pos);
      spec.monoid_map[g] = exponent(e, spec.target.monoid.gens.size(), "image of \"" + g + "\"");
    }
  for (const auto& g : spec.source.monoid.gens)
    if (!spec.monoid_map.count(g)) throw InputError("monoid_map is missing generator \"" + g + "\"", mpos);
  return spec;
}

/// Canonical text; parse_input(print_input(s)) == s.
inline std::string print_input(const InputSpec& s) {
  using namespace detail;
  std::ostringstream os;
  os << "field = " << quoted(s.field) << "\n";
  if (!(s.meta == MetaSpec{})) {
    os << "\n[meta]\n";
    if (!s.meta.name.empty()) os << "name = " << quoted(s.meta.name) << "\n";
    if (!s.meta.description.empty()) os << "description = " << quoted(s.meta.description) << "\n";
    if (!s.meta.suites.empty()) os << "suites = " << name_list(s.meta.suites, true) << "\n";
  }
  auto side = [&](const char* name, const SideSpec& x) {
    os << "\n[" << name << ".ring]\n";
    os << "vars = " << name_list(x.ring.vars, false) << "\n";
    os << "relations = " << name_list(x.ring.relations, true) << "\n";
    if (!x.ring.weights.empty()) {
      os << "weights = [";
      for (std::size_t i = 0; i < x.ring.weights.size(); ++i) os << (i ? ", " : "") << x.ring.weights[i];
      os << "]\n";
    }
    os << "\n[" << name << ".monoid]\n";
    os << "gens = " << name_list(x.monoid.gens, false) << "\n";
    os << "relations = [";
    for (std::size_t i = 0; i < x.monoid.relations.size(); ++i)
      os << (i ? ", " : "") << "[" << exponent_string(x.monoid.relations[i].first) << ", "
         << exponent_string(x.monoid.relations[i].second) << "]";
    os << "]\n";
    os << "alpha = {";
    for (std::size_t i = 0; i < x.monoid.gens.size(); ++i)
      os << (i ? ", " : " ") << x.monoid.gens[i] << " = " << quoted(x.monoid.alpha.at(x.monoid.gens[i]));
    os << (x.monoid.gens.empty() ? "}" : " }") << "\n";
  };
  side("source", s.source);
  side("target", s.target);
  os << "\n[morphism]\nring_map = {";
  for (std::size_t i = 0; i < s.source.ring.vars.size(); ++i)
    os << (i ? ", " : " ") << s.source.ring.vars[i] << " = " << quoted(s.ring_map.at(s.source.ring.vars[i]));
  os << (s.source.ring.vars.empty() ? "}" : " }") << "\nmonoid_map = {";
  for (std::size_t i = 0; i < s.source.monoid.gens.size(); ++i)
    os << (i ? ", " : " ") << s.source.monoid.gens[i] << " = "
       << exponent_string(s.monoid_map.at(s.source.monoid.gens[i]));
  os << (s.source.monoid.gens.empty() ? "}" : " }") << "\n";
  return os.str();
}

/// The morphism over the spec's field, or over `field` when given.
inline PrelogMorphism build_morphism(const InputSpec& s, std::optional<Field> field = {}) {
  Field k = field ? *field : parse_field(s.field);
  try {
    auto ring = [&](const SideSpec& x) {
      PolyRing r(k, x.ring.vars);
      std::vector<Poly> rel;
      for (const auto& p : x.ring.relations) rel.push_back(parse_poly(r, p));
      return PresentedAlgebra::make(k, x.ring.vars, rel, x.ring.weights);
    };
    auto prelog = [&](const SideSpec& x) {
      AlgebraPtr a = ring(x);
      std::vector<Poly> alpha;
      for (const auto& g : x.monoid.gens) alpha.push_back(parse_poly(a->ring(), x.monoid.alpha.at(g)));
      return PrelogRing(a, FpMonoid(x.monoid.gens, x.monoid.relations), alpha);
    };
    PrelogRing src = prelog(s.source), tgt = prelog(s.target);
    std::vector<Poly> images;
    for (const auto& x : s.source.ring.vars) images.push_back(parse_poly(tgt.algebra->ring(), s.ring_map.at(x)));
    std::vector<Exponent> mon;
    for (const auto& g : s.source.monoid.gens) mon.push_back(s.monoid_map.at(g));
    return PrelogMorphism(src, tgt, images, MonoidHom(src.monoid, tgt.monoid, mon));
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("semantic error: ") + e.what());
  } catch (const PolyParseError& e) {
    throw InputError(std::string("semantic error: ") + e.what());
  }
}

/// A module file: `[module]` with `gens = n` and `relations = [["p1", ...], ...]`, one
/// column of length n per relation, over the given algebra.
inline FpModule parse_module(const std::string& text, const AlgebraPtr& alg) {
  using namespace detail;
  Table root = parse_toml(text);
  only_keys(root, {"module"}, "the top level");
  const Value* mv = find(root, "module");
  if (!mv) throw InputError("missing section [module]");
  const Table& mt = mv->as_table("module");
  only_keys(mt, {"gens", "relations"}, "[module]");
  const Value* gv = find(mt, "gens");
  if (!gv) throw InputError("module needs gens", mv->pos);
  long long n = gv->as_int("module.gens");
  if (n < 0 || n > 1000) throw InputError("module.gens out of range", gv->pos);
  std::vector<Column> rels;
  if (const Value* rv = find(mt, "relations"))
    for (const auto& c : rv->as_array("module.relations")) {
      const Array& entries = c.as_array("module relation");
      if (entries.size() != static_cast<std::size_t>(n))
        throw InputError("module relation must have one entry per generator", c.pos);
      Column col;
      for (const auto& e : entries) {
        try {
          col.push_back(alg->normal_form(parse_poly(alg->ring(), e.as_string("module relation entry"))));
        } catch (const PolyParseError& err) {
          throw InputError(err.what(), e.pos);
        }
      }
      rels.push_back(std::move(col));
    }
  return FpModule(alg, static_cast<std::size_t>(n), rels);
}

}  // namespace logaq::io
