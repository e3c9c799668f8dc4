// Acceptance gate: one PASS/FAIL line per criterion, details underneath.
// Tolerances: dimensions and proxies compare exactly; per-instance time limits are 1 s.

#include "logaq/io/corpus.hpp"
#include "oracles.hpp"

#include <chrono>
#include <iostream>
#include <random>

using namespace logaq;
using namespace logaq::io;

namespace {

constexpr double kInstanceSeconds = 1.0;
constexpr long kOracleDegree = 6;

struct Criterion {
  int id;
  std::string title;
  bool pass = true;
  std::vector<std::string> notes;

  void check(bool ok, const std::string& what) {
    notes.push_back((ok ? "ok   " : "FAIL ") + what);
    pass = pass && ok;
  }
};

double seconds_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

std::string seconds_string(double s) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(3) << s << " s";
  return os.str();
}

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> c = load_corpus(LOGAQ_CORPUS_DIR);
  return c;
}

const CorpusEntry& entry(const std::string& name) {
  for (const auto& e : corpus())
    if (e.name == name) return e;
  throw std::runtime_error("corpus instance " + name + " missing");
}

FpModule unit(const PrelogMorphism& f) { return FpModule::free(f.target.algebra, 1); }

std::string dims_string(const std::array<HomologyReport, 3>& h) {
  std::string s = "(";
  for (int i = 0; i < 3; ++i) s += (i ? ", " : "") + (h[i].is_zero() ? std::string("0") : h[i].k_dim_string());
  return s + ")";
}

bool has_dims(const std::array<HomologyReport, 3>& h, std::array<std::size_t, 3> d) {
  for (int i = 0; i < 3; ++i)
    if (h[i].k_dim != std::optional<std::size_t>(d[i])) return false;
  return true;
}

bool free_of_rank(const HomologyReport& r, std::size_t n) {
  return !r.k_dim && r.n_gens == n && r.relations.empty();
}

// ---------------------------------------------------------------------------

Criterion monoid_complex_closed_forms() {
  Criterion c{1, "monoid complex matches its closed forms"};
  std::size_t instances = 0;
  for (const auto& e : corpus()) {
    if (!e.spec.in_suite("prop12")) continue;
    ++instances;
    for (Field k : {Field::rationals(), Field::prime(2)}) {
      PrelogMorphism f = build_morphism(e.spec, k);
      for (const auto& [tn, t] : std::vector<std::pair<std::string, FpModule>>{
               {"B", unit(f)}, {"k", residue_coefficients(f.target.algebra)}}) {
        auto start = std::chrono::steady_clock::now();
        KClosedFormResult p = check_prop12(f, t);
        double s = seconds_since(start);
        c.check(p.passed && s < kInstanceSeconds, e.name + " over " + k.name() + ", T = " + tn + ": direct " +
                                                      io::detail::dims_string(p.direct) + ", closed " +
                                                      io::detail::dims_string(p.closed) + ", " + seconds_string(s));
      }
    }
  }
  c.check(instances >= 8, std::to_string(instances) + " monoid instances (at least 8)");
  for (const char* kind : {"torsion-kernel", "times-two", "mixed-torsion"})
    c.check(entry(kind).spec.in_suite("prop12"), std::string("includes ") + kind);
  return c;
}

Criterion strict_reduction() {
  Criterion c{2, "strict morphisms reduce to the classical complex"};
  std::size_t instances = 0;
  for (const auto& e : corpus()) {
    if (!e.spec.in_suite("strict")) continue;
    ++instances;
    PrelogMorphism f = build_morphism(e.spec);
    CheckReport r = check_strict_reduction(f, unit(f));
    for (const auto& [what, ok] : r.items) c.check(ok, e.name + ": " + what);
  }
  c.check(instances >= 5, std::to_string(instances) + " strict instances (at least 5)");

  auto h = [](const std::string& name) {
    PrelogMorphism f = build_morphism(entry(name).spec);
    return log_homology_all(f, unit(f));
  };
  auto tq = h("t-quotient");
  c.check(has_dims(tq, {1, 2, 0}), "k[t] -> k[t]/(t^2), T = B: expected (1, 2, 0), got " + dims_string(tq));
  auto plane = h("smooth-plane");
  c.check(free_of_rank(plane[0], 2) && plane[1].is_zero() && plane[2].is_zero(),
          "k -> k[x, y]: H0 free of rank 2, H1 = H2 = 0");
  auto rel = h("smooth-relative");
  c.check(free_of_rank(rel[0], 1) && rel[1].is_zero() && rel[2].is_zero(),
          "k[t] -> k[t, u]: H0 free of rank 1, H1 = H2 = 0");
  auto ci = h("complete-intersection");
  c.check(ci[1].k_dim == std::optional<std::size_t>(12) && ci[2].is_zero(),
          "k[x, y] -> k[x, y]/(x^2, y^3): H1 dim " + ci[1].k_dim_string() + " (12), H2 " +
              (ci[2].is_zero() ? "0" : ci[2].k_dim_string()) + " (0)");
  return c;
}

// Shifts making every map of the complex homogeneous, propagated from degree 0.
std::optional<std::array<std::vector<long>, 3>> complex_shifts(const Complex3& cx) {
  const PresentedAlgebra& alg = cx.c0.algebra();
  if (!alg.is_homogeneous()) return std::nullopt;
  std::array<std::vector<long>, 3> s;
  s[0].assign(cx.c0.n_gens(), 0);
  auto propagate = [&](const ModHom& d, const std::vector<long>& tgt, std::vector<long>& src) -> bool {
    src.assign(d.matrix.size(), 0);
    for (std::size_t j = 0; j < d.matrix.size(); ++j) {
      std::optional<long> deg;
      for (std::size_t i = 0; i < d.matrix[j].size(); ++i) {
        Poly p = alg.normal_form(d.matrix[j][i]);
        if (p.is_zero()) continue;
        long e;
        try {
          e = *PolyRing::homogeneous_degree(p, alg.weights());
        } catch (const std::domain_error&) {
          return false;
        }
        if (deg && *deg != tgt[i] + e) return false;
        deg = tgt[i] + e;
      }
      if (deg) src[j] = *deg;
    }
    return true;
  };
  if (!propagate(cx.d1, s[0], s[1]) || !propagate(cx.d2, s[1], s[2])) return std::nullopt;
  return s;
}

std::vector<Integer> series_coefficients(const HilbertSeries& h, std::size_t n) {
  std::vector<Integer> c(n, 0);
  for (std::size_t i = 0; i < h.numerator.size() && i < n; ++i) c[i] = h.numerator[i];
  for (long d : h.denominator)
    for (std::size_t i = static_cast<std::size_t>(d); i < n; ++i) c[i] += c[i - static_cast<std::size_t>(d)];
  return c;
}

Criterion worked_examples() {
  Criterion c{3, "log line and log point"};
  for (const char* name : {"log-line", "log-point"}) {
    const CorpusEntry& e = entry(name);
    PrelogMorphism f = build_morphism(e.spec);
    auto start = std::chrono::steady_clock::now();
    auto h = log_homology_all(f, unit(f));
    double s = seconds_since(start);
    c.check(s < kInstanceSeconds, std::string(name) + " computed in " + seconds_string(s));
    Complex3 cx = log_ls(f).complex;
    if (std::string(name) == "log-point") {
      c.check(has_dims(h, {1, 1, 0}), "log point: k-dims " + dims_string(h) + " (1, 1, 0)");
      std::vector<long> z2(cx.c2.n_gens()), z1(cx.c1.n_gens()), z0(cx.c0.n_gens());
      auto o = oracle::complex_dims(cx, z2, z1, z0, std::nullopt, 3);
      c.check(o.h0 == 1 && o.h1 == 1 && o.h2 == 0, "log point: truncation oracle (" + std::to_string(o.h0) + ", " +
                                                       std::to_string(o.h1) + ", " + std::to_string(o.h2) + ")");
    } else {
      c.check(free_of_rank(h[0], 1) && h[1].is_zero() && h[2].is_zero(),
              "log line: H0 free of rank 1, H1 = H2 = 0");
      auto shifts = complex_shifts(cx);
      c.check(shifts.has_value(), "log line: complex is graded");
      if (shifts && h[0].hilbert) {
        long lo = *std::min_element((*shifts)[0].begin(), (*shifts)[0].end());
        long first = lo;
        while (first < lo + 10 && oracle::complex_dims(cx, (*shifts)[2], (*shifts)[1], (*shifts)[0], first, 0).h0 == 0)
          ++first;
        auto coeffs = series_coefficients(*h[0].hilbert, kOracleDegree + 1);
        bool agree = true;
        for (long k = 0; k <= kOracleDegree; ++k) {
          auto o = oracle::complex_dims(cx, (*shifts)[2], (*shifts)[1], (*shifts)[0], first + k, 0);
          agree = agree && Integer(static_cast<unsigned long>(o.h0)) == coeffs[static_cast<std::size_t>(k)] && o.h1 == 0 &&
                  o.h2 == 0;
        }
        c.check(agree, "log line: graded oracle agrees with the Hilbert series " + h[0].hilbert->to_string() +
                           " in " + std::to_string(kOracleDegree + 1) + " degrees");
      }
    }
    SuiteResult g = run_suite(e, "golden");
    c.check(g.outcome == Outcome::Pass, std::string(name) + ": golden report matches");
  }
  return c;
}

Criterion structural_invariants() {
  Criterion c{4, "structural invariants on every corpus instance"};
  for (const auto& e : corpus()) {
    SuiteResult r = run_suite(e, "jz");
    std::size_t fails = 0, sizes = 0;
    for (const auto& l : r.lines) {
      if (l.rfind("FAIL", 0) == 0) {
        ++fails;
        c.notes.push_back("  " + e.name + ": " + l);
      }
      if (l.find("size identity") != std::string::npos) ++sizes;
    }
    c.check(r.outcome == Outcome::Pass, e.name + ": " + std::to_string(r.lines.size()) + " checks, " +
                                            std::to_string(sizes) + " size identities, " + std::to_string(fails) +
                                            " failures");
  }
  return c;
}

Criterion choice_independence() {
  Criterion c{5, "choice independence"};
  std::size_t designated = 0;
  for (const auto& e : corpus()) {
    if (!e.spec.in_suite("choice")) continue;
    ++designated;
    SuiteResult r = run_suite(e, "choice");
    c.check(r.outcome == Outcome::Pass, e.name + ": " + std::to_string(r.lines.size()) + " comparisons");
  }
  c.check(designated >= 3, std::to_string(designated) + " designated instances (at least 3)");
  return c;
}

Criterion edge_identity() {
  Criterion c{6, "H1 of a log surjection is the conormal module"};
  struct Case {
    const char* name;
    std::optional<std::size_t> dim;
    std::size_t rank;
  };
  for (const Case& k : {Case{"t-quotient", 2, 0}, Case{"diagonal-line", std::nullopt, 1}, Case{"point-of-line", 1, 0}}) {
    LogSurjection s(build_morphism(entry(k.name).spec));
    auto h1 = log_homology(s.f, 1, unit(s.f));
    auto cn = make_report(conormal_module(s));
    bool expected = k.dim ? (h1.k_dim == k.dim && cn.k_dim == k.dim)
                          : (free_of_rank(h1, k.rank) && free_of_rank(cn, k.rank));
    c.check(expected, std::string(k.name) + ": H1 " + summary(h1) + "; conormal " + summary(cn));
    c.check(same_proxies(h1, cn), std::string(k.name) + ": proxies agree");
  }
  return c;
}

Criterion tor_engine() {
  Criterion c{7, "Tor over the source ring"};
  auto surj = [](const std::string& rel) {
    std::string text = "[source.ring]\nvars = [x]\n" + rel + "[target.ring]\nvars = []\n[morphism]\nring_map = { x = \"0\" }\n";
    return LogSurjection(build_morphism(parse_input(text)));
  };
  LogSurjection dual = surj("relations = [\"x^2\"]\n"), line = surj("");
  std::vector<std::size_t> ones{1, 1, 1, 1, 1}, koszul{1, 1, 0, 0, 0};
  std::string a, b;
  bool ok_a = true, ok_b = true;
  for (int n = 0; n <= 4; ++n) {
    auto ta = tor_over_c(dual, n), tb = tor_over_c(line, n);
    ok_a = ok_a && ta.k_dim == std::optional<std::size_t>(ones[static_cast<std::size_t>(n)]);
    ok_b = ok_b && (koszul[static_cast<std::size_t>(n)] ? tb.k_dim == std::optional<std::size_t>(1) : tb.is_zero());
    a += (n ? ", " : "") + (ta.is_zero() ? std::string("0") : ta.k_dim_string());
    b += (n ? ", " : "") + (tb.is_zero() ? std::string("0") : tb.k_dim_string());
  }
  c.check(ok_a, "Tor_n over k[x]/(x^2) of (k, k), n = 0..4: (" + a + ")");
  c.check(ok_b, "Tor_n over k[x] of (k, k), n = 0..4: (" + b + ")");
  return c;
}

Criterion w_terms_check() {
  Criterion c{8, "W-terms"};
  LogSurjection strict(build_morphism(entry("t-quotient").spec));
  bool zero = true;
  for (int n = 0; n <= 3; ++n) zero = zero && w_terms(strict, n).is_zero();
  c.check(zero, "strict surjection: W_n = 0 for n = 0..3");
  LogSurjection line(build_morphism(entry("diagonal-line").spec));
  c.check(free_of_rank(w_terms(line, 1), 1) && w_terms(line, 2).is_zero(), "free kernel: W1 = B, W2 = 0");
  const std::string tors = R"(
[source.ring]
vars = []
[source.monoid]
gens = [a, b]
relations = [[[2, 0], [0, 2]]]
alpha = { a = "0", b = "0" }
[target.ring]
vars = []
[target.monoid]
gens = [n]
alpha = { n = "0" }
[morphism]
monoid_map = { a = [1], b = [1] }
)";
  for (Field k : {Field::rationals(), Field::prime(2)}) {
    LogSurjection s(build_morphism(parse_input(tors), k));
    bool two = k.characteristic() == 2;
    auto w1 = w_terms(s, 1), w2 = w_terms(s, 2);
    bool ok = two ? (w1.k_dim == std::optional<std::size_t>(1) && w2.k_dim == std::optional<std::size_t>(1))
                  : (w1.is_zero() && w2.is_zero());
    c.check(ok, "Z/2 kernel over " + k.name() + ": W1 " + summary(w1) + ", W2 " + summary(w2));
  }
  return c;
}

// ---------------------------------------------------------------------------

std::size_t standard_monomials(const std::vector<Poly>& gb, std::size_t nv, long d) {
  std::size_t n = 0;
  for (const auto& m : oracle::monomials(nv, std::vector<long>(nv, 1), d)) {
    bool divisible = false;
    for (const auto& g : gb) {
      const Exponent& l = g.lead().mono;
      bool div = true;
      for (std::size_t i = 0; i < nv; ++i) div = div && l[i] <= m[i];
      divisible = divisible || div;
    }
    if (!divisible) ++n;
  }
  return n;
}

Criterion groebner_soundness() {
  Criterion c{9, "Groebner, syzygy and Smith form soundness"};
  struct Ideal {
    Field k;
    std::vector<std::string> vars, gens;
  };
  std::vector<Ideal> ideals{
      {Field::rationals(), {"x", "y", "z"}, {"x^2 - y*z", "x*y - z^2"}},
      {Field::rationals(), {"x", "y", "z", "w"}, {"x*z - y^2", "x*w - y*z", "y*w - z^2"}},
      {Field::rationals(), {"x", "y", "z"}, {"x^3", "y^3", "x*y*z"}},
      {Field::rationals(), {"x", "y", "z"}, {"x^2 + y^2 + z^2", "x*y*z"}},
      {Field::rationals(), {"x", "y", "z"}, {"x*y", "y*z", "z*x"}},
      {Field::prime(2), {"x", "y", "z"}, {"x^2 + y*z", "y^2 + x*z", "x*y"}},
  };
  std::mt19937 rng(5);
  for (std::size_t t = 0; t < ideals.size(); ++t) {
    const Ideal& id = ideals[t];
    PolyRing r(id.k, id.vars);
    std::vector<Poly> gens;
    std::vector<long> degs;
    for (const auto& g : id.gens) {
      gens.push_back(parse_poly(r, g));
      degs.push_back(*PolyRing::homogeneous_degree(gens.back(), std::vector<long>(r.nvars(), 1)));
    }
    std::vector<Poly> gb = groebner_basis(r, gens, true);
    AlgebraPtr free = PresentedAlgebra::make(id.k, id.vars);
    oracle::Spec quotient{free, 1, {}, {0}};
    for (const auto& g : gens) quotient.rels.push_back({g});
    bool dims = true, members = true;
    std::size_t outside = 0, tried = 0;
    for (long d = 0; d <= kOracleDegree; ++d) {
      oracle::Piece p(quotient, d, 0);
      dims = dims && p.dim() == standard_monomials(gb, r.nvars(), d);
      // Elements of I_d plus, half the time, one extra monomial.
      auto mons = oracle::monomials(r.nvars(), std::vector<long>(r.nvars(), 1), d);
      if (mons.empty()) continue;
      for (int trial = 0; trial < 4; ++trial) {
        Poly f;
        for (std::size_t j = 0; j < gens.size(); ++j)
          for (const auto& m : oracle::monomials(r.nvars(), std::vector<long>(r.nvars(), 1), d - degs[j]))
            if (rng() % 3 == 0) f = r.add(f, r.mul_term(gens[j], m, Rational(static_cast<long>(rng() % 5) - 2)));
        if (trial % 2) f = r.add(f, r.monomial(mons[rng() % mons.size()]));
        bool gb_member = reduce(r, f, gb).is_zero();
        bool oracle_member = p.rank_modulo_relations({p.coordinates({f})}) == 0;
        members = members && gb_member == oracle_member;
        ++tried;
        if (!oracle_member) ++outside;
      }
    }
    c.check(dims, "ideal " + std::to_string(t + 1) + ": dim I_d by oracle = monomials minus standard monomials, d <= " +
                      std::to_string(kOracleDegree));
    c.check(members && outside > 0 && outside < tried, "ideal " + std::to_string(t + 1) + ": membership agrees on " +
                                                           std::to_string(tried) + " random elements, " +
                                                           std::to_string(outside) + " outside the ideal");

    std::vector<Column> cols;
    for (const auto& g : gens) cols.push_back({g});
    std::vector<Column> syz = syzygies(free, 1, cols);
    bool sound = true, complete = true;
    for (const auto& z : syz) {
      Poly s;
      for (std::size_t j = 0; j < z.size(); ++j) s = r.add(s, r.mul(z[j], gens[j]));
      sound = sound && s.is_zero();
    }
    for (long d = 0; d <= kOracleDegree; ++d) {
      auto [kernel_dim, span] = oracle::syzygy_check(free, degs, {0}, cols, {}, syz, d);
      complete = complete && kernel_dim == span;
    }
    c.check(sound && complete, "ideal " + std::to_string(t + 1) + ": " + std::to_string(syz.size()) +
                                   " syzygies, sound and complete through degree " + std::to_string(kOracleDegree));
  }

  std::mt19937 mrng(20221005);
  std::uniform_int_distribution<int> dim(1, 5), entry_dist(-9, 9);
  std::size_t good = 0;
  for (int trial = 0; trial < 100; ++trial) {
    IntMatrix a(static_cast<std::size_t>(dim(mrng)), static_cast<std::size_t>(dim(mrng)));
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = entry_dist(mrng);
    SnfResult s = snf(a);
    bool ok = s.u * a * s.v == s.d && s.u * s.u_inv == IntMatrix::identity(a.rows()) &&
              s.v * s.v_inv == IntMatrix::identity(a.cols());
    for (std::size_t i = 0; i < s.d.rows(); ++i)
      for (std::size_t j = 0; j < s.d.cols(); ++j)
        if (i != j) ok = ok && s.d(i, j) == 0;
    for (std::size_t k = 0; k < s.invariant_factors.size(); ++k) {
      ok = ok && s.invariant_factors[k] > 0 && s.d(k, k) == s.invariant_factors[k];
      if (k) ok = ok && s.invariant_factors[k] % s.invariant_factors[k - 1] == 0;
    }
    if (ok) ++good;
  }
  c.check(good == 100, "Smith form: U A V = D, U and V invertible, d_k | d_k+1 on " + std::to_string(good) +
                           " of 100 random matrices");
  return c;
}

}  // namespace

int main() {
  auto start = std::chrono::steady_clock::now();
  std::vector<Criterion (*)()> all{monoid_complex_closed_forms, strict_reduction, worked_examples,
                                   structural_invariants,       choice_independence, edge_identity,
                                   tor_engine,                  w_terms_check,       groebner_soundness};
  std::vector<Criterion> results;
  for (auto* fn : all) {
    try {
      results.push_back(fn());
    } catch (const std::exception& e) {
      Criterion c{static_cast<int>(results.size()) + 1, "aborted"};
      c.check(false, std::string("exception: ") + e.what());
      results.push_back(c);
    }
  }
  bool all_pass = true;
  for (const auto& c : results) {
    for (const auto& n : c.notes) std::cout << "    " << n << "\n";
    std::cout << (c.pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << "\n";
    all_pass = all_pass && c.pass;
  }
  std::cout << "total time " << seconds_string(seconds_since(start)) << "\n";
  return all_pass ? 0 : 1;
}
