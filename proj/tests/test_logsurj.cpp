#include "logaq/io/poly_parser.hpp"
#include "logaq/logsurj.hpp"

#include <gtest/gtest.h>

using namespace logaq;
using io::parse_poly;

namespace {

Field Q = Field::rationals();

AlgebraPtr algebra(Field f, std::vector<std::string> vars, std::vector<std::string> rels = {}) {
  PolyRing r(f, vars);
  std::vector<Poly> gens;
  for (const auto& t : rels) gens.push_back(parse_poly(r, t));
  return PresentedAlgebra::make(f, vars, gens);
}

PrelogRing prelog(const AlgebraPtr& a, FpMonoid m, std::vector<std::string> alpha) {
  std::vector<Poly> al;
  for (const auto& t : alpha) al.push_back(parse_poly(a->ring(), t));
  return PrelogRing(a, std::move(m), al);
}

LogSurjection surjection(const PrelogRing& s, const PrelogRing& t, std::vector<std::string> ring_images,
                         std::vector<Exponent> monoid_images) {
  std::vector<Poly> im;
  for (const auto& x : ring_images) im.push_back(parse_poly(t.algebra->ring(), x));
  return LogSurjection(PrelogMorphism(s, t, im, MonoidHom(s.monoid, t.monoid, std::move(monoid_images))));
}

LogSurjection strict_hypersurface() {
  auto c = algebra(Q, {"x"});
  auto b = algebra(Q, {"x"}, {"x^2"});
  return surjection(prelog(c, FpMonoid({"n"}), {"x"}), prelog(b, FpMonoid({"n"}), {"x"}), {"x"}, {{1}});
}

LogSurjection diagonal_line(Field k = Q) {
  auto c = algebra(k, {"u", "v"});
  auto b = algebra(k, {"t"});
  return surjection(prelog(c, FpMonoid({"p", "q"}), {"u", "v"}), prelog(b, FpMonoid({"n"}), {"t"}), {"t", "t"},
                    {{1}, {1}});
}

LogSurjection point_of_line() {
  auto c = algebra(Q, {"x"});
  auto b = algebra(Q, {});
  return surjection(prelog(c, FpMonoid({"n"}), {"x"}), prelog(b, FpMonoid({"n"}), {"0"}), {"0"}, {{1}});
}

std::optional<std::size_t> dim_of(const HomologyReport& r) { return r.k_dim; }

}  // namespace

TEST(Surjection, Validation) {
  auto c = algebra(Q, {"x"});
  auto b = algebra(Q, {"t"});
  PrelogMorphism not_onto(prelog(c, FpMonoid{}, {}), prelog(b, FpMonoid{}, {}), {parse_poly(b->ring(), "t^2")},
                          MonoidHom(FpMonoid{}, FpMonoid{}, {}));
  EXPECT_THROW(LogSurjection{not_onto}, std::invalid_argument);
  auto k = algebra(Q, {});
  PrelogMorphism no_monoid(prelog(k, FpMonoid{}, {}), prelog(k, FpMonoid({"n"}), {"0"}), {},
                           MonoidHom(FpMonoid{}, FpMonoid({"n"}), {}));
  EXPECT_THROW(LogSurjection{no_monoid}, std::invalid_argument);
  EXPECT_NO_THROW(diagonal_line());
}

TEST(Surjection, TorOverPolynomialRing) {
  auto c = algebra(Q, {"x"});
  auto b = algebra(Q, {}, {});
  LogSurjection s = surjection(prelog(c, FpMonoid{}, {}), prelog(b, FpMonoid{}, {}), {"0"}, {});
  std::vector<std::size_t> expected{1, 1, 0, 0, 0};
  for (int n = 0; n <= 4; ++n) EXPECT_EQ(dim_of(tor_over_c(s, n)), expected[n]) << n;
}

TEST(Surjection, TorOverDualNumbersIsPeriodic) {
  for (Field k : {Q, Field::prime(2)}) {
    auto c = algebra(k, {"x"}, {"x^2"});
    auto b = algebra(k, {});
    LogSurjection s = surjection(prelog(c, FpMonoid{}, {}), prelog(b, FpMonoid{}, {}), {"0"}, {});
    for (int n = 0; n <= 4; ++n) EXPECT_EQ(dim_of(tor_over_c(s, n)), std::optional<std::size_t>(1)) << n;
  }
}

TEST(Surjection, TorOfIdentity) {
  auto c = algebra(Q, {"x"}, {"x^3"});
  LogSurjection s = surjection(prelog(c, FpMonoid{}, {}), prelog(c, FpMonoid{}, {}), {"x"}, {});
  EXPECT_EQ(dim_of(tor_over_c(s, 0)), std::optional<std::size_t>(3));
  for (int n = 1; n <= 4; ++n) EXPECT_TRUE(tor_over_c(s, n).is_zero());
}

TEST(Surjection, TorOfCompleteIntersectionIsExterior) {
  // C = k[x, y], B = k: Koszul gives 1, 2, 1.
  auto c = algebra(Q, {"x", "y"});
  auto b = algebra(Q, {});
  LogSurjection s = surjection(prelog(c, FpMonoid{}, {}), prelog(b, FpMonoid{}, {}), {"0", "0"}, {});
  std::vector<std::size_t> expected{1, 2, 1, 0, 0};
  for (int n = 0; n <= 4; ++n) EXPECT_EQ(dim_of(tor_over_c(s, n)), expected[n]) << n;
}

TEST(Surjection, WTerms) {
  LogSurjection strict = strict_hypersurface();
  for (int n = 0; n <= 3; ++n) EXPECT_TRUE(w_terms(strict, n).is_zero());

  LogSurjection sum = diagonal_line();
  auto w1 = w_terms(sum, 1);
  EXPECT_EQ(w1.n_gens, 1u);
  EXPECT_TRUE(w1.relations.empty());
  EXPECT_TRUE(w_terms(sum, 2).is_zero());

  FpMonoid tors({"a", "b"}, {{{2, 0}, {0, 2}}});
  for (Field k : {Q, Field::prime(2)}) {
    auto c = algebra(k, {});
    LogSurjection s = surjection(prelog(c, tors, {"0", "0"}), prelog(c, FpMonoid({"n"}), {"0"}), {}, {{1}, {1}});
    bool char2 = k.characteristic() == 2;
    for (int n : {1, 2}) {
      auto w = w_terms(s, n);
      EXPECT_EQ(w.k_dim, std::optional<std::size_t>(char2 ? 1 : 0)) << n;
    }
    EXPECT_TRUE(w_terms(s, 3).is_zero());
  }
}

TEST(Surjection, ConormalModules) {
  auto strict = make_report(conormal_module(strict_hypersurface()));
  EXPECT_EQ(strict.k_dim, std::optional<std::size_t>(2));

  auto line = make_report(conormal_module(diagonal_line()));
  EXPECT_FALSE(line.k_dim.has_value());
  EXPECT_EQ(line.n_gens, 1u);
  EXPECT_TRUE(line.relations.empty());
  ASSERT_TRUE(line.hilbert.has_value());
  EXPECT_EQ(line.hilbert->to_string(), "(1)/(1-s)");

  EXPECT_EQ(make_report(conormal_module(point_of_line())).k_dim, std::optional<std::size_t>(1));
}

TEST(Surjection, EdgeIdentity) {
  for (const auto& s : {strict_hypersurface(), diagonal_line(), point_of_line(), diagonal_line(Field::prime(3))}) {
    CheckReport r = check_edge_identity(s);
    for (const auto& [what, ok] : r.items) EXPECT_TRUE(ok) << what;
  }
}

TEST(Surjection, StrictConormalIsTorOne) {
  // With Q = N the conormal module is a/a^2 = Tor_1^C(B, B).
  for (const auto& s : {strict_hypersurface(), point_of_line()})
    EXPECT_TRUE(same_proxies(make_report(conormal_module(s)), tor_over_c(s, 1)));
}
