#include "logaq/groebner.hpp"
#include "logaq/io/poly_parser.hpp"

#include <gtest/gtest.h>

using namespace logaq;
using io::parse_poly;

namespace {

std::vector<Poly> polys(const PolyRing& r, std::initializer_list<const char*> texts) {
  std::vector<Poly> out;
  for (auto t : texts) out.push_back(parse_poly(r, t));
  return out;
}

}  // namespace

TEST(PolyParser, RoundTripsCanonicalPrinting) {
  PolyRing r(Field::rationals(), {"x", "y", "z"});
  Poly p = parse_poly(r, " 3/2*x^2*y - (y - z)^2 + 7");
  Poly q = parse_poly(r, r.to_string(p));
  EXPECT_EQ(p, q);
  EXPECT_EQ(r.to_string(parse_poly(r, "x*y - z^2")), "1*x*y - 1*z^2");
  EXPECT_THROW(parse_poly(r, "x + w"), io::PolyParseError);
  EXPECT_THROW(parse_poly(r, "x +"), io::PolyParseError);
}

TEST(Buchberger, VariablesAreAlreadyABasis) {
  PolyRing r(Field::rationals(), {"x", "y"});
  auto gb = groebner_basis(r, polys(r, {"x", "y"}), true);
  EXPECT_EQ(gb, polys(r, {"x", "y"}));
}

TEST(Buchberger, LexExample) {
  PolyRing r(Field::rationals(), {"x", "y"}, MonomialOrder::lex());
  auto gb = groebner_basis(r, polys(r, {"x^2 - y", "x*y - 1"}), true);
  EXPECT_EQ(gb, polys(r, {"x - y^2", "y^3 - 1"}));
}

TEST(Buchberger, ZeroIdeal) {
  PolyRing r(Field::rationals(), {"x"});
  EXPECT_TRUE(groebner_basis(r, {r.zero()}, true).empty());
}

TEST(Buchberger, RecomputationIsIdentical) {
  PolyRing r(Field::prime(3), {"a", "b", "c"});
  auto gens = polys(r, {"a*b - c^2", "a^2 - b*c", "b^3 - a*c^2 + 1"});
  EXPECT_EQ(groebner_basis(r, gens, true), groebner_basis(r, gens, true));
}

TEST(NormalForm, Examples) {
  auto a = PresentedAlgebra::make(Field::rationals(), {"x", "y"}, {});
  auto a1 = PresentedAlgebra::make(Field::rationals(), {"x", "y"}, polys(a->ring(), {"x^2 - y"}));
  EXPECT_EQ(a1->normal_form(parse_poly(a1->ring(), "x^2")), parse_poly(a1->ring(), "y"));
  auto a2 = PresentedAlgebra::make(Field::rationals(), {"x"}, polys(PolyRing(Field::rationals(), {"x"}), {"x"}));
  EXPECT_TRUE(a2->normal_form(parse_poly(a2->ring(), "x")).is_zero());
  // Declared order z > y > x: z^2 leads xy - z^2 under degrevlex, so z^2 -> xy.
  PolyRing zyx(Field::rationals(), {"z", "y", "x"});
  auto a3 = PresentedAlgebra::make(Field::rationals(), {"z", "y", "x"}, polys(zyx, {"x*y - z^2"}));
  EXPECT_EQ(a3->normal_form(parse_poly(zyx, "z^2")), parse_poly(zyx, "x*y"));
  // Idempotent.
  Poly p = parse_poly(zyx, "z^5 + z*y*x");
  EXPECT_EQ(a3->normal_form(a3->normal_form(p)), a3->normal_form(p));
}

TEST(AlgebraMapKernel, Examples) {
  Field q = Field::rationals();
  auto uv = PresentedAlgebra::make(q, {"u", "v"});
  auto t = PresentedAlgebra::make(q, {"t"});
  AlgebraMap f{uv, t, polys(t->ring(), {"t", "t"})};
  auto k = algebra_map_kernel(f);
  EXPECT_EQ(k.generators, polys(uv->ring(), {"u - v"}));

  AlgebraMap id{uv, uv, polys(uv->ring(), {"u", "v"})};
  EXPECT_TRUE(algebra_map_kernel(id).generators.empty());

  auto x = PresentedAlgebra::make(q, {"x"});
  auto k0 = PresentedAlgebra::make(q, {});
  AlgebraMap to_point{x, k0, {k0->ring().zero()}};
  EXPECT_EQ(algebra_map_kernel(to_point).generators, polys(x->ring(), {"x"}));

  // Elements of the kernel map to zero.
  auto abc = PresentedAlgebra::make(q, {"a", "b", "c"});
  auto st = PresentedAlgebra::make(q, {"s", "t"});
  AlgebraMap toric{abc, st, polys(st->ring(), {"s^2", "s*t", "t^2"})};
  auto kt = algebra_map_kernel(toric);
  EXPECT_EQ(kt.generators, polys(abc->ring(), {"b^2 - a*c"}));
  for (const auto& g : kt.generators) EXPECT_TRUE(toric.apply(g).is_zero());
}

TEST(SubmoduleGB, SyzygiesAndLifts) {
  Field q = Field::rationals();
  auto a = PresentedAlgebra::make(q, {"x", "y"});
  const PolyRing& r = a->ring();
  SubmoduleGB s(a, 1, {{parse_poly(r, "x")}, {parse_poly(r, "y")}});
  auto syz = s.syzygies();
  ASSERT_EQ(syz.size(), 1u);
  // Koszul syzygy up to sign.
  EXPECT_TRUE((syz[0][0] == parse_poly(r, "y") && syz[0][1] == parse_poly(r, "-x")) ||
              (syz[0][0] == parse_poly(r, "-y") && syz[0][1] == parse_poly(r, "x")));
  auto c = s.lift({parse_poly(r, "x^2 + 3*y")});
  ASSERT_TRUE(c);
  EXPECT_EQ(r.add(r.mul((*c)[0], parse_poly(r, "x")), r.mul((*c)[1], parse_poly(r, "y"))),
            parse_poly(r, "x^2 + 3*y"));
  EXPECT_FALSE(s.lift({parse_poly(r, "1")}));

  SubmoduleGB s2(a, 1, {{parse_poly(r, "x^2")}, {parse_poly(r, "x*y")}});
  auto syz2 = s2.syzygies();
  ASSERT_EQ(syz2.size(), 1u);
  EXPECT_TRUE(syz2[0][0] == parse_poly(r, "y") || syz2[0][0] == parse_poly(r, "-y"));

  SubmoduleGB unit(a, 1, {{parse_poly(r, "1")}});
  EXPECT_TRUE(unit.syzygies().empty());
}

TEST(SubmoduleGB, QuotientRingSyzygies) {
  Field q = Field::rationals();
  PolyRing r(q, {"x"});
  auto a = PresentedAlgebra::make(q, {"x"}, {parse_poly(r, "x^2")});
  SubmoduleGB s(a, 1, {{parse_poly(r, "x")}});
  auto syz = s.syzygies();
  ASSERT_EQ(syz.size(), 1u);
  EXPECT_EQ(syz[0][0], parse_poly(r, "x"));
}

TEST(Schreyer, SyzygiesOfBinomialBasisAreIntegral) {
  PolyRing r(Field::rationals(), {"a", "b", "c"});
  auto gb = groebner_basis(r, polys(r, {"a*c - b^2", "a^2 - b*c", "b*a - c^2"}), true);
  auto syz = schreyer_syzygies(r, gb);
  for (const auto& col : syz) {
    Poly sum;
    for (std::size_t k = 0; k < gb.size(); ++k) {
      sum = r.add(sum, r.mul(col[k], gb[k]));
      for (const auto& t : col[k].terms) EXPECT_EQ(t.coef.get_den(), 1);
    }
    EXPECT_TRUE(sum.is_zero());
  }
}
