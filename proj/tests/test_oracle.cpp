#include <gtest/gtest.h>

#include "liecrown/corpus.hpp"
#include "liecrown/oracle.hpp"

using namespace liecrown;
using namespace liecrown::oracle;

namespace {

GFAlgebra gf(const std::string& name, unsigned p) { return builtin(name, PrimeField(p)); }
GFSpace sp(const GFAlgebra& l, const std::string& e) { return parse_span(l, e); }

bool has(const std::vector<GFSpace>& list, const GFSpace& s) {
  for (const auto& t : list)
    if (t == s) return true;
  return false;
}

}  // namespace

TEST(Enumeration, CountsMatchGaussianBinomials) {
  // 1 + 7 + 7 + 1 subspaces of GF(2)^3, 1 + 4 + 1 of GF(3)^2
  std::size_t n = 0;
  for_each_subspace(PrimeField(2), 3, [&](const GFSpace&) { ++n; });
  EXPECT_EQ(n, 16u);
  EXPECT_EQ(subspace_count(3, 2, 1000), 16u);
  n = 0;
  for_each_subspace(PrimeField(3), 2, [&](const GFSpace&) { ++n; });
  EXPECT_EQ(n, 6u);
  EXPECT_EQ(subspace_count(2, 3, 1000), 6u);
}

TEST(Enumeration, BudgetIsCheckedUpFront) {
  auto l = gf("ab(3)", 3);
  EXPECT_THROW(enum_structures(l, EnumBudget{10, 4}), BudgetExceeded);
  EXPECT_THROW(enum_structures(gf("sl2", 5)), BudgetExceeded);
}

TEST(Enumeration, HeisGF3Maximals) {
  auto l = gf("heis", 3);
  auto s = enum_structures(l);
  ASSERT_EQ(s.maximal_subalgebras.size(), 4u);
  for (const auto& m : s.maximal_subalgebras) {
    EXPECT_EQ(m.dim(), 2u);
    EXPECT_TRUE(m.contains(sp(l, "<z>")));
  }
}

TEST(Enumeration, AbelianGF2) {
  auto l = gf("ab(2)", 2);
  auto s = enum_structures(l);
  EXPECT_EQ(s.subalgebras.size(), 5u);
  EXPECT_EQ(s.ideals.size(), 5u);
  ASSERT_EQ(s.maximal_subalgebras.size(), 3u);
  for (const auto& m : s.maximal_subalgebras) EXPECT_EQ(m.dim(), 1u);
}

TEST(Enumeration, R2GF3Maximals) {
  auto l = gf("r2", 3);
  auto s = enum_structures(l);
  // every line of GF(3)^2 is a maximal subalgebra: <y> and <x+cy> for c in GF(3)
  ASSERT_EQ(s.maximal_subalgebras.size(), 4u);
  EXPECT_TRUE(has(s.maximal_subalgebras, sp(l, "<y>")));
  for (int c = 0; c < 3; ++c) {
    std::string e = c == 0 ? "<x>" : "<x+" + std::to_string(c) + "y>";
    EXPECT_TRUE(has(s.maximal_subalgebras, sp(l, e))) << e;
  }
}

TEST(Frattini, Examples) {
  auto h = gf("heis", 3);
  auto fh = frattini_objects(h);
  EXPECT_EQ(fh.frattini_subalgebra, sp(h, "<z>"));
  EXPECT_EQ(fh.frattini_ideal, sp(h, "<z>"));
  auto r = gf("r2", 3);
  EXPECT_TRUE(frattini_objects(r).frattini_subalgebra.is_zero());
  EXPECT_TRUE(frattini_objects(r).frattini_ideal.is_zero());
  auto a = gf("ab(1)", 3);
  EXPECT_TRUE(frattini_objects(a).frattini_ideal.is_zero());
  auto h3r2 = gf("h3_plus_r2", 2);
  EXPECT_EQ(frattini_objects(h3r2).frattini_ideal, sp(h3r2, "<z>"));
}

TEST(Primitive, Examples) {
  auto r = gf("r2", 3);
  auto wr = primitive_bf(r);
  EXPECT_EQ(wr.verdict, PrimitiveType::Type1);
  ASSERT_TRUE(wr.core_free_maximal);
  EXPECT_TRUE(core(r, *wr.core_free_maximal).is_zero());

  EXPECT_EQ(primitive_bf(gf("heis", 3)).verdict, PrimitiveType::NotPrimitive);

  auto s = gf("sl2", 5);
  auto ws = primitive_bf(s, EnumBudget{1000, 5});
  EXPECT_EQ(ws.verdict, PrimitiveType::Type2);
  auto st = enum_structures(s, EnumBudget{1000, 5});
  EXPECT_TRUE(has(st.maximal_subalgebras, sp(s, "<e,h>")));
  EXPECT_TRUE(core(s, sp(s, "<e,h>")).is_zero());
}

TEST(Primitive, Type3OverGF3) {
  auto l = gf("sl2_plus_sl2", 3);
  auto w = primitive_bf(l, EnumBudget{2000000, 3});
  EXPECT_EQ(w.verdict, PrimitiveType::Type3);
  ASSERT_EQ(w.minimal_ideals.size(), 2u);
  ASSERT_TRUE(w.common_complement);
  for (const auto& m : w.minimal_ideals) {
    EXPECT_TRUE(subspace_intersect(*w.common_complement, m).is_zero());
    EXPECT_TRUE(subspace_sum(*w.common_complement, m).is_full());
  }
}

TEST(Prefrattini, Examples) {
  auto r = gf("r2", 3);
  auto sr = enum_structures(r);
  auto pr = prefrattini_bf(r, sr, {r.zero_space(), sp(r, "<y>"), r.whole()});
  ASSERT_EQ(pr.subalgebras.size(), 1u);
  EXPECT_TRUE(pr.subalgebras[0].is_zero());

  auto h = gf("heis", 3);
  auto sh = enum_structures(h);
  auto ph = prefrattini_bf(h, sh, {h.zero_space(), sp(h, "<z>"), sp(h, "<y,z>"), h.whole()});
  ASSERT_EQ(ph.subalgebras.size(), 1u);
  EXPECT_EQ(ph.subalgebras[0], sp(h, "<z>"));
  EXPECT_TRUE(ph.m_sets[0].empty());

  auto a = gf("ab(2)", 2);
  auto sa = enum_structures(a);
  auto pa = prefrattini_bf(a, sa, {a.zero_space(), sp(a, "<e1>"), a.whole()});
  ASSERT_EQ(pa.subalgebras.size(), 1u);
  EXPECT_TRUE(pa.subalgebras[0].is_zero());
}

TEST(Prefrattini, IndependentOfChiefSeries) {
  auto h = gf("heis", 3);
  auto sh = enum_structures(h);
  auto p1 = prefrattini_bf(h, sh, {h.zero_space(), sp(h, "<z>"), sp(h, "<y,z>"), h.whole()});
  auto p2 = prefrattini_bf(h, sh, {h.zero_space(), sp(h, "<z>"), sp(h, "<x,z>"), h.whole()});
  EXPECT_EQ(p1.subalgebras, p2.subalgebras);
}

TEST(Connected, Sl2PlusSl2Summands) {
  auto l = gf("sl2_plus_sl2", 3);
  auto s = enum_structures(l, EnumBudget{2000000, 3});
  ChiefFactorBF f1{sp(l, "<e1,h1,f1>"), l.zero_space()};
  ChiefFactorBF f2{l.whole(), sp(l, "<e1,h1,f1>")};
  EXPECT_FALSE(l_isomorphic_bf(l, f1.a, f1.b, f2.a, f2.b));
  EXPECT_TRUE(l_connected_bf(l, s, f1, f2));
}

TEST(CrownIntersections, IntersectionsAgreeOnSolvable) {
  for (auto [name, p] : std::vector<std::pair<std::string, unsigned>>{
           {"r2", 3}, {"heis", 3}, {"ab(2)", 2}, {"h3_plus_r2", 2}, {"ex22", 3}}) {
    auto l = gf(name, p);
    auto s = enum_structures(l);
    for (const auto& f : all_chief_factors(s)) {
      bool supp = false;
      for (const auto& m : s.maximal_subalgebras) supp = supp || supplements(m, f);
      if (!supp) continue;
      auto c = crown_intersections(l, s, f);
      EXPECT_EQ(c.j, c.j1) << name;
      EXPECT_EQ(c.j, c.j2) << name;
      EXPECT_EQ(c.j, c.j3) << name;
    }
  }
}
