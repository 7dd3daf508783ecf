#include <gtest/gtest.h>

#include "liecrown/corpus.hpp"
#include "liecrown/crowns.hpp"

using namespace liecrown;

namespace {

RationalField Q;
using QL = LieAlgebra<RationalField>;

QL alg(const std::string& name) { return builtin(name, Q); }
template <class F>
Subspace<F> sp(const LieAlgebra<F>& l, const std::string& e) {
  return parse_span(l, e);
}

template <class F>
const Crown<F>* find_crown(const std::vector<Crown<F>>& ks, const Subspace<F>& c, const Subspace<F>& r) {
  for (const auto& k : ks)
    if (k.c == c && k.r == r) return &k;
  return nullptr;
}

}  // namespace

TEST(Precrowns, HeisTopFactor) {
  auto l = alg("heis");
  auto f = classify_factor(l, sp(l, "<y,z>"), sp(l, "<z>"));
  auto fam = precrowns_of_factor(l, f);
  EXPECT_EQ(fam.numerator, l.whole());
  EXPECT_EQ(fam.intersection, sp(l, "<z>"));
  EXPECT_EQ(fam.homs.size(), 1u);
  // each member x + c y, z of the family is a denominator; two of them already meet in <z>
  PrimeField f3(3);
  auto g = builtin("heis", f3);
  auto gf = classify_factor(g, sp(g, "<y,z>"), sp(g, "<z>"));
  auto gfam = precrowns_of_factor(g, gf);
  Subspace<PrimeField> inter = g.whole();
  for (std::uint32_t t = 0; t < 3; ++t) {
    auto n = precrown_denominator(g, gf, gfam, {f3.element(t)});
    EXPECT_TRUE(is_ideal(g, n));
    EXPECT_EQ(subspace_intersect(n, gf.a), gf.b);
    EXPECT_TRUE(subspace_sum(n, gf.a).is_full());
    inter = subspace_intersect(inter, n);
  }
  EXPECT_EQ(inter, gfam.intersection);
}

TEST(Precrowns, Ex22WeightMismatch) {
  auto l = alg("ex22");
  auto f = classify_factor(l, sp(l, "<a>"), l.zero_space());
  auto fam = precrowns_of_factor(l, f);
  EXPECT_TRUE(fam.homs.empty());
  EXPECT_EQ(fam.base, sp(l, "<b,c>"));
  EXPECT_EQ(fam.intersection, sp(l, "<b,c>"));
}

TEST(Precrowns, Sl2PlusSl2Nonabelian) {
  auto l = alg("sl2_plus_sl2");
  auto f = classify_factor(l, sp(l, "<e1,h1,f1>"), l.zero_space());
  auto fam = precrowns_of_factor(l, f);
  EXPECT_FALSE(fam.abelian);
  EXPECT_EQ(fam.numerator, l.whole());
  EXPECT_EQ(fam.base, sp(l, "<e2,h2,f2>"));
}

TEST(Precrowns, FrattiniFactorRejected) {
  auto l = alg("heis");
  auto f = classify_factor(l, sp(l, "<z>"), l.zero_space());
  EXPECT_THROW(precrowns_of_factor(l, f), PreconditionError);
}

TEST(Crowns, Examples) {
  auto h = alg("heis");
  auto kh = all_crowns(h);
  ASSERT_EQ(kh.size(), 1u);
  EXPECT_EQ(kh[0].c, h.whole());
  EXPECT_EQ(kh[0].r, sp(h, "<z>"));
  EXPECT_EQ(kh[0].rank, 2u);

  auto e = alg("ex22");
  auto ke = all_crowns(e);
  ASSERT_EQ(ke.size(), 3u);
  EXPECT_TRUE(find_crown(ke, sp(e, "<a,b,c>"), sp(e, "<b,c>")));
  EXPECT_TRUE(find_crown(ke, sp(e, "<a,b,c>"), sp(e, "<a>")));
  EXPECT_TRUE(find_crown(ke, e.whole(), sp(e, "<a,b,c>")));

  auto s = alg("sl2_plus_sl2");
  auto ks = all_crowns(s);
  ASSERT_EQ(ks.size(), 1u);
  EXPECT_EQ(ks[0].c, s.whole());
  EXPECT_TRUE(ks[0].r.is_zero());
  EXPECT_EQ(ks[0].rank, 2u);

  auto r = alg("r2");
  auto kr = all_crowns(r);
  ASSERT_EQ(kr.size(), 2u);
  EXPECT_TRUE(find_crown(kr, sp(r, "<y>"), r.zero_space()));
  EXPECT_TRUE(find_crown(kr, r.whole(), sp(r, "<y>")));
}

TEST(Crowns, FixtureFacts) {
  for (const auto& name : corpus_names()) {
    auto l = alg(name);
    auto ks = all_crowns(l);
    for (const auto& fact : fixture_facts(name)) {
      if (fact.kind != "crown") continue;
      auto bar1 = fact.expected.find('|'), bar2 = fact.expected.rfind('|');
      auto c = parse_span(l, fact.expected.substr(0, bar1));
      auto r = parse_span(l, fact.expected.substr(bar1 + 1, bar2 - bar1 - 1));
      auto rank = std::stoul(fact.expected.substr(bar2 + 1));
      auto* k = find_crown(ks, c, r);
      ASSERT_TRUE(k) << name << " " << fact.expected;
      EXPECT_EQ(k->rank, rank) << name;
    }
  }
}

TEST(Crowns, SameClassSameCrown) {
  for (const auto& name : corpus_names()) {
    auto l = alg(name);
    auto s = chief_series(l);
    for (const auto& f : s.factors)
      for (const auto& g : s.factors) {
        if (!f.supplemented || !g.supplemented) continue;
        auto kf = crown_of_factor(l, s, f), kg = crown_of_factor(l, s, g);
        bool same = kf.c == kg.c && kf.r == kg.r;
        EXPECT_EQ(same, l_connected(l, f, g).value) << name;
      }
  }
}

TEST(Crowns, DenominatorMatchesOracle) {
  PrimeField f3(3);
  for (const auto& name : {"r2", "heis", "ex22", "h3_plus_r2", "ab(2)"}) {
    auto l = builtin(name, f3);
    auto st = oracle::enum_structures(l);
    auto s = chief_series(l);
    for (const auto& f : s.factors) {
      if (!f.supplemented) continue;
      auto k = crown_of_factor(l, s, f);
      auto bf = oracle::crown_intersections(l, st, {f.a, f.b});
      EXPECT_EQ(k.r, bf.j) << name;
      EXPECT_EQ(k.r, bf.j3) << name;
      // the crown quotient is Frattini free
      auto q = quotient_algebra(l, k.r);
      EXPECT_TRUE(oracle::frattini_objects(q.algebra).frattini_ideal.is_zero()) << name;
    }
  }
}

TEST(Crowns, RadicalFromNonabelianCrowns) {
  for (const auto& name : {"sl2", "gl2", "aff_sl2", "sl2_plus_sl2"}) {
    auto l = alg(name);
    auto ks = all_crowns(l);
    auto inter = nonabelian_crown_denominators(ks);
    ASSERT_TRUE(inter) << name;
    EXPECT_EQ(*inter, solvable_radical(l).radical) << name;
  }
}

TEST(CrownComplement, Examples) {
  auto r = alg("r2");
  auto kr = all_crowns(r);
  auto* k1 = find_crown(kr, sp(r, "<y>"), r.zero_space());
  auto* k2 = find_crown(kr, r.whole(), sp(r, "<y>"));
  EXPECT_EQ(crown_complement(r, *k1), sp(r, "<x>"));
  EXPECT_EQ(crown_complement(r, *k2), sp(r, "<y>"));
  auto h = alg("heis");
  EXPECT_EQ(crown_complement(h, all_crowns(h)[0]), sp(h, "<z>"));
  auto s = alg("sl2");
  EXPECT_THROW(crown_complement(s, all_crowns(s)[0]), PreconditionError);
}

TEST(CrownComplement, Conjugator) {
  auto r = alg("r2");
  auto kr = all_crowns(r);
  auto* k = find_crown(kr, sp(r, "<y>"), r.zero_space());
  auto a = complement_conjugator(r, *k, sp(r, "<x>"), sp(r, "<x-y>"));
  EXPECT_EQ(a, r.basis_vector(1));
  EXPECT_TRUE(is_zero_vector(complement_conjugator(r, *k, sp(r, "<x>"), sp(r, "<x>"))));
  auto h = alg("heis");
  auto kh = all_crowns(h)[0];
  EXPECT_TRUE(is_zero_vector(complement_conjugator(h, kh, sp(h, "<z>"), sp(h, "<z>"))));
  EXPECT_THROW(complement_conjugator(r, *k, sp(r, "<y>"), sp(r, "<x>")), PreconditionError);
}

TEST(CrownComplement, AllComplementsConjugateOverGF3) {
  PrimeField f3(3);
  for (const auto& name : {"r2", "heis", "ex22", "h3_plus_r2"}) {
    auto l = builtin(name, f3);
    for (const auto& k : all_crowns(l)) {
      auto comps = all_crown_complements(l, k);
      for (const auto& c : comps) {
        EXPECT_TRUE(is_subalgebra(l, c));
        EXPECT_NO_THROW(complement_conjugator(l, k, comps[0], c)) << name;
      }
    }
  }
}

TEST(Prefrattini, Examples) {
  auto r = alg("r2");
  EXPECT_TRUE(prefrattini(r).subalgebra.is_zero());
  auto h = alg("heis");
  EXPECT_EQ(prefrattini(h).subalgebra, sp(h, "<z>"));
  auto a = alg("ab(1)");
  EXPECT_TRUE(prefrattini(a).subalgebra.is_zero());
}

TEST(Prefrattini, MatchesOracleOverSmallFields) {
  for (unsigned p : {2u, 3u}) {
    PrimeField fp(p);
    for (const auto& name : {"r2", "heis", "ab(2)", "ab(3)", "h3_plus_r2", "ex22"}) {
      if (!builtin_compatible(name, p)) continue;
      auto l = builtin(name, fp);
      auto st = oracle::enum_structures(l);
      auto s = chief_series(l);
      auto bf = oracle::prefrattini_bf(l, st, s.chain);
      // every intersection of one complement per crown
      auto ks = all_crowns(l, s);
      std::vector<Subspace<PrimeField>> mine{l.whole()};
      for (const auto& k : ks) {
        std::vector<Subspace<PrimeField>> next;
        for (const auto& x : mine)
          for (const auto& c : all_crown_complements(l, k)) next.push_back(subspace_intersect(x, c));
        oracle::sort_unique(next);
        mine = std::move(next);
      }
      EXPECT_EQ(mine, bf.subalgebras) << name << " over GF(" << p << ")";
      auto phi = oracle::frattini_objects(l, st).frattini_ideal;
      for (const auto& x : mine) EXPECT_TRUE(x.contains(phi)) << name;
    }
  }
}

TEST(CoverAvoid, Examples) {
  auto r = alg("r2");
  auto s = chief_series(r);
  auto kr = all_crowns(r, s);
  auto* k = find_crown(kr, sp(r, "<y>"), r.zero_space());
  auto prof = cover_avoid_profile(r, *k, sp(r, "<x>"), s);
  ASSERT_EQ(prof.size(), 2u);
  EXPECT_EQ(prof[0], CoverAvoid::Avoids);
  EXPECT_EQ(prof[1], CoverAvoid::Covers);

  auto h = alg("heis");
  auto sh = chief_series(h);
  auto kh = all_crowns(h, sh)[0];
  auto ph = cover_avoid_profile(h, kh, sp(h, "<z>"), sh);
  EXPECT_EQ(ph[0], CoverAvoid::Covers);
  EXPECT_EQ(ph[1], CoverAvoid::Avoids);
  EXPECT_EQ(ph[2], CoverAvoid::Avoids);

  auto a = alg("ab(1)");
  auto sa = chief_series(a);
  auto ka = all_crowns(a, sa)[0];
  EXPECT_EQ(cover_avoid_profile(a, ka, a.zero_space(), sa)[0], CoverAvoid::Avoids);
}

TEST(CoverAvoid, EveryComplementOverGF3) {
  PrimeField f3(3);
  for (const auto& name : {"r2", "heis", "ex22", "h3_plus_r2", "ab(3)"}) {
    auto l = builtin(name, f3);
    for (const auto& s : chief_series_variants(l, 4))
      for (const auto& k : all_crowns(l, s))
        for (const auto& c : all_crown_complements(l, k)) EXPECT_NO_THROW(cover_avoid_profile(l, k, c, s)) << name;
  }
}
