#include <gtest/gtest.h>

#include "liecrown/constructions.hpp"
#include "liecrown/corpus.hpp"

using namespace liecrown;

namespace {

RationalField Q;
using QL = LieAlgebra<RationalField>;

QL alg(const std::string& name) { return builtin(name, Q); }
Subspace<RationalField> sp(const QL& l, const std::string& e) { return parse_span(l, e); }

std::vector<std::vector<Vector<RationalField>>> so3_table(long c123) {
  auto v = [](long a, long b, long c) { return Vector<RationalField>{Rational(a), Rational(b), Rational(c)}; };
  std::vector<std::vector<Vector<RationalField>>> t(3, std::vector<Vector<RationalField>>(3, v(0, 0, 0)));
  t[0][1] = v(0, 0, c123);
  t[1][0] = v(0, 0, -c123);
  t[0][2] = v(0, 1, 0);
  t[2][0] = v(0, -1, 0);
  t[1][2] = v(1, 0, 0);
  t[2][1] = v(-1, 0, 0);
  return t;
}

}  // namespace

TEST(Validate, AbelianAndR2) {
  std::vector<std::vector<Vector<RationalField>>> zero(3, std::vector<Vector<RationalField>>(3, zero_vector(Q, 3)));
  EXPECT_TRUE(validate_algebra(Q, {"a", "b", "c"}, zero).is_abelian());
  EXPECT_FALSE(alg("r2").is_abelian());
}

TEST(Validate, So3TypeTableAndJacobiViolation) {
  EXPECT_NO_THROW(validate_algebra(Q, {"e1", "e2", "e3"}, so3_table(1)));
  // scaling one structure constant of this table rescales a basis vector, so it stays a Lie algebra
  EXPECT_NO_THROW(validate_algebra(Q, {"e1", "e2", "e3"}, so3_table(2)));
  // [e1,e2] = e1 + e3 with the other two brackets unchanged breaks Jacobi
  auto t = so3_table(1);
  t[0][1] = {Rational(1), Rational(0), Rational(1)};
  t[1][0] = {Rational(-1), Rational(0), Rational(-1)};
  try {
    validate_algebra(Q, {"e1", "e2", "e3"}, t);
    FAIL() << "expected JacobiViolation";
  } catch (const JacobiViolation& e) {
    EXPECT_EQ(e.i, 0u);
    EXPECT_EQ(e.j, 1u);
    EXPECT_EQ(e.k, 2u);
  }
}

TEST(Validate, AntisymmetryViolation) {
  auto t = so3_table(1);
  t[1][1] = {Rational(1), Rational(0), Rational(0)};
  EXPECT_THROW(validate_algebra(Q, {"e1", "e2", "e3"}, t), AntisymmetryViolation);
  t = so3_table(1);
  t[1][0] = {Rational(0), Rational(0), Rational(1)};
  EXPECT_THROW(validate_algebra(Q, {"e1", "e2", "e3"}, t), AntisymmetryViolation);
}

TEST(BracketSpaces, Examples) {
  auto h = alg("heis");
  EXPECT_EQ(bracket_spaces(h, sp(h, "<x>"), sp(h, "<y>")), sp(h, "<z>"));
  EXPECT_TRUE(bracket_spaces(h, h.whole(), h.zero_space()).is_zero());
  auto s = alg("sl2");
  EXPECT_TRUE(bracket_spaces(s, s.whole(), s.whole()).is_full());
}

TEST(BracketSpaces, SymmetricOnCorpus) {
  for (const auto& name : corpus_names()) {
    auto l = alg(name);
    std::vector<Subspace<RationalField>> subs{l.zero_space(), l.whole()};
    for (std::size_t i = 0; i < l.dim(); ++i) subs.push_back(Subspace<RationalField>::span(Q, l.dim(), {l.basis_vector(i)}));
    for (const auto& u : subs)
      for (const auto& v : subs) EXPECT_EQ(bracket_spaces(l, u, v), bracket_spaces(l, v, u)) << name;
  }
}

TEST(Centralizer, Examples) {
  auto e = alg("ex22");
  EXPECT_EQ(centralizer(e, sp(e, "<a>")), sp(e, "<a,b,c>"));
  EXPECT_EQ(centralizer(e, sp(e, "<b,c>")), sp(e, "<a,b,c>"));
  auto ab = alg("ab(3)");
  EXPECT_TRUE(centralizer(ab, sp(ab, "<e1>")).is_full());
  auto h = alg("heis");
  EXPECT_TRUE(centralizer(h, sp(h, "<z>")).is_full());
  EXPECT_EQ(centralizer(h, sp(h, "<x>")), sp(h, "<x,z>"));
}

TEST(Core, Examples) {
  auto r = alg("r2");
  EXPECT_TRUE(core(r, sp(r, "<x>")).is_zero());
  auto h = alg("heis");
  EXPECT_TRUE(core(h, h.whole()).is_full());
  EXPECT_EQ(core(h, sp(h, "<x,z>")), sp(h, "<x,z>"));
  EXPECT_THROW(core(h, sp(h, "<x,y>")), PreconditionError);
}

TEST(CharacteristicSeries, Examples) {
  auto ab = alg("ab(2)");
  auto cs = characteristic_series(ab);
  ASSERT_EQ(cs.derived.size(), 2u);
  EXPECT_TRUE(cs.derived[1].is_zero());
  EXPECT_TRUE(cs.center.is_full());

  auto r = alg("r2");
  cs = characteristic_series(r);
  ASSERT_EQ(cs.derived.size(), 3u);
  EXPECT_EQ(cs.derived[1], sp(r, "<y>"));
  EXPECT_TRUE(cs.solvable());
  EXPECT_FALSE(cs.nilpotent());
  EXPECT_EQ(cs.lower_central.back(), sp(r, "<y>"));

  auto s = alg("sl2");
  cs = characteristic_series(s);
  ASSERT_EQ(cs.derived.size(), 2u);
  EXPECT_TRUE(cs.derived[1].is_full());
  EXPECT_FALSE(cs.solvable());
  EXPECT_TRUE(cs.center.is_zero());
}

TEST(QuotientAlgebra, Examples) {
  auto h = alg("heis");
  auto q = quotient_algebra(h, sp(h, "<z>"));
  EXPECT_EQ(q.algebra.dim(), 2u);
  EXPECT_TRUE(q.algebra.is_abelian());

  auto r = alg("r2");
  auto same = quotient_algebra(r, r.zero_space());
  EXPECT_EQ(same.algebra, r);

  auto e = alg("ex22");
  auto qe = quotient_algebra(e, sp(e, "<b,c>"));
  ASSERT_EQ(qe.algebra.dim(), 2u);
  EXPECT_EQ(qe.algebra.basis_names(), (std::vector<std::string>{"a", "x"}));
  // [x, a] = a
  EXPECT_EQ(qe.algebra.bracket_basis(1, 0), (Vector<RationalField>{Rational(1), Rational(0)}));
  EXPECT_THROW(quotient_algebra(e, sp(e, "<x>")), PreconditionError);
}

TEST(SemidirectSum, Examples) {
  auto one = QL::abelian(Q, {"b"});
  auto acting = QL::abelian(Q, {"q"});
  auto r = semidirect_sum(one, acting, {Matrix<RationalField>::identity(Q, 1)});
  // [b, q] = -b, i.e. [q, b] = b: the nonabelian two-dimensional algebra
  EXPECT_EQ(r.bracket_basis(1, 0), (Vector<RationalField>{Rational(1), Rational(0)}));

  auto sl2 = alg("sl2");
  auto v2 = QL::abelian(Q, {"v1", "v2"});
  auto mat = [](long a, long b, long c, long d) {
    auto m = Matrix<RationalField>(Q, 2, 2);
    m(0, 0) = a, m(0, 1) = b, m(1, 0) = c, m(1, 1) = d;
    return m;
  };
  auto aff = semidirect_sum(v2, sl2, {mat(0, 1, 0, 0), mat(1, 0, 0, -1), mat(0, 0, 1, 0)});
  EXPECT_EQ(aff, alg("aff_sl2"));

  auto ds = direct_sum(alg("heis"), alg("r2"));
  EXPECT_EQ(ds.dim(), 5u);
  EXPECT_TRUE(is_ideal(ds, Subspace<RationalField>::span(Q, 5, {ds.basis_vector(0), ds.basis_vector(1), ds.basis_vector(2)})));
  EXPECT_TRUE(is_ideal(ds, Subspace<RationalField>::span(Q, 5, {ds.basis_vector(3), ds.basis_vector(4)})));
  EXPECT_EQ(ds.brackets(), alg("h3_plus_r2").brackets());

  // not a derivation of the abelian one-dimensional algebra? every map is; use sl2 with a non-derivation
  EXPECT_THROW(semidirect_sum(sl2, acting, {Matrix<RationalField>::identity(Q, 3)}), PreconditionError);
}

TEST(NilpotentAutomorphism, Examples) {
  auto h = alg("heis");
  auto id = nilpotent_automorphism(h, h.zero());
  EXPECT_EQ(id.matrix, Matrix<RationalField>::identity(Q, 3));
  auto ax = nilpotent_automorphism(h, h.basis_vector(0));
  EXPECT_EQ(ax.nilpotency_index, 2u);
  EXPECT_EQ(ax.matrix.apply(h.basis_vector(1)), (Vector<RationalField>{Rational(0), Rational(1), Rational(1)}));
  EXPECT_EQ(ax.matrix, one_plus_ad(h, h.basis_vector(0)));

  auto r = alg("r2");
  auto ay = one_plus_ad(r, r.basis_vector(1));
  EXPECT_EQ(image(ay, sp(r, "<x>")), sp(r, "<x-y>"));
  EXPECT_THROW(nilpotent_automorphism(r, r.basis_vector(0)), PreconditionError);
}

TEST(NilpotentAutomorphism, CharacteristicCaveat) {
  PrimeField f3(3);
  auto s = builtin("sl2", f3);
  // ad e has nilpotency index 3 = p, so exp(ad e) is undefined
  EXPECT_THROW(nilpotent_automorphism(s, s.basis_vector(0)), PreconditionError);
  PrimeField f5(5);
  auto s5 = builtin("sl2", f5);
  auto a = nilpotent_automorphism(s5, s5.basis_vector(0));
  EXPECT_EQ(a.nilpotency_index, 3u);
  EXPECT_TRUE(is_automorphism(s5, a.matrix));
}

TEST(Corpus, FieldCompatibility) {
  EXPECT_THROW(builtin("sl2", PrimeField(2)), IncompatibleField);
  EXPECT_THROW(builtin("ex22", PrimeField(5)), IncompatibleField);
  EXPECT_NO_THROW(builtin("ex22", PrimeField(3)));
  EXPECT_TRUE(builtin("ab(3)", PrimeField(2)).is_abelian());
  EXPECT_THROW(builtin("nope", Q), PreconditionError);
}

TEST(Corpus, SpanRoundTrip) {
  auto e = alg("ex22");
  auto s = sp(e, "<a+2b, c - x>");
  EXPECT_EQ(sp(e, format_span(e, s)), s);
}
