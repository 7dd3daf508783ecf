#include <gtest/gtest.h>

#include <random>

#include "liecrown/subspace.hpp"

using namespace liecrown;

namespace {

RationalField Q;

Vector<RationalField> qv(std::initializer_list<long> xs) {
  Vector<RationalField> v;
  for (long x : xs) v.push_back(Rational(x));
  return v;
}

Vector<PrimeField> fv(const PrimeField& f, std::initializer_list<long> xs) {
  Vector<PrimeField> v;
  for (long x : xs) v.push_back(f.from_int(x));
  return v;
}

/// Every vector of GF(p)^n.
std::vector<Vector<PrimeField>> all_vectors(const PrimeField& f, std::size_t n) {
  std::vector<Vector<PrimeField>> out;
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= f.size();
  for (std::size_t c = 0; c < total; ++c) {
    Vector<PrimeField> v;
    std::size_t x = c;
    for (std::size_t i = 0; i < n; ++i, x /= f.size()) v.push_back(f.element(static_cast<std::uint32_t>(x % f.size())));
    out.push_back(v);
  }
  return out;
}

}  // namespace

TEST(Field, PrimeFieldAxiomsExhaustive) {
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    PrimeField f(p);
    for (std::uint32_t a = 0; a < p; ++a)
      for (std::uint32_t b = 0; b < p; ++b) {
        Fp x = f.element(a), y = f.element(b);
        EXPECT_EQ(x + y, y + x);
        EXPECT_EQ(x * y, y * x);
        EXPECT_EQ((x + y) - y, x);
        for (std::uint32_t c = 0; c < p; ++c) {
          Fp z = f.element(c);
          EXPECT_EQ((x * y) * z, x * (y * z));
          EXPECT_EQ(x * (y + z), x * y + x * z);
        }
        if (b != 0) EXPECT_EQ((x / y) * y, x);
      }
  }
}

TEST(Field, RationalAxiomsRandom) {
  std::mt19937 gen(7);
  auto draw = [&] {
    Rational r(static_cast<long>(gen() % 41) - 20, static_cast<long>(gen() % 9) + 1);
    r.canonicalize();
    return r;
  };
  for (int t = 0; t < 300; ++t) {
    Rational x = draw(), y = draw(), z = draw();
    EXPECT_EQ(Rational((x * y) * z), Rational(x * (y * z)));
    EXPECT_EQ(Rational(x * (y + z)), Rational(x * y + x * z));
    if (sgn(y) != 0) EXPECT_EQ(Rational((x / y) * y), x);
  }
  Rational r = Q.parse("6/-4");
  EXPECT_EQ(r.get_str(), "-3/2");
}

TEST(Field, SpecParsing) {
  EXPECT_EQ(FieldSpec::parse("q"), FieldSpec::rationals());
  EXPECT_EQ(FieldSpec::parse("gf3"), FieldSpec::prime(3));
  EXPECT_EQ(FieldSpec::parse("GF(7)"), FieldSpec::prime(7));
  EXPECT_THROW(FieldSpec::parse("gf4"), IncompatibleField);
  EXPECT_THROW(FieldSpec::parse("gf65537"), IncompatibleField);
  EXPECT_THROW(PrimeField(1), IncompatibleField);
}

TEST(RrefSolve, IdentityWithRightHandSide) {
  auto a = Matrix<RationalField>::identity(Q, 2);
  auto b = Matrix<RationalField>::from_columns(Q, 2, {qv({1, 2})});
  auto r = rref_solve(a, std::optional(b));
  EXPECT_EQ(r.rank, 2u);
  ASSERT_TRUE(r.particular);
  EXPECT_EQ(r.particular->col(0), qv({1, 2}));
  EXPECT_TRUE(r.nullspace.is_zero());
}

TEST(RrefSolve, ProportionalRows) {
  auto a = Matrix<RationalField>::from_rows(Q, 2, {qv({1, 2}), qv({2, 4})});
  auto r = rref_solve(a);
  EXPECT_EQ(r.rank, 1u);
  EXPECT_EQ(r.nullspace, Subspace<RationalField>::span(Q, 2, {qv({-2, 1})}));
}

TEST(RrefSolve, GF2FullRankMatchesEnumeration) {
  PrimeField f(2);
  auto a = Matrix<PrimeField>::from_rows(f, 2, {fv(f, {1, 1}), fv(f, {1, 2})});
  auto r = rref_solve(a);
  EXPECT_EQ(r.rank, 2u);
  std::size_t kernel = 0;
  for (const auto& v : all_vectors(f, 2))
    if (is_zero_vector(a.apply(v))) ++kernel;
  EXPECT_EQ(kernel, 1u);
  EXPECT_TRUE(r.nullspace.is_zero());
}

TEST(RrefSolve, Errors) {
  EXPECT_THROW(rref_solve(Matrix<RationalField>(Q, 0, 2)), DimensionMismatch);
  auto a = Matrix<RationalField>::identity(Q, 2);
  EXPECT_THROW(rref_solve(a, std::optional(Matrix<RationalField>(Q, 3, 1))), DimensionMismatch);
  auto inconsistent = rref_solve(Matrix<RationalField>::from_rows(Q, 2, {qv({1, 1}), qv({1, 1})}),
                                 std::optional(Matrix<RationalField>::from_columns(Q, 2, {qv({0, 1})})));
  EXPECT_FALSE(inconsistent.particular);
}

TEST(Subspace, SumExamples) {
  auto e = [](std::size_t i) { return unit_vector(Q, 3, i); };
  auto u = Subspace<RationalField>::span(Q, 3, {e(0)});
  auto v = Subspace<RationalField>::span(Q, 3, {e(1)});
  EXPECT_EQ(subspace_sum(u, v), Subspace<RationalField>::span(Q, 3, {e(0), e(1)}));
  EXPECT_EQ(subspace_sum(u, u), u);

  PrimeField f(3);
  auto a = Subspace<PrimeField>::span(f, 2, {fv(f, {1, 1})});
  auto b = Subspace<PrimeField>::span(f, 2, {fv(f, {0, 1})});
  EXPECT_TRUE(subspace_sum(a, b).is_full());
}

TEST(Subspace, IntersectExamples) {
  auto e = [](std::size_t i) { return unit_vector(Q, 3, i); };
  auto u = Subspace<RationalField>::span(Q, 3, {e(0), e(1)});
  auto v = Subspace<RationalField>::span(Q, 3, {e(1), e(2)});
  EXPECT_EQ(subspace_intersect(u, v), Subspace<RationalField>::span(Q, 3, {e(1)}));
  EXPECT_EQ(subspace_intersect(u, Subspace<RationalField>::full(Q, 3)), u);
  auto l1 = Subspace<RationalField>::span(Q, 2, {qv({1, 1})});
  auto l2 = Subspace<RationalField>::span(Q, 2, {qv({1, 2})});
  EXPECT_TRUE(subspace_intersect(l1, l2).is_zero());
  EXPECT_THROW(subspace_intersect(u, l1), DimensionMismatch);
}

TEST(Subspace, CanonicalBasisIndependentOfSpanningSet) {
  auto a = Subspace<RationalField>::span(Q, 3, {qv({1, 2, 3}), qv({0, 1, 1})});
  auto b = Subspace<RationalField>::span(Q, 3, {qv({1, 3, 4}), qv({2, 4, 6}), qv({0, -2, -2})});
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.basis(), b.basis());
}

TEST(Subspace, ModularLawExhaustiveGF2) {
  PrimeField f(2);
  // all subspaces of GF(2)^3 spanned by pairs of vectors
  std::vector<Subspace<PrimeField>> subs;
  auto vs = all_vectors(f, 3);
  for (const auto& a : vs)
    for (const auto& b : vs) {
      auto s = Subspace<PrimeField>::span(f, 3, {a, b});
      bool seen = false;
      for (const auto& t : subs) seen = seen || t == s;
      if (!seen) subs.push_back(s);
    }
  EXPECT_EQ(subs.size(), 1u + 7u + 7u);  // 0, lines, planes
  for (const auto& u : subs)
    for (const auto& v : subs)
      EXPECT_EQ(subspace_sum(u, v).dim() + subspace_intersect(u, v).dim(), u.dim() + v.dim());
}

TEST(QuotientCoords, Examples) {
  auto e = [](std::size_t i) { return unit_vector(Q, 2, i); };
  auto w = Subspace<RationalField>::full(Q, 2);
  auto u = Subspace<RationalField>::span(Q, 2, {e(0)});
  auto qc = quotient_coords(w, u);
  EXPECT_EQ(qc.dim(), 1u);
  EXPECT_FALSE(is_zero_vector(qc.project(e(1))));
  EXPECT_TRUE(is_zero_vector(qc.project(e(0))));
  EXPECT_EQ(quotient_coords(u, u).dim(), 0u);
  EXPECT_THROW(quotient_coords(u, w), PreconditionError);
}

TEST(QuotientCoords, ProjectLiftExhaustive) {
  for (std::uint32_t p : {2u, 3u}) {
    PrimeField f(p);
    for (std::size_t n = 1; n <= 4; ++n) {
      auto vs = all_vectors(f, n);
      // a few denominators: coordinate subspaces and a diagonal line
      std::vector<Subspace<PrimeField>> us{Subspace<PrimeField>::zero(f, n),
                                           Subspace<PrimeField>::span(f, n, {unit_vector(f, n, n - 1)})};
      Vector<PrimeField> ones(n, f.one());
      us.push_back(Subspace<PrimeField>::span(f, n, {ones}));
      for (const auto& u : us) {
        QuotientCoords<PrimeField> qc(Subspace<PrimeField>::full(f, n), u);
        EXPECT_EQ(qc.dim(), n - u.dim());
        for (const auto& v : vs) {
          EXPECT_EQ(is_zero_vector(qc.project(v)), u.contains(v));
          if (v.size() >= qc.dim()) {
            Vector<PrimeField> x(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(qc.dim()));
            EXPECT_EQ(qc.project(qc.lift(x)), x);
          }
        }
      }
    }
  }
}

TEST(Matrix, DeterminantAndInverse) {
  auto a = Matrix<RationalField>::from_rows(Q, 2, {qv({2, 1}), qv({1, 1})});
  EXPECT_EQ(determinant(a), Rational(1));
  auto inv = inverse(a);
  ASSERT_TRUE(inv);
  EXPECT_EQ(a * *inv, Matrix<RationalField>::identity(Q, 2));
  EXPECT_FALSE(inverse(Matrix<RationalField>::from_rows(Q, 2, {qv({1, 2}), qv({2, 4})})));
}
