#include <gtest/gtest.h>

#include "so2n/matrix.hpp"
#include "support/generators.hpp"

using namespace so2n;
using so2n::testing::Gen;

using MQ = Matrix<Rational>;

TEST(Matrix, BracketOfSelfIsZero) {
  Gen g(1);
  auto a = g.matrix<QuadExt>(4, 4);
  EXPECT_TRUE(bracket(a, a).is_zero());
}

TEST(Matrix, ShapeMismatchThrows) {
  try {
    (void)(MQ(2, 3) * MQ(2, 3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DimensionMismatch);
  }
  EXPECT_THROW(MQ(0, 2), Error);
}

TEST(Matrix, KernelOfAllOnes) {
  MQ a{{1, 1}, {1, 1}};
  auto k = kernel(a);
  ASSERT_EQ(k.dim(), 1u);
  EXPECT_EQ(k, Subspace<Rational>::span(2, {{Rational(1), Rational(-1)}}));
  EXPECT_EQ(rank(MQ::identity(5)), 5u);
}

TEST(Matrix, KernelIsAnnihilatedAndRankNullity) {
  Gen g(2);
  for (int t = 0; t < 60; ++t) {
    std::size_t r = g.range(1, 6), c = g.range(1, 6), k = g.range(0, std::min(r, c));
    auto a = k == 0 ? MQ(r, c) : g.rank_matrix(r, c, k);
    auto ker = kernel(a);
    for (const auto& v : ker.basis()) ASSERT_TRUE(is_zero_vector(a * v));
    ASSERT_EQ(rank(a) + ker.dim(), c);
    ASSERT_EQ(rank(a), rank(a.transpose()));
    ASSERT_LE(rank(a), k);
  }
}

TEST(Matrix, FractionFreeAgreesWithPlainElimination) {
  Gen g(3);
  for (int t = 0; t < 60; ++t) {
    std::size_t r = g.range(1, 7), c = g.range(1, 7), k = g.range(1, std::min(r, c));
    auto a = g.rank_matrix(r, c, k);
    std::vector<Vector<Rational>> rows;
    for (std::size_t i = 0; i < r; ++i) rows.push_back(a.row(i));
    auto e1 = detail::bareiss_echelon(rows, c);
    auto e2 = detail::gauss_echelon(rows, c);
    ASSERT_EQ(e1.rows, e2.rows);
    ASSERT_EQ(e1.pivots, e2.pivots);
  }
}

TEST(Matrix, OtherFieldsKernel) {
  Gen g(4);
  for (int t = 0; t < 20; ++t) {
    auto b = g.matrix<GaussQuad>(3, 5);
    auto a = g.matrix<GaussQuad>(5, 3) * b;
    auto ker = kernel(a);
    for (const auto& v : ker.basis()) ASSERT_TRUE(is_zero_vector(a * v));
    ASSERT_EQ(rank(a) + ker.dim(), 5u);
  }
}

TEST(Subspace, NormalFormIsCanonical) {
  Gen g(5);
  for (int t = 0; t < 40; ++t) {
    std::size_t n = g.range(2, 6), k = g.range(1, n);
    std::vector<Vector<Rational>> vs;
    for (std::size_t i = 0; i < k; ++i) {
      Vector<Rational> v(n);
      for (auto& x : v) x = g.rational();
      vs.push_back(v);
    }
    auto s1 = Subspace<Rational>::span(n, vs);
    // A second basis: random invertible recombination.
    std::vector<Vector<Rational>> ws;
    for (std::size_t i = 0; i < vs.size(); ++i) {
      Vector<Rational> w(n, Rational(0));
      for (std::size_t j = 0; j < vs.size(); ++j) {
        Rational c = (i == j) ? Rational(1) : (j > i ? g.rational() : Rational(0));
        for (std::size_t l = 0; l < n; ++l) w[l] += c * vs[j][l];
      }
      ws.push_back(w);
    }
    std::reverse(ws.begin(), ws.end());
    auto s2 = Subspace<Rational>::span(n, ws);
    ASSERT_EQ(s1, s2);
    Subspace<Rational> s3(n);
    for (const auto& w : ws) s3.add(w);
    ASSERT_EQ(s1, s3);
  }
}

TEST(Subspace, IntersectionAndAnnihilator) {
  auto e = [](std::size_t i) { return unit_vector<Rational>(4, i); };
  auto a = Subspace<Rational>::span(4, {e(0), e(1), e(2)});
  auto b = Subspace<Rational>::span(4, {e(1), e(2), e(3)});
  auto c = a.intersect(b);
  EXPECT_EQ(c, Subspace<Rational>::span(4, {e(1), e(2)}));
  EXPECT_EQ(a.annihilator(), Subspace<Rational>::span(4, {e(3)}));
  EXPECT_EQ(a.sum(b), Subspace<Rational>::whole(4));
}

TEST(Solve, ConsistentAndInconsistent) {
  MQ a{{1, 2}, {2, 4}};
  auto x = solve(a, Vector<Rational>{3, 6});
  ASSERT_TRUE(x);
  EXPECT_EQ(a * *x, (Vector<Rational>{3, 6}));
  EXPECT_FALSE(solve(a, Vector<Rational>{3, 7}));
}

TEST(Charpoly, Examples) {
  auto p = charpoly(MQ{{2, 0}, {0, 3}});
  EXPECT_EQ(p, Polynomial<Rational>(std::vector<Rational>{6, -5, 1}));
  auto z = charpoly(MQ(3, 3));
  EXPECT_EQ(z, Polynomial<Rational>(std::vector<Rational>{0, 0, 0, 1}));
}

template <class F>
class CayleyHamilton : public ::testing::Test {};
using AllFields = ::testing::Types<Rational, QuadExt, GaussRat, GaussQuad>;
TYPED_TEST_SUITE(CayleyHamilton, AllFields);

TYPED_TEST(CayleyHamilton, CharpolyAnnihilatesRandomMatrices) {
  Gen g(6);
  for (int t = 0; t < 15; ++t) {
    auto a = g.matrix<TypeParam>(4, 4);
    auto p = charpoly(a);
    ASSERT_EQ(p.degree(), 4);
    ASSERT_TRUE(evaluate(p, a).is_zero());
  }
}

TEST(Polynomial, GcdAndSquarefree) {
  using P = Polynomial<Rational>;
  auto x = P::x();
  auto one = P::constant(1);
  auto p = (x - one) * (x - one) * (x + one);
  EXPECT_EQ(squarefree_part(p), (x - one) * (x + one));
  EXPECT_EQ(gcd(p, (x - one) * (x - P::constant(3))), x - one);
  auto [qq, r] = divmod(p, x + one);
  EXPECT_EQ(qq * (x + one) + r, p);
  EXPECT_TRUE(r.is_zero());
}

TEST(Polynomial, ExactRootsOverQuadraticField) {
  using P = Polynomial<QuadExt>;
  QuadExt s3(Rational(0), Rational(1), 3);
  // (x - (1 + sqrt3)) (x - 1/2) (x^2 + 3)
  auto p = P::linear_root(QuadExt(1) + s3) * P::linear_root(QuadExt(Rational(1, 2))) *
           P::quadratic(QuadExt(0), QuadExt(3));
  auto roots = exact_roots(p);
  ASSERT_EQ(roots.size(), 2u);
  EXPECT_NE(std::find(roots.begin(), roots.end(), QuadExt(1) + s3), roots.end());
  auto quads = exact_real_quadratic_factors(p);
  ASSERT_EQ(quads.size(), 1u);
  EXPECT_EQ(quads[0].first, QuadExt(0));
  EXPECT_EQ(quads[0].second, QuadExt(3));
}

TEST(Polynomial, ExactRootsOverGaussianField) {
  using P = Polynomial<GaussRat>;
  GaussRat i = GaussRat::i();
  auto p = P::linear_root(i) * P::linear_root(GaussRat(Rational(2), Rational(-1, 3))) * P::quadratic(GaussRat(0), GaussRat(2));
  auto roots = exact_roots(p);
  EXPECT_EQ(roots.size(), 2u);
  for (const auto& r : roots) EXPECT_TRUE(is_zero(p(r)));
}
