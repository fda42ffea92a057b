#include <gtest/gtest.h>

#include <functional>

#include "so2n/symspace.hpp"
#include "support/corpus.hpp"
#include "support/lieball.hpp"

using namespace so2n;
using namespace so2n::builtin;
using so2n::testing::Gen;

namespace {

Matrix<Rational> mstar(std::vector<Rational> u, std::vector<Rational> v) {
  return m_element<Rational>(u, v, CartanVariant::Noncompact);
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InputError;
}

}  // namespace

TEST(Cartan, DimensionsAndInclusions) {
  for (std::size_t n = 1; n <= 5; ++n)
    for (auto var : {CartanVariant::Noncompact, CartanVariant::Compact}) {
      auto d = cartan(n, var);
      EXPECT_EQ(d.k.dim(), 1 + n * (n - 1) / 2);
      EXPECT_EQ(d.m.dim(), 2 * n);
      EXPECT_EQ(d.k.dim() + d.m.dim(), d.ambient.dim());
      EXPECT_TRUE(d.verify());
      for (const auto& x : d.m_basis) EXPECT_EQ(in_compact_m(x), var == CartanVariant::Compact);
    }
  auto d = cartan(3);
  EXPECT_EQ(d.k.dim(), 4u);
  EXPECT_EQ(d.m.dim(), 6u);
  for (const auto& x : d.m_basis)
    for (const auto& y : d.m_basis) EXPECT_TRUE(d.k.contains(bracket(x, y)));
  EXPECT_EQ(code_of([] { (void)cartan(0); }), ErrorCode::BadParams);
}

TEST(Cartan, CompactBlocksAreSkew) {
  auto d = cartan(3, CartanVariant::Compact);
  for (const auto& x : d.m_basis) EXPECT_EQ(x.transpose(), -x);
  auto nc = cartan(3);
  for (const auto& x : nc.m_basis) EXPECT_EQ(x.transpose(), x);
}

TEST(Duality, ExceptionalMatrices) {
  EXPECT_EQ(dualize(appendix_U()), appendix_U_star());
  EXPECT_EQ(dualize(appendix_V()), appendix_V_star());
  EXPECT_TRUE(dualize(Matrix<Rational>(5, 5)).is_zero());
  EXPECT_EQ(bracket(appendix_U_star(), appendix_V_star()), -bracket(appendix_U(), appendix_V()));
  EXPECT_EQ(bracket(appendix_U_star(), appendix_V_star()), -appendix_W());
  EXPECT_EQ(code_of([] { (void)dualize(appendix_W()); }), ErrorCode::NotInM);
  EXPECT_EQ(code_of([] { (void)dualize(appendix_U_star()); }), ErrorCode::NotInM);
}

TEST(Duality, BijectionReversingBrackets) {
  for (std::size_t n = 1; n <= 4; ++n) {
    auto c = cartan(n, CartanVariant::Compact);
    auto nc = cartan(n);
    std::vector<Matrix<Rational>> images;
    for (const auto& x : c.m_basis) {
      auto y = dualize(x);
      ASSERT_TRUE(nc.m.contains(y));
      images.push_back(y);
    }
    EXPECT_EQ(MatrixSpace<Rational>::span(n + 2, n + 2, images).dim(), 2 * n);
    for (const auto& x : c.m_basis)
      for (const auto& y : c.m_basis) EXPECT_TRUE((bracket(dualize(x), dualize(y)) + bracket(x, y)).is_zero());
  }
  Gen g(11);
  auto c = cartan(3, CartanVariant::Compact);
  for (int t = 0; t < 20; ++t) {
    Matrix<Rational> x(5, 5), y(5, 5);
    for (const auto& b : c.m_basis) {
      x += b * g.rational();
      y += b * g.rational();
    }
    EXPECT_EQ(dualize(x * Rational(2) + y), dualize(x) * Rational(2) + dualize(y));
  }
}

TEST(LieTriple, TypeA) {
  auto d = cartan<QuadExt>(3);
  auto n_star = MatrixSpace<QuadExt>::span(5, 5, {appendix_U_star(), appendix_V_star()});
  EXPECT_TRUE(is_lie_triple(n_star, d));
  auto closure = bracket_closure<QuadExt>({appendix_U_star(), appendix_V_star()});
  EXPECT_EQ(closure.dim(), 3u);
  EXPECT_TRUE(check_orthogonality(closure, eta(2, 3)));
  auto rep = Representation<QuadExt>(closure);
  auto v = decide_irreducibility(rep);
  EXPECT_EQ(v.verdict, Irreducibility::Irreducible);
  EXPECT_TRUE(verify_verdict(rep, v));
}

TEST(LieTriple, CraftedPlaneFails) {
  auto d = cartan(3);
  auto a = mstar({1, 0, 0}, {0, 0, 0}), b = mstar({0, 1, 0}, {1, 0, 0});
  auto plane = MatrixSpace<Rational>::span(5, 5, {a, b});
  EXPECT_FALSE(is_lie_triple(plane, d));
  // Direct expansion: [[a,b],b] lies outside span{a,b}.
  auto t = bracket(bracket(a, b), b);
  EXPECT_EQ(MatrixSpace<Rational>::span(5, 5, {a, b, t}).dim(), 3u);
}

TEST(LieTriple, LinesAlwaysPass) {
  Gen g(12);
  for (std::size_t n = 1; n <= 4; ++n) {
    auto d = cartan(n);
    for (int t = 0; t < 15; ++t) {
      Matrix<Rational> x(n + 2, n + 2);
      for (const auto& b : d.m_basis) x += b * g.rational();
      EXPECT_TRUE(is_lie_triple(MatrixSpace<Rational>::span(n + 2, n + 2, {x}), d));
    }
  }
  auto d = cartan(3);
  EXPECT_EQ(code_of([&] { (void)is_lie_triple(MatrixSpace<Rational>::span(5, 5, {d.k_basis[0]}), d); }),
            ErrorCode::NotInM);
}

TEST(LieBall, BasicPoints) {
  for (std::size_t n = 1; n <= 5; ++n) {
    EXPECT_TRUE(on_quadric(pi0(n)));
    EXPECT_TRUE(in_lieball(pi0(n)));
  }
  ProjectivePoint<GaussRat> boundary{{1, 0, 1, 0, 0}};
  EXPECT_TRUE(on_quadric(boundary));
  EXPECT_TRUE(is_zero(hermitian_q(boundary, boundary)));
  EXPECT_FALSE(in_lieball(boundary));
  ProjectivePoint<GaussRat> positive{{0, 0, 1, GaussRat::i(), 0}};
  EXPECT_TRUE(on_quadric(positive));
  EXPECT_EQ(hermitian_q(positive, positive), GaussRat(2));
  EXPECT_FALSE(in_lieball(positive));
  ProjectivePoint<GaussRat> flipped{{1, -GaussRat::i(), 0, 0}};
  EXPECT_TRUE(on_quadric(flipped));
  EXPECT_FALSE(in_lieball(flipped));
  ProjectivePoint<GaussRat> scaled{{GaussRat(2, 3), GaussRat(-3, 2), 0, 0}};
  EXPECT_TRUE(scaled == pi0<GaussRat>(2));
  EXPECT_TRUE(in_lieball(scaled));
}

TEST(LieBall, PlanePointCorrespondence) {
  auto p = pi0_plane(3);
  EXPECT_TRUE(plane_to_point(p) == pi0<GaussRat>(3));
  NegativePlane<Rational> doubled{p.a, p.b};
  for (auto& x : doubled.a) x *= Rational(2);
  for (auto& x : doubled.b) x *= Rational(2);
  EXPECT_TRUE(plane_to_point(doubled) == plane_to_point(p));
  Gen g(13);
  for (int t = 0; t < 30; ++t) {
    auto z = so2n::testing::lieball_point(g, 3);
    ProjectivePoint<GaussRat> pt{z};
    auto plane = point_to_plane(pt);
    ASSERT_TRUE(plane.valid());
    EXPECT_TRUE(plane_to_point(plane) == pt);
    EXPECT_EQ(point_to_plane(plane_to_point(plane)).span(), plane.span());
  }
  NegativePlane<Rational> bad{unit_vector<Rational>(5, 0), unit_vector<Rational>(5, 2)};
  EXPECT_EQ(code_of([&] { (void)plane_to_point(bad); }), ErrorCode::NotNegativePlane);
  ProjectivePoint<GaussRat> positive{{0, 0, 1, GaussRat::i(), 0}};
  EXPECT_EQ(code_of([&] { (void)point_to_plane(positive); }), ErrorCode::NotInLieBall);
}

TEST(Embedding, Examples) {
  EXPECT_TRUE(embed({EmbeddingType::I1, 1, 0, 2}, {1, 0}) == pi0(2));
  EXPECT_TRUE(embed({EmbeddingType::G2, 1, 1, 3}, {1, 0, 1, 0}) == pi0(3));
  auto z = embed({EmbeddingType::I2, 1, 0, 2}, {1, Rational(1, 2)});
  const GaussQuad i = GaussQuad::i(), h(QuadExt(Rational(1, 2)));
  EXPECT_TRUE((z == ProjectivePoint<GaussQuad>{{1, i, h, i * h}}));
  EXPECT_TRUE(is_zero(quadric_residual(z)));
  EXPECT_EQ(hermitian_q(z, z), GaussQuad(QuadExt(Rational(-3, 2))));
  EXPECT_TRUE(in_lieball(z));
  // P1 from the Lorentzian model: Lorentz norm -1 with x0 < 0.
  auto p = embed({EmbeddingType::P1, 1, 0, 2}, {2, 1});
  EXPECT_TRUE(in_lieball(p));
  EXPECT_EQ(p.z[0], i);
  EXPECT_LT(sign(p.z[1].re()), 0);
}

TEST(Embedding, Errors) {
  EXPECT_EQ(code_of([] { (void)embed({EmbeddingType::I1, 1, 0, 2}, {0, 1}); }), ErrorCode::DomainViolation);
  EXPECT_EQ(code_of([] { (void)embed({EmbeddingType::I1, 1, 0, 2}, {1, 1}); }), ErrorCode::DomainViolation);
  EXPECT_EQ(code_of([] { (void)embed({EmbeddingType::I2, 1, 0, 2}, {1, GaussRat(0, Rational(1, 2))}); }),
            ErrorCode::DomainViolation);
  EXPECT_EQ(code_of([] { (void)embed({EmbeddingType::I1, 2, 0, 3}, {1, 0, 0}); }), ErrorCode::BadParams);
  EXPECT_EQ(code_of([] { (void)embed({EmbeddingType::G1, 2, 0, 2}, {1, GaussRat::i(), 0, 0}); }),
            ErrorCode::BadParams);
  EXPECT_EQ(code_of([] { (void)embed({EmbeddingType::I1, 1, 0, 2}, {1}); }), ErrorCode::BadParams);
}

// I1's inequality runs over the k embedded coordinates only.
TEST(Embedding, I1UsesKBound) {
  EXPECT_TRUE(in_lieball(embed({EmbeddingType::I1, 1, 0, 4}, {2, 1})));
  EXPECT_TRUE(in_lieball(embed({EmbeddingType::I1, 2, 0, 4}, {2, 1, 1})));
}

TEST(Embedding, SeededSuite) {
  Gen g(20240601);
  for (std::size_t n : {2u, 3u, 4u})
    for (const auto& spec : so2n::testing::embedding_specs(n))
      for (int t = 0; t < 100; ++t) {
        auto x = so2n::testing::embedding_input(g, spec, true);
        auto z = embed(spec, x);
        ASSERT_EQ(z.size(), n + 2);
        ASSERT_TRUE(is_zero(quadric_residual(z))) << spec.label();
        ASSERT_TRUE(in_lieball(z)) << spec.label();
        auto y = so2n::testing::embedding_input(g, spec, false);
        ASSERT_EQ(code_of([&] { (void)embed(spec, y); }), ErrorCode::DomainViolation) << spec.label();
      }
}

TEST(Hull, Examples) {
  auto su11 = su1p_real(1);
  auto plane = pi0_plane(2);
  EXPECT_TRUE(is_full(invariant_hull(su11, {plane.a, plane.b})));
  auto p2 = so12_block_p2(5);
  auto h = invariant_hull(p2, {unit_vector<Rational>(7, 0)});
  EXPECT_FALSE(is_full(h));
  EXPECT_EQ(h, Subspace<Rational>::span(7, {unit_vector<Rational>(7, 0), unit_vector<Rational>(7, 1),
                                            unit_vector<Rational>(7, 2)}));
  LieAlgebra<Rational> zero(3);
  Vector<Rational> v{1, 2, 3};
  EXPECT_EQ(invariant_hull(zero, {v}), Subspace<Rational>::span(3, {v}));
}

TEST(Hull, IrreducibleImpliesFull) {
  Gen g(14);
  for (const auto& e : so2n::testing::small_corpus()) {
    std::visit(
        [&](const auto& rep) {
          using F = typename std::decay_t<decltype(rep.generators())>::value_type::value_type;
          if (decide_irreducibility(rep).verdict != Irreducibility::Irreducible) return;
          for (int t = 0; t < 3; ++t) {
            Vector<F> v(rep.dim(), F(0));
            while (is_zero_vector(v))
              for (auto& x : v) x = g.scalar<F>();
            ASSERT_TRUE(is_full(spin(v, rep.generators()))) << e.name;
          }
        },
        e.rep);
  }
}

TEST(Fixer, Examples) {
  for (std::size_t k : {1u, 2u, 3u}) {
    auto g = u1p_real(k);
    auto f = fixer_algebra(g, pi0_plane(2 * k));
    ASSERT_EQ(f.dim(), 1u) << k;
    EXPECT_TRUE(f.contains(complex_structure(k + 1)));
  }
  EXPECT_EQ(fixer_algebra(appendix_so12(), pi0_plane<QuadExt>(3)).dim(), 0u);
  Matrix<Rational> j0(4, 4);
  j0(0, 1) = -1;
  j0(1, 0) = 1;
  auto line = LieAlgebra<Rational>::from_basis(4, {j0});
  auto f = fixer_algebra(line, pi0_plane(2));
  EXPECT_EQ(f.dim(), 1u);
  EXPECT_TRUE(f.contains(j0));
  NegativePlane<Rational> bad{unit_vector<Rational>(4, 0), unit_vector<Rational>(4, 2)};
  EXPECT_EQ(code_of([&] { (void)fixer_algebra(line, bad); }), ErrorCode::NotNegativePlane);
}

TEST(Fixer, OutputIsAnIdealInsideTheStabilizer) {
  std::vector<LieAlgebra<Rational>> algebras{u1p_real(1), u1p_real(2), s1_so1p_real(2), so(2, 3), g2_isometry(1, 1, 2),
                                             p1_isometry(2, 3)};
  for (const auto& g : algebras) {
    auto base = pi0_plane(g.ambient_dim() - 2);
    auto f = fixer_algebra(g, base);
    auto span = base.span();
    for (const auto& x : f.basis()) {
      EXPECT_TRUE(g.contains(x));
      EXPECT_TRUE(span.contains(x * base.a) && span.contains(x * base.b));
      for (const auto& y : g.basis()) EXPECT_TRUE(f.contains(bracket(y, x))) << g.name();
    }
  }
  EXPECT_EQ(fixer_algebra(s1_so1p_real(2), pi0_plane(4)).dim(), 1u);
  EXPECT_EQ(fixer_algebra(so(2, 3), pi0_plane(3)).dim(), 0u);
}

TEST(Parabolic, Examples) {
  auto p = parabolic_algebra<Rational>(2, 3, {1, 0, 1, 0, 0});
  EXPECT_EQ(p.dim(), 7u);
  EXPECT_TRUE(p.is_closed());
  EXPECT_TRUE(check_orthogonality(p, eta(2, 3)));
  EXPECT_EQ(parabolic_algebra<Rational>(1, 1, {1, 1}).dim(), 1u);
  EXPECT_EQ(code_of([] { (void)parabolic_algebra<Rational>(2, 3, {1, 0, 0, 0, 0}); }), ErrorCode::NotLightlike);
  EXPECT_EQ(code_of([] { (void)parabolic_algebra<Rational>(2, 3, {0, 0, 0, 0, 0}); }), ErrorCode::NotLightlike);
  // 1 + dim so(p,q) + (p+q) inside so(p+1,q+1).
  for (std::size_t a = 1; a <= 3; ++a)
    for (std::size_t b = 1; b <= 3; ++b) {
      Vector<Rational> v(a + b, Rational(0));
      v[0] = 1;
      v[a] = 1;
      std::size_t p0 = a - 1, q0 = b - 1;
      std::size_t m = p0 + q0;
      EXPECT_EQ(parabolic_algebra<Rational>(a, b, v).dim(), 1 + m * (m > 0 ? m - 1 : 0) / 2 + m) << a << "," << b;
    }
}

TEST(Parabolic, Transitivity) {
  auto ambient = lift_algebra<QuadExt>(so(2, 3));
  auto p = parabolic_algebra<QuadExt>(2, 3, {1, 0, 1, 0, 0});
  EXPECT_TRUE(p.contains(appendix_U_star()));
  auto us = appendix_U_star();
  Vector<QuadExt> w{0, 1, 0, 1, 0};
  EXPECT_TRUE(Subspace<QuadExt>::span(5, {w}).contains(us * w));
  EXPECT_FALSE(is_zero_vector(us * w));
  EXPECT_FALSE(local_transitivity(appendix_so12(), p, ambient));
  EXPECT_TRUE(local_transitivity(ambient, p, ambient));
  EXPECT_EQ(code_of([&] { (void)local_transitivity(lift_algebra<QuadExt>(so(2, 2)), p, ambient); }),
            ErrorCode::DimensionMismatch);
}
