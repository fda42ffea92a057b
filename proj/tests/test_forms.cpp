#include <gtest/gtest.h>

#include "so2n/forms.hpp"
#include "support/corpus.hpp"
#include "support/oracle.hpp"

using namespace so2n;
using namespace so2n::builtin;
using so2n::testing::Gen;
using so2n::testing::rep_of;

namespace {

template <ExactField F>
F herm(const Matrix<F>& h, const Vector<F>& x, const Vector<F>& y) {
  F s(0);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) s += x[i] * h(i, j) * conj(y[j]);
  return s;
}

}  // namespace

TEST(Signature, Examples) {
  auto s = signature(Matrix<Rational>::diagonal({-1, -1, 1, 1, 1}));
  EXPECT_EQ(s, (Signature{2, 3, 0}));
  EXPECT_EQ(signature(Matrix<Rational>(2, 2)), (Signature{0, 0, 2}));
  EXPECT_EQ(signature(Matrix<Rational>{{0, 1}, {1, 0}}), (Signature{1, 1, 0}));
  EXPECT_EQ(signature(Matrix<GaussRat>{{GaussRat(0), GaussRat::i()}, {-GaussRat::i(), GaussRat(0)}}),
            (Signature{1, 1, 0}));
  try {
    (void)signature(Matrix<Rational>{{1, 2}, {3, 4}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotSymmetric);
  }
}

TEST(Signature, InvariantUnderCongruence) {
  Gen g(40);
  for (int t = 0; t < 60; ++t) {
    std::size_t n = g.range(1, 6);
    std::vector<Rational> d;
    Signature expect;
    for (std::size_t i = 0; i < n; ++i) {
      long s = static_cast<long>(g.range(0, 2)) - 1;
      Rational r = g.nonzero_rational();
      d.push_back(Rational(s) * r * r);
      (s < 0 ? expect.neg : s > 0 ? expect.pos : expect.null)++;
    }
    Matrix<Rational> p = g.rank_matrix(n, n, n);
    if (rank(p) != n) continue;
    ASSERT_EQ(signature(p.transpose() * Matrix<Rational>::diagonal(d) * p), expect);
    Matrix<QuadExt> pq = g.matrix<QuadExt>(n, n);
    if (rank(pq) != n) continue;
    auto dq = lift_matrix<QuadExt>(Matrix<Rational>::diagonal(d));
    ASSERT_EQ(signature(pq.transpose() * dq * pq), expect);
    Matrix<GaussRat> pc = g.matrix<GaussRat>(n, n);
    if (rank(pc) != n) continue;
    auto dc = lift_matrix<GaussRat>(Matrix<Rational>::diagonal(d));
    ASSERT_EQ(signature(pc.adjoint() * dc * pc), expect);
  }
}

TEST(InvariantForms, Examples) {
  auto f = invariant_forms(rep_of(so(2, 3)), Symmetry::Symmetric);
  ASSERT_EQ(f.dim(), 1u);
  EXPECT_EQ(f.signatures[0], (Signature{2, 3, 0}));
  EXPECT_EQ(invariant_forms(rep_of(sl2_std()), Symmetry::Antisymmetric).dim(), 1u);
  EXPECT_EQ(invariant_forms(rep_of(sl2_std()), Symmetry::Symmetric).dim(), 0u);
  auto a = invariant_forms(rep_of(appendix_so12()), Symmetry::Symmetric);
  ASSERT_EQ(a.dim(), 1u);
  auto sig = a.signatures[0];
  EXPECT_EQ(sig, (Signature{2, 3, 0}));
  EXPECT_TRUE(is_invariant_form(eta(2, 3).matrix<QuadExt>(), rep_of(appendix_so12()).generators(),
                                Symmetry::Symmetric));
  auto h = invariant_forms(rep_of(u1p_complex(2)), Symmetry::Hermitian);
  ASSERT_EQ(h.dim(), 1u);
  EXPECT_EQ(h.signatures[0].null, 0u);
  EXPECT_THROW(invariant_forms(rep_of(so(2, 3)), Symmetry::Hermitian), Error);
}

TEST(InvariantForms, MembersReverifyAndAreBoundedByCommutant) {
  for (const auto& e : so2n::testing::small_corpus()) {
    std::visit(
        [&](const auto& rep) {
          auto s = invariant_forms(rep, Symmetry::Symmetric);
          auto a = invariant_forms(rep, Symmetry::Antisymmetric);
          for (const auto& m : s.basis) {
            ASSERT_TRUE(is_invariant_form(m, rep.generators(), Symmetry::Symmetric)) << e.name;
            ASSERT_EQ(m, m.transpose());
          }
          for (const auto& m : a.basis) {
            ASSERT_TRUE(is_invariant_form(m, rep.generators(), Symmetry::Antisymmetric)) << e.name;
            ASSERT_EQ(m, -m.transpose());
          }
          if (so2n::testing::oracle_irreducible(rep.generators(), rep.dim()))
            ASSERT_LE(s.dim() + a.dim(), commutant(rep).dim()) << e.name;
        },
        e.rep);
  }
}

TEST(Tensor, Sl2TimesSl2IsSo22) {
  auto t = tensor_rep(rep_of(sl2_std()), rep_of(sl2_std()));
  EXPECT_EQ(t.dim(), 4u);
  auto g = LieAlgebra<Rational>::from_basis(4, t.generators());
  EXPECT_EQ(g.dim(), 6u);
  auto f = invariant_forms(t, Symmetry::Symmetric);
  ASSERT_EQ(f.dim(), 1u);
  EXPECT_EQ(f.signatures[0], (Signature{2, 2, 0}));
  auto v = decide_irreducibility(t);
  EXPECT_EQ(v.verdict, Irreducibility::Irreducible);
  EXPECT_TRUE(verify_verdict(t, v));
  EXPECT_TRUE(so2n::testing::oracle_irreducible(t.generators(), 4));
  EXPECT_EQ(LieAlgebra<Rational>::from_basis(4, t.generators()), sl2_sl2_on_r22());
}

TEST(Tensor, TrivialFactorLeavesFirstUnchanged) {
  auto so3 = rep_of(so3_std());
  Representation<Rational> trivial(1, {Matrix<Rational>(1, 1)});
  auto t = tensor_rep(so3, trivial);
  ASSERT_EQ(t.dim(), 3u);
  for (std::size_t i = 0; i < so3.generators().size(); ++i) EXPECT_EQ(t.generators()[i], so3.generators()[i]);
  EXPECT_TRUE(t.generators().back().is_zero());
  EXPECT_THROW(tensor_rep(so3, rep_of(u1_weight(1))), Error);
}

TEST(Tensor, SelfDualIffBothFactorsAre) {
  std::vector<Representation<GaussRat>> reps{
      Representation<GaussRat>(complexify(rep_of(sl2_std()))), Representation<GaussRat>(complexify(rep_of(so3_std()))),
      rep_of(u1_weight(1))};
  auto self_dual = [](const Representation<GaussRat>& r) {
    return invariant_forms(r, Symmetry::Symmetric).dim() + invariant_forms(r, Symmetry::Antisymmetric).dim() > 0;
  };
  for (const auto& u : reps)
    for (const auto& v : reps) {
      auto t = tensor_rep(u, v);
      EXPECT_EQ(self_dual(t), self_dual(u) && self_dual(v)) << u.name() << " " << v.name();
    }
}

TEST(HermitianFromSymplectic, Su2OnC2IsDefinite) {
  auto rep = rep_of(su2_c2());
  Antilinear<GaussRat> j{quaternionic_j(1)};
  Matrix<GaussRat> omega{{GaussRat(0), GaussRat(1)}, {GaussRat(-1), GaussRat(0)}};
  auto h = hermitian_from_symplectic(j, omega, rep);
  EXPECT_TRUE(h.signature == (Signature{0, 2, 0}) || h.signature == (Signature{2, 0, 0}));
  EXPECT_EQ(h.form.adjoint(), h.form);
  EXPECT_TRUE(is_invariant_form(h.form, rep.generators(), Symmetry::Hermitian));
  Gen g(41);
  for (int t = 0; t < 50; ++t) {
    Vector<GaussRat> x{g.gauss_rat(), g.gauss_rat()}, y{g.gauss_rat(), g.gauss_rat()};
    ASSERT_EQ(herm(h.form, y, x), conj(herm(h.form, x, y)));
    ASSERT_EQ(herm(h.form, j(x), j(y)), conj(herm(h.form, x, y)));
  }
  auto scaled = hermitian_from_symplectic(j, omega * GaussRat(Rational(7, 3)), rep);
  EXPECT_EQ(scaled.signature, h.signature);
  auto from_real = hermitian_from_symplectic(j.to_real(), omega, rep);
  EXPECT_EQ(from_real.form, h.form);
}

TEST(HermitianFromSymplectic, RejectsBadStructure) {
  auto rep = rep_of(su2_c2());
  Matrix<GaussRat> omega{{GaussRat(0), GaussRat(1)}, {GaussRat(-1), GaussRat(0)}};
  Antilinear<GaussRat> real_structure{Matrix<GaussRat>::identity(2)};
  try {
    (void)hermitian_from_symplectic(real_structure, omega, rep);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BadStructure);
  }
  EXPECT_THROW(hermitian_from_symplectic(Antilinear<GaussRat>{quaternionic_j(1)}, Matrix<GaussRat>::identity(2), rep),
               Error);
  Matrix<Rational> not_antilinear = Matrix<Rational>::identity(4);
  EXPECT_THROW(hermitian_from_symplectic(not_antilinear, omega, rep), Error);
}

TEST(HermitianFromSymmetric, NeutralSignatureAndLightlikeBasis) {
  for (std::size_t m : {1u, 2u}) {
    auto rep = rep_of(toy_orthogonal_quaternionic(m));
    Antilinear<GaussRat> j{quaternionic_j(m)};
    auto sigma = Matrix<GaussRat>::identity(2 * m);
    auto h = hermitian_from_symmetric(j, sigma, rep);
    EXPECT_EQ(h.signature, (Signature{m, m, 0}));
    for (std::size_t k = 0; k < 2 * m; ++k) {
      auto e = unit_vector<GaussRat>(2 * m, k);
      EXPECT_TRUE(is_zero(herm(h.form, e, e)));
    }
    Gen g(42);
    for (int t = 0; t < 30; ++t) {
      Vector<GaussRat> x, y;
      for (std::size_t k = 0; k < 2 * m; ++k) {
        x.push_back(g.gauss_rat());
        y.push_back(g.gauss_rat());
      }
      ASSERT_EQ(herm(h.form, j(x), j(y)), -conj(herm(h.form, x, y)));
      ASSERT_EQ(herm(h.form, y, x), conj(herm(h.form, x, y)));
    }
  }
}

TEST(ConjugationAnalysis, Examples) {
  auto so3c = conjugation_analysis(Representation<GaussRat>(complexify(rep_of(so3_std()))));
  EXPECT_EQ(so3c.kind, Conjugation::RealConj);
  EXPECT_EQ(so3c.lambda, Rational(1));
  auto su2 = conjugation_analysis(rep_of(su2_c2()));
  EXPECT_EQ(su2.kind, Conjugation::QuaternionicConj);
  ASSERT_TRUE(su2.c);
  EXPECT_EQ(su2.c->compose(*su2.c).m, -Matrix<GaussRat>::identity(2));
  for (const auto& a : su2_c2().generators()) EXPECT_EQ(su2.c->m * a.conjugate(), a * su2.c->m);
  EXPECT_EQ(conjugation_analysis(rep_of(u1_weight(1))).kind, Conjugation::NotSelfConjugate);
  try {
    (void)conjugation_analysis(Representation<GaussRat>(complexify(rep_of(u1p_real(1)))));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotIrreducible);
  }
}
