#pragma once

#include <string>
#include <variant>
#include <vector>

#include "so2n/builtins.hpp"
#include "so2n/repcheck.hpp"
#include "support/generators.hpp"

namespace so2n::testing {

using AnyRep = std::variant<Representation<Rational>, Representation<QuadExt>, Representation<GaussRat>,
                            Representation<GaussQuad>>;

struct CorpusEntry {
  std::string name;
  AnyRep rep;
};

template <ExactField F>
Representation<F> rep_of(const LieAlgebra<F>& g) {
  return Representation<F>(g);
}

// Two random matrices with a common invariant subspace of dimension k.
template <ExactField F>
Representation<F> random_block_triangular(Gen& g, std::size_t n, std::size_t k, const std::string& name) {
  std::vector<Matrix<F>> gens;
  for (int t = 0; t < 2; ++t) {
    auto m = g.matrix<F>(n, n);
    for (std::size_t i = k; i < n; ++i)
      for (std::size_t j = 0; j < k; ++j) m(i, j) = F(0);
    gens.push_back(m);
  }
  return Representation<F>(n, gens, name);
}

template <ExactField F>
Representation<F> random_pair(Gen& g, std::size_t n, const std::string& name) {
  return Representation<F>(n, {g.matrix<F>(n, n), g.matrix<F>(n, n)}, name);
}

inline std::vector<CorpusEntry> small_corpus() {
  using namespace builtin;
  std::vector<CorpusEntry> c;
  auto add = [&](std::string name, AnyRep r) { c.push_back({std::move(name), std::move(r)}); };
  add("SO(2,2)", rep_of(so(2, 2)));
  add("SO(2,3)", rep_of(so(2, 3)));
  add("SO(2,4)", rep_of(so(2, 4)));
  add("SO(1,2)", rep_of(so(1, 2)));
  add("SO(0,3)", rep_of(so(0, 3)));
  add("U(1,1)_real", rep_of(u1p_real(1)));
  add("U(1,2)_real", rep_of(u1p_real(2)));
  add("SU(1,1)_real", rep_of(su1p_real(1)));
  add("SU(1,2)_real", rep_of(su1p_real(2)));
  add("S1_SO(1,2)_real", rep_of(s1_so1p_real(2)));
  add("S1_SO(1,1)_real", rep_of(s1_so1p_real(1)));
  add("I2_SO(1,1) n=2", rep_of(so1k_in_su1p_real(1, 2)));
  add("I2_SO(1,2) n=4", rep_of(so1k_in_su1p_real(2, 4)));
  add("I1_SU(1,1) n=3", rep_of(su1k_in_so2n(1, 3)));
  add("G1_SO(2,1) n=3", rep_of(g1_isometry(1, 3)));
  add("G2_SO(1,1)xSO(1,1) n=2", rep_of(g2_isometry(1, 1, 2)));
  add("G2_SO(1,1)xSO(1,2) n=4", rep_of(g2_isometry(1, 2, 4)));
  add("P1_SO(1,2) n=3", rep_of(p1_isometry(2, 3)));
  add("SO12_BLOCK_P2 n=4", rep_of(so12_block_p2(4)));
  add("APPENDIX_SO12", rep_of(appendix_so12()));
  add("APPENDIX_SO3", rep_of(appendix_so3()));
  add("APPENDIX_SO12 n=4", rep_of(appendix_so12_in(4)));
  add("SL2_SL2_on_R22", rep_of(sl2_sl2_on_r22()));
  add("SO3_STD", rep_of(so3_std()));
  add("SL2_STD", rep_of(sl2_std()));
  add("SU2_R4", rep_of(su2_r4()));
  add("SU2_C2", rep_of(su2_c2()));
  add("U1_WEIGHT1", rep_of(u1_weight(1)));
  add("SO3_STD complexified", complexify(rep_of(so3_std())));
  add("U(1,1)_real complexified", complexify(rep_of(u1p_real(1))));
  add("SU2_R4 complexified", complexify(rep_of(su2_r4())));
  add("APPENDIX_SO12 complexified", complexify(rep_of(appendix_so12())));
  add("SL2_STD direct sum", Representation<Rational>(4, {direct_sum(sl2_std().basis()[0], sl2_std().basis()[0]),
                                                         direct_sum(sl2_std().basis()[1], sl2_std().basis()[1]),
                                                         direct_sum(sl2_std().basis()[2], sl2_std().basis()[2])}));
  Gen g(20240501);
  for (std::size_t n = 2; n <= 6; ++n) {
    add("random pair Q n=" + std::to_string(n), random_pair<Rational>(g, n, "pair"));
    add("random triangular Q n=" + std::to_string(n), random_block_triangular<Rational>(g, n, n / 2, "tri"));
  }
  for (std::size_t n = 2; n <= 4; ++n) {
    add("random pair Q(sqrt3) n=" + std::to_string(n), random_pair<QuadExt>(g, n, "pair"));
    add("random triangular Q(sqrt3) n=" + std::to_string(n), random_block_triangular<QuadExt>(g, n, 1, "tri"));
    add("random pair Q(i) n=" + std::to_string(n), random_pair<GaussRat>(g, n, "pair"));
    add("random triangular Q(i) n=" + std::to_string(n), random_block_triangular<GaussRat>(g, n, n - 1, "tri"));
  }
  add("random pair Q(sqrt3,i) n=3", random_pair<GaussQuad>(g, 3, "pair"));
  add("random triangular Q(sqrt3,i) n=3", random_block_triangular<GaussQuad>(g, 3, 2, "tri"));
  return c;
}

}  // namespace so2n::testing
