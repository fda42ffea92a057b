#pragma once

#include <map>
#include <regex>
#include <string>
#include <variant>
#include <vector>

#include "so2n/liealg.hpp"

namespace so2n {

namespace builtin {

// so(p,q)-type basis on an index subset: eta_jj E_ij - eta_ii E_ji for i < j.
template <ExactField F>
std::vector<Matrix<F>> orthogonal_basis_on(const SignatureForm& form, const std::vector<std::size_t>& coords) {
  std::vector<Matrix<F>> out;
  const std::size_t n = form.dim();
  for (std::size_t a = 0; a < coords.size(); ++a)
    for (std::size_t b = a + 1; b < coords.size(); ++b) {
      std::size_t i = coords[a], j = coords[b];
      Matrix<F> m(n, n);
      m(i, j) = F(form.entry(j));
      m(j, i) = F(-form.entry(i));
      out.push_back(m);
    }
  return out;
}

inline std::vector<std::size_t> iota(std::size_t from, std::size_t count) {
  std::vector<std::size_t> v;
  for (std::size_t k = 0; k < count; ++k) v.push_back(from + k);
  return v;
}

template <ExactField F = Rational>
LieAlgebra<F> so(std::size_t p, std::size_t q) {
  require(p + q >= 2, ErrorCode::BadParams, "so(p,q) needs p + q >= 2");
  auto form = eta(p, q);
  return LieAlgebra<F>::from_basis(p + q, orthogonal_basis_on<F>(form, iota(0, p + q)),
                                   "SO(" + std::to_string(p) + "," + std::to_string(q) + ")", form);
}

// Real-span basis of u(1,p) as complex matrices, hermitian form diag(-1, 1, ..., 1).
inline std::vector<Matrix<GaussRat>> u1p_complex_basis(std::size_t p, bool special) {
  require(p >= 1, ErrorCode::BadParams, "u(1,p) needs p >= 1");
  const std::size_t m = p + 1;
  auto h = [](std::size_t k) { return k == 0 ? -1 : 1; };
  const GaussRat i = GaussRat::i();
  std::vector<Matrix<GaussRat>> out;
  if (special) {
    for (std::size_t k = 1; k < m; ++k) {
      Matrix<GaussRat> d(m, m);
      d(k - 1, k - 1) = i;
      d(k, k) = -i;
      out.push_back(d);
    }
  } else {
    for (std::size_t k = 0; k < m; ++k) out.push_back(Matrix<GaussRat>::unit(m, k, k) * i);
  }
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t k = j + 1; k < m; ++k) {
      Matrix<GaussRat> re(m, m), im(m, m);
      re(j, k) = GaussRat(h(k));
      re(k, j) = GaussRat(-h(j));
      im(j, k) = i * GaussRat(h(k));
      im(k, j) = i * GaussRat(h(j));
      out.push_back(re);
      out.push_back(im);
    }
  return out;
}

inline LieAlgebra<GaussRat> u1p_complex(std::size_t p) {
  return LieAlgebra<GaussRat>::from_basis(p + 1, u1p_complex_basis(p, false), "U(1," + std::to_string(p) + ")",
                                          eta(1, p));
}

inline LieAlgebra<Rational> u1p_real(std::size_t p) {
  return realify_real_span(u1p_complex_basis(p, false), "U(1," + std::to_string(p) + ")_real", eta(2, 2 * p));
}

inline LieAlgebra<Rational> su1p_real(std::size_t p) {
  return realify_real_span(u1p_complex_basis(p, true), "SU(1," + std::to_string(p) + ")_real", eta(2, 2 * p));
}

// Real matrices acting C-linearly on C^{m}, realified.
inline Matrix<Rational> complex_linear(const Matrix<Rational>& a) { return realify(complexify(a)); }

inline Matrix<Rational> complex_structure(std::size_t m) {
  return realify(Matrix<GaussRat>::identity(m) * GaussRat::i());
}

inline LieAlgebra<Rational> s1_so1p_real(std::size_t p) {
  require(p >= 1, ErrorCode::BadParams, "S1.SO(1,p) needs p >= 1");
  std::vector<Matrix<Rational>> elems{complex_structure(p + 1)};
  for (const auto& a : so(1, p).basis()) elems.push_back(complex_linear(a));
  return LieAlgebra<Rational>::from_basis(2 * (p + 1), elems, "S1_SO(1," + std::to_string(p) + ")_real", eta(2, 2 * p));
}

// so(1,k) acting C-linearly on the first k+1 coordinates of C^{1,n/2}, realified in R^{2,n}.
inline LieAlgebra<Rational> so1k_in_su1p_real(std::size_t k, std::size_t n) {
  require(n % 2 == 0 && k >= 1 && 2 * k <= n, ErrorCode::BadParams, "I2 needs n even and 1 <= k <= n/2");
  std::vector<Matrix<Rational>> elems;
  for (const auto& a : so(1, k).basis()) elems.push_back(complex_linear(pad(a, n / 2 + 1)));
  return LieAlgebra<Rational>::from_basis(n + 2, elems, "I2_SO(1," + std::to_string(k) + ")", eta(2, n));
}

// Isometry algebra of a type (I1,k) orbit: su(1,k) realified on the first 2k+2 coordinates of R^{2,n}.
inline LieAlgebra<Rational> su1k_in_so2n(std::size_t k, std::size_t n) {
  require(k >= 1 && 2 * k <= n, ErrorCode::BadParams, "I1 needs 1 <= k <= n/2");
  return pad_algebra(su1p_real(k), n + 2, 0, "I1_SU(1," + std::to_string(k) + ")").with_form(eta(2, n));
}

// Type (G2,k1,k2): so(1,k1) (+) so(1,k2) on coordinates {0, 2..k1+1} and {1, k1+2..k1+k2+1}.
inline LieAlgebra<Rational> g2_isometry(std::size_t k1, std::size_t k2, std::size_t n) {
  require(k1 >= 1 && k2 >= 1 && k1 + k2 <= n, ErrorCode::BadParams, "G2 needs k1, k2 >= 1 and k1 + k2 <= n");
  auto form = eta(2, n);
  std::vector<std::size_t> xs{0}, ys{1};
  for (std::size_t i = 0; i < k1; ++i) xs.push_back(2 + i);
  for (std::size_t j = 0; j < k2; ++j) ys.push_back(2 + k1 + j);
  auto elems = orthogonal_basis_on<Rational>(form, xs);
  auto more = orthogonal_basis_on<Rational>(form, ys);
  elems.insert(elems.end(), more.begin(), more.end());
  return LieAlgebra<Rational>::from_basis(n + 2, elems,
                                          "G2_SO(1," + std::to_string(k1) + ")xSO(1," + std::to_string(k2) + ")", form);
}

// Type (P1,k): so(1,k) on coordinates 1..k+1, fixing e_0.
inline LieAlgebra<Rational> p1_isometry(std::size_t k, std::size_t n) {
  require(k >= 1 && k <= n, ErrorCode::BadParams, "P1 needs 1 <= k <= n");
  auto form = eta(2, n);
  return LieAlgebra<Rational>::from_basis(n + 2, orthogonal_basis_on<Rational>(form, iota(1, k + 1)),
                                          "P1_SO(1," + std::to_string(k) + ")", form);
}

// Type (G1,k): so(2,k) on the first k+2 coordinates.
inline LieAlgebra<Rational> g1_isometry(std::size_t k, std::size_t n) {
  require(k >= 1 && k <= n, ErrorCode::BadParams, "G1 needs 1 <= k <= n");
  auto form = eta(2, n);
  return LieAlgebra<Rational>::from_basis(n + 2, orthogonal_basis_on<Rational>(form, iota(0, k + 2)),
                                          "G1_SO(2," + std::to_string(k) + ")", form);
}

// so(2,1) in the top-left block of so(2,n), fixing e_3, ..., e_{n+1}.
inline LieAlgebra<Rational> so12_block_p2(std::size_t n) {
  require(n >= 1, ErrorCode::BadParams, "SO12_BLOCK_P2 needs n >= 1");
  return g1_isometry(1, n).named("SO12_BLOCK_P2");
}

// --- exceptional so(3) in so(5) and so(1,2) in so(2,3) ---

inline QuadExt sqrt3() { return QuadExt(Rational(0), Rational(1), 3); }

// Compact off-diagonal element: lower-left block [u v], upper-right block -[u^T; v^T].
template <ExactField F>
Matrix<F> block_m(const std::vector<F>& u, const std::vector<F>& v, bool symmetric) {
  require(u.size() == v.size() && !u.empty(), ErrorCode::DimensionMismatch, "u and v must have equal length n >= 1");
  const std::size_t n = u.size();
  Matrix<F> m(n + 2, n + 2);
  for (std::size_t r = 0; r < n; ++r) {
    m(2 + r, 0) = u[r];
    m(2 + r, 1) = v[r];
    m(0, 2 + r) = symmetric ? u[r] : -u[r];
    m(1, 2 + r) = symmetric ? v[r] : -v[r];
  }
  return m;
}

inline Matrix<QuadExt> appendix_U() {
  return block_m<QuadExt>({QuadExt(2), QuadExt(0), QuadExt(0)}, {QuadExt(0), QuadExt(1), QuadExt(0)}, false);
}
inline Matrix<QuadExt> appendix_V() {
  return block_m<QuadExt>({QuadExt(0), QuadExt(1), QuadExt(0)}, {QuadExt(1), QuadExt(0), sqrt3()}, false);
}
inline Matrix<QuadExt> appendix_W() {
  Matrix<QuadExt> w(5, 5);
  w(0, 1) = QuadExt(-1);
  w(1, 0) = QuadExt(1);
  w(2, 3) = QuadExt(-1);
  w(3, 2) = QuadExt(1);
  w(3, 4) = -sqrt3();
  w(4, 3) = sqrt3();
  return w;
}

// Flips the lower off-diagonal block (compact m -> m*).
template <ExactField F>
Matrix<F> flip_lower_block(const Matrix<F>& x) {
  Matrix<F> y(x);
  for (std::size_t r = 2; r < x.rows(); ++r)
    for (std::size_t c = 0; c < 2; ++c) y(r, c) = -x(r, c);
  return y;
}

inline Matrix<QuadExt> appendix_U_star() { return flip_lower_block(appendix_U()); }
inline Matrix<QuadExt> appendix_V_star() { return flip_lower_block(appendix_V()); }

inline LieAlgebra<QuadExt> appendix_so3() {
  return LieAlgebra<QuadExt>::from_basis(5, {appendix_U(), appendix_V(), appendix_W()}, "APPENDIX_SO3", eta(0, 5));
}

inline LieAlgebra<QuadExt> appendix_so12() {
  return LieAlgebra<QuadExt>::from_basis(5, {appendix_U_star(), appendix_V_star(), appendix_W()}, "APPENDIX_SO12",
                                         eta(2, 3));
}

inline LieAlgebra<QuadExt> appendix_so12_in(std::size_t n) {
  require(n >= 3, ErrorCode::BadParams, "APPENDIX_SO12 needs n >= 3");
  if (n == 3) return appendix_so12();
  return pad_algebra(appendix_so12(), n + 2, 0, "APPENDIX_SO12_in_SO(2," + std::to_string(n) + ")").with_form(eta(2, n));
}

// sl(2,R) (+) sl(2,R) acting on R^2 (x) R^2.
inline LieAlgebra<Rational> sl2_sl2_on_r22() {
  Matrix<Rational> h{{1, 0}, {0, -1}}, e{{0, 1}, {0, 0}}, f{{0, 0}, {1, 0}};
  auto id = Matrix<Rational>::identity(2);
  std::vector<Matrix<Rational>> elems;
  for (const auto& a : {h, e, f}) {
    elems.push_back(kron(a, id));
    elems.push_back(kron(id, a));
  }
  return LieAlgebra<Rational>::from_basis(4, elems, "SL2_SL2_on_R22");
}

// --- small test representations ---

inline LieAlgebra<Rational> so3_std() { return so(0, 3).named("SO3_STD"); }

inline LieAlgebra<Rational> sl2_std() {
  Matrix<Rational> h{{1, 0}, {0, -1}}, e{{0, 1}, {0, 0}}, f{{0, 0}, {1, 0}};
  return LieAlgebra<Rational>::from_basis(2, {h, e, f}, "SL2_STD");
}

// su(2) on C^2: i*sigma_z, i*sigma_x, i*sigma_y.
inline LieAlgebra<GaussRat> su2_c2() {
  const GaussRat i = GaussRat::i();
  Matrix<GaussRat> a{{i, GaussRat(0)}, {GaussRat(0), -i}};
  Matrix<GaussRat> b{{GaussRat(0), i}, {i, GaussRat(0)}};
  Matrix<GaussRat> c{{GaussRat(0), GaussRat(1)}, {GaussRat(-1), GaussRat(0)}};
  return LieAlgebra<GaussRat>::from_basis(2, {a, b, c}, "SU2_C2", eta(0, 2));
}

inline LieAlgebra<Rational> su2_r4() {
  return realify_real_span(su2_c2().generators(), "SU2_R4", eta(0, 4));
}

inline LieAlgebra<GaussRat> u1_weight(long w) {
  return LieAlgebra<GaussRat>::from_basis(1, {Matrix<GaussRat>{{GaussRat(Rational(0), Rational(w))}}},
                                          "U1_WEIGHT" + std::to_string(w));
}

// Block-diagonal antilinear structure matrix with J^2 = -1 on C^{2m}.
inline Matrix<GaussRat> quaternionic_j(std::size_t m) {
  Matrix<GaussRat> j(2 * m, 2 * m);
  for (std::size_t k = 0; k < m; ++k) {
    j(2 * k, 2 * k + 1) = GaussRat(-1);
    j(2 * k + 1, 2 * k) = GaussRat(1);
  }
  return j;
}

// Real antisymmetric matrices commuting with quaternionic_j(m), for m in {1, 2}.
inline LieAlgebra<GaussRat> toy_orthogonal_quaternionic(std::size_t m) {
  require(m == 1 || m == 2, ErrorCode::BadParams, "toy construction exists for m = 1, 2");
  std::vector<Matrix<GaussRat>> gens{quaternionic_j(m)};
  if (m == 2) {
    Matrix<GaussRat> a(4, 4);
    a(0, 2) = a(1, 3) = GaussRat(1);
    a(2, 0) = a(3, 1) = GaussRat(-1);
    gens.push_back(a);
  }
  return LieAlgebra<GaussRat>::from_basis(2 * m, gens, "TOY_SO_STAR(" + std::to_string(2 * m) + ")");
}

}  // namespace builtin

using AnyAlgebra = std::variant<LieAlgebra<Rational>, LieAlgebra<QuadExt>, LieAlgebra<GaussRat>, LieAlgebra<GaussQuad>>;

struct BuiltinInfo {
  std::string pattern;
  std::string help;
};

inline std::vector<BuiltinInfo> builtin_catalog() {
  return {
      {"SO(p,q)", "standard so(p,q) on R^{p,q}"},
      {"U(1,p)_real", "realified u(1,p) on R^{2,2p}"},
      {"SU(1,p)_real", "realified su(1,p) on R^{2,2p}"},
      {"S1_SO(1,p)_real", "i.R + so(1,p) acting C-linearly, realified"},
      {"APPENDIX_SO12", "span{U*,V*,W} in so(2,3); n=N pads into so(2,N)"},
      {"APPENDIX_SO3", "span{U,V,W} in so(5)"},
      {"SL2_SL2_on_R22", "sl(2,R)+sl(2,R) on R^2 (x) R^2"},
      {"SO12_BLOCK_P2", "so(2,1) top-left block of so(2,n); needs n=N"},
      {"I1_SU(1,k)", "su(1,k) realified in so(2,n); needs n=N"},
      {"I2_SO(1,k)", "so(1,k) inside realified su(1,n/2); needs n=N"},
      {"G1_SO(2,k)", "so(2,k) block of so(2,n); needs n=N"},
      {"G2_SO(1,k1)xSO(1,k2)", "type G2 isometry algebra; needs n=N"},
      {"P1_SO(1,k)", "so(1,k) fixing e0 in so(2,n); needs n=N"},
      {"SO3_STD", "so(3) on R^3"},
      {"SL2_STD", "sl(2,R) on R^2"},
      {"SU2_R4", "su(2) realified on R^4"},
      {"SU2_C2", "su(2) on C^2"},
      {"U1_WEIGHT", "u(1) on C acting with weight w; needs w=W"},
  };
}

// Resolves a builtin name such as "SO(2,3)" or "I2_SO(1,2)" with extra key=value parameters.
inline AnyAlgebra make_builtin(const std::string& name, const std::map<std::string, long>& params = {}) {
  auto param = [&](const std::string& key) -> std::size_t {
    auto it = params.find(key);
    require(it != params.end(), ErrorCode::BadParams, "builtin " + name + " needs parameter " + key);
    require(it->second >= 0, ErrorCode::BadParams, "parameter " + key + " must be non-negative");
    return static_cast<std::size_t>(it->second);
  };
  std::smatch m;
  auto num = [&](std::size_t k) { return static_cast<std::size_t>(std::stoul(m[k].str())); };
  if (std::regex_match(name, m, std::regex(R"(SO\((\d+),(\d+)\))"))) return builtin::so(num(1), num(2));
  if (std::regex_match(name, m, std::regex(R"(U\(1,(\d+)\)_real)"))) return builtin::u1p_real(num(1));
  if (std::regex_match(name, m, std::regex(R"(SU\(1,(\d+)\)_real)"))) return builtin::su1p_real(num(1));
  if (std::regex_match(name, m, std::regex(R"(S1_SO\(1,(\d+)\)_real)"))) return builtin::s1_so1p_real(num(1));
  if (name == "APPENDIX_SO12") return params.count("n") ? builtin::appendix_so12_in(param("n")) : builtin::appendix_so12();
  if (name == "APPENDIX_SO3") return builtin::appendix_so3();
  if (name == "SL2_SL2_on_R22") return builtin::sl2_sl2_on_r22();
  if (name == "SO12_BLOCK_P2") return builtin::so12_block_p2(param("n"));
  if (std::regex_match(name, m, std::regex(R"(I1_SU\(1,(\d+)\))"))) return builtin::su1k_in_so2n(num(1), param("n"));
  if (std::regex_match(name, m, std::regex(R"(I2_SO\(1,(\d+)\))"))) return builtin::so1k_in_su1p_real(num(1), param("n"));
  if (std::regex_match(name, m, std::regex(R"(G1_SO\(2,(\d+)\))"))) return builtin::g1_isometry(num(1), param("n"));
  if (std::regex_match(name, m, std::regex(R"(G2_SO\(1,(\d+)\)xSO\(1,(\d+)\))")))
    return builtin::g2_isometry(num(1), num(2), param("n"));
  if (std::regex_match(name, m, std::regex(R"(P1_SO\(1,(\d+)\))"))) return builtin::p1_isometry(num(1), param("n"));
  if (name == "SO3_STD") return builtin::so3_std();
  if (name == "SL2_STD") return builtin::sl2_std();
  if (name == "SU2_R4") return builtin::su2_r4();
  if (name == "SU2_C2") return builtin::su2_c2();
  if (name == "U1_WEIGHT") {
    auto it = params.find("w");
    require(it != params.end(), ErrorCode::BadParams, "U1_WEIGHT needs parameter w");
    return builtin::u1_weight(it->second);
  }
  throw Error(ErrorCode::BadParams, "unknown builtin '" + name + "'");
}

}  // namespace so2n
