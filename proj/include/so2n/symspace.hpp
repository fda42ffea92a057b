#pragma once

#include <optional>
#include <string>
#include <vector>

#include "so2n/builtins.hpp"
#include "so2n/repcheck.hpp"

namespace so2n {

// ---- Cartan decomposition, duality, Lie triples ----

enum class CartanVariant { Noncompact, Compact };

template <ExactField F = Rational>
struct CartanDecomposition {
  CartanVariant variant = CartanVariant::Noncompact;
  std::size_t n = 0;
  LieAlgebra<F> ambient;
  std::vector<Matrix<F>> k_basis;
  std::vector<Matrix<F>> m_basis;
  MatrixSpace<F> k;
  MatrixSpace<F> m;

  bool verify() const {
    auto inside = [](const MatrixSpace<F>& a, const MatrixSpace<F>& b, const MatrixSpace<F>& into) {
      for (const auto& x : a.basis())
        for (const auto& y : b.basis())
          if (!into.contains(bracket(x, y))) return false;
      return true;
    };
    return inside(k, k, k) && inside(k, m, m) && inside(m, m, k);
  }
};

// M(u, v): off-diagonal element with lower-left columns u, v.
template <ExactField F = Rational>
Matrix<F> m_element(const std::vector<F>& u, const std::vector<F>& v, CartanVariant variant) {
  return builtin::block_m(u, v, variant == CartanVariant::Noncompact);
}

template <ExactField F = Rational>
CartanDecomposition<F> cartan(std::size_t n, CartanVariant variant = CartanVariant::Noncompact) {
  require(n >= 1, ErrorCode::BadParams, "Cartan decomposition needs n >= 1");
  CartanDecomposition<F> d;
  d.variant = variant;
  d.n = n;
  const bool nc = variant == CartanVariant::Noncompact;
  auto form = nc ? eta(2, n) : eta(0, n + 2);
  d.ambient = builtin::so<F>(form.neg, form.pos);
  Matrix<F> rot(n + 2, n + 2);
  rot(0, 1) = F(-1);
  rot(1, 0) = F(1);
  d.k_basis.push_back(rot);
  for (const auto& x : builtin::orthogonal_basis_on<F>(eta(0, n + 2), builtin::iota(2, n))) d.k_basis.push_back(x);
  for (std::size_t c = 0; c < 2; ++c)
    for (std::size_t r = 0; r < n; ++r) {
      std::vector<F> u(n, F(0)), v(n, F(0));
      (c == 0 ? u : v)[r] = F(1);
      d.m_basis.push_back(m_element(u, v, variant));
    }
  d.k = MatrixSpace<F>::span(n + 2, n + 2, d.k_basis);
  d.m = MatrixSpace<F>::span(n + 2, n + 2, d.m_basis);
  require(d.k.dim() + d.m.dim() == d.ambient.dim(), ErrorCode::BadStructure, "k + m does not fill the algebra");
  require(d.verify(), ErrorCode::BadStructure, "bracket inclusions fail");
  return d;
}

template <ExactField F>
bool in_compact_m(const Matrix<F>& x) {
  if (!x.is_square() || x.rows() < 3) return false;
  const std::size_t n = x.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      bool off = (i < 2) != (j < 2);
      if (!off && !is_zero(x(i, j))) return false;
      if (off && i >= 2 && x(j, i) != -x(i, j)) return false;
    }
  return true;
}

// Compact m -> noncompact m*, flipping the lower off-diagonal block.
template <ExactField F>
Matrix<F> dualize(const Matrix<F>& x) {
  require(in_compact_m(x), ErrorCode::NotInM, "element is not in the compact m");
  return builtin::flip_lower_block(x);
}

// [[m', m'], m'] inside m'.
template <ExactField F>
bool is_lie_triple(const MatrixSpace<F>& mp, const CartanDecomposition<F>& d) {
  for (const auto& x : mp.basis()) require(d.m.contains(x), ErrorCode::NotInM, "subspace leaves m");
  const auto& b = mp.basis();
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j) {
      auto ij = bracket(b[i], b[j]);
      for (const auto& c : b)
        if (!mp.contains(bracket(ij, c))) return false;
    }
  return true;
}

// ---- Lie ball model ----

template <GaussianField C = GaussQuad>
struct ProjectivePoint {
  std::vector<C> z;

  std::size_t size() const { return z.size(); }
  bool is_zero() const {
    for (const auto& c : z)
      if (!so2n::is_zero(c)) return false;
    return true;
  }

  // First nonzero coordinate scaled to 1.
  ProjectivePoint canonical() const {
    for (const auto& c : z)
      if (!so2n::is_zero(c)) {
        ProjectivePoint p{z};
        C inv = C(1) / c;
        for (auto& w : p.z) w *= inv;
        return p;
      }
    throw Error(ErrorCode::DomainViolation, "zero vector is not a projective point");
  }

  friend bool operator==(const ProjectivePoint& a, const ProjectivePoint& b) {
    if (a.size() != b.size() || a.is_zero() || b.is_zero()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = i + 1; j < a.size(); ++j)
        if (a.z[i] * b.z[j] != a.z[j] * b.z[i]) return false;
    return true;
  }
};

template <GaussianField C = GaussQuad>
ProjectivePoint<C> pi0(std::size_t n) {
  ProjectivePoint<C> p{std::vector<C>(n + 2, C(0))};
  p.z[0] = C(1);
  p.z[1] = C::i();
  return p;
}

// -z0^2 - z1^2 + sum z_j^2.
template <GaussianField C>
C quadric_residual(const ProjectivePoint<C>& p) {
  require(p.size() >= 2, ErrorCode::DimensionMismatch, "a point of the Lie ball model needs at least 2 coordinates");
  C s(0);
  for (std::size_t j = 0; j < p.size(); ++j) s += j < 2 ? -(p.z[j] * p.z[j]) : p.z[j] * p.z[j];
  return s;
}

// q(Z, W) = -z0 conj(w0) - z1 conj(w1) + sum z_j conj(w_j).
template <GaussianField C>
C hermitian_q(const ProjectivePoint<C>& a, const ProjectivePoint<C>& b) {
  require(a.size() == b.size() && a.size() >= 2, ErrorCode::DimensionMismatch, "point sizes differ");
  C s(0);
  for (std::size_t j = 0; j < a.size(); ++j) {
    C t = a.z[j] * conj(b.z[j]);
    s += j < 2 ? -t : t;
  }
  return s;
}

// Im(conj(z0) z1): orientation of the plane's projection onto span(e0, e1).
template <GaussianField C>
real_of<C> orientation(const ProjectivePoint<C>& p) {
  require(p.size() >= 2, ErrorCode::DimensionMismatch, "a point of the Lie ball model needs at least 2 coordinates");
  return (conj(p.z[0]) * p.z[1]).im();
}

template <GaussianField C>
bool on_quadric(const ProjectivePoint<C>& p) {
  return !p.is_zero() && is_zero(quadric_residual(p));
}

// Negative point of the quadric in the component of Pi_0.
template <GaussianField C>
bool in_lieball(const ProjectivePoint<C>& p) {
  return on_quadric(p) && sign(hermitian_q(p, p).re()) < 0 && sign(orientation(p)) > 0;
}

template <OrderedField F = Rational>
struct NegativePlane {
  Vector<F> a;
  Vector<F> b;

  std::size_t ambient_dim() const { return a.size(); }
  Subspace<F> span() const { return Subspace<F>::span(a.size(), {a, b}); }

  bool valid() const {
    if (a.size() != b.size() || a.size() < 2) return false;
    auto f = [&](const Vector<F>& x, const Vector<F>& y) {
      F s(0);
      for (std::size_t j = 0; j < x.size(); ++j) s += j < 2 ? -(x[j] * y[j]) : x[j] * y[j];
      return s;
    };
    F aa = f(a, a);
    return is_zero(f(a, b)) && aa == f(b, b) && sign(aa) < 0;
  }
};

template <OrderedField F = Rational>
NegativePlane<F> pi0_plane(std::size_t n) {
  return {unit_vector<F>(n + 2, 0), unit_vector<F>(n + 2, 1)};
}

template <OrderedField F>
ProjectivePoint<Gauss<F>> plane_to_point(const NegativePlane<F>& p) {
  require(p.valid(), ErrorCode::NotNegativePlane, "need <A,B> = 0 and q(A,A) = q(B,B) < 0");
  ProjectivePoint<Gauss<F>> z;
  for (std::size_t j = 0; j < p.a.size(); ++j) z.z.emplace_back(p.a[j], p.b[j]);
  return z;
}

template <GaussianField C>
NegativePlane<real_of<C>> point_to_plane(const ProjectivePoint<C>& z) {
  require(on_quadric(z) && sign(hermitian_q(z, z).re()) < 0, ErrorCode::NotInLieBall,
          "point is not a negative point of the quadric");
  auto c = z.canonical();
  NegativePlane<real_of<C>> p;
  for (const auto& w : c.z) {
    p.a.push_back(w.re());
    p.b.push_back(w.im());
  }
  return p;
}

// ---- totally geodesic embeddings ----

enum class EmbeddingType { I1, I2, G1, G2, P1, P2 };

inline const char* embedding_name(EmbeddingType t) {
  switch (t) {
    case EmbeddingType::I1: return "I1";
    case EmbeddingType::I2: return "I2";
    case EmbeddingType::G1: return "G1";
    case EmbeddingType::G2: return "G2";
    case EmbeddingType::P1: return "P1";
    case EmbeddingType::P2: return "P2";
  }
  return "?";
}

inline EmbeddingType parse_embedding_type(const std::string& s) {
  for (auto t : {EmbeddingType::I1, EmbeddingType::I2, EmbeddingType::G1, EmbeddingType::G2, EmbeddingType::P1,
                 EmbeddingType::P2})
    if (s == embedding_name(t)) return t;
  throw Error(ErrorCode::BadParams, "unknown embedding type '" + s + "'");
}

// k1 is k for the one-parameter types; P2 ignores both.
struct EmbeddingSpec {
  EmbeddingType type = EmbeddingType::I1;
  std::size_t k1 = 1;
  std::size_t k2 = 0;
  std::size_t n = 2;

  void validate() const {
    require(n >= 1, ErrorCode::BadParams, "ambient n must be >= 1");
    switch (type) {
      case EmbeddingType::I1:
      case EmbeddingType::I2:
        require(k1 >= 1 && 2 * k1 <= n, ErrorCode::BadParams, "needs 1 <= k <= n/2");
        break;
      case EmbeddingType::G1:
        require(k1 >= 1 && k1 + 1 <= n, ErrorCode::BadParams, "needs 1 <= k <= n-1");
        break;
      case EmbeddingType::G2:
        require(k1 + k2 >= 1 && k1 + k2 <= n, ErrorCode::BadParams, "needs 1 <= k1+k2 <= n");
        break;
      case EmbeddingType::P1:
        require(k1 >= 1 && k1 <= n, ErrorCode::BadParams, "needs 1 <= k <= n");
        break;
      case EmbeddingType::P2:
        require(n >= 2, ErrorCode::BadParams, "needs n >= 2");
        break;
    }
  }

  std::size_t source_k() const { return type == EmbeddingType::P2 ? 1 : k1; }

  std::size_t input_size() const {
    switch (type) {
      case EmbeddingType::I1:
      case EmbeddingType::I2:
      case EmbeddingType::P1: return k1 + 1;
      case EmbeddingType::G1: return k1 + 2;
      case EmbeddingType::G2: return k1 + k2 + 2;
      case EmbeddingType::P2: return 3;
    }
    return 0;
  }

  bool real_input() const {
    return type == EmbeddingType::I2 || type == EmbeddingType::G2 || type == EmbeddingType::P1;
  }

  std::string label() const {
    std::string s = embedding_name(type);
    if (type == EmbeddingType::G2) s += "(" + std::to_string(k1) + "," + std::to_string(k2) + ")";
    else if (type != EmbeddingType::P2) s += "(" + std::to_string(k1) + ")";
    return s + " n=" + std::to_string(n);
  }
};

namespace detail {

// -x0^2 + sum x_i^2 over a block of coordinates (hermitian for complex entries).
inline Rational lorentz_norm(const std::vector<GaussRat>& x, std::size_t from, std::size_t count) {
  Rational s(0);
  for (std::size_t j = 0; j < count; ++j) s += j == 0 ? -x[from].norm() : x[from + j].norm();
  return s;
}

inline GaussQuad up(const GaussRat& x) { return GaussQuad(QuadExt(x.re()), QuadExt(x.im())); }

}  // namespace detail

// Whether the input satisfies the type's domain inequality.
inline bool embedding_domain(const EmbeddingSpec& spec, const std::vector<GaussRat>& x) {
  spec.validate();
  if (x.size() != spec.input_size()) return false;
  if (spec.real_input())
    for (const auto& c : x)
      if (!c.is_real()) return false;
  switch (spec.type) {
    case EmbeddingType::I1:
    case EmbeddingType::I2:
    case EmbeddingType::P1: return detail::lorentz_norm(x, 0, spec.k1 + 1).sign() < 0;
    case EmbeddingType::G2:
      return detail::lorentz_norm(x, 0, spec.k1 + 1).sign() < 0 &&
             detail::lorentz_norm(x, spec.k1 + 1, spec.k2 + 1).sign() < 0;
    case EmbeddingType::G1:
    case EmbeddingType::P2: {
      ProjectivePoint<GaussRat> p{x};
      return in_lieball(p);
    }
  }
  return false;
}

inline ProjectivePoint<GaussQuad> embed(const EmbeddingSpec& spec, const std::vector<GaussRat>& x) {
  spec.validate();
  require(x.size() == spec.input_size(), ErrorCode::BadParams,
          spec.label() + " takes " + std::to_string(spec.input_size()) + " coordinates");
  require(embedding_domain(spec, x), ErrorCode::DomainViolation, "input violates the " + spec.label() + " domain");
  const GaussQuad i = GaussQuad::i();
  ProjectivePoint<GaussQuad> out{std::vector<GaussQuad>(spec.n + 2, GaussQuad(0))};
  switch (spec.type) {
    case EmbeddingType::I1:
    case EmbeddingType::I2:
      for (std::size_t j = 0; j <= spec.k1; ++j) {
        out.z[2 * j] = detail::up(x[j]);
        out.z[2 * j + 1] = i * detail::up(x[j]);
      }
      break;
    case EmbeddingType::G1:
    case EmbeddingType::P2:
      for (std::size_t j = 0; j < x.size(); ++j) out.z[j] = detail::up(x[j]);
      break;
    case EmbeddingType::G2: {
      // Rescale y so both factors have the same Lorentz norm, both leading entries positive.
      const std::size_t k1 = spec.k1, k2 = spec.k2;
      Rational a = -detail::lorentz_norm(x, 0, k1 + 1), b = -detail::lorentz_norm(x, k1 + 1, k2 + 1);
      QuadExt s = radical_sqrt(a / b);
      QuadExt sx(x[0].re().sign() > 0 ? 1 : -1), sy = x[k1 + 1].re().sign() > 0 ? s : -s;
      out.z[0] = GaussQuad(sx * QuadExt(x[0].re()));
      out.z[1] = i * GaussQuad(sy * QuadExt(x[k1 + 1].re()));
      for (std::size_t j = 1; j <= k1; ++j) out.z[1 + j] = GaussQuad(sx * QuadExt(x[j].re()));
      for (std::size_t j = 1; j <= k2; ++j) out.z[1 + k1 + j] = i * GaussQuad(sy * QuadExt(x[k1 + 1 + j].re()));
      break;
    }
    case EmbeddingType::P1: {
      // Lorentz norm -1 with x0 < 0.
      QuadExt s = radical_sqrt(-detail::lorentz_norm(x, 0, spec.k1 + 1));
      QuadExt f = x[0].re().sign() < 0 ? QuadExt(1) / s : QuadExt(-1) / s;
      out.z[0] = i;
      for (std::size_t j = 0; j <= spec.k1; ++j) out.z[1 + j] = GaussQuad(f * QuadExt(x[j].re()));
      break;
    }
  }
  require(in_lieball(out), ErrorCode::BadStructure, "embedded point left the Lie ball");
  return out;
}

// ---- lifts, fixers, parabolic subalgebras ----

template <ExactField F>
Subspace<F> invariant_hull(const LieAlgebra<F>& g, const std::vector<Vector<F>>& seeds) {
  Subspace<F> start = Subspace<F>::span(g.ambient_dim(), seeds);
  return spin(start, g.generators());
}

template <ExactField F>
bool is_full(const Subspace<F>& hull) {
  return hull.is_whole();
}

namespace detail {

// Coefficient vectors c with sum_i c_i images[i] = 0.
template <ExactField F>
std::vector<Vector<F>> linear_relations(const std::vector<Vector<F>>& images, std::size_t d) {
  if (d == 0) return {};
  std::size_t len = images.empty() ? 0 : images.front().size();
  std::vector<Vector<F>> rows(len, Vector<F>(d, F(0)));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t r = 0; r < len; ++r) rows[r][i] = images[i][r];
  return kernel_of_rows(rows, d).basis();
}

template <ExactField F>
std::vector<Matrix<F>> combine(const std::vector<Vector<F>>& coeffs, const std::vector<Matrix<F>>& basis,
                               std::size_t n) {
  std::vector<Matrix<F>> out;
  for (const auto& c : coeffs) {
    Matrix<F> x(n, n);
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (!is_zero(c[i])) x += basis[i] * c[i];
    out.push_back(x);
  }
  return out;
}

// {X in span(basis) : X w in s for every w in s}.
template <ExactField F>
std::vector<Matrix<F>> stabilizer_of(const std::vector<Matrix<F>>& basis, const Subspace<F>& s, std::size_t n) {
  std::vector<Vector<F>> images;
  for (const auto& x : basis) {
    Vector<F> flat;
    for (const auto& w : s.basis()) {
      auto r = s.reduce(x * w);
      flat.insert(flat.end(), r.begin(), r.end());
    }
    images.push_back(flat);
  }
  return combine(linear_relations(images, basis.size()), basis, n);
}

}  // namespace detail

// Largest subspace N of the plane stabilizer in g with [h, N] inside N (h = g by default).
template <OrderedField F>
LieAlgebra<F> fixer_algebra(const LieAlgebra<F>& g, const NegativePlane<F>& base,
                            const std::optional<std::vector<Matrix<F>>>& h = std::nullopt) {
  require(base.valid(), ErrorCode::NotNegativePlane, "base plane is not negative definite");
  require(base.ambient_dim() == g.ambient_dim(), ErrorCode::DimensionMismatch, "plane and algebra sizes differ");
  const std::size_t n = g.ambient_dim();
  const auto& act = h ? *h : g.generators();
  auto current = detail::stabilizer_of(g.basis(), base.span(), n);
  while (!current.empty()) {
    MatrixSpace<F> space = MatrixSpace<F>::span(n, n, current);
    std::vector<Vector<F>> images;
    for (const auto& y : current) {
      Vector<F> flat;
      for (const auto& a : act) {
        auto r = space.flat().reduce(flatten(bracket(a, y)));
        flat.insert(flat.end(), r.begin(), r.end());
      }
      images.push_back(flat);
    }
    auto next = detail::combine(detail::linear_relations(images, current.size()), current, n);
    if (next.size() == current.size()) break;
    current = next;
  }
  return LieAlgebra<F>::from_basis(n, current, "fixer");
}

// {A in so(neg, pos) : A v in span(v)} for a light-like v.
template <ExactField F = Rational>
LieAlgebra<F> parabolic_algebra(std::size_t neg, std::size_t pos, const Vector<F>& v) {
  auto form = eta(neg, pos);
  require(v.size() == form.dim(), ErrorCode::DimensionMismatch, "vector length differs from the ambient");
  F q(0);
  for (std::size_t j = 0; j < v.size(); ++j) q += F(form.entry(j)) * v[j] * v[j];
  require(!is_zero_vector(v) && is_zero(q), ErrorCode::NotLightlike, "vector is not light-like");
  auto g = builtin::so<F>(neg, pos);
  auto line = Subspace<F>::span(v.size(), {v});
  return LieAlgebra<F>::from_basis(v.size(), detail::stabilizer_of(g.basis(), line, v.size()), "parabolic", form);
}

// dim(g + p) == dim ambient.
template <ExactField F>
bool local_transitivity(const LieAlgebra<F>& g, const LieAlgebra<F>& p, const LieAlgebra<F>& ambient) {
  require(g.ambient_dim() == ambient.ambient_dim() && p.ambient_dim() == ambient.ambient_dim(),
          ErrorCode::DimensionMismatch, "algebras act on different spaces");
  MatrixSpace<F> sum(ambient.ambient_dim(), ambient.ambient_dim());
  for (const auto* a : {&g, &p})
    for (const auto& x : a->basis()) {
      require(ambient.contains(x), ErrorCode::DimensionMismatch, "subalgebra is not inside the ambient algebra");
      sum.add(x);
    }
  return sum.dim() == ambient.dim();
}

}  // namespace so2n
