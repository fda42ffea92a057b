#pragma once

#include <optional>
#include <string>
#include <vector>

#include "so2n/repcheck.hpp"

namespace so2n {

enum class Symmetry { Symmetric, Antisymmetric, Hermitian };

inline const char* symmetry_name(Symmetry s) {
  switch (s) {
    case Symmetry::Symmetric: return "SYMMETRIC";
    case Symmetry::Antisymmetric: return "ANTISYMMETRIC";
    case Symmetry::Hermitian: return "HERMITIAN";
  }
  return "?";
}

struct Signature {
  std::size_t neg = 0, pos = 0, null = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

namespace detail {

template <ExactField F>
int real_sign(const F& x) {
  if constexpr (GaussianField<F>) return sign(x.re());
  else return sign(x);
}

template <ExactField B>
std::optional<B> exact_root(const B& x) {
  if constexpr (std::is_same_v<B, Rational>) return exact_sqrt(x);
  else return exact_sqrt(x, radicand(x));
}

}  // namespace detail

// Sylvester signature by congruence; hermitian matrices over gaussian fields, symmetric otherwise.
template <ExactField F>
Signature signature(const Matrix<F>& m) {
  require(m.is_square(), ErrorCode::NotSymmetric, "signature of a non-square matrix");
  require(m.adjoint() == m, ErrorCode::NotSymmetric,
          GaussianField<F> ? "matrix is not hermitian" : "matrix is not symmetric");
  const std::size_t n = m.rows();
  Matrix<F> g = m;
  std::vector<bool> done(n, false);
  Signature s;
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t p = n;
    for (std::size_t i = 0; i < n && p == n; ++i)
      if (!done[i] && !is_zero(g(i, i))) p = i;
    if (p == n) {
      for (std::size_t i = 0; i < n && p == n; ++i)
        for (std::size_t j = 0; j < n && p == n; ++j) {
          if (done[i] || done[j] || i == j || is_zero(g(i, j))) continue;
          // basis vector e_i + c e_j with c = conj(g_ij) has norm 2|g_ij|^2
          F c = conj(g(i, j));
          for (std::size_t k = 0; k < n; ++k) g(k, i) += g(k, j) * c;
          for (std::size_t k = 0; k < n; ++k) g(i, k) += conj(c) * g(j, k);
          p = i;
        }
      if (p == n) break;
    }
    const F d = g(p, p);
    (detail::real_sign(d) > 0 ? s.pos : s.neg)++;
    done[p] = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i] || is_zero(g(i, p))) continue;
      F f = g(i, p) / d;
      for (std::size_t k = 0; k < n; ++k)
        if (!done[k] || k == p) g(i, k) -= f * g(p, k);
    }
  }
  s.null = n - s.neg - s.pos;
  return s;
}

template <ExactField F>
struct FormSpace {
  Symmetry symmetry = Symmetry::Symmetric;
  std::vector<Matrix<F>> basis;
  std::vector<Signature> signatures;  // one per basis member, symmetric/hermitian only
  std::size_t dim() const { return basis.size(); }
};

// Bilinear forms S(x,y) = x^T S y with A^T S + S A = 0; hermitian forms <x,y> = x^T H conj(y) with A^T H + H conj(A) = 0.
template <ExactField F>
bool is_invariant_form(const Matrix<F>& s, const std::vector<Matrix<F>>& gens, Symmetry sym) {
  for (const auto& a : gens) {
    Matrix<F> r = sym == Symmetry::Hermitian ? a.transpose() * s + s * a.conjugate() : a.transpose() * s + s * a;
    if (!r.is_zero()) return false;
  }
  return true;
}

namespace detail {

// Solution space of the invariance equations inside the span of family, with unknowns in C.
template <ExactField C, ExactField F>
std::vector<Matrix<F>> solve_form_family(const std::vector<Matrix<F>>& family, const std::vector<Matrix<F>>& gens,
                                         Symmetry sym) {
  const std::size_t n = family.front().rows();
  std::vector<Vector<C>> rows;
  for (const auto& a : gens) {
    std::vector<Matrix<F>> imgs;
    for (const auto& b : family)
      imgs.push_back(sym == Symmetry::Hermitian ? a.transpose() * b + b * a.conjugate() : a.transpose() * b + b * a);
    for (std::size_t e = 0; e < n * n; ++e) {
      if constexpr (std::is_same_v<C, F>) {
        Vector<C> r(family.size(), C(0));
        for (std::size_t k = 0; k < family.size(); ++k) r[k] = imgs[k].data()[e];
        if (!is_zero_vector(r)) rows.push_back(std::move(r));
      } else {
        Vector<C> re(family.size(), C(0)), im(family.size(), C(0));
        for (std::size_t k = 0; k < family.size(); ++k) {
          re[k] = imgs[k].data()[e].re();
          im[k] = imgs[k].data()[e].im();
        }
        if (!is_zero_vector(re)) rows.push_back(std::move(re));
        if (!is_zero_vector(im)) rows.push_back(std::move(im));
      }
    }
  }
  std::vector<Matrix<F>> out;
  for (const auto& c : kernel_of_rows(rows, family.size()).basis()) {
    Matrix<F> s(n, n);
    for (std::size_t k = 0; k < family.size(); ++k)
      if (!is_zero(c[k])) s += family[k] * lift<F>(c[k]);
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace detail

template <ExactField F>
FormSpace<F> invariant_forms(const Representation<F>& rep, Symmetry sym) {
  const std::size_t n = rep.dim();
  std::vector<Matrix<F>> family;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      if (sym == Symmetry::Antisymmetric) {
        if (i != j) family.push_back(Matrix<F>::unit(n, i, j) - Matrix<F>::unit(n, j, i));
        continue;
      }
      family.push_back(i == j ? Matrix<F>::unit(n, i, i) : Matrix<F>::unit(n, i, j) + Matrix<F>::unit(n, j, i));
      if constexpr (GaussianField<F>) {
        if (sym == Symmetry::Hermitian && i != j)
          family.push_back((Matrix<F>::unit(n, i, j) - Matrix<F>::unit(n, j, i)) * F::i());
      }
    }
  FormSpace<F> out;
  out.symmetry = sym;
  if (family.empty()) return out;
  if (sym == Symmetry::Hermitian) {
    if constexpr (GaussianField<F>) {
      out.basis = detail::solve_form_family<real_of<F>>(family, rep.generators(), sym);
    } else {
      throw Error(ErrorCode::FieldMismatch, "hermitian forms need a gaussian field");
    }
  } else {
    out.basis = detail::solve_form_family<F>(family, rep.generators(), sym);
  }
  bool has_signature = sym == Symmetry::Hermitian || (sym == Symmetry::Symmetric && OrderedField<F>);
  if (has_signature)
    for (auto& s : out.basis) {
      auto sig = signature(s);
      if (sig.neg > sig.pos) {
        s = -s;
        std::swap(sig.neg, sig.pos);
      }
      out.signatures.push_back(sig);
    }
  return out;
}

// External tensor product: generators A (x) I and I (x) B.
template <ExactField F>
Representation<F> tensor_rep(const Representation<F>& r1, const Representation<F>& r2) {
  const std::size_t n = r1.dim(), m = r2.dim();
  std::vector<Matrix<F>> gens;
  for (const auto& a : r1.generators()) gens.push_back(kron(a, Matrix<F>::identity(m)));
  for (const auto& b : r2.generators()) gens.push_back(kron(Matrix<F>::identity(n), b));
  return Representation<F>(n * m, std::move(gens), r1.name() + " (x) " + r2.name());
}

template <ExactField F, ExactField G>
  requires(!std::is_same_v<F, G>)
Representation<F> tensor_rep(const Representation<F>&, const Representation<G>&) {
  throw Error(ErrorCode::FieldMismatch, "tensor factors live over different fields");
}

// Antilinear map x -> m conj(x).
template <ExactField F>
  requires GaussianField<F>
struct Antilinear {
  Matrix<F> m;

  Vector<F> operator()(const Vector<F>& x) const {
    Vector<F> y;
    for (const auto& c : x) y.push_back(conj(c));
    return m * y;
  }

  // From its real 2n x 2n matrix in interleaved coordinates; rejects maps that are not antilinear.
  static Antilinear from_real(const Matrix<real_of<F>>& r) {
    require(r.is_square() && r.rows() % 2 == 0, ErrorCode::BadStructure, "antilinear map needs an even square matrix");
    const std::size_t n = r.rows() / 2;
    Matrix<F> m(n, n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const auto &a = r(2 * j, 2 * k), &b = r(2 * j, 2 * k + 1);
        require(r(2 * j + 1, 2 * k) == b && r(2 * j + 1, 2 * k + 1) == -a, ErrorCode::BadStructure,
                "real matrix does not anticommute with the complex structure");
        m(j, k) = F(a, b);
      }
    return Antilinear{m};
  }

  Matrix<real_of<F>> to_real() const {
    const std::size_t n = m.rows();
    Matrix<real_of<F>> r(2 * n, 2 * n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        r(2 * j, 2 * k) = m(j, k).re();
        r(2 * j, 2 * k + 1) = m(j, k).im();
        r(2 * j + 1, 2 * k) = m(j, k).im();
        r(2 * j + 1, 2 * k + 1) = -m(j, k).re();
      }
    return r;
  }

  Antilinear compose(const Antilinear& o) const { return Antilinear{m * o.m.conjugate()}; }
};

template <ExactField F>
struct HermitianConstruction {
  Matrix<F> form;       // <x,y> = x^T form conj(y)
  F rescaling;          // the bilinear form was multiplied by this factor first
  F lambda;             // conj(B(Jx,Jy)) = lambda B(x,y) before rescaling
  Signature signature;
};

namespace detail {

template <ExactField F>
void check_quaternionic_structure(const Antilinear<F>& j, const Representation<F>& rep) {
  const std::size_t n = rep.dim();
  require(j.m.rows() == n && j.m.cols() == n, ErrorCode::DimensionMismatch, "J has the wrong size");
  require(j.m * j.m.conjugate() == -Matrix<F>::identity(n), ErrorCode::BadStructure, "J^2 != -Id");
  for (const auto& a : rep.generators())
    require(j.m * a.conjugate() == a * j.m, ErrorCode::BadStructure, "J does not commute with the algebra");
}

// Rescales B so that B(Jx,Jy) = conj B(x,y); returns (factor, lambda).
template <ExactField F>
std::pair<F, F> compatibility_rescaling(const Antilinear<F>& j, const Matrix<F>& b) {
  Matrix<F> bhat = (j.m.transpose() * b * j.m).conjugate();
  std::optional<F> lambda;
  for (std::size_t k = 0; k < b.data().size() && !lambda; ++k)
    if (!is_zero(b.data()[k])) lambda = bhat.data()[k] / b.data()[k];
  require(lambda && bhat == b * *lambda, ErrorCode::BadStructure, "conj B(J.,J.) is not a multiple of B");
  require(*lambda * conj(*lambda) == F(1), ErrorCode::BadStructure, "rescaling factor is not unimodular");
  F mu = *lambda == F(-1) ? F::i() : F(1) + *lambda;
  return {mu, *lambda};
}

}  // namespace detail

template <ExactField F>
  requires GaussianField<F>
HermitianConstruction<F> hermitian_from_symplectic(const Antilinear<F>& j, const Matrix<F>& omega,
                                                   const Representation<F>& rep) {
  detail::check_quaternionic_structure(j, rep);
  const std::size_t n = rep.dim();
  require(omega.rows() == n && omega.cols() == n, ErrorCode::DimensionMismatch, "omega has the wrong size");
  require(omega.transpose() == -omega, ErrorCode::BadStructure, "omega is not antisymmetric");
  require(rank(omega) == n, ErrorCode::BadStructure, "omega is degenerate");
  require(is_invariant_form(omega, rep.generators(), Symmetry::Antisymmetric), ErrorCode::BadStructure,
          "omega is not invariant");
  auto [mu, lambda] = detail::compatibility_rescaling(j, omega);
  Matrix<F> h = omega * mu * j.m;
  require(h.adjoint() == h, ErrorCode::BadStructure, "constructed form is not hermitian");
  require(j.m.transpose() * h * j.m.conjugate() == h.conjugate(), ErrorCode::BadStructure, "form is not J-compatible");
  require(is_invariant_form(h, rep.generators(), Symmetry::Hermitian), ErrorCode::BadStructure,
          "form is not invariant");
  return {h, mu, lambda, signature(h)};
}

template <ExactField F>
  requires GaussianField<F>
HermitianConstruction<F> hermitian_from_symplectic(const Matrix<real_of<F>>& j_real, const Matrix<F>& omega,
                                                   const Representation<F>& rep) {
  return hermitian_from_symplectic(Antilinear<F>::from_real(j_real), omega, rep);
}

template <ExactField F>
  requires GaussianField<F>
HermitianConstruction<F> hermitian_from_symmetric(const Antilinear<F>& j, const Matrix<F>& sigma,
                                                  const Representation<F>& rep) {
  detail::check_quaternionic_structure(j, rep);
  const std::size_t n = rep.dim();
  require(sigma.rows() == n && sigma.cols() == n, ErrorCode::DimensionMismatch, "sigma has the wrong size");
  require(sigma.transpose() == sigma, ErrorCode::BadStructure, "sigma is not symmetric");
  require(rank(sigma) == n, ErrorCode::BadStructure, "sigma is degenerate");
  require(is_invariant_form(sigma, rep.generators(), Symmetry::Symmetric), ErrorCode::BadStructure,
          "sigma is not invariant");
  auto [mu, lambda] = detail::compatibility_rescaling(j, sigma);
  Matrix<F> h = sigma * (mu * F::i()) * j.m;
  require(h.adjoint() == h, ErrorCode::BadStructure, "constructed form is not hermitian");
  require(j.m.transpose() * h * j.m.conjugate() == -h.conjugate(), ErrorCode::BadStructure,
          "form is not J-anti-compatible");
  require(is_invariant_form(h, rep.generators(), Symmetry::Hermitian), ErrorCode::BadStructure,
          "form is not invariant");
  auto sig = signature(h);
  require(sig.neg == sig.pos && sig.null == 0, ErrorCode::BadStructure, "form is not of neutral signature");
  return {h, mu * F::i(), lambda, sig};
}

template <ExactField F>
  requires GaussianField<F>
HermitianConstruction<F> hermitian_from_symmetric(const Matrix<real_of<F>>& j_real, const Matrix<F>& sigma,
                                                  const Representation<F>& rep) {
  return hermitian_from_symmetric(Antilinear<F>::from_real(j_real), sigma, rep);
}

enum class Conjugation { NotSelfConjugate, RealConj, QuaternionicConj };

inline const char* conjugation_name(Conjugation c) {
  switch (c) {
    case Conjugation::NotSelfConjugate: return "NOT_SELF_CONJUGATE";
    case Conjugation::RealConj: return "REAL_CONJ";
    case Conjugation::QuaternionicConj: return "QUATERNIONIC_CONJ";
  }
  return "?";
}

template <ExactField F>
struct ConjugationResult {
  Conjugation kind = Conjugation::NotSelfConjugate;
  std::optional<Antilinear<F>> c;  // invariant antilinear map with C^2 = lambda Id
  real_of<F> lambda = real_of<F>(0);
  bool normalized = false;          // lambda is exactly +1 or -1
};

template <ExactField F>
  requires GaussianField<F>
ConjugationResult<F> conjugation_analysis(const Representation<F>& rep, std::uint64_t seed = default_seed,
                                          std::size_t budget = default_budget) {
  require(decide_irreducibility(rep, seed, budget).verdict == Irreducibility::Irreducible, ErrorCode::NotIrreducible,
          "conjugation analysis needs an irreducible representation");
  const std::size_t n = rep.dim(), n2 = n * n;
  // M conj(A) = A M, linear in M.
  std::vector<Vector<F>> rows;
  for (const auto& a : rep.generators()) {
    Matrix<F> ab = a.conjugate();
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        Vector<F> row(n2, F(0));
        for (std::size_t k = 0; k < n; ++k) {
          row[r * n + k] += ab(k, c);
          row[k * n + c] -= a(r, k);
        }
        if (!is_zero_vector(row)) rows.push_back(std::move(row));
      }
  }
  auto sol = kernel_of_rows(rows, n2);
  ConjugationResult<F> out;
  if (sol.is_zero()) return out;
  require(sol.dim() == 1, ErrorCode::BadStructure, "antilinear intertwiners are not unique up to scale");
  Antilinear<F> c{unflatten(sol.basis().front(), n, n)};
  Matrix<F> sq = c.m * c.m.conjugate();
  F l = sq(0, 0);
  require(sq == Matrix<F>::identity(n) * l && is_zero(l.im()) && !is_zero(l), ErrorCode::BadStructure,
          "C^2 is not a nonzero real scalar");
  out.lambda = l.re();
  out.kind = sign(out.lambda) > 0 ? Conjugation::RealConj : Conjugation::QuaternionicConj;
  if (auto r = detail::exact_root(sign(out.lambda) > 0 ? out.lambda : -out.lambda)) {
    c.m *= F(real_of<F>(1) / *r);
    out.lambda = real_of<F>(sign(out.lambda));
    out.normalized = true;
  }
  out.c = c;
  return out;
}

}  // namespace so2n
