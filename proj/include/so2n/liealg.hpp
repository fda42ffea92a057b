#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "so2n/matrix.hpp"

namespace so2n {

// eta = diag(-1 x neg, +1 x pos).
struct SignatureForm {
  std::size_t neg = 0;
  std::size_t pos = 0;

  std::size_t dim() const { return neg + pos; }
  int entry(std::size_t i) const { return i < neg ? -1 : 1; }

  template <ExactField F>
  Matrix<F> matrix() const {
    std::vector<F> d;
    for (std::size_t i = 0; i < dim(); ++i) d.push_back(F(entry(i)));
    return Matrix<F>::diagonal(d);
  }

  friend bool operator==(const SignatureForm&, const SignatureForm&) = default;
};

inline SignatureForm eta(std::size_t p, std::size_t q) { return SignatureForm{p, q}; }

template <ExactField F>
class LieAlgebra {
 public:
  LieAlgebra() = default;
  explicit LieAlgebra(std::size_t ambient, std::string name = {}) : space_(ambient, ambient), name_(std::move(name)) {}

  // Normalizes the span of elems; throws BAD_STRUCTURE unless it is bracket-closed.
  static LieAlgebra from_basis(std::size_t ambient, const std::vector<Matrix<F>>& elems, std::string name = {},
                               std::optional<SignatureForm> form = std::nullopt) {
    LieAlgebra g(ambient, std::move(name));
    g.space_ = MatrixSpace<F>::span(ambient, ambient, elems);
    g.gens_ = elems;
    g.form_ = form;
    require(g.is_closed(), ErrorCode::BadStructure, "span is not closed under the bracket");
    return g;
  }

  std::size_t ambient_dim() const { return space_.rows(); }
  std::size_t dim() const { return space_.dim(); }
  const std::vector<Matrix<F>>& basis() const& { return space_.basis(); }
  std::vector<Matrix<F>> basis() && { return space_.basis(); }
  // Elements as supplied; over a gaussian field these span a real form, the basis its complex span.
  const std::vector<Matrix<F>>& generators() const& { return gens_.empty() ? basis() : gens_; }
  std::vector<Matrix<F>> generators() && { return gens_.empty() ? space_.basis() : gens_; }
  const MatrixSpace<F>& space() const { return space_; }
  const std::string& name() const { return name_; }
  const std::optional<SignatureForm>& form() const { return form_; }

  bool contains(const Matrix<F>& x) const { return space_.contains(x); }
  std::optional<Vector<F>> coordinates(const Matrix<F>& x) const { return space_.coordinates(x); }

  bool is_closed() const {
    const auto& b = basis();
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = i + 1; j < b.size(); ++j)
        if (!contains(bracket(b[i], b[j]))) return false;
    return true;
  }

  LieAlgebra named(std::string name) const {
    LieAlgebra g(*this);
    g.name_ = std::move(name);
    return g;
  }
  LieAlgebra with_form(SignatureForm f) const {
    LieAlgebra g(*this);
    g.form_ = f;
    return g;
  }

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) { return a.space_ == b.space_; }

 private:
  MatrixSpace<F> space_;
  std::vector<Matrix<F>> gens_;
  std::string name_;
  std::optional<SignatureForm> form_;
};

template <ExactField F>
LieAlgebra<F> bracket_closure(const std::vector<Matrix<F>>& gens, std::size_t max_dim, std::string name = {}) {
  require(!gens.empty(), ErrorCode::DimensionMismatch, "no generators");
  const std::size_t n = gens.front().rows();
  MatrixSpace<F> space(n, n);
  std::vector<Matrix<F>> raw;
  auto push = [&](const Matrix<F>& x) {
    require(x.rows() == n && x.cols() == n, ErrorCode::DimensionMismatch, "generators must be square of equal size");
    if (!space.add(x)) return;
    raw.push_back(x);
    if (raw.size() > max_dim)
      throw Error(ErrorCode::ClosureBudgetExceeded, "closure exceeds dimension " + std::to_string(max_dim));
  };
  for (const auto& g : gens) push(g);
  for (std::size_t i = 0; i < raw.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) push(bracket(raw[i], raw[j]));
  return LieAlgebra<F>::from_basis(n, raw, std::move(name));
}

template <ExactField F>
LieAlgebra<F> bracket_closure(const std::vector<Matrix<F>>& gens) {
  require(!gens.empty(), ErrorCode::DimensionMismatch, "no generators");
  std::size_t n = gens.front().rows();
  return bracket_closure(gens, n * n);
}

// A^T eta + eta A = 0 for every basis element (A^H eta + eta A = 0 over gaussian fields).
template <ExactField F>
bool check_orthogonality(const LieAlgebra<F>& g, const SignatureForm& form) {
  require(form.dim() == g.ambient_dim(), ErrorCode::DimensionMismatch, "signature form size differs from ambient");
  Matrix<F> e = form.matrix<F>();
  for (const auto& a : g.generators()) {
    Matrix<F> lhs = a.adjoint() * e + e * a;
    if (!lhs.is_zero()) return false;
  }
  return true;
}

template <ExactField F>
LieAlgebra<F> center(const LieAlgebra<F>& g) {
  const auto& b = g.basis();
  const std::size_t d = b.size();
  LieAlgebra<F> zero(g.ambient_dim(), "center");
  if (d == 0) return zero;
  // Column i of the system holds [b_i, b_j] for all j, stacked.
  const std::size_t n2 = g.ambient_dim() * g.ambient_dim();
  std::vector<Vector<F>> rows(n2 * d, Vector<F>(d, F(0)));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      auto c = flatten(bracket(b[i], b[j]));
      for (std::size_t k = 0; k < n2; ++k) rows[j * n2 + k][i] = c[k];
    }
  auto ker = kernel_of_rows(rows, d);
  std::vector<Matrix<F>> elems;
  for (const auto& c : ker.basis()) {
    Matrix<F> z(g.ambient_dim(), g.ambient_dim());
    for (std::size_t i = 0; i < d; ++i)
      if (!is_zero(c[i])) z += b[i] * c[i];
    elems.push_back(z);
  }
  return LieAlgebra<F>::from_basis(g.ambient_dim(), elems, "center");
}

// Interleaved realification: complex coordinate k becomes real coordinates 2k, 2k+1.
template <ExactField B>
Matrix<B> realify(const Matrix<Gauss<B>>& m) {
  Matrix<B> r(2 * m.rows(), 2 * m.cols());
  for (std::size_t j = 0; j < m.rows(); ++j)
    for (std::size_t k = 0; k < m.cols(); ++k) {
      const auto& z = m(j, k);
      r(2 * j, 2 * k) = z.re();
      r(2 * j, 2 * k + 1) = -z.im();
      r(2 * j + 1, 2 * k) = z.im();
      r(2 * j + 1, 2 * k + 1) = z.re();
    }
  return r;
}

template <ExactField B>
Vector<B> realify(const Vector<Gauss<B>>& v) {
  Vector<B> r;
  for (const auto& z : v) {
    r.push_back(z.re());
    r.push_back(z.im());
  }
  return r;
}

template <ExactField B>
LieAlgebra<B> realify(const LieAlgebra<Gauss<B>>& g, std::string name = {}) {
  std::vector<Matrix<B>> elems;
  for (const auto& a : g.basis()) {
    elems.push_back(realify(a));
    elems.push_back(realify(a * Gauss<B>::i()));
  }
  return LieAlgebra<B>::from_basis(2 * g.ambient_dim(), elems, name.empty() ? g.name() + "_real" : name);
}

// Realifies a real form given by a real-span basis of complex matrices (e.g. u(1,p)).
template <ExactField B>
LieAlgebra<B> realify_real_span(const std::vector<Matrix<Gauss<B>>>& elems, std::string name,
                                std::optional<SignatureForm> form = std::nullopt) {
  require(!elems.empty(), ErrorCode::DimensionMismatch, "empty basis");
  std::vector<Matrix<B>> out;
  for (const auto& a : elems) out.push_back(realify(a));
  return LieAlgebra<B>::from_basis(2 * elems.front().rows(), out, std::move(name), form);
}

template <ExactField B>
Matrix<Gauss<B>> complexify(const Matrix<B>& m) {
  return lift_matrix<Gauss<B>>(m);
}

template <ExactField B>
LieAlgebra<Gauss<B>> complexify(const LieAlgebra<B>& g) {
  std::vector<Matrix<Gauss<B>>> elems;
  for (const auto& a : g.basis()) elems.push_back(complexify(a));
  return LieAlgebra<Gauss<B>>::from_basis(g.ambient_dim(), elems, g.name() + "_complexified");
}

template <ExactField To, ExactField From>
LieAlgebra<To> lift_algebra(const LieAlgebra<From>& g) {
  if constexpr (std::is_same_v<To, From>) {
    return g;
  } else {
    std::vector<Matrix<To>> elems;
    for (const auto& a : g.generators()) elems.push_back(lift_matrix<To>(a));
    auto out = LieAlgebra<To>::from_basis(g.ambient_dim(), elems, g.name());
    return g.form() ? out.with_form(*g.form()) : out;
  }
}

// Pads every element into the top-left corner (or at offset) of an n x n matrix.
template <ExactField F>
LieAlgebra<F> pad_algebra(const LieAlgebra<F>& g, std::size_t n, std::size_t offset = 0, std::string name = {}) {
  std::vector<Matrix<F>> elems;
  for (const auto& a : g.generators()) elems.push_back(pad(a, n, offset));
  return LieAlgebra<F>::from_basis(n, elems, name.empty() ? g.name() : name);
}

// Direct-sum action A (+) B on F^{n1} (+) F^{n2}.
template <ExactField F>
Matrix<F> direct_sum(const Matrix<F>& a, const Matrix<F>& b) {
  Matrix<F> m(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
  return m;
}

// Jacobi identity on all basis triples.
template <ExactField F>
bool satisfies_jacobi(const LieAlgebra<F>& g) {
  const auto& b = g.basis();
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j)
      for (std::size_t k = j + 1; k < b.size(); ++k) {
        auto s = bracket(b[i], bracket(b[j], b[k])) + bracket(b[j], bracket(b[k], b[i])) +
                 bracket(b[k], bracket(b[i], b[j]));
        if (!s.is_zero()) return false;
      }
  return true;
}

}  // namespace so2n
