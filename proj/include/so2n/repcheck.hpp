#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "so2n/liealg.hpp"

namespace so2n {

// A matrix Lie algebra given by generators acting on F^n.
template <ExactField F>
class Representation {
 public:
  Representation() = default;
  Representation(std::size_t dim, std::vector<Matrix<F>> gens, std::string name = {})
      : n_(dim), gens_(std::move(gens)), name_(std::move(name)) {
    require(n_ >= 1, ErrorCode::DimensionMismatch, "representation space must be nonzero");
    for (const auto& g : gens_)
      require(g.rows() == n_ && g.cols() == n_, ErrorCode::DimensionMismatch, "generator is not ambient_dim square");
  }
  explicit Representation(const LieAlgebra<F>& g) : Representation(g.ambient_dim(), g.generators(), g.name()) {}

  std::size_t dim() const { return n_; }
  const std::vector<Matrix<F>>& generators() const { return gens_; }
  const std::string& name() const { return name_; }

  std::vector<Matrix<F>> transposed_generators() const {
    std::vector<Matrix<F>> t;
    for (const auto& g : gens_) t.push_back(g.transpose());
    return t;
  }

  bool is_zero() const {
    return std::all_of(gens_.begin(), gens_.end(), [](const Matrix<F>& g) { return g.is_zero(); });
  }

 private:
  std::size_t n_ = 0;
  std::vector<Matrix<F>> gens_;
  std::string name_;
};

template <ExactField F>
Subspace<F> spin(const Vector<F>& v, const std::vector<Matrix<F>>& gens) {
  Subspace<F> s(v.size());
  std::vector<Vector<F>> queue;
  if (s.add(v)) queue.push_back(v);
  for (std::size_t i = 0; i < queue.size() && !s.is_whole(); ++i)
    for (const auto& g : gens) {
      Vector<F> w = g * queue[i];
      if (s.add(w)) queue.push_back(std::move(w));
    }
  return s;
}

template <ExactField F>
Subspace<F> spin(const Subspace<F>& start, const std::vector<Matrix<F>>& gens) {
  Subspace<F> s(start);
  std::vector<Vector<F>> queue = start.basis();
  for (std::size_t i = 0; i < queue.size() && !s.is_whole(); ++i)
    for (const auto& g : gens) {
      Vector<F> w = g * queue[i];
      if (s.add(w)) queue.push_back(std::move(w));
    }
  return s;
}

template <ExactField F>
bool is_invariant(const Subspace<F>& w, const std::vector<Matrix<F>>& gens) {
  for (const auto& g : gens) {
    if (g.cols() != w.ambient_dim()) return false;
    for (const auto& b : w.basis())
      if (!w.contains(g * b)) return false;
  }
  return true;
}

// Enveloping-algebra element: sum of coeff * gens[word[0]] * gens[word[1]] * ...; the empty word is Id.
template <ExactField F>
struct EnvelopingTerm {
  F coeff;
  std::vector<std::size_t> word;
};

template <ExactField F>
using EnvelopingElement = std::vector<EnvelopingTerm<F>>;

template <ExactField F>
Matrix<F> evaluate_word(const std::vector<std::size_t>& word, const std::vector<Matrix<F>>& gens, std::size_t n) {
  Matrix<F> m = Matrix<F>::identity(n);
  for (auto l : word) {
    require(l < gens.size(), ErrorCode::BadStructure, "word letter out of range");
    m = m * gens[l];
  }
  return m;
}

template <ExactField F>
Matrix<F> evaluate_element(const EnvelopingElement<F>& e, const std::vector<Matrix<F>>& gens, std::size_t n) {
  Matrix<F> m(n, n);
  for (const auto& t : e) m += evaluate_word(t.word, gens, n) * t.coeff;
  return m;
}

namespace detail {

template <ExactField F>
EnvelopingElement<F> product(const EnvelopingElement<F>& a, const EnvelopingElement<F>& b) {
  EnvelopingElement<F> out;
  for (const auto& x : a)
    for (const auto& y : b) {
      auto w = x.word;
      w.insert(w.end(), y.word.begin(), y.word.end());
      out.push_back({x.coeff * y.coeff, std::move(w)});
    }
  return out;
}

template <ExactField F>
EnvelopingElement<F> plus_identity(EnvelopingElement<F> e, const F& c) {
  if (!is_zero(c)) e.push_back({c, {}});
  return e;
}

template <ExactField F>
EnvelopingElement<F> scaled(EnvelopingElement<F> e, const F& c) {
  for (auto& t : e) t.coeff *= c;
  return e;
}

}  // namespace detail

// Associative algebra generated by Id and the generators, with a word for every basis element.
template <ExactField F>
class EnvelopingAlgebra {
 public:
  explicit EnvelopingAlgebra(const Representation<F>& rep) : n_(rep.dim()), gens_(rep.generators()), flat_(n_ * n_) {
    push({}, Matrix<F>::identity(n_));
    for (std::size_t i = 0; i < mats_.size() && flat_.dim() < n_ * n_; ++i)
      for (std::size_t g = 0; g < gens_.size() && flat_.dim() < n_ * n_; ++g) {
        auto w = words_[i];
        w.push_back(g);
        push(std::move(w), mats_[i] * gens_[g]);
      }
  }

  std::size_t dim() const { return mats_.size(); }
  std::size_t ambient_dim() const { return n_; }
  const Matrix<F>& matrix(std::size_t k) const { return mats_[k]; }
  const std::vector<std::size_t>& word(std::size_t k) const { return words_[k]; }
  bool contains(const Matrix<F>& m) const { return flat_.contains(flatten(m)); }

  Matrix<F> evaluate(const Vector<F>& c) const {
    Matrix<F> m(n_, n_);
    for (std::size_t k = 0; k < c.size(); ++k)
      if (!is_zero(c[k])) m += mats_[k] * c[k];
    return m;
  }

  EnvelopingElement<F> element(const Vector<F>& c) const {
    EnvelopingElement<F> e;
    for (std::size_t k = 0; k < c.size(); ++k)
      if (!is_zero(c[k])) e.push_back({c[k], words_[k]});
    return e;
  }

  // Coordinates of m in the word basis.
  Vector<F> express(const Matrix<F>& m) const {
    if (columns_.rows() == 0) {
      std::vector<Vector<F>> cols;
      for (const auto& x : mats_) cols.push_back(flatten(x));
      columns_ = from_columns(cols);
    }
    auto c = solve(columns_, flatten(m));
    require(c.has_value(), ErrorCode::BadStructure, "matrix is outside the enveloping algebra");
    return *c;
  }

  // {c : evaluate(c) u = 0}
  Subspace<F> annihilator_of(const Vector<F>& u) const {
    std::vector<Vector<F>> rows(n_, Vector<F>(dim(), F(0)));
    for (std::size_t k = 0; k < dim(); ++k) {
      auto img = mats_[k] * u;
      for (std::size_t r = 0; r < n_; ++r) rows[r][k] = img[r];
    }
    return kernel_of_rows(rows, dim());
  }

  // {c : evaluate(c) K ⊆ K}
  Subspace<F> stabilizer(const Subspace<F>& kspace) const {
    std::vector<Vector<F>> rows;
    for (const auto& b : kspace.basis()) {
      std::vector<Vector<F>> block(n_, Vector<F>(dim(), F(0)));
      for (std::size_t k = 0; k < dim(); ++k) {
        auto r = kspace.reduce(mats_[k] * b);
        for (std::size_t i = 0; i < n_; ++i) block[i][k] = r[i];
      }
      for (auto& row : block)
        if (!is_zero_vector(row)) rows.push_back(std::move(row));
    }
    return kernel_of_rows(rows, dim());
  }

 private:
  void push(std::vector<std::size_t> w, Matrix<F> m) {
    if (!flat_.add(flatten(m))) return;
    words_.push_back(std::move(w));
    mats_.push_back(std::move(m));
  }

  std::size_t n_;
  std::vector<Matrix<F>> gens_;
  Subspace<F> flat_;
  std::vector<std::vector<std::size_t>> words_;
  std::vector<Matrix<F>> mats_;
  mutable Matrix<F> columns_;
};

enum class Irreducibility { Irreducible, Reducible };

inline const char* irreducibility_name(Irreducibility v) {
  return v == Irreducibility::Irreducible ? "IRREDUCIBLE" : "REDUCIBLE";
}

// Norton-style certificate. theta is singular with kernel K of dimension 1, 2 or 4; the local elements b_i
// preserve K, satisfy b_i^2 = -c_i on K (c_i > 0) and anticommute on K, so K is simple under them.
// Spinning v in K under the generators and w in ker theta^T under the transposes both fill the space.
template <ExactField F>
struct NortonCertificate {
  EnvelopingElement<F> theta;
  std::vector<EnvelopingElement<F>> local;
  std::vector<F> local_square;
  std::size_t kernel_dim = 0;
  Vector<F> v;
  Vector<F> w;
};

template <ExactField F>
struct IrreducibilityVerdict {
  Irreducibility verdict = Irreducibility::Reducible;
  Subspace<F> witness;
  std::optional<NortonCertificate<F>> certificate;
  std::size_t attempts = 0;
  std::string method;
};

template <ExactField F>
bool check_certificate(const std::vector<Matrix<F>>& gens, std::size_t n, const NortonCertificate<F>& c) {
  try {
    const std::size_t k = c.kernel_dim;
    if (k != 1 && k != 2 && k != 4) return false;
    if (GaussianField<F> && k != 1) return false;
    if (c.local.size() != (k == 1 ? 0u : k == 2 ? 1u : 2u) || c.local_square.size() != c.local.size()) return false;
    if (c.v.size() != n || c.w.size() != n || is_zero_vector(c.v) || is_zero_vector(c.w)) return false;
    Matrix<F> m = evaluate_element(c.theta, gens, n);
    auto kspace = kernel(m);
    if (kspace.dim() != k || !kspace.contains(c.v)) return false;
    if (!is_zero_vector(m.transpose() * c.w)) return false;
    std::vector<Matrix<F>> b;
    for (std::size_t i = 0; i < c.local.size(); ++i) {
      if constexpr (OrderedField<F>) {
        if (sign(c.local_square[i]) <= 0) return false;
      }
      b.push_back(evaluate_element(c.local[i], gens, n));
      for (const auto& x : kspace.basis()) {
        auto y = b[i] * x;
        if (!kspace.contains(y)) return false;
        auto z = b[i] * y;
        for (std::size_t j = 0; j < n; ++j) z[j] += c.local_square[i] * x[j];
        if (!is_zero_vector(z)) return false;
      }
    }
    if (b.size() == 2) {
      Matrix<F> ac = b[0] * b[1] + b[1] * b[0];
      for (const auto& x : kspace.basis())
        if (!is_zero_vector(ac * x)) return false;
    }
    std::vector<Matrix<F>> gt;
    for (const auto& g : gens) gt.push_back(g.transpose());
    return spin(c.v, gens).is_whole() && spin(c.w, gt).is_whole();
  } catch (const Error&) {
    return false;
  }
}

template <ExactField F>
bool verify_verdict(const Representation<F>& rep, const IrreducibilityVerdict<F>& v) {
  if (v.verdict == Irreducibility::Reducible) {
    const auto& w = v.witness;
    return w.ambient_dim() == rep.dim() && !w.is_zero() && !w.is_whole() && is_invariant(w, rep.generators());
  }
  return v.certificate && check_certificate(rep.generators(), rep.dim(), *v.certificate);
}

namespace detail {

template <ExactField F>
class NortonSearch {
 public:
  NortonSearch(const Representation<F>& rep, std::uint64_t seed)
      : rep_(rep), n_(rep.dim()), gens_(rep.generators()), gens_t_(rep.transposed_generators()), rng_(seed) {}

  std::optional<IrreducibilityVerdict<F>> standard_basis() {
    for (std::size_t i = 0; i < n_; ++i) {
      auto e = unit_vector<F>(n_, i);
      auto s = spin(e, gens_);
      if (!s.is_whole()) return reducible(std::move(s), "standard-basis spin");
      auto t = spin(e, gens_t_);
      if (!t.is_whole()) return reducible(t.annihilator(), "standard-basis spin");
    }
    return std::nullopt;
  }

  std::optional<IrreducibilityVerdict<F>> attempt(std::size_t index) {
    if (index < gens_.size()) return charpoly_candidate({{F(1), {index}}});
    if ((index - gens_.size()) % 2 == 0) return charpoly_candidate(random_combination());
    return annihilator_candidate();
  }

 private:
  std::uint64_t below(std::uint64_t k) { return rng_() % k; }
  long small(long lo, long hi) { return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1))); }

  IrreducibilityVerdict<F> reducible(Subspace<F> w, std::string method) {
    IrreducibilityVerdict<F> v;
    v.verdict = Irreducibility::Reducible;
    v.witness = std::move(w);
    v.method = std::move(method);
    return v;
  }

  const EnvelopingAlgebra<F>& algebra() {
    if (!algebra_) algebra_.emplace(rep_);
    return *algebra_;
  }

  EnvelopingElement<F> random_combination() {
    static const long coeffs[] = {-2, -1, 1, 2};
    const std::size_t g = gens_.size();
    std::size_t terms = 2 + static_cast<std::size_t>(below(2));
    EnvelopingElement<F> e;
    for (std::size_t t = 0; t < terms; ++t) {
      F c(coeffs[below(4)]);
      if (below(2) == 0) {
        e.push_back({c, {static_cast<std::size_t>(below(g))}});
      } else {
        std::size_t a = static_cast<std::size_t>(below(g)), b = static_cast<std::size_t>(below(g));
        e.push_back({c, {a, b}});
      }
    }
    return e;
  }

  std::optional<IrreducibilityVerdict<F>> charpoly_candidate(const EnvelopingElement<F>& z) {
    Matrix<F> zm = evaluate_element(z, gens_, n_);
    if (zm.is_zero()) return std::nullopt;
    const Matrix<F> id = Matrix<F>::identity(n_);
    auto p = squarefree_part(charpoly(zm));
    for (const auto& r : exact_roots(p)) {
      auto v = try_theta(detail::plus_identity(z, -r), zm - id * r, std::nullopt, "charpoly");
      if (v) return v;
    }
    if constexpr (OrderedField<F>) {
      for (const auto& [t, d] : exact_real_quadratic_factors(p)) {
        auto theta = detail::plus_identity(
            detail::product(z, z), d);
        for (auto term : detail::scaled(z, -t)) theta.push_back(std::move(term));
        Matrix<F> tm = zm * zm - zm * t + id * d;
        F half = t / F(2);
        auto b = detail::plus_identity(z, -half);
        auto v = try_theta(std::move(theta), tm, std::make_pair(std::move(b), d - half * half), "charpoly");
        if (v) return v;
      }
    }
    return std::nullopt;
  }

  std::optional<IrreducibilityVerdict<F>> annihilator_candidate() {
    const auto& a = algebra();
    Vector<F> u(n_, F(0));
    while (is_zero_vector(u))
      for (auto& x : u) x = F(small(-3, 3));
    auto ann = a.annihilator_of(u);
    Vector<F> c(a.dim(), F(0));
    for (const auto& b : ann.basis()) {
      F s(small(-3, 3));
      if (is_zero(s)) continue;
      for (std::size_t k = 0; k < c.size(); ++k) c[k] += s * b[k];
    }
    return try_theta(a.element(c), a.evaluate(c), std::nullopt, "annihilator");
  }

  std::optional<IrreducibilityVerdict<F>> try_theta(EnvelopingElement<F> theta, const Matrix<F>& m,
                                                    std::optional<std::pair<EnvelopingElement<F>, F>> known,
                                                    const std::string& method) {
    auto kspace = kernel(m);
    if (kspace.is_zero()) return std::nullopt;
    auto kt = kernel(m.transpose());
    for (const auto& v : kspace.basis()) {
      auto s = spin(v, gens_);
      if (!s.is_whole()) return reducible(std::move(s), method + " kernel spin");
    }
    for (const auto& w : kt.basis()) {
      auto s = spin(w, gens_t_);
      if (!s.is_whole()) return reducible(s.annihilator(), method + " transpose kernel spin");
    }
    NortonCertificate<F> c;
    c.theta = std::move(theta);
    c.kernel_dim = kspace.dim();
    c.v = kspace.basis().front();
    c.w = kt.basis().front();
    const std::size_t k = c.kernel_dim;
    if (k != 1) {
      if constexpr (GaussianField<F>) {
        return std::nullopt;
      } else {
        if (k == 2 && known) {
          c.local.push_back(std::move(known->first));
          c.local_square.push_back(known->second);
        } else if (k == 2 || k == 4) {
          if (!find_local_elements(kspace, c)) return std::nullopt;
        } else {
          return std::nullopt;
        }
      }
    }
    if (!check_certificate(gens_, n_, c)) return std::nullopt;
    IrreducibilityVerdict<F> v;
    v.verdict = Irreducibility::Irreducible;
    v.certificate = std::move(c);
    v.method = method;
    return v;
  }

  // Elements of the enveloping algebra acting on K as the imaginary units of C (dim 2) or H (dim 4).
  bool find_local_elements(const Subspace<F>& kspace, NortonCertificate<F>& c) {
    const auto& a = algebra();
    const std::size_t k = kspace.dim();
    auto stab = a.stabilizer(kspace);
    auto restrict_to_k = [&](const Matrix<F>& m) {
      Matrix<F> r(k, k);
      for (std::size_t j = 0; j < k; ++j) {
        auto co = kspace.coordinates(m * kspace.basis()[j]);
        for (std::size_t i = 0; i < k; ++i) r(i, j) = (*co)[i];
      }
      return r;
    };
    std::vector<Matrix<F>> mats, rs;
    for (const auto& s : stab.basis()) {
      mats.push_back(a.evaluate(s));
      rs.push_back(restrict_to_k(mats.back()));
    }
    if (MatrixSpace<F>::span(k, k, rs).dim() != k) return false;
    const Matrix<F> idk = Matrix<F>::identity(k);
    auto scalar_square = [&](const Matrix<F>& b) -> std::optional<F> {
      Matrix<F> q = b * b;
      F minus_c = q(0, 0);
      if (!(q == idk * minus_c) || sign(minus_c) >= 0) return std::nullopt;
      return -minus_c;
    };
    std::size_t first = rs.size();
    for (std::size_t i = 0; i < rs.size(); ++i)
      if (!(rs[i] == idk * rs[i](0, 0))) {
        first = i;
        break;
      }
    if (first == rs.size()) return false;
    F tau = rs[first].trace() / F(static_cast<long>(k));
    Matrix<F> b1r = rs[first] - idk * tau;
    auto c1 = scalar_square(b1r);
    if (!c1) return false;
    const Matrix<F> id = Matrix<F>::identity(a.ambient_dim());
    Matrix<F> b1 = mats[first] - id * tau;
    c.local.push_back(a.element(a.express(b1)));
    c.local_square.push_back(*c1);
    if (k == 2) return true;
    for (std::size_t i = 0; i < rs.size(); ++i) {
      Matrix<F> b2r = rs[i] * *c1 + b1r * rs[i] * b1r;
      if (b2r.is_zero()) continue;
      auto c2 = scalar_square(b2r);
      if (!c2 || !(b1r * b2r + b2r * b1r).is_zero()) return false;
      Matrix<F> b2 = mats[i] * *c1 + b1 * mats[i] * b1;
      c.local.push_back(a.element(a.express(b2)));
      c.local_square.push_back(*c2);
      return true;
    }
    return false;
  }

  const Representation<F>& rep_;
  std::size_t n_;
  std::vector<Matrix<F>> gens_, gens_t_;
  std::mt19937_64 rng_;
  std::optional<EnvelopingAlgebra<F>> algebra_;
};

}  // namespace detail

inline constexpr std::uint64_t default_seed = 0;
inline constexpr std::size_t default_budget = 64;

template <ExactField F>
IrreducibilityVerdict<F> decide_irreducibility(const Representation<F>& rep, std::uint64_t seed = default_seed,
                                               std::size_t budget = default_budget) {
  require(!rep.generators().empty() && !rep.is_zero(), ErrorCode::BadStructure, "algebra must be nonzero");
  detail::NortonSearch<F> search(rep, seed);
  if (auto v = search.standard_basis()) return *v;
  for (std::size_t i = 0; i < budget; ++i) {
    if (auto v = search.attempt(i)) {
      v->attempts = i + 1;
      return *v;
    }
  }
  throw Error(ErrorCode::AnalysisBudgetExceeded,
              "no certifying singular element within " + std::to_string(budget) + " attempts");
}

// {X : X A = A X for every generator}
template <ExactField F>
MatrixSpace<F> commutant(const Representation<F>& rep) {
  const std::size_t n = rep.dim(), n2 = n * n;
  Subspace<F> eqs(n2);
  for (const auto& a : rep.generators()) {
    for (std::size_t r = 0; r < n && !eqs.is_whole(); ++r)
      for (std::size_t c = 0; c < n; ++c) {
        Vector<F> row(n2, F(0));
        for (std::size_t k = 0; k < n; ++k) {
          row[r * n + k] += a(k, c);
          row[k * n + c] -= a(r, k);
        }
        eqs.add(row);
      }
  }
  return MatrixSpace<F>::from_flat(n, n, kernel_of_rows(eqs.basis(), n2));
}

enum class RepType { Real, Complex, Quaternionic };

inline const char* rep_type_name(RepType t) {
  switch (t) {
    case RepType::Real: return "REAL";
    case RepType::Complex: return "COMPLEX";
    case RepType::Quaternionic: return "QUATERNIONIC";
  }
  return "?";
}

template <ExactField F>
struct TypeVerdict {
  RepType type = RepType::Real;
  std::size_t commutant_dim = 0;
  std::vector<Matrix<F>> commutant_basis;
  bool complexification_irreducible = false;
  bool cross_check_agrees = false;
};

template <ExactField F>
  requires OrderedField<F>
Representation<Gauss<F>> complexify(const Representation<F>& rep) {
  std::vector<Matrix<Gauss<F>>> g;
  for (const auto& a : rep.generators()) g.push_back(complexify(a));
  return Representation<Gauss<F>>(rep.dim(), std::move(g), rep.name() + "_complexified");
}

template <ExactField F>
  requires OrderedField<F>
TypeVerdict<F> classify_type(const Representation<F>& rep, const IrreducibilityVerdict<F>& verdict,
                             std::uint64_t seed = default_seed, std::size_t budget = default_budget) {
  require(verdict.verdict == Irreducibility::Irreducible, ErrorCode::NotIrreducible,
          "type classification needs an irreducible representation");
  auto c = commutant(rep);
  TypeVerdict<F> t;
  t.commutant_dim = c.dim();
  t.commutant_basis = c.basis();
  switch (c.dim()) {
    case 1: t.type = RepType::Real; break;
    case 2: t.type = RepType::Complex; break;
    case 4: t.type = RepType::Quaternionic; break;
    default: throw Error(ErrorCode::BadStructure, "commutant dimension " + std::to_string(c.dim()));
  }
  auto cv = decide_irreducibility(complexify(rep), seed, budget);
  t.complexification_irreducible = cv.verdict == Irreducibility::Irreducible;
  t.cross_check_agrees = t.complexification_irreducible == (t.type == RepType::Real);
  return t;
}

template <ExactField F>
  requires OrderedField<F>
TypeVerdict<F> classify_type(const Representation<F>& rep, std::uint64_t seed = default_seed,
                             std::size_t budget = default_budget) {
  return classify_type(rep, decide_irreducibility(rep, seed, budget), seed, budget);
}

}  // namespace so2n
