#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <optional>
#include <utility>
#include <vector>

#include "so2n/scalar.hpp"

namespace so2n {

// Dense univariate polynomial; coefficient k multiplies lambda^k.
template <ExactField F>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Polynomial constant(F a) { return Polynomial(std::vector<F>{std::move(a)}); }
  static Polynomial x() { return Polynomial(std::vector<F>{F(0), F(1)}); }
  static Polynomial linear_root(const F& r) { return Polynomial(std::vector<F>{-r, F(1)}); }
  static Polynomial quadratic(const F& t, const F& d) { return Polynomial(std::vector<F>{d, -t, F(1)}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<F>& coefficients() const { return c_; }
  F coeff(std::size_t k) const { return k < c_.size() ? c_[k] : F(0); }
  const F& leading() const { return c_.back(); }

  Polynomial monic() const {
    if (is_zero()) return *this;
    F inv = F(1) / leading();
    std::vector<F> out(c_);
    for (auto& a : out) a *= inv;
    return Polynomial(std::move(out));
  }

  F operator()(const F& x) const {
    F acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Polynomial derivative() const {
    std::vector<F> out;
    for (std::size_t k = 1; k < c_.size(); ++k) out.push_back(c_[k] * F(static_cast<long>(k)));
    return Polynomial(std::move(out));
  }

  Polynomial galois() const {
    std::vector<F> out;
    for (const auto& a : c_) out.push_back(so2n::galois(a));
    return Polynomial(std::move(out));
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<F> out(std::max(a.c_.size(), b.c_.size()), F(0));
    for (std::size_t k = 0; k < a.c_.size(); ++k) out[k] += a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k) out[k] += b.c_[k];
    return Polynomial(std::move(out));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<F> out(std::max(a.c_.size(), b.c_.size()), F(0));
    for (std::size_t k = 0; k < a.c_.size(); ++k) out[k] += a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k) out[k] -= b.c_[k];
    return Polynomial(std::move(out));
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<F> out(a.c_.size() + b.c_.size() - 1, F(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(out));
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  // Euclidean division a = q*b + r with deg r < deg b.
  friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    require(!b.is_zero(), ErrorCode::DivisionByZero, "polynomial division by zero");
    std::vector<F> r = a.c_;
    int db = b.degree();
    if (a.degree() < db) return {Polynomial(), a};
    std::vector<F> q(a.degree() - db + 1, F(0));
    F inv = F(1) / b.leading();
    for (int k = a.degree(); k >= db; --k) {
      if (so2n::is_zero(r[k])) continue;
      F f = r[k] * inv;
      q[k - db] = f;
      for (int j = 0; j <= db; ++j) r[k - db + j] -= f * b.c_[j];
    }
    r.resize(db);
    return {Polynomial(std::move(q)), Polynomial(std::move(r))};
  }

 private:
  void trim() {
    while (!c_.empty() && so2n::is_zero(c_.back())) c_.pop_back();
  }
  std::vector<F> c_;
};

template <ExactField F>
Polynomial<F> gcd(Polynomial<F> a, Polynomial<F> b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

template <ExactField F>
Polynomial<F> squarefree_part(const Polynomial<F>& p) {
  if (p.degree() <= 0) return p.monic();
  auto g = gcd(p, p.derivative());
  return divmod(p, g).first.monic();
}

template <ExactField F>
bool divides(const Polynomial<F>& f, const Polynomial<F>& p) {
  return divmod(p, f).second.is_zero();
}

// --- numerics used only to propose candidates that are then checked exactly ---

template <ExactField F>
std::vector<std::complex<long double>> numeric_roots(const Polynomial<F>& p) {
  using C = std::complex<long double>;
  int n = p.degree();
  if (n <= 0) return {};
  std::vector<C> a;
  for (const auto& c : p.coefficients()) a.push_back(to_complex(c));
  C lead = a.back();
  for (auto& c : a) c /= lead;
  if (n == 1) return {-a[0]};

  long double radius = 0;
  for (int k = 0; k < n; ++k) radius = std::max(radius, std::pow(std::abs(a[k]), 1.0L / (n - k)));
  radius = std::max(radius * 1.5L, 1e-3L);

  auto eval = [&](const C& z, C& dp) {
    C v = a[n];
    dp = 0;
    for (int k = n - 1; k >= 0; --k) {
      dp = dp * z + v;
      v = v * z + a[k];
    }
    return v;
  };

  std::vector<C> z(n);
  const long double pi = 3.14159265358979323846264338327950288L;
  for (int k = 0; k < n; ++k) z[k] = std::polar(radius, 2 * pi * k / n + 0.4L);

  for (int iter = 0; iter < 800; ++iter) {
    long double worst = 0;
    for (int k = 0; k < n; ++k) {
      C dp;
      C v = eval(z[k], dp);
      if (v == C(0)) continue;
      C ratio = v / dp;
      C sum = 0;
      for (int j = 0; j < n; ++j)
        if (j != k) sum += C(1) / (z[k] - z[j]);
      C w = ratio / (C(1) - ratio * sum);
      if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) w = ratio;
      z[k] -= w;
      worst = std::max(worst, std::abs(w) / (1 + std::abs(z[k])));
    }
    if (worst < 1e-19L) break;
  }
  return z;
}

namespace detail {

inline std::optional<Rational> recognize_rational(long double x, long double tol = 1e-10L) {
  if (!std::isfinite(x) || std::fabs(x) > 1e12L) return std::nullopt;
  long double y = x;
  long long h1 = 1, h2 = 0, k1 = 0, k2 = 1;
  for (int iter = 0; iter < 40; ++iter) {
    long double fl = std::floor(y);
    long long an = static_cast<long long>(fl);
    long long h = an * h1 + h2, k = an * k1 + k2;
    if (k > 100000000LL || k <= 0) break;
    if (std::fabs(x - static_cast<long double>(h) / k) <= tol * (1 + std::fabs(x))) return Rational(h, k);
    long double frac = y - fl;
    if (frac < 1e-30L) break;
    y = 1 / frac;
    h2 = h1;
    h1 = h;
    k2 = k1;
    k1 = k;
  }
  return std::nullopt;
}

// Value x and its image x' under sqrt(d) -> -sqrt(d) determine a + b*sqrt(d).
template <class B>
std::optional<B> recognize_real(long double x, long double x_conj, long d) {
  if constexpr (std::is_same_v<B, Rational>) {
    (void)x_conj;
    (void)d;
    return recognize_rational(x);
  } else {
    if (d == 0) {
      auto r = recognize_rational(x);
      if (!r) return std::nullopt;
      return QuadExt(*r);
    }
    auto a = recognize_rational((x + x_conj) / 2);
    auto b = recognize_rational((x - x_conj) / (2 * std::sqrt(static_cast<long double>(d))));
    if (!a || !b) return std::nullopt;
    if (b->is_zero()) return QuadExt(*a);
    return QuadExt(*a, *b, d);
  }
}

template <ExactField F>
long poly_radicand(const Polynomial<F>& p) {
  for (const auto& c : p.coefficients())
    if (long r = radicand(c)) return r;
  return 0;
}

template <class T>
void push_unique(std::vector<T>& out, T v) {
  if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(std::move(v));
}

}  // namespace detail

// Roots r in F of p, located numerically and confirmed by exact evaluation.
template <ExactField F>
std::vector<F> exact_roots(const Polynomial<F>& p) {
  using B = real_of<F>;
  std::vector<F> out;
  if (p.degree() <= 0) return out;
  const long d = detail::poly_radicand(p);
  auto roots = numeric_roots(p);
  auto conj_roots = d != 0 ? numeric_roots(p.galois()) : roots;
  const long double tol = 1e-8L;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    for (std::size_t j = 0; j < conj_roots.size(); ++j) {
      if (d == 0 && i != j) continue;
      const auto& mu = roots[i];
      const auto& nu = conj_roots[j];
      std::optional<F> cand;
      if constexpr (OrderedField<F>) {
        if (std::fabs(mu.imag()) > tol * (1 + std::abs(mu)) || std::fabs(nu.imag()) > tol * (1 + std::abs(nu))) continue;
        cand = detail::recognize_real<B>(mu.real(), nu.real(), d);
      } else {
        auto re = detail::recognize_real<B>(mu.real(), nu.real(), d);
        auto im = detail::recognize_real<B>(mu.imag(), nu.imag(), d);
        if (re && im) cand = F(*re, *im);
      }
      if (cand && is_zero(p(*cand))) detail::push_unique(out, *cand);
    }
  }
  return out;
}

// Real-irreducible monic quadratic factors lambda^2 - t*lambda + dd of p, as pairs (t, dd).
template <OrderedField F>
std::vector<std::pair<F, F>> exact_real_quadratic_factors(const Polynomial<F>& p) {
  std::vector<std::pair<F, F>> out;
  if (p.degree() < 2) return out;
  const long d = detail::poly_radicand(p);
  auto roots = numeric_roots(p);
  auto conj_roots = d != 0 ? numeric_roots(p.galois()) : roots;
  const long double tol = 1e-8L;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    for (std::size_t j = 0; j < conj_roots.size(); ++j) {
      if (d == 0 && i != j) continue;
      const auto& mu = roots[i];
      const auto& nu = conj_roots[j];
      if (mu.imag() <= tol * (1 + std::abs(mu)) || nu.imag() <= tol * (1 + std::abs(nu))) continue;
      auto t = detail::recognize_real<F>(2 * mu.real(), 2 * nu.real(), d);
      auto dd = detail::recognize_real<F>(std::norm(mu), std::norm(nu), d);
      if (!t || !dd) continue;
      if (sign(*t * *t - F(4) * *dd) >= 0) continue;
      if (!divides(Polynomial<F>::quadratic(*t, *dd), p)) continue;
      detail::push_unique(out, std::make_pair(*t, *dd));
    }
  }
  return out;
}

}  // namespace so2n
