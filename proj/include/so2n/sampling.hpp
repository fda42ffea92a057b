#pragma once

// Seeded samplers for embedding inputs and domain-IV points. Membership is decided
// here by direct evaluation of the defining inequalities, not by the library predicates.

#include <cstdint>
#include <random>
#include <vector>

#include "so2n/domainiv.hpp"

namespace so2n::sampling {

// Minimal generator: integers straight from the engine so streams are portable.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : eng_(seed) {}
  long range(long lo, long hi) { return lo + static_cast<long>(eng_() % static_cast<std::uint64_t>(hi - lo + 1)); }
  bool coin() { return (eng_() & 1u) != 0; }

 private:
  std::mt19937_64 eng_;
};

template <class G>
GaussRat small_gauss(G& g, bool real, long num = 4, long den = 5) {
  Rational re(g.range(-num, num), g.range(1, den));
  Rational im = real ? Rational(0) : Rational(g.range(-num, num), g.range(1, den));
  return GaussRat(re, im);
}

inline Rational sum_norms(const std::vector<GaussRat>& x, std::size_t from, std::size_t count) {
  Rational s(0);
  for (std::size_t j = from; j < from + count; ++j) s += x[j].norm();
  return s;
}

// [x0 : ... : xk] with |x0|^2 > sum |xi|^2 (timelike) or <= (not).
template <class G>
std::vector<GaussRat> lorentz_block(G& g, std::size_t k, bool real, bool timelike) {
  for (;;) {
    std::vector<GaussRat> x;
    for (std::size_t j = 0; j <= k; ++j) x.push_back(small_gauss(g, real));
    if (x[0].is_zero()) continue;
    // Push towards the interior so both outcomes stay frequent.
    if (timelike && g.coin()) x[0] = x[0] * GaussRat(static_cast<long>(k + 2));
    bool inside = x[0].norm() > sum_norms(x, 1, k);
    if (inside == timelike) return x;
  }
}

inline bool domain_inequalities(const DomainPoint& p) {
  Rational s = sum_norms(p.z, 0, p.z.size());
  GaussRat l(0);
  for (const auto& c : p.z) l += c * c;
  return Rational(2) * s - l.norm() - Rational(1) < Rational(0) && s < Rational(1);
}

template <class G>
DomainPoint domain_point(G& g, std::size_t n, bool inside) {
  for (;;) {
    DomainPoint p;
    for (std::size_t j = 0; j < n; ++j) p.z.push_back(small_gauss(g, false, 3, 8));
    if (domain_inequalities(p) == inside) return p;
  }
}

// |z| < 1 but 2|z|^2 - |Lambda|^2 - 1 >= 0; needs n >= 2.
template <class G>
DomainPoint domain_point_second_fails(G& g, std::size_t n) {
  for (;;) {
    DomainPoint p;
    for (std::size_t j = 0; j < n; ++j) p.z.push_back(small_gauss(g, false, 3, 5));
    Rational s = sum_norms(p.z, 0, n);
    GaussRat l(0);
    for (const auto& c : p.z) l += c * c;
    if (s < Rational(1) && Rational(2) * s - l.norm() - Rational(1) >= Rational(0)) return p;
  }
}

// Point of the k-dimensional Lie ball: image of an interior domain point, rescaled.
template <class G>
std::vector<GaussRat> lieball_point(G& g, std::size_t k) {
  auto z = cartan_iv_map(domain_point(g, k, true)).z;
  GaussRat s = small_gauss(g, false);
  if (s.is_zero()) s = GaussRat(1);
  for (auto& c : z) c *= s;
  return z;
}

template <class G>
std::vector<GaussRat> embedding_input(G& g, const EmbeddingSpec& spec, bool inside) {
  switch (spec.type) {
    case EmbeddingType::I1:
    case EmbeddingType::I2:
    case EmbeddingType::P1:
      return lorentz_block(g, spec.k1, spec.type != EmbeddingType::I1, inside);
    case EmbeddingType::G2: {
      // A zero-dimensional factor is always timelike, so only a positive-dimensional one fails.
      bool first_ok = true, second_ok = true;
      if (!inside) {
        bool fail_first = spec.k2 == 0 || (spec.k1 > 0 && g.coin());
        (fail_first ? first_ok : second_ok) = false;
        if (spec.k1 > 0 && spec.k2 > 0 && g.range(0, 3) == 0) first_ok = second_ok = false;
      }
      auto x = lorentz_block(g, spec.k1, true, first_ok);
      auto y = lorentz_block(g, spec.k2, true, second_ok);
      x.insert(x.end(), y.begin(), y.end());
      return x;
    }
    case EmbeddingType::G1:
    case EmbeddingType::P2: {
      std::size_t k = spec.source_k();
      auto z = lieball_point(g, k);
      if (inside) return z;
      switch (g.range(0, 2)) {
        case 0:  // opposite orientation
          for (auto& c : z) c = c.conj();
          return z;
        case 1: {  // positive point of the quadric
          std::vector<GaussRat> w(k + 2, GaussRat(0));
          w[2] = small_gauss(g, true);
          if (w[2].is_zero()) w[2] = GaussRat(1);
          w[k + 1 == 2 ? 0 : 3] = k + 1 == 2 ? w[2] : GaussRat::i() * w[2];
          return w;
        }
        default:  // off the quadric
          z[2] += GaussRat(1);
          return z;
      }
    }
  }
  return {};
}

inline std::vector<EmbeddingSpec> embedding_specs(std::size_t n) {
  std::vector<EmbeddingSpec> out;
  for (std::size_t k = 1; 2 * k <= n; ++k) {
    out.push_back({EmbeddingType::I1, k, 0, n});
    out.push_back({EmbeddingType::I2, k, 0, n});
  }
  for (std::size_t k = 1; k + 1 <= n; ++k) out.push_back({EmbeddingType::G1, k, 0, n});
  for (std::size_t k1 = 0; k1 <= n; ++k1)
    for (std::size_t k2 = 0; k1 + k2 <= n; ++k2)
      if (k1 + k2 >= 1) out.push_back({EmbeddingType::G2, k1, k2, n});
  for (std::size_t k = 1; k <= n; ++k) out.push_back({EmbeddingType::P1, k, 0, n});
  out.push_back({EmbeddingType::P2, 1, 0, n});
  return out;
}

}  // namespace so2n::sampling
