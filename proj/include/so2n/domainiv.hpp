#pragma once

#include <vector>

#include "so2n/symspace.hpp"

namespace so2n {

struct DomainPoint {
  std::vector<GaussRat> z;
};

inline GaussRat lambda_of(const DomainPoint& p) {
  GaussRat s(0);
  for (const auto& c : p.z) s += c * c;
  return s;
}

inline Rational squared_norm(const DomainPoint& p) {
  Rational s(0);
  for (const auto& c : p.z) s += c.norm();
  return s;
}

// 2|z|^2 - |Lambda|^2 - 1; negative inside the domain.
inline Rational margin(const DomainPoint& p) {
  return Rational(2) * squared_norm(p) - lambda_of(p).norm() - Rational(1);
}

inline bool in_domain_iv(const DomainPoint& p) {
  return margin(p).sign() < 0 && squared_norm(p) < Rational(1);
}

// f(z) = [i(Lambda - 1) : Lambda + 1 : 2 z_1 : ... : 2 z_n].
inline ProjectivePoint<GaussRat> cartan_iv_map(const DomainPoint& p) {
  require(!p.z.empty(), ErrorCode::DimensionMismatch, "domain point needs n >= 1 coordinates");
  GaussRat l = lambda_of(p);
  ProjectivePoint<GaussRat> out;
  out.z.push_back(GaussRat::i() * (l - GaussRat(1)));
  out.z.push_back(l + GaussRat(1));
  for (const auto& c : p.z) out.z.push_back(GaussRat(2) * c);
  return out;
}

}  // namespace so2n
