#pragma once

// Fixed verification batteries. Each item carries the acceptance criterion it belongs to.

#include <functional>
#include <string>
#include <vector>

#include "so2n/builtins.hpp"
#include "so2n/domainiv.hpp"
#include "so2n/forms.hpp"
#include "so2n/sampling.hpp"

namespace so2n {

struct BatteryItem {
  int criterion = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

enum class Battery { Theorem1, AppendixA, AppendixB, Embeddings, LemmaForms, Types, Fixers };

inline const std::vector<Battery>& all_batteries() {
  static const std::vector<Battery> b{Battery::Theorem1,   Battery::AppendixA, Battery::AppendixB, Battery::Embeddings,
                                      Battery::LemmaForms, Battery::Types,     Battery::Fixers};
  return b;
}

inline const char* battery_name(Battery b) {
  switch (b) {
    case Battery::Theorem1: return "THEOREM1";
    case Battery::AppendixA: return "APPENDIX_A";
    case Battery::AppendixB: return "APPENDIX_B";
    case Battery::Embeddings: return "EMBEDDINGS";
    case Battery::LemmaForms: return "LEMMA_FORMS";
    case Battery::Types: return "TYPES";
    case Battery::Fixers: return "FIXERS";
  }
  return "?";
}

inline Battery parse_battery(const std::string& s) {
  for (auto b : all_batteries())
    if (s == battery_name(b)) return b;
  throw Error(ErrorCode::InputError, "unknown battery '" + s + "'");
}

struct BatteryOptions {
  std::vector<std::size_t> ns;  // empty: the battery's own default range
  std::uint64_t seed = default_seed;
  std::size_t budget = default_budget;
  std::size_t samples = 100;
};

inline constexpr std::size_t max_battery_n = 8;

namespace detail {

class ItemLog {
 public:
  explicit ItemLog(std::vector<BatteryItem>& out) : out_(out) {}

  // Runs a check; library errors turn into a failed item carrying the message.
  void check(int criterion, std::string name, const std::function<bool(std::string&)>& f) {
    BatteryItem it{criterion, std::move(name), false, {}};
    try {
      it.pass = f(it.detail);
    } catch (const Error& e) {
      it.detail = e.what();
    }
    out_.push_back(std::move(it));
  }

 private:
  std::vector<BatteryItem>& out_;
};

inline std::vector<std::size_t> ns_or(const BatteryOptions& o, std::vector<std::size_t> dflt) {
  auto ns = o.ns.empty() ? std::move(dflt) : o.ns;
  for (auto n : ns)
    require(n >= 1 && n <= max_battery_n, ErrorCode::InputError,
            "n = " + std::to_string(n) + " is outside 1.." + std::to_string(max_battery_n));
  return ns;
}

template <ExactField F>
bool expect_verdict(const LieAlgebra<F>& g, Irreducibility want, const BatteryOptions& o, std::string& detail) {
  Representation<F> rep(g);
  auto v = decide_irreducibility(rep, o.seed, o.budget);
  bool ok = verify_verdict(rep, v);
  detail = std::string(irreducibility_name(v.verdict)) + (ok ? ", verified" : ", NOT verified");
  if (v.verdict == Irreducibility::Reducible) detail += ", witness dim " + std::to_string(v.witness.dim());
  return v.verdict == want && ok;
}

template <ExactField F>
void verdict_item(ItemLog& log, int criterion, const std::string& label, const std::function<LieAlgebra<F>()>& make,
                  Irreducibility want, const BatteryOptions& o) {
  log.check(criterion, label, [&](std::string& d) { return expect_verdict(make(), want, o, d); });
}

inline void theorem1(ItemLog& log, const BatteryOptions& o) {
  using namespace builtin;
  const auto irr = Irreducibility::Irreducible, red = Irreducibility::Reducible;
  for (auto n : ns_or(o, {2, 3, 4, 6})) {
    const std::string at = " n=" + std::to_string(n);
    verdict_item<Rational>(log, 1, "SO(2," + std::to_string(n) + ")" + at, [&] { return so(2, n); }, irr, o);
    if (n % 2 == 0) {
      const std::size_t p = n / 2;
      verdict_item<Rational>(log, 1, "U(1," + std::to_string(p) + ")_real" + at, [&] { return u1p_real(p); }, irr, o);
      verdict_item<Rational>(log, 1, "SU(1," + std::to_string(p) + ")_real" + at, [&] { return su1p_real(p); }, irr, o);
      if (p > 1)
        verdict_item<Rational>(log, 1, "S1_SO(1," + std::to_string(p) + ")_real" + at, [&] { return s1_so1p_real(p); },
                               irr, o);
      for (std::size_t k = 1; k <= p; ++k)
        verdict_item<Rational>(log, 2, "I2_SO(1," + std::to_string(k) + ")" + at,
                               [&] { return so1k_in_su1p_real(k, n); }, red, o);
    }
    if (n == 3) verdict_item<QuadExt>(log, 1, "APPENDIX_SO12" + at, [] { return appendix_so12(); }, irr, o);
    if (n >= 4)
      verdict_item<QuadExt>(log, 2, "APPENDIX_SO12 in SO(2," + std::to_string(n) + ")" + at,
                            [&] { return appendix_so12_in(n); }, red, o);
    for (std::size_t k1 = 1; k1 < n; ++k1)
      for (std::size_t k2 = 1; k1 + k2 <= n; ++k2)
        verdict_item<Rational>(log, 2, "G2_SO(1," + std::to_string(k1) + ")xSO(1," + std::to_string(k2) + ")" + at,
                               [&] { return g2_isometry(k1, k2, n); }, red, o);
    if (n >= 2) verdict_item<Rational>(log, 2, "SO12_BLOCK_P2" + at, [&] { return so12_block_p2(n); }, red, o);
    for (std::size_t k = 1; 2 * k < n; ++k)
      verdict_item<Rational>(log, 2, "I1_SU(1," + std::to_string(k) + ")" + at, [&] { return su1k_in_so2n(k, n); }, red,
                             o);
    for (std::size_t k = 1; k < n; ++k)
      verdict_item<Rational>(log, 2, "G1_SO(2," + std::to_string(k) + ")" + at, [&] { return g1_isometry(k, n); }, red,
                             o);
    for (std::size_t k = 1; k <= n; ++k)
      verdict_item<Rational>(log, 2, "P1_SO(1," + std::to_string(k) + ")" + at, [&] { return p1_isometry(k, n); }, red,
                             o);
  }
}

inline void appendix_a(ItemLog& log) {
  using namespace builtin;
  const auto U = appendix_U(), V = appendix_V(), W = appendix_W();
  const auto Us = appendix_U_star(), Vs = appendix_V_star();
  auto identity = [&](const char* name, const Matrix<QuadExt>& lhs, const Matrix<QuadExt>& rhs) {
    log.check(3, name, [&](std::string& d) {
      bool ok = (lhs - rhs).is_zero();
      d = ok ? "residual 0" : "nonzero residual";
      return ok;
    });
  };
  identity("[V,W] = U", bracket(V, W), U);
  identity("[W,U] = V", bracket(W, U), V);
  identity("[U,V] = W", bracket(U, V), W);
  identity("[U*,V*] = -W", bracket(Us, Vs), -W);
  identity("[V*,W] = U*", bracket(Vs, W), Us);
  identity("[W,U*] = V*", bracket(W, Us), Vs);
  auto closure = [&](const char* name, const Matrix<QuadExt>& a, const Matrix<QuadExt>& b, SignatureForm form) {
    log.check(3, name, [&, form](std::string& d) {
      auto g = bracket_closure<QuadExt>({a, b});
      bool orth = check_orthogonality(g, form);
      d = "dim " + std::to_string(g.dim()) + (orth ? ", orthogonal" : ", not orthogonal");
      return g.dim() == 3 && orth;
    });
  };
  closure("closure{U,V} in so(5)", U, V, eta(0, 5));
  closure("closure{U*,V*} in so(2,3)", Us, Vs, eta(2, 3));

  const Vector<QuadExt> e0e2{1, 0, 1, 0, 0}, e1e3{0, 1, 0, 1, 0};
  auto p = parabolic_algebra<QuadExt>(2, 3, e0e2);
  auto ambient = builtin::so<QuadExt>(2, 3);
  log.check(4, "dim parabolic(e0+e2) = 7", [&](std::string& d) {
    d = "dim " + std::to_string(p.dim());
    return p.dim() == 7;
  });
  log.check(4, "U* stabilizes span{e1+e3}", [&](std::string& d) {
    bool ok = Subspace<QuadExt>::span(5, {e1e3}).contains(Us * e1e3);
    d = ok ? "stabilized" : "moved";
    return ok;
  });
  log.check(4, "APPENDIX_SO12 not locally transitive", [&](std::string& d) {
    bool t = local_transitivity(appendix_so12(), p, ambient);
    d = t ? "transitive" : "not transitive";
    return !t;
  });
  log.check(4, "SO(2,3) locally transitive", [&](std::string& d) {
    bool t = local_transitivity(ambient, p, ambient);
    d = t ? "transitive" : "not transitive";
    return t;
  });

  auto dq = cartan<QuadExt>(3);
  log.check(8, "span{U*,V*} is a Lie triple", [&](std::string& d) {
    bool ok = is_lie_triple(MatrixSpace<QuadExt>::span(5, 5, {Us, Vs}), dq);
    d = ok ? "closed" : "not closed";
    return ok;
  });
  log.check(8, "crafted plane is not a Lie triple", [&](std::string& d) {
    auto dr = cartan(3);
    auto a = m_element<Rational>({1, 0, 0}, {0, 0, 0}, CartanVariant::Noncompact);
    auto b = m_element<Rational>({0, 1, 0}, {1, 0, 0}, CartanVariant::Noncompact);
    bool lt = is_lie_triple(MatrixSpace<Rational>::span(5, 5, {a, b}), dr);
    // Direct expansion: [[a,b],b] must leave span{a,b}.
    auto t = bracket(bracket(a, b), b);
    bool escapes = MatrixSpace<Rational>::span(5, 5, {a, b, t}).dim() == 3;
    d = std::string(lt ? "closed" : "not closed") + (escapes ? ", [[a,b],b] escapes" : ", [[a,b],b] stays");
    return !lt && escapes;
  });
  log.check(8, "lines of m* are Lie triples", [&](std::string& d) {
    sampling::Sampler g(12);
    std::size_t tried = 0;
    for (const auto& x : dq.m_basis) {
      ++tried;
      if (!is_lie_triple(MatrixSpace<QuadExt>::span(5, 5, {x}), dq)) return false;
    }
    for (int t = 0; t < 20; ++t, ++tried) {
      Matrix<QuadExt> x(5, 5);
      for (const auto& b : dq.m_basis) x += b * QuadExt(Rational(g.range(-5, 5), g.range(1, 4)));
      if (x.is_zero()) continue;
      if (!is_lie_triple(MatrixSpace<QuadExt>::span(5, 5, {x}), dq)) return false;
    }
    for (const auto& x : {Us, Vs})
      if (!is_lie_triple(MatrixSpace<QuadExt>::span(5, 5, {x}), dq)) return false;
    d = std::to_string(tried + 2) + " lines";
    return true;
  });
}

inline void fixers(ItemLog& log) {
  using namespace builtin;
  for (std::size_t k : {1u, 2u, 3u})
    log.check(9, "fixer U(1," + std::to_string(k) + ")_real at PI0", [&](std::string& d) {
      auto f = fixer_algebra(u1p_real(k), pi0_plane(2 * k));
      d = "dim " + std::to_string(f.dim());
      return f.dim() == 1;
    });
  log.check(9, "fixer APPENDIX_SO12 at PI0", [&](std::string& d) {
    auto f = fixer_algebra(appendix_so12(), pi0_plane<QuadExt>(3));
    d = "dim " + std::to_string(f.dim());
    return f.dim() == 0;
  });
}

inline void appendix_b(ItemLog& log, const BatteryOptions& o) {
  auto ns = ns_or(o, {1, 2, 3, 4, 5});
  log.check(10, "f(0) = PI0", [&](std::string& d) {
    for (auto n : ns)
      if (!(cartan_iv_map(DomainPoint{std::vector<GaussRat>(n, GaussRat(0))}) == pi0<GaussRat>(n))) {
        d = "mismatch at n=" + std::to_string(n);
        return false;
      }
    d = "checked " + std::to_string(ns.size()) + " dimensions";
    return true;
  });
  log.check(10, "boundary z=(1,0,...) rejected", [&](std::string& d) {
    for (auto n : ns) {
      std::vector<GaussRat> z(n, GaussRat(0));
      z[0] = GaussRat(1);
      DomainPoint p{z};
      if (!is_zero(margin(p)) || in_domain_iv(p)) {
        d = "n=" + std::to_string(n) + ": margin " + format_scalar(margin(p));
        return false;
      }
    }
    d = "margin 0";
    return true;
  });
  log.check(10, "quadric residual zero at samples", [&](std::string& d) {
    sampling::Sampler g(o.seed + 30);
    std::size_t count = 0;
    for (auto n : ns)
      for (std::size_t t = 0; t < o.samples; ++t, ++count) {
        DomainPoint p;
        for (std::size_t j = 0; j < n; ++j) p.z.push_back(sampling::small_gauss(g, false, 9, 6));
        if (!is_zero(quadric_residual(cartan_iv_map(p)))) {
          d = "nonzero residual at n=" + std::to_string(n);
          return false;
        }
      }
    d = std::to_string(count) + " points";
    return true;
  });
  log.check(10, "membership agrees with Lie ball", [&](std::string& d) {
    sampling::Sampler g(o.seed + 33);
    std::size_t count = 0, inside = 0;
    for (auto n : ns)
      for (std::size_t t = 0; t < o.samples; ++t, ++count) {
        DomainPoint p = t % 2 ? sampling::domain_point(g, n, true) : DomainPoint{};
        if (t % 2 == 0)
          for (std::size_t j = 0; j < n; ++j) p.z.push_back(sampling::small_gauss(g, false, 3, 3));
        bool a = in_domain_iv(p);
        inside += a;
        if (a != in_lieball(cartan_iv_map(p)) || a != sampling::domain_inequalities(p)) {
          d = "disagreement at n=" + std::to_string(n);
          return false;
        }
      }
    d = std::to_string(count) + " points, " + std::to_string(inside) + " inside";
    return true;
  });
}

inline void embeddings(ItemLog& log, const BatteryOptions& o) {
  for (auto n : ns_or(o, {2, 3, 4})) {
    sampling::Sampler g(o.seed + n);
    for (const auto& spec : sampling::embedding_specs(n))
      log.check(7, spec.label(), [&](std::string& d) {
        for (std::size_t t = 0; t < o.samples; ++t) {
          auto z = embed(spec, sampling::embedding_input(g, spec, true));
          if (!is_zero(quadric_residual(z)) || !on_quadric(z) || !in_lieball(z)) {
            d = "failed at sample " + std::to_string(t);
            return false;
          }
        }
        d = std::to_string(o.samples) + " points";
        return true;
      });
  }
  log.check(7, "I1 at (1,0,...) is PI0", [&](std::string& d) {
    for (std::size_t n = 2; n <= 4; ++n)
      for (std::size_t k = 1; 2 * k <= n; ++k) {
        std::vector<GaussRat> z(k + 1, GaussRat(0));
        z[0] = GaussRat(1);
        if (!(embed({EmbeddingType::I1, k, 0, n}, z) == pi0(n))) {
          d = "mismatch at n=" + std::to_string(n);
          return false;
        }
      }
    d = "exact";
    return true;
  });
  log.check(7, "G2 at ([1:0],[1:0]) is PI0", [&](std::string& d) {
    for (std::size_t n = 2; n <= 4; ++n)
      for (std::size_t k1 = 1; k1 < n; ++k1)
        for (std::size_t k2 = 1; k1 + k2 <= n; ++k2) {
          std::vector<GaussRat> z(k1 + k2 + 2, GaussRat(0));
          z[0] = z[k1 + 1] = GaussRat(1);
          if (!(embed({EmbeddingType::G2, k1, k2, n}, z) == pi0(n))) {
            d = "mismatch at n=" + std::to_string(n);
            return false;
          }
        }
    d = "exact";
    return true;
  });
}

template <ExactField F>
F hermitian_value(const Matrix<F>& h, const Vector<F>& x, const Vector<F>& y) {
  F s(0);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) s += x[i] * h(i, j) * conj(y[j]);
  return s;
}

inline void lemma_forms(ItemLog& log) {
  using namespace builtin;
  log.check(6, "hermitian_from_symplectic on su(2)/C^2", [&](std::string& d) {
    Representation<GaussRat> rep(su2_c2());
    Matrix<GaussRat> jm = quaternionic_j(1);
    Antilinear<GaussRat> j{jm};
    Matrix<GaussRat> omega{{GaussRat(0), GaussRat(1)}, {GaussRat(-1), GaussRat(0)}};
    auto h = hermitian_from_symplectic(j, omega, rep);
    bool herm = h.form.adjoint() == h.form;
    bool inv = is_invariant_form(h.form, rep.generators(), Symmetry::Hermitian);
    // <Jx,Jy> = conj <x,y> as a matrix identity.
    bool compat = jm.transpose() * h.form * jm.conjugate() == h.form.conjugate();
    d = std::string(herm ? "hermitian" : "not hermitian") + (inv ? ", invariant" : ", not invariant") +
        (compat ? ", J-compatible" : ", not J-compatible");
    return herm && inv && compat && !h.form.is_zero();
  });
  for (std::size_t m : {1u, 2u})
    log.check(6, "hermitian_from_symmetric m=" + std::to_string(m), [&](std::string& d) {
      Representation<GaussRat> rep(toy_orthogonal_quaternionic(m));
      Antilinear<GaussRat> j{quaternionic_j(m)};
      auto h = hermitian_from_symmetric(j, Matrix<GaussRat>::identity(2 * m), rep);
      bool neutral = h.signature == Signature{m, m, 0};
      bool lightlike = true;
      for (std::size_t k = 0; k < 2 * m; ++k) {
        auto e = unit_vector<GaussRat>(2 * m, k);
        lightlike = lightlike && is_zero(hermitian_value(h.form, e, e));
      }
      bool herm = h.form.adjoint() == h.form;
      d = "signature (" + std::to_string(h.signature.neg) + "," + std::to_string(h.signature.pos) + ")" +
          (lightlike ? ", basis light-like" : ", basis not light-like");
      return neutral && lightlike && herm;
    });
}

template <ExactField F>
void type_item(ItemLog& log, const LieAlgebra<F>& g, RepType want, std::size_t dim, const BatteryOptions& o) {
  log.check(5, g.name(), [&](std::string& d) {
    auto t = classify_type(Representation<F>(g), o.seed, o.budget);
    d = std::string(rep_type_name(t.type)) + ", commutant dim " + std::to_string(t.commutant_dim) +
        (t.cross_check_agrees ? ", cross-check agrees" : ", cross-check disagrees");
    return t.type == want && t.commutant_dim == dim && t.cross_check_agrees;
  });
}

inline void types(ItemLog& log, const BatteryOptions& o) {
  using namespace builtin;
  for (auto [p, q] : {std::pair<std::size_t, std::size_t>{0, 3}, {1, 2}, {2, 2}, {2, 3}, {1, 4}})
    type_item(log, so(p, q), RepType::Real, 1, o);
  for (std::size_t p : {1u, 2u, 3u}) type_item(log, u1p_real(p), RepType::Complex, 2, o);
  type_item(log, su2_r4(), RepType::Quaternionic, 4, o);
}

}  // namespace detail

inline std::vector<BatteryItem> run_battery(Battery b, const BatteryOptions& o = {}) {
  std::vector<BatteryItem> out;
  detail::ItemLog log(out);
  switch (b) {
    case Battery::Theorem1: detail::theorem1(log, o); break;
    case Battery::AppendixA: detail::appendix_a(log); break;
    case Battery::AppendixB: detail::appendix_b(log, o); break;
    case Battery::Embeddings: detail::embeddings(log, o); break;
    case Battery::LemmaForms: detail::lemma_forms(log); break;
    case Battery::Types: detail::types(log, o); break;
    case Battery::Fixers: detail::fixers(log); break;
  }
  return out;
}

}  // namespace so2n
