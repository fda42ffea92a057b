#pragma once

#include <gmpxx.h>

#include <cmath>
#include <compare>
#include <complex>
#include <concepts>
#include <cstdlib>
#include <optional>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>

#include "so2n/error.hpp"

namespace so2n {

class Rational {
 public:
  Rational() = default;
  template <std::integral I>
  Rational(I v) : v_(static_cast<long>(v)) {}
  Rational(long num, long den) {
    require(den != 0, ErrorCode::DivisionByZero, "zero denominator");
    v_ = mpq_class(mpz_class(num), mpz_class(den));
    v_.canonicalize();
  }
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }
  Rational(const mpz_class& num, const mpz_class& den) {
    require(den != 0, ErrorCode::DivisionByZero, "zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }

  const mpq_class& value() const { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    require(!o.is_zero(), ErrorCode::DivisionByZero, "rational division by zero");
    v_ /= o.v_;
    return *this;
  }
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.v_, b.v_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  long double to_long_double() const {
    if (is_zero()) return 0.0L;
    mpf_class f(v_, 160);
    mp_exp_t exp = 0;
    char* digits = mpf_get_str(nullptr, &exp, 10, 30, f.get_mpf_t());
    std::string s(digits);
    void (*freefunc)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefunc);
    freefunc(digits, s.size() + 1);
    bool neg = !s.empty() && s[0] == '-';
    if (neg) s.erase(0, 1);
    std::string text = (neg ? "-0." : "0.") + s + "e" + std::to_string(exp);
    return std::strtold(text.c_str(), nullptr);
  }

  std::string str() const { return v_.get_str(); }

 private:
  mpq_class v_;
};

inline Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

inline std::optional<Rational> exact_sqrt(const Rational& x) {
  if (x.sign() < 0) return std::nullopt;
  mpz_class n = x.numerator(), d = x.denominator();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  return Rational(rn, rd);
}

inline bool is_squarefree_radicand(long d) {
  if (d < 2) return false;
  for (long p = 2; p * p <= d; ++p)
    if (d % (p * p) == 0) return false;
  return true;
}

// x = s^2 * d with d square-free; returns {s, d}. x must be a positive integer.
inline std::pair<mpz_class, long> squarefree_split(mpz_class x) {
  mpz_class s = 1, d = 1;
  for (mpz_class p = 2; p * p <= x; ++p) {
    while (x % (p * p) == 0) {
      x /= p * p;
      s *= p;
    }
    if (x % p == 0) {
      x /= p;
      d *= p;
    }
  }
  d *= x;
  require(d.fits_slong_p(), ErrorCode::BadParams, "radicand does not fit in a machine integer");
  return {s, d.get_si()};
}

// a + b*sqrt(d); d == 0 marks a value with no radical attached (b == 0).
class QuadExt {
 public:
  QuadExt() = default;
  template <std::integral I>
  QuadExt(I v) : a_(v) {}
  QuadExt(Rational a) : a_(std::move(a)) {}
  QuadExt(Rational a, Rational b, long radicand) : a_(std::move(a)), b_(std::move(b)), d_(radicand) {
    require(is_squarefree_radicand(radicand), ErrorCode::BadParams,
            "radicand must be a square-free integer >= 2, got " + std::to_string(radicand));
  }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  long radicand() const { return d_; }
  bool is_rational() const { return b_.is_zero(); }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

  int sign() const {
    int sa = a_.sign(), sb = b_.sign();
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    Rational lhs = a_ * a_, rhs = Rational(d_) * b_ * b_;
    int c = lhs > rhs ? 1 : (lhs < rhs ? -1 : 0);
    return sa > 0 ? c : -c;
  }

  QuadExt operator-() const { return make(-a_, -b_, d_); }
  QuadExt& operator+=(const QuadExt& o) {
    d_ = merge(d_, o.d_);
    a_ += o.a_;
    b_ += o.b_;
    return *this;
  }
  QuadExt& operator-=(const QuadExt& o) {
    d_ = merge(d_, o.d_);
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
  }
  QuadExt& operator*=(const QuadExt& o) {
    long d = merge(d_, o.d_);
    Rational na = a_ * o.a_;
    if (!b_.is_zero() && !o.b_.is_zero()) na += Rational(d) * b_ * o.b_;
    Rational nb = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(na);
    b_ = std::move(nb);
    d_ = d;
    return *this;
  }
  QuadExt& operator/=(const QuadExt& o) { return *this *= o.inverse(); }

  QuadExt inverse() const {
    require(!is_zero(), ErrorCode::DivisionByZero, "quadratic-extension division by zero");
    Rational norm = a_ * a_;
    if (!b_.is_zero()) norm -= Rational(d_) * b_ * b_;
    return make(a_ / norm, -b_ / norm, d_);
  }

  QuadExt galois() const { return make(a_, -b_, d_); }

  friend QuadExt operator+(QuadExt x, const QuadExt& y) { return x += y; }
  friend QuadExt operator-(QuadExt x, const QuadExt& y) { return x -= y; }
  friend QuadExt operator*(QuadExt x, const QuadExt& y) { return x *= y; }
  friend QuadExt operator/(QuadExt x, const QuadExt& y) { return x /= y; }

  friend bool operator==(const QuadExt& x, const QuadExt& y) {
    if (x.a_ != y.a_ || x.b_ != y.b_) return false;
    return x.b_.is_zero() || x.d_ == y.d_;
  }

  long double to_long_double() const {
    long double v = a_.to_long_double();
    if (!b_.is_zero()) v += b_.to_long_double() * std::sqrt(static_cast<long double>(d_));
    return v;
  }

 private:
  static QuadExt make(Rational a, Rational b, long d) {
    QuadExt r;
    r.a_ = std::move(a);
    r.b_ = std::move(b);
    r.d_ = d;
    return r;
  }
  static long merge(long x, long y) {
    if (x == 0) return y;
    if (y == 0 || x == y) return x;
    throw Error(ErrorCode::FieldMismatch,
                "radicands " + std::to_string(x) + " and " + std::to_string(y) + " combined");
  }

  Rational a_, b_;
  long d_ = 0;
};

inline std::optional<QuadExt> exact_sqrt(const QuadExt& x, long radicand) {
  if (x.is_rational()) {
    if (auto r = exact_sqrt(x.a())) return QuadExt(*r);
    if (radicand != 0) {
      if (auto r = exact_sqrt(x.a() / Rational(radicand))) return QuadExt(0, *r, radicand);
    }
    return std::nullopt;
  }
  long d = x.radicand();
  Rational disc = x.a() * x.a() - Rational(d) * x.b() * x.b();
  auto r = exact_sqrt(disc);
  if (!r) return std::nullopt;
  for (const Rational& p2 : {(x.a() + *r) / Rational(2), (x.a() - *r) / Rational(2)}) {
    if (p2.is_zero()) continue;
    if (auto p = exact_sqrt(p2)) {
      QuadExt cand(*p, x.b() / (Rational(2) * *p), d);
      if (cand * cand == x) return cand.sign() < 0 ? -cand : cand;
    }
  }
  return std::nullopt;
}

// Nonnegative square root of a rational x >= 0, adjoining sqrt of its square-free part.
inline QuadExt radical_sqrt(const Rational& x) {
  require(x.sign() >= 0, ErrorCode::BadParams, "square root of a negative rational");
  if (x.is_zero()) return QuadExt(0);
  mpz_class n = x.numerator(), d = x.denominator();
  auto [s, r] = squarefree_split(n * d);
  Rational c(s, d);
  if (r == 1) return QuadExt(c);
  return QuadExt(Rational(0), c, r);
}

template <class T>
class Gauss {
 public:
  Gauss() = default;
  template <std::integral I>
  Gauss(I v) : re_(v) {}
  Gauss(T re) : re_(std::move(re)) {}
  Gauss(T re, T im) : re_(std::move(re)), im_(std::move(im)) {}

  static Gauss i() { return Gauss(T(0), T(1)); }

  const T& re() const { return re_; }
  const T& im() const { return im_; }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  Gauss conj() const { return Gauss(re_, -im_); }
  T norm() const { return re_ * re_ + im_ * im_; }

  Gauss operator-() const { return Gauss(-re_, -im_); }
  Gauss& operator+=(const Gauss& o) { re_ += o.re_; im_ += o.im_; return *this; }
  Gauss& operator-=(const Gauss& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
  Gauss& operator*=(const Gauss& o) {
    T r = re_ * o.re_ - im_ * o.im_;
    T m = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(m);
    return *this;
  }
  Gauss& operator/=(const Gauss& o) { return *this *= o.inverse(); }
  Gauss inverse() const {
    require(!is_zero(), ErrorCode::DivisionByZero, "gaussian division by zero");
    T n = norm();
    return Gauss(re_ / n, -im_ / n);
  }

  friend Gauss operator+(Gauss x, const Gauss& y) { return x += y; }
  friend Gauss operator-(Gauss x, const Gauss& y) { return x -= y; }
  friend Gauss operator*(Gauss x, const Gauss& y) { return x *= y; }
  friend Gauss operator/(Gauss x, const Gauss& y) { return x /= y; }
  friend bool operator==(const Gauss& x, const Gauss& y) { return x.re_ == y.re_ && x.im_ == y.im_; }

 private:
  T re_, im_;
};

using GaussRat = Gauss<Rational>;
using GaussQuad = Gauss<QuadExt>;

enum class FieldTag { Rat, Quad, GaussRat, GaussQuad };

inline std::string_view field_name(FieldTag t) {
  switch (t) {
    case FieldTag::Rat: return "rat";
    case FieldTag::Quad: return "quad";
    case FieldTag::GaussRat: return "gauss_rat";
    case FieldTag::GaussQuad: return "gauss_quad";
  }
  return "rat";
}

inline FieldTag parse_field_name(std::string_view s) {
  if (s == "rat") return FieldTag::Rat;
  if (s == "quad") return FieldTag::Quad;
  if (s == "gauss_rat") return FieldTag::GaussRat;
  if (s == "gauss_quad") return FieldTag::GaussQuad;
  throw Error(ErrorCode::InputError, "unknown field '" + std::string(s) + "'");
}

template <class F> struct field_traits;
template <> struct field_traits<Rational> {
  static constexpr FieldTag tag = FieldTag::Rat;
  static constexpr bool ordered = true;
  using real_type = Rational;
};
template <> struct field_traits<QuadExt> {
  static constexpr FieldTag tag = FieldTag::Quad;
  static constexpr bool ordered = true;
  using real_type = QuadExt;
};
template <> struct field_traits<GaussRat> {
  static constexpr FieldTag tag = FieldTag::GaussRat;
  static constexpr bool ordered = false;
  using real_type = Rational;
};
template <> struct field_traits<GaussQuad> {
  static constexpr FieldTag tag = FieldTag::GaussQuad;
  static constexpr bool ordered = false;
  using real_type = QuadExt;
};

template <class F>
concept ExactField = requires { field_traits<F>::tag; };
template <class F>
concept OrderedField = ExactField<F> && field_traits<F>::ordered;
template <class F>
concept GaussianField = ExactField<F> && !field_traits<F>::ordered;

template <class F>
using real_of = typename field_traits<F>::real_type;

inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline bool is_zero(const QuadExt& x) { return x.is_zero(); }
template <class T>
bool is_zero(const Gauss<T>& x) { return x.is_zero(); }

inline int sign(const Rational& x) { return x.sign(); }
inline int sign(const QuadExt& x) { return x.sign(); }

inline const Rational& conj(const Rational& x) { return x; }
inline const QuadExt& conj(const QuadExt& x) { return x; }
template <class T>
Gauss<T> conj(const Gauss<T>& x) { return x.conj(); }

inline Rational galois(const Rational& x) { return x; }
inline QuadExt galois(const QuadExt& x) { return x.galois(); }
template <class T>
Gauss<T> galois(const Gauss<T>& x) { return Gauss<T>(galois(x.re()), galois(x.im())); }

inline long radicand(const Rational&) { return 0; }
inline long radicand(const QuadExt& x) { return x.is_rational() ? 0 : x.radicand(); }
template <class T>
long radicand(const Gauss<T>& x) {
  long r = radicand(x.re());
  return r != 0 ? r : radicand(x.im());
}

inline std::complex<long double> to_complex(const Rational& x) { return {x.to_long_double(), 0.0L}; }
inline std::complex<long double> to_complex(const QuadExt& x) { return {x.to_long_double(), 0.0L}; }
template <class T>
std::complex<long double> to_complex(const Gauss<T>& x) {
  return {x.re().to_long_double(), x.im().to_long_double()};
}

template <class F>
real_of<F> real_part(const F& x) {
  if constexpr (OrderedField<F>) return x;
  else return x.re();
}
template <class F>
real_of<F> imag_part(const F& x) {
  if constexpr (OrderedField<F>) return real_of<F>(0);
  else return x.im();
}
template <class F>
F make_scalar(const real_of<F>& re, const real_of<F>& im) {
  if constexpr (OrderedField<F>) {
    require(is_zero(im), ErrorCode::FieldMismatch, "imaginary part in a real field");
    return re;
  } else {
    return F(re, im);
  }
}

template <class F>
F imaginary_unit() {
  static_assert(GaussianField<F>);
  return F::i();
}

// --- formatting and parsing -------------------------------------------------

inline std::string format_scalar(const Rational& x) { return x.str(); }
inline std::string format_scalar(const QuadExt& x) {
  if (x.is_rational()) return x.a().str();
  return x.a().str() + "+" + x.b().str() + "*sqrt";
}
template <class T>
std::string format_scalar(const Gauss<T>& x) {
  return "(" + format_scalar(x.re()) + "," + format_scalar(x.im()) + ")";
}

namespace detail {

class ScalarParser {
 public:
  ScalarParser(std::string_view text, long d) : s_(text), d_(d) {}

  GaussQuad parse() {
    skip_ws();
    GaussQuad out;
    if (peek() == '(') {
      ++pos_;
      QuadExt re = quad();
      skip_ws();
      expect(',');
      QuadExt im = quad();
      skip_ws();
      expect(')');
      out = GaussQuad(re, im);
    } else {
      out = GaussQuad(quad());
    }
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected trailing character");
    return out;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::ParseError, "at position " + std::to_string(pos_) + " in '" + std::string(s_) + "': " + msg);
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  bool accept_sqrt() {
    static constexpr std::string_view tail = "*sqrt";
    if (s_.substr(pos_, tail.size()) == tail) {
      pos_ += tail.size();
      return true;
    }
    return false;
  }
  mpz_class digits() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && s_[pos_] >= '0' && s_[pos_] <= '9') ++pos_;
    if (start == pos_) fail("expected digit");
    return mpz_class(std::string(s_.substr(start, pos_ - start)), 10);
  }
  Rational rat() {
    skip_ws();
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++pos_;
    }
    mpz_class num = digits();
    mpz_class den = 1;
    if (peek() == '/') {
      ++pos_;
      std::size_t at = pos_;
      den = digits();
      if (den == 0) {
        pos_ = at;
        fail("zero denominator");
      }
    }
    if (neg) num = -num;
    return Rational(num, den);
  }
  QuadExt radical(const Rational& a, const Rational& b) {
    if (d_ == 0) fail("radical used but no radicand configured");
    return QuadExt(a, b, d_);
  }
  QuadExt quad() {
    Rational first = rat();
    if (accept_sqrt()) return radical(Rational(0), first);
    if (peek() == '+' || peek() == '-') {
      bool minus = peek() == '-';
      ++pos_;
      Rational second = rat();
      if (!accept_sqrt()) fail("expected '*sqrt'");
      return radical(first, minus ? -second : second);
    }
    return QuadExt(first);
  }

  std::string_view s_;
  long d_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline GaussQuad parse_entry(std::string_view text, long d) { return detail::ScalarParser(text, d).parse(); }

template <class F>
F narrow(const GaussQuad& x) {
  auto real_only = [](const QuadExt& q) {
    require(q.is_rational(), ErrorCode::FieldMismatch, "radical value in a rational field");
    return q.a();
  };
  if constexpr (std::is_same_v<F, Rational>) {
    require(x.is_real(), ErrorCode::FieldMismatch, "imaginary value in a real field");
    return real_only(x.re());
  } else if constexpr (std::is_same_v<F, QuadExt>) {
    require(x.is_real(), ErrorCode::FieldMismatch, "imaginary value in a real field");
    return x.re();
  } else if constexpr (std::is_same_v<F, GaussRat>) {
    return GaussRat(real_only(x.re()), real_only(x.im()));
  } else {
    return x;
  }
}

template <class F>
F parse_scalar(std::string_view text, long d) {
  return narrow<F>(parse_entry(text, d));
}

// Field embeddings Rational -> QuadExt -> Gauss<QuadExt> and Rational -> Gauss<Rational>.
template <class To, class From>
To lift(const From& x) {
  if constexpr (std::is_same_v<To, From>) {
    return x;
  } else if constexpr (GaussianField<To> && GaussianField<From>) {
    return To(lift<real_of<To>>(x.re()), lift<real_of<To>>(x.im()));
  } else if constexpr (GaussianField<To>) {
    return To(lift<real_of<To>>(x));
  } else {
    static_assert(std::is_same_v<To, QuadExt> && std::is_same_v<From, Rational>);
    return QuadExt(x);
  }
}

}  // namespace so2n
