#include <gtest/gtest.h>

#include "so2n/scalar.hpp"
#include "support/generators.hpp"

using namespace so2n;
using so2n::testing::Gen;

namespace {

// Independent sign oracle: evaluate a + b*sqrt(d) with 512-bit floats.
int float_sign(const QuadExt& x, long d) {
  mpf_class a(x.a().value(), 512), b(x.b().value(), 512), s(d, 512);
  s = sqrt(s);
  mpf_class v = a + b * s;
  return sgn(v);
}

QuadExt q(long an, long ad, long bn, long bd) { return QuadExt(Rational(an, ad), Rational(bn, bd), 3); }

}  // namespace

TEST(Rational, NormalizesSignAndGcd) {
  Rational r(4, -6);
  EXPECT_EQ(r.numerator(), -2);
  EXPECT_EQ(r.denominator(), 3);
  EXPECT_EQ(r.str(), "-2/3");
}

TEST(Rational, DivisionByZeroThrows) {
  try {
    Rational(1) / Rational(0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DivisionByZero);
  }
  EXPECT_THROW(Rational(1, 0), Error);
}

TEST(QuadExt, DifferenceOfSquares) {
  auto x = q(1, 2, 1, 2) * q(1, 2, -1, 2);
  EXPECT_EQ(x, QuadExt(Rational(-1, 2)));
}

TEST(QuadExt, IdentityAndSelfDivision) {
  auto x = q(2, 1, 1, 1);
  EXPECT_EQ(x * QuadExt(1), x);
  EXPECT_EQ(x / x, QuadExt(1));
}

TEST(QuadExt, SignExamples) {
  EXPECT_EQ(q(0, 1, 0, 1).sign(), 0);
  EXPECT_EQ(q(1, 1, -3, 5).sign(), -1);
  EXPECT_EQ(q(-2, 1, 2, 1).sign(), 1);
}

TEST(QuadExt, MixingRadicandsIsAnError) {
  QuadExt a(Rational(1), Rational(1), 3), b(Rational(1), Rational(1), 2);
  try {
    (void)(a + b);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::FieldMismatch);
  }
  EXPECT_THROW((void)(a * b), Error);
  EXPECT_EQ(a + QuadExt(2), q(3, 1, 1, 1));
}

TEST(QuadExt, RejectsNonSquarefreeRadicand) {
  EXPECT_THROW(QuadExt(Rational(1), Rational(1), 4), Error);
  EXPECT_THROW(QuadExt(Rational(1), Rational(1), 1), Error);
}

TEST(QuadExt, SignMatchesHighPrecisionOracle) {
  Gen g(11);
  for (int i = 0; i < 2000; ++i) {
    for (long d : {2L, 3L, 5L, 7L}) {
      QuadExt x(g.rational(40, 30), g.rational(40, 30), d);
      ASSERT_EQ(x.sign(), float_sign(x, d)) << format_scalar(x);
    }
  }
}

TEST(QuadExt, SignIsMultiplicative) {
  Gen g(12);
  for (int i = 0; i < 1000; ++i) {
    auto x = g.quad(), y = g.quad();
    ASSERT_EQ((x * y).sign(), x.sign() * y.sign());
    int s = (x * x).sign();
    ASSERT_GE(s, 0);
    ASSERT_EQ(s == 0, x.is_zero());
  }
}

template <class F>
class FieldAxioms : public ::testing::Test {};
using AllFields = ::testing::Types<Rational, QuadExt, GaussRat, GaussQuad>;
TYPED_TEST_SUITE(FieldAxioms, AllFields);

TYPED_TEST(FieldAxioms, HoldExactlyOnRandomInputs) {
  using F = TypeParam;
  Gen g(21);
  for (int i = 0; i < 300; ++i) {
    F a = g.scalar<F>(), b = g.scalar<F>(), c = g.scalar<F>();
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ(a + b, b + a);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ(a - a, F(0));
    if (!is_zero(a)) ASSERT_EQ(a * (F(1) / a), F(1));
  }
}

TYPED_TEST(FieldAxioms, ParseFormatRoundTrip) {
  using F = TypeParam;
  Gen g(31);
  for (int i = 0; i < 1000; ++i) {
    F a = g.scalar<F>();
    std::string s = format_scalar(a);
    ASSERT_EQ(parse_scalar<F>(s, 3), a) << s;
    ASSERT_EQ(format_scalar(parse_scalar<F>(s, 3)), s);
  }
}

TEST(Parse, GrammarExamples) {
  EXPECT_EQ(parse_scalar<Rational>("-1/2", 3), Rational(-1, 2));
  EXPECT_EQ(parse_scalar<QuadExt>("1/3*sqrt", 3), QuadExt(Rational(0), Rational(1, 3), 3));
  EXPECT_EQ(parse_scalar<QuadExt>("2+0/1*sqrt", 3), QuadExt(Rational(2), Rational(0), 3));
  EXPECT_EQ(parse_scalar<QuadExt>("2+0/1*sqrt", 3), QuadExt(2));
  EXPECT_EQ(parse_scalar<GaussQuad>("(1,0+1*sqrt)", 3), GaussQuad(QuadExt(1), QuadExt(Rational(0), Rational(1), 3)));
  EXPECT_EQ(parse_scalar<QuadExt>("1-2*sqrt", 3), q(1, 1, -2, 1));
}

TEST(Parse, ErrorsReportPosition) {
  for (const char* bad : {"", "1/", "1/0", "x", "1+2", "(1,2", "1*sqr", "--1", "1 2"}) {
    try {
      (void)parse_scalar<GaussQuad>(bad, 3);
      FAIL() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::ParseError) << bad;
      EXPECT_NE(std::string(e.what()).find("position"), std::string::npos);
    }
  }
}

TEST(Parse, NarrowingRejectsLostInformation) {
  EXPECT_THROW(parse_scalar<Rational>("1+1*sqrt", 3), Error);
  EXPECT_THROW(parse_scalar<QuadExt>("(1,1)", 3), Error);
  EXPECT_EQ(parse_scalar<Rational>("(3,0)", 3), Rational(3));
}

TEST(QuadExt, ExactSquareRoots) {
  auto r = exact_sqrt(q(7, 1, 4, 1), 3);  // (2 + sqrt3)^2
  ASSERT_TRUE(r);
  EXPECT_EQ(*r, q(2, 1, 1, 1));
  auto s = exact_sqrt(QuadExt(12), 3);
  ASSERT_TRUE(s);
  EXPECT_EQ(*s * *s, QuadExt(12));
  EXPECT_FALSE(exact_sqrt(QuadExt(2), 3));
}
