#include <gtest/gtest.h>

#include <vector>

#include "avgnorm/error.hpp"
#include "avgnorm/exactnum.hpp"

using namespace avgnorm;

TEST(Rational, ReducesAndRenders) {
  EXPECT_EQ(Rational(BigInt(6), BigInt(9)).str(), "2/3");
  EXPECT_EQ(Rational(BigInt(4), BigInt(-8)).str(), "-1/2");
  EXPECT_EQ(Rational(BigInt(18), BigInt(9)).str(), "2");
  EXPECT_EQ(Rational(0).str(), "0");
}

TEST(Rational, Arithmetic) {
  const Rational a = Rational::parse("1/6"), b = Rational::parse("-3/4");
  EXPECT_EQ((a + b).str(), "-7/12");
  EXPECT_EQ((a - b).str(), "11/12");
  EXPECT_EQ((a * b).str(), "-1/8");
  EXPECT_EQ((a / b).str(), "-2/9");
  EXPECT_LT(b, a);
  EXPECT_THROW(a / Rational(0), DivisionByZero);
  EXPECT_THROW(Rational(BigInt(1), BigInt(0)), DivisionByZero);
}

TEST(Rational, ParseErrorsCarryPosition) {
  EXPECT_EQ(Rational::parse("-12/5").str(), "-12/5");
  try {
    Rational::parse("3/x");
    FAIL() << "no throw";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 2u);
  }
  EXPECT_THROW(Rational::parse("1/0"), ParseError);
  EXPECT_THROW(Rational::parse(""), ParseError);
}

TEST(GaussianRational, RenderingForms) {
  EXPECT_EQ(GaussianRational(Rational(3), Rational(0)).str(), "3");
  EXPECT_EQ(GaussianRational(Rational(0), Rational(2)).str(), "2i");
  EXPECT_EQ(GaussianRational(Rational(1), Rational(-1)).str(), "1-i");
  EXPECT_EQ(GaussianRational::i().str(), "i");
  EXPECT_EQ(GaussianRational(Rational::parse("1/2"), Rational::parse("-3/4")).str(), "1/2-3/4i");
}

TEST(GaussianRational, ParseRoundTrip) {
  for (const char* text : {"0", "-7", "i", "-i", "2i", "1/2+i", "-3/4-5/6i", "5-i"})
    EXPECT_EQ(GaussianRational::parse(text).str(), text) << text;
  EXPECT_EQ(GaussianRational::parse(" 2 * i ").str(), "2i");
  EXPECT_EQ(GaussianRational::parse("1i").str(), "i");
  EXPECT_EQ(GaussianRational::parse("-1/2i").str(), "-1/2i");
  EXPECT_EQ(GaussianRational::parse("i+3").str(), "3+i");
  EXPECT_THROW(GaussianRational::parse("1+2+3"), ParseError);
  EXPECT_THROW(GaussianRational::parse("x"), ParseError);
}

TEST(GaussianRational, FieldOperations) {
  const GaussianRational a = GaussianRational::parse("1+i");
  EXPECT_EQ(a.pow(4).str(), "-4");
  EXPECT_EQ(a.pow(0).str(), "1");
  EXPECT_EQ(GaussianRational().pow(0).str(), "1");
  EXPECT_EQ((a * a.conj()).str(), "2");
  EXPECT_EQ(a.norm().str(), "2");
  EXPECT_EQ((GaussianRational(1) / a).str(), "1/2-1/2i");
  EXPECT_EQ(gr_arith(a, GaussianRational::i(), ArithOp::sub).str(), "1");
  EXPECT_EQ(gr_arith(a, a, ArithOp::mul).str(), "2i");
  EXPECT_THROW(gr_arith(a, GaussianRational(), ArithOp::div), DivisionByZero);
  GaussianRational acc(1);
  acc.add_product(a, a);
  EXPECT_EQ(acc.str(), "1+2i");
}

TEST(Combinatorics, FactorialBinomialMultinomial) {
  EXPECT_EQ(factorial(0), 1);
  EXPECT_EQ(factorial(10), 3628800);
  EXPECT_EQ(factorial(25).get_str(), "15511210043330985984000000");
  EXPECT_EQ(factorial(factorial_cache_bound() + 3) / factorial(factorial_cache_bound() + 2),
            BigInt(factorial_cache_bound() + 3));
  EXPECT_EQ(binomial(10, 3), 120);
  EXPECT_EQ(binomial(3, 5), 0);
  const std::vector<unsigned> parts{2, 1, 1};
  EXPECT_EQ(multinomial(4, parts), 12);
  EXPECT_THROW(multinomial(5, parts), InvalidArgument);
}
