#include <gtest/gtest.h>

#include "avgnorm/error.hpp"
#include "avgnorm/laurent.hpp"

using namespace avgnorm;

namespace {

LaurentPoly dense(std::initializer_list<long> coeffs, long low = 0) {
  std::vector<GaussianRational> c;
  for (long v : coeffs) c.emplace_back(v);
  return LaurentPoly::from_dense(c, low);
}

}  // namespace

TEST(Laurent, ProductWithReflection) {
  // (2z+1)(2/z+1) = 2z + 5 + 2/z
  const LaurentPoly p = dense({1, 2});
  const LaurentPoly prod = poly_mul(p, conj_reflect(p));
  EXPECT_EQ(prod, dense({2, 5, 2}, -1));
  EXPECT_EQ(prod.min_exponent(), -1);
  EXPECT_EQ(prod.max_exponent(), 1);
}

TEST(Laurent, ConjReflectConjugates) {
  const LaurentPoly p = LaurentPoly::monomial(GaussianRational::parse("1+2i"), 3) + dense({5});
  const LaurentPoly r = conj_reflect(p);
  EXPECT_EQ(r.coefficient(-3).str(), "1-2i");
  EXPECT_EQ(r.coefficient(0).str(), "5");
  EXPECT_EQ(conj_reflect(r), p);
}

TEST(Laurent, NormPower) {
  // z^2 - z + 1: |p|^2 has constant term 3, |p|^4 has constant term
  // 1 + 4 + 9 + 4 + 1 = 19 (squares of the autocorrelation 1,-2,3,-2,1)
  const LaurentPoly p = dense({1, -1, 1});
  EXPECT_EQ(norm_power(p, 1).str(), "3");
  EXPECT_EQ(norm_power(p, 2).str(), "19");
  EXPECT_THROW(norm_power(p, 0), InvalidArgument);
}

TEST(Laurent, ConstantTermShift) {
  const LaurentPoly p = dense({1, 2, 3}, -1);  // z^-1 + 2 + 3z
  EXPECT_EQ(constant_term(p, 0).str(), "2");
  EXPECT_EQ(constant_term(p, 1).str(), "1");   // [z^0] z p
  EXPECT_EQ(constant_term(p, -1).str(), "3");
  EXPECT_EQ(constant_term(p, 5).str(), "0");
}

TEST(Laurent, PowerAndSparseProduct) {
  const LaurentPoly p = dense({1, 1});
  EXPECT_EQ(poly_pow(p, 4), dense({1, 4, 6, 4, 1}));
  EXPECT_EQ(poly_pow(p, 0), dense({1}));
  // sparse operands take the map path
  const LaurentPoly a = LaurentPoly::monomial(1, -5) + LaurentPoly::monomial(1, 7);
  const LaurentPoly b = LaurentPoly::monomial(2, 5) + LaurentPoly::monomial(-2, -7);
  const LaurentPoly prod = poly_mul(a, b);
  EXPECT_EQ(prod.coefficient(0).str(), "0");
  EXPECT_EQ(prod.coefficient(12).str(), "2");
  EXPECT_EQ(prod.coefficient(-12).str(), "-2");
  EXPECT_EQ(prod.size(), 2u);
}

TEST(Laurent, ZeroPolynomial) {
  const LaurentPoly z;
  EXPECT_TRUE(z.is_zero());
  EXPECT_TRUE(poly_mul(z, dense({1, 2})).is_zero());
  EXPECT_TRUE((dense({1}) + dense({-1})).is_zero());
}
