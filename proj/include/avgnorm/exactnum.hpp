#pragma once

// Exact rationals and Gaussian rationals on top of GMP, plus factorial,
// binomial and multinomial coefficients.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace avgnorm {

using BigInt = mpz_class;

/// Arbitrary precision rational, always reduced with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : v_(value) {}  // NOLINT: implicit by design of the number tower
  Rational(const BigInt& value) : v_(value) {}  // NOLINT
  Rational(const BigInt& num, const BigInt& den);

  static Rational from_mpq(const mpq_class& value);

  BigInt numerator() const { return v_.get_num(); }
  BigInt denominator() const { return v_.get_den(); }
  const mpq_class& mpq() const { return v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }
  Rational abs() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// "p/q", or "p" when q = 1.
  std::string str() const;

  /// Accepts "p", "-p", "p/q" (q > 0). Throws ParseError.
  static Rational parse(std::string_view text);

 private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Complex number with rational real and imaginary parts.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long re) : re_(re) {}  // NOLINT
  GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  GaussianRational conj() const { return {re_, -im_}; }
  /// |x|^2 = x * conj(x), a non-negative rational.
  Rational norm() const { return re_ * re_ + im_ * im_; }
  /// x^k by repeated squaring; x^0 = 1 for every x including 0.
  GaussianRational pow(unsigned k) const;

  GaussianRational operator-() const { return {-re_, -im_}; }
  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);
  /// this += a * b, without a temporary for the common real case.
  GaussianRational& add_product(const GaussianRational& a, const GaussianRational& b);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) = default;

  /// Canonical rendering: "a", "bi", "a+bi", "a-bi"; unit imaginary parts
  /// render as "i" / "-i".
  std::string str() const;

  /// Inverse of str(); also accepts "1i", "2*i", "-1/2i" and whitespace.
  static GaussianRational parse(std::string_view text);

 private:
  Rational re_;
  Rational im_;
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& x);

enum class ArithOp { add, sub, mul, div };

/// Exact field operation; div by zero throws DivisionByZero.
GaussianRational gr_arith(const GaussianRational& a, const GaussianRational& b, ArithOp op);

/// k! with memoization up to `factorial_cache_bound()`.
BigInt factorial(unsigned k);
unsigned factorial_cache_bound();

BigInt binomial(unsigned n, unsigned k);

/// total! / prod(parts[a]!). Throws InvalidArgument when the parts do not sum
/// to total.
BigInt multinomial(unsigned total, std::span<const unsigned> parts);

}  // namespace avgnorm
