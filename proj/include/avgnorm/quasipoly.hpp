#pragma once

#include <map>
#include <string>
#include <vector>

#include "avgnorm/exactnum.hpp"

namespace avgnorm {

/// Periodic factor multiplying one polynomial part of a quasi-polynomial.
///
/// The period-3 factors are the rational-valued pair
///   c3(n) = 2 cos(2 pi n / 3)           -> 2, -1, -1, 2, ...
///   s3(n) = (2/sqrt 3) sin(2 pi n / 3)  -> 0,  1, -1, 0, ...
/// which span the same sequences as omega^n and omega^(-n).
enum class Wave { one, alternating, i_pow, minus_i_pow, c3, s3 };

GaussianRational wave_value(Wave w, unsigned long n);
unsigned wave_period(Wave w);

/// P(n) + (-1)^n Q(n) + i^n R(n) + (-i)^n S(n) [+ c3(n) U(n) + s3(n) V(n)]
/// with Gaussian rational coefficients. Parts are kept trimmed: no trailing
/// zero coefficients and no all-zero parts, so equality is structural.
class QuasiPolynomial {
 public:
  QuasiPolynomial() = default;
  /// Plain polynomial, coefficients in ascending powers of n.
  static QuasiPolynomial polynomial(std::vector<GaussianRational> ascending);

  /// Adds w(n) * sum_k ascending[k] n^k.
  QuasiPolynomial& add_part(Wave w, const std::vector<GaussianRational>& ascending);

  /// Ascending coefficients of the part for w (empty when absent).
  const std::vector<GaussianRational>& part(Wave w) const;
  const std::map<Wave, std::vector<GaussianRational>>& parts() const { return parts_; }
  /// Degree of the part for w, -1 when absent.
  int degree(Wave w) const;
  bool has_period4() const { return !part(Wave::i_pow).empty() || !part(Wave::minus_i_pow).empty(); }
  bool has_period3() const { return !part(Wave::c3).empty() || !part(Wave::s3).empty(); }

  GaussianRational evaluate(unsigned long n) const;

  QuasiPolynomial& operator+=(const QuasiPolynomial& o);
  QuasiPolynomial& operator*=(const GaussianRational& c);
  friend QuasiPolynomial operator+(QuasiPolynomial a, const QuasiPolynomial& b) { return a += b; }
  friend QuasiPolynomial operator*(QuasiPolynomial a, const GaussianRational& c) { return a *= c; }
  friend bool operator==(const QuasiPolynomial& a, const QuasiPolynomial& b) = default;

  /// Canonical formula text, e.g. "24n^4+30n^3+4n^2+5n+4-3(-1)^n" or
  /// "120n^5+...-144+(-1)^n(-75n+145)". Descending powers; non-integer or
  /// complex coefficients are parenthesized; periodic factors are written
  /// "(-1)^n", "i^n", "(-i)^n", "c3(n)", "s3(n)".
  std::string str() const;

 private:
  std::map<Wave, std::vector<GaussianRational>> parts_;
};

}  // namespace avgnorm
