#pragma once

#include <string>
#include <utility>
#include <vector>

#include "avgnorm/exactnum.hpp"

namespace avgnorm {

/// Laurent polynomial in z over the Gaussian rationals.
///
/// Stored sparsely as (exponent, coefficient) pairs sorted by exponent with no
/// zero coefficients, so the zero polynomial is the empty list. Products whose
/// operands are dense over their exponent span go through a flat convolution
/// buffer instead of the sparse merge.
class LaurentPoly {
 public:
  using Term = std::pair<long, GaussianRational>;

  LaurentPoly() = default;
  explicit LaurentPoly(GaussianRational constant);

  /// c * z^k
  static LaurentPoly monomial(GaussianRational c, long k);
  /// sum_k coefficients[k] * z^(k + low)
  static LaurentPoly from_dense(const std::vector<GaussianRational>& coefficients, long low = 0);

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  long min_exponent() const;  // requires !is_zero()
  long max_exponent() const;  // requires !is_zero()

  /// Coefficient of z^k (zero when absent).
  GaussianRational coefficient(long k) const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) = default;

  /// Debug form "c*z^k + ..." in increasing exponent order. Not a stable format.
  std::string str() const;

 private:
  std::vector<Term> terms_;
  friend LaurentPoly poly_mul(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly conj_reflect(const LaurentPoly& p);
};

LaurentPoly poly_mul(const LaurentPoly& a, const LaurentPoly& b);

/// p^k by repeated squaring; p^0 = 1.
LaurentPoly poly_pow(const LaurentPoly& p, unsigned k);

/// q(z) = sum conj(c_k) z^(-k); on |z| = 1 this is the complex conjugate of p.
LaurentPoly conj_reflect(const LaurentPoly& p);

/// Constant term of z^m * p, i.e. the coefficient of z^(-m).
GaussianRational constant_term(const LaurentPoly& p, long m);

/// ||p||_{2 alpha}^{2 alpha} = constant term of (p * conj_reflect(p))^alpha.
GaussianRational norm_power(const LaurentPoly& p, unsigned alpha);

}  // namespace avgnorm
