#pragma once

// Rational generating functions sum_n mu^{2 alpha}(n) x^n in the power sums
// A^{s,t} of the set, expanded by exact long division, and the closed forms
// for the weighted averages e_T(n, s, t, m) at small s, t.

#include <string>
#include <vector>

#include "avgnorm/ensemble.hpp"

namespace avgnorm {

/// Dense univariate polynomial in x, ascending coefficients, always trimmed.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<GaussianRational> ascending);
  Poly(const GaussianRational& c) : Poly(std::vector<GaussianRational>{c}) {}  // NOLINT
  /// c x^k
  static Poly monomial(unsigned k, const GaussianRational& c = 1);
  /// (1 + sign x^k)^power, e.g. binomial_power(1, -1, 3) = (1 - x)^3.
  static Poly binomial_power(unsigned k, int sign, unsigned power);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<GaussianRational>& coefficients() const { return c_; }
  GaussianRational coefficient(std::size_t k) const { return k < c_.size() ? c_[k] : GaussianRational{}; }
  const GaussianRational& leading() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend bool operator==(const Poly&, const Poly&) = default;

  /// Quotient and remainder; throws DivisionByZero for a zero divisor.
  static void divmod(const Poly& a, const Poly& b, Poly& quotient, Poly& remainder);
  /// Monic greatest common divisor (zero when both are zero).
  static Poly gcd(Poly a, Poly b);

  std::string str() const;

 private:
  void trim();
  std::vector<GaussianRational> c_;
};

/// numerator / denominator with denominator(0) = 1 and no common factor.
class RationalGF {
 public:
  RationalGF() : den_(1) {}
  /// Throws InvalidArgument when the denominator vanishes at x = 0.
  RationalGF(Poly numerator, Poly denominator);

  const Poly& numerator() const { return num_; }
  const Poly& denominator() const { return den_; }

  /// Coefficients of x^0 .. x^n_max.
  std::vector<GaussianRational> series(unsigned n_max) const;
  GaussianRational coefficient(unsigned n) const { return series(n).back(); }

  RationalGF& operator+=(const RationalGF& o);
  RationalGF& operator*=(const GaussianRational& c);
  friend RationalGF operator+(RationalGF a, const RationalGF& b) { return a += b; }
  friend RationalGF operator*(RationalGF a, const GaussianRational& c) { return a *= c; }
  friend bool operator==(const RationalGF&, const RationalGF&) = default;

  std::string str() const;

 private:
  void normalize();
  Poly num_;
  Poly den_;
};

/// Highest alpha with a generating function: 4.
constexpr unsigned kMaxGfAlpha = 4;

/// sum_n mu_T^{2 alpha}(n) x^n. alpha 0, 1, 2 hold for every set; alpha 3, 4
/// need sum_j x_j = 0 and throw NotApplicable otherwise.
RationalGF gf_mu(const CoefficientSet& set, unsigned alpha);

/// The alpha = 2 generating function with its third term as printed,
/// (A10^2 A01 + A01^2 A10) in place of (A20 A01^2 + A02 A10^2). Kept as a
/// regression vector; it disagrees with the recurrence from n = 2 on sets with
/// nonzero A10.
RationalGF printed_case4_gf(const CoefficientSet& set);

/// mu_T^{2 alpha}(n) from gf_mu.
AverageValue closed_mu(const CoefficientSet& set, unsigned alpha, unsigned n);

/// e_T(n, alpha, alpha, m) for alpha = 1 (every set) and alpha = 2 (zero-sum
/// sets; NotApplicable otherwise).
AverageValue weighted_closed(const CoefficientSet& set, unsigned alpha, unsigned n, long m);

/// e_T(n, 1, 2, m) and e_T(n, 2, 1, m); zero-sum sets or n = 0.
AverageValue average_12(const CoefficientSet& set, unsigned n, long m);
AverageValue average_21(const CoefficientSet& set, unsigned n, long m);

}  // namespace avgnorm
