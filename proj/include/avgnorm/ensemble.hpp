#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "avgnorm/exactnum.hpp"

namespace avgnorm {

/// The finite coefficient set T = {x_1, ..., x_d}, in the order given.
class CoefficientSet {
 public:
  /// Throws InvalidArgument when empty or when two elements coincide.
  explicit CoefficientSet(std::vector<GaussianRational> elements);

  /// Literal grammar: "{a,b,...}" with Gaussian rational elements, or
  /// "height:h" for {-h, ..., h}. Whitespace is ignored. Throws ParseError.
  static CoefficientSet parse(std::string_view literal);
  static CoefficientSet height(unsigned h);

  const std::vector<GaussianRational>& elements() const { return elements_; }
  const GaussianRational& operator[](std::size_t j) const { return elements_[j]; }
  std::size_t size() const { return elements_.size(); }
  bool contains_zero() const { return contains_zero_; }
  bool is_real() const;
  /// sum_j x_j = 0
  bool is_zero_sum() const;

  /// {c * x : x in T}; c must be nonzero.
  CoefficientSet scaled(const GaussianRational& c) const;

  /// Canonical literal, e.g. "{-1,0,1}" or "{1/2,-1/2,i}".
  std::string literal() const;

  friend bool operator==(const CoefficientSet& a, const CoefficientSet& b) {
    return a.elements_ == b.elements_;
  }

 private:
  std::vector<GaussianRational> elements_;
  bool contains_zero_ = false;
};

/// Index (n, s, t, m) of e_T(n, s, t, m): the average over all T-polynomials
/// of degree <= n of the constant term of z^m p(z)^s conj(p)(1/z)^t.
struct AverageKey {
  unsigned n = 0;
  unsigned s = 0;
  unsigned t = 0;
  long m = 0;

  /// e_T vanishes outside -n*s <= m <= n*t.
  bool in_support() const {
    return -static_cast<long>(n * s) <= m && m <= static_cast<long>(n * t);
  }
  friend bool operator==(const AverageKey&, const AverageKey&) = default;
  friend auto operator<=>(const AverageKey&, const AverageKey&) = default;
};

using AverageValue = GaussianRational;

/// d^(n+1): the number of coefficient tuples averaged over.
BigInt ensemble_size(const CoefficientSet& set, unsigned n);

/// The degree-exactly-n count N_T(n). Informational only; the averages in
/// this library are over all d^(n+1) tuples.
BigInt degree_exact_count(const CoefficientSet& set, unsigned n);

struct OracleOptions {
  /// Refuse to enumerate more than this many tuples.
  std::uint64_t budget = 10'000'000;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

/// Brute-force e_T(key) by enumerating every tuple (a_0, ..., a_n) in T^(n+1).
AverageValue oracle_e(const CoefficientSet& set, const AverageKey& key, const OracleOptions& options = {});

/// Every nonzero e_T(n, s, t, m), keyed by m, from a single enumeration.
std::map<long, AverageValue> oracle_e_all_m(const CoefficientSet& set, unsigned n, unsigned s,
                                            unsigned t, const OracleOptions& options = {});

/// mu_T^{2 alpha}(n) = e_T(n, alpha, alpha, 0).
AverageValue oracle_mu(const CoefficientSet& set, unsigned n, unsigned alpha,
                       const OracleOptions& options = {});

}  // namespace avgnorm
