#pragma once

// Direct evaluation of e_T(n, s, t, m) as a constrained multinomial sum:
//
//   e = 1/d^(n+1) sum_{j_1..j_{n+1}} sum_{(k, l)} prod_a x_{j_a}^{k_a} conj(x_{j_a})^{l_a}
//         * multinomial(s; k) * multinomial(t; l)
//
// over compositions k of s and l of t into n+1 parts with
// sum_a (a-1)(l_a - k_a) = m. The j-sum factorizes per position, so the
// default evaluation replaces it by prod_a A^{k_a,l_a} / d.

#include <cstdint>
#include <span>
#include <vector>

#include "avgnorm/ensemble.hpp"

namespace avgnorm {

/// Compositions of `total` into `parts` non-negative parts, lexicographic.
///
///   CompositionStream c(2, 2);
///   while (c.next()) use(c.current());   // (0,2) (1,1) (2,0)
class CompositionStream {
 public:
  CompositionStream(unsigned total, unsigned parts);
  bool next();
  std::span<const unsigned> current() const { return parts_; }

 private:
  unsigned total_;
  std::vector<unsigned> parts_;
  bool started_ = false;
};

std::vector<std::vector<unsigned>> enumerate_compositions(unsigned total, unsigned parts);

/// The summation constraint of one (k, l) composition pair.
struct CompositionConstraint {
  unsigned k_total = 0;  // sum of k-parts (the exponent s)
  unsigned l_total = 0;  // sum of l-parts (the exponent t)
  unsigned parts = 1;    // n + 1
  long moment = 0;       // required sum_a (a-1)(l_a - k_a)

  bool feasible() const {
    const long n = static_cast<long>(parts) - 1;
    return -n * k_total <= moment && moment <= n * static_cast<long>(l_total);
  }
  bool satisfied_by(std::span<const unsigned> k, std::span<const unsigned> l) const;
};

enum class JSum {
  factorized,  // prod_a A^{k_a,l_a} / d
  literal,     // explicit d^(n+1)-fold sum over j; tiny keys only
};

struct MultinomialOptions {
  /// Refuse when C(n+s, s) * C(n+t, t) composition pairs exceed this.
  std::uint64_t budget = 10'000'000;
  JSum j_sum = JSum::factorized;
  /// Cap on d^(n+1) * pairs for JSum::literal.
  std::uint64_t literal_budget = 50'000'000;
};

AverageValue multinomial_e(const CoefficientSet& set, const AverageKey& key, const MultinomialOptions& options = {});

/// T = {-1, 1} through the sign form: the j-sum at each position is
/// sum_{j in {1,2}} (-1)^(j (k_a + l_a)), so only pairs with every k_a + l_a
/// even contribute and the result is an integer.
BigInt littlewood_e(const AverageKey& key, const MultinomialOptions& options = {});

/// Number of (k, l) composition pairs visited without the moment filter.
BigInt composition_pair_count(unsigned n, unsigned s, unsigned t);

}  // namespace avgnorm
