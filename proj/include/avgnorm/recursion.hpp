#pragma once

// Layer-by-layer evaluation of e_T(n, s, t, m) from the first-coefficient
// decomposition p(z) = z q(z) + x_j:
//
//   e(n,s,t,m) = 1/d sum_j sum_{k<=s} sum_{l<=t} x_j^(s-k) conj(x_j)^(t-l)
//                C(s,k) C(t,l) e(n-1, k, l, m+k-l)
//   e(0,s,t,m) = [m = 0] A^{s,t} / d
//
// The j-sum collapses into the power sum A^{s-k,t-l}, so a layer costs
// O(s_max^2 t_max^2 n) products instead of anything exponential in n.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "avgnorm/ensemble.hpp"

namespace avgnorm {

struct TableBounds {
  unsigned n_max = 0;
  unsigned s_max = 0;
  unsigned t_max = 0;
  bool covers(const TableBounds& o) const {
    return n_max >= o.n_max && s_max >= o.s_max && t_max >= o.t_max;
  }
  friend bool operator==(const TableBounds&, const TableBounds&) = default;
};

/// Every e_T(n, s, t, m) with n <= n_max, s <= s_max, t <= t_max. Entries are
/// stored sparsely in m (zeros omitted). Construction is the only writer;
/// a built table is read-only and may be shared between threads.
class RecursionTable {
 public:
  using Row = std::vector<std::pair<long, GaussianRational>>;

  RecursionTable(CoefficientSet set, TableBounds bounds);

  const CoefficientSet& set() const { return set_; }
  const TableBounds& bounds() const { return bounds_; }

  /// Rebuilds or extends so that the table covers `wanted` (bounds only grow).
  void grow(const TableBounds& wanted);

  /// Nonzero entries of e_T(n, s, t, .) sorted by m. Throws BoundsExceeded.
  const Row& row(unsigned n, unsigned s, unsigned t) const;

  /// Number of table entries produced by the recurrence since construction
  /// (zero for a table restored from a snapshot).
  std::uint64_t entries_computed() const { return entries_computed_; }
  std::size_t stored_entries() const;

  /// Versioned text snapshot: header with the set literal and bounds, then
  /// one "n s t m value" line per nonzero entry.
  void save(std::ostream& os) const;
  static RecursionTable load(std::istream& is);

 private:
  RecursionTable(CoefficientSet set, TableBounds bounds, bool fill);
  void fill_from(unsigned first_layer);
  Row& slot(unsigned n, unsigned s, unsigned t);

  CoefficientSet set_;
  TableBounds bounds_;
  // layers_[n][s * (t_max + 1) + t]
  std::vector<std::vector<Row>> layers_;
  std::uint64_t entries_computed_ = 0;
};

/// e_T(key) from the table. Returns 0 outside the support bound without a
/// lookup; throws BoundsExceeded when the key is beyond the table.
AverageValue dp_e(const RecursionTable& table, const AverageKey& key);

/// [mu^{2 alpha}(0), ..., mu^{2 alpha}(n_max)].
std::vector<AverageValue> mu_sequence(const RecursionTable& table, unsigned alpha, unsigned n_max);

/// mu^{2 alpha}(n; m) = e_T(n, alpha, alpha, m).
AverageValue weighted_mu(const RecursionTable& table, unsigned alpha, unsigned n, long m);

}  // namespace avgnorm
