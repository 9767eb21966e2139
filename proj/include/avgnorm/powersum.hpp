#pragma once

#include <map>
#include <mutex>
#include <utility>

#include "avgnorm/ensemble.hpp"

namespace avgnorm {

/// A_T^{s,t} = sum_j x_j^s conj(x_j)^t.
GaussianRational power_sum(const CoefficientSet& set, unsigned s, unsigned t);

/// Memoized power sums of one set. Lookups are safe from several threads.
class PowerSumCache {
 public:
  explicit PowerSumCache(CoefficientSet set) : set_(std::move(set)) {}

  const CoefficientSet& set() const { return set_; }
  GaussianRational operator()(unsigned s, unsigned t) const;
  std::size_t cached() const;

 private:
  CoefficientSet set_;
  mutable std::mutex mutex_;
  mutable std::map<std::pair<unsigned, unsigned>, GaussianRational> values_;
};

}  // namespace avgnorm
