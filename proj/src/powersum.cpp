#include "avgnorm/powersum.hpp"

namespace avgnorm {

GaussianRational power_sum(const CoefficientSet& set, unsigned s, unsigned t) {
  GaussianRational sum;
  for (const auto& x : set.elements()) sum += x.pow(s) * x.conj().pow(t);
  return sum;
}

GaussianRational PowerSumCache::operator()(unsigned s, unsigned t) const {
  std::lock_guard lock(mutex_);
  auto [it, inserted] = values_.try_emplace({s, t});
  if (inserted) it->second = power_sum(set_, s, t);
  return it->second;
}

std::size_t PowerSumCache::cached() const {
  std::lock_guard lock(mutex_);
  return values_.size();
}

}  // namespace avgnorm
