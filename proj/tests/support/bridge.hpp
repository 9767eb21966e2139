#pragma once

#include <string>
#include <vector>

#include "avgnorm/ensemble.hpp"
#include "naive.hpp"

namespace bridge {

inline std::string text(const avgnorm::GaussianRational& x) { return x.str(); }

inline std::string naive_text(const naive::C& c) { return naive::text(c); }

inline avgnorm::CoefficientSet to_set(const std::vector<naive::C>& elements) {
  std::vector<avgnorm::GaussianRational> out;
  for (const auto& c : elements)
    out.emplace_back(avgnorm::Rational::from_mpq(c.re), avgnorm::Rational::from_mpq(c.im));
  return avgnorm::CoefficientSet(std::move(out));
}

}  // namespace bridge
