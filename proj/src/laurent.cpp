#include "avgnorm/laurent.hpp"

#include <algorithm>
#include <map>

#include "avgnorm/error.hpp"

namespace avgnorm {

LaurentPoly::LaurentPoly(GaussianRational constant) {
  if (!constant.is_zero()) terms_.emplace_back(0, std::move(constant));
}

LaurentPoly LaurentPoly::monomial(GaussianRational c, long k) {
  LaurentPoly p;
  if (!c.is_zero()) p.terms_.emplace_back(k, std::move(c));
  return p;
}

LaurentPoly LaurentPoly::from_dense(const std::vector<GaussianRational>& coefficients, long low) {
  LaurentPoly p;
  for (std::size_t k = 0; k < coefficients.size(); ++k)
    if (!coefficients[k].is_zero()) p.terms_.emplace_back(low + static_cast<long>(k), coefficients[k]);
  return p;
}

long LaurentPoly::min_exponent() const {
  if (terms_.empty()) throw InvalidArgument("zero polynomial has no support");
  return terms_.front().first;
}

long LaurentPoly::max_exponent() const {
  if (terms_.empty()) throw InvalidArgument("zero polynomial has no support");
  return terms_.back().first;
}

GaussianRational LaurentPoly::coefficient(long k) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), k,
                             [](const Term& t, long e) { return t.first < e; });
  if (it != terms_.end() && it->first == k) return it->second;
  return {};
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first < a->first) {
      merged.push_back(*b++);
    } else {
      GaussianRational c = a->second + b->second;
      if (!c.is_zero()) merged.emplace_back(a->first, std::move(c));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.str() + ")*z^" + std::to_string(k);
  }
  return out;
}

namespace {

bool is_dense(const LaurentPoly& p) {
  return static_cast<long>(p.size()) == p.max_exponent() - p.min_exponent() + 1;
}

}  // namespace

LaurentPoly poly_mul(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  if (a.is_zero() || b.is_zero()) return out;
  if (is_dense(a) && is_dense(b)) {
    const long low = a.min_exponent() + b.min_exponent();
    std::vector<GaussianRational> buffer(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j)
        buffer[i + j].add_product(a.terms_[i].second, b.terms_[j].second);
    return LaurentPoly::from_dense(buffer, low);
  }
  std::map<long, GaussianRational> acc;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) acc[ka + kb].add_product(ca, cb);
  for (auto& [k, c] : acc)
    if (!c.is_zero()) out.terms_.emplace_back(k, std::move(c));
  return out;
}

LaurentPoly poly_pow(const LaurentPoly& p, unsigned k) {
  LaurentPoly result(GaussianRational(1));
  LaurentPoly base = p;
  while (k > 0) {
    if (k & 1U) result = poly_mul(result, base);
    k >>= 1U;
    if (k > 0) base = poly_mul(base, base);
  }
  return result;
}

LaurentPoly conj_reflect(const LaurentPoly& p) {
  LaurentPoly q;
  q.terms_.reserve(p.size());
  for (auto it = p.terms_.rbegin(); it != p.terms_.rend(); ++it)
    q.terms_.emplace_back(-it->first, it->second.conj());
  return q;
}

GaussianRational constant_term(const LaurentPoly& p, long m) { return p.coefficient(-m); }

GaussianRational norm_power(const LaurentPoly& p, unsigned alpha) {
  if (alpha == 0) throw InvalidArgument("norm_power requires alpha >= 1");
  const LaurentPoly autocorrelation = poly_mul(p, conj_reflect(p));
  return constant_term(poly_pow(autocorrelation, alpha), 0);
}

}  // namespace avgnorm
