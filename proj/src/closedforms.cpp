#include "avgnorm/closedforms.hpp"

#include <algorithm>

#include "avgnorm/error.hpp"
#include "avgnorm/powersum.hpp"

namespace avgnorm {

Poly::Poly(std::vector<GaussianRational> ascending) : c_(std::move(ascending)) { trim(); }

Poly Poly::monomial(unsigned k, const GaussianRational& c) {
  std::vector<GaussianRational> v(k + 1);
  v[k] = c;
  return Poly(std::move(v));
}

Poly Poly::binomial_power(unsigned k, int sign, unsigned power) {
  const Poly base = Poly(1) + monomial(k, sign);
  Poly out(1);
  for (unsigned i = 0; i < power; ++i) out *= base;
  return out;
}

const GaussianRational& Poly::leading() const {
  if (c_.empty()) throw InvalidArgument("zero polynomial has no leading coefficient");
  return c_.back();
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly& Poly::operator+=(const Poly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  if (c_.empty() || o.c_.empty()) {
    c_.clear();
    return *this;
  }
  std::vector<GaussianRational> out(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j].add_product(c_[i], o.c_[j]);
  }
  c_ = std::move(out);
  trim();
  return *this;
}

void Poly::divmod(const Poly& a, const Poly& b, Poly& quotient, Poly& remainder) {
  if (b.is_zero()) throw DivisionByZero();
  std::vector<GaussianRational> r = a.c_;
  const int db = b.degree();
  std::vector<GaussianRational> q(std::max(0, a.degree() - db + 1));
  const GaussianRational lead = b.leading();
  for (int k = a.degree(); k >= db; --k) {
    if (r[k].is_zero()) continue;
    const GaussianRational f = r[k] / lead;
    q[k - db] = f;
    for (int j = 0; j <= db; ++j) r[k - db + j] -= f * b.c_[j];
  }
  quotient = Poly(std::move(q));
  remainder = Poly(std::move(r));
}

Poly Poly::gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  const GaussianRational lead = a.leading();
  for (auto& x : a.c_) x /= lead;
  return a;
}

std::string Poly::str() const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    GaussianRational v = c_[k];
    if (v.is_zero()) continue;
    const bool negative = v.is_real() && v.re().sign() < 0;
    if (negative) v = -v;
    std::string body;
    const bool unit = v == GaussianRational(1);
    const std::string power = k == 0 ? "" : (k == 1 ? "x" : "x^" + std::to_string(k));
    if (k > 0 && unit)
      body = power;
    else if (v.is_real() && v.re().is_integer())
      body = v.str() + power;
    else
      body = "(" + v.str() + ")" + power;
    out += negative ? "-" + body : (out.empty() ? "" : "+") + body;
  }
  return out;
}

RationalGF::RationalGF(Poly numerator, Poly denominator) : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.coefficient(0).is_zero()) throw InvalidArgument("generating function denominator vanishes at x = 0");
  normalize();
}

void RationalGF::normalize() {
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  const Poly g = Poly::gcd(num_, den_);
  if (g.degree() > 0) {
    Poly q, r;
    Poly::divmod(num_, g, q, r);
    num_ = std::move(q);
    Poly::divmod(den_, g, q, r);
    den_ = std::move(q);
  }
  const GaussianRational scale = den_.coefficient(0);
  if (scale != GaussianRational(1)) {
    const Poly inverse(GaussianRational(1) / scale);
    num_ *= inverse;
    den_ *= inverse;
  }
}

std::vector<GaussianRational> RationalGF::series(unsigned n_max) const {
  std::vector<GaussianRational> out(n_max + 1);
  const auto& q = den_.coefficients();
  for (unsigned k = 0; k <= n_max; ++k) {
    GaussianRational c = num_.coefficient(k);
    const std::size_t top = std::min<std::size_t>(k, q.size() - 1);
    for (std::size_t i = 1; i <= top; ++i) c -= q[i] * out[k - i];
    out[k] = std::move(c);  // q[0] = 1
  }
  return out;
}

RationalGF& RationalGF::operator+=(const RationalGF& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

RationalGF& RationalGF::operator*=(const GaussianRational& c) {
  num_ *= Poly(c);
  normalize();
  return *this;
}

std::string RationalGF::str() const { return "(" + num_.str() + ")/(" + den_.str() + ")"; }

namespace {

struct Sums {
  explicit Sums(const CoefficientSet& set) : cache(set), inv_d(Rational(BigInt(1), BigInt(set.size()))) {}
  GaussianRational operator()(unsigned s, unsigned t) const { return cache(s, t); }
  // 1 / d^k
  GaussianRational per_d(unsigned k) const {
    Rational r(1);
    for (unsigned i = 0; i < k; ++i) r *= inv_d;
    return r;
  }
  PowerSumCache cache;
  Rational inv_d;
};

// c x^shift / ((1-x)^a (1+x)^b (1-x^2)^e (1-x^3)^f)
RationalGF term(const GaussianRational& c, unsigned shift, unsigned a, unsigned b = 0, unsigned e = 0,
                unsigned f = 0) {
  Poly den = Poly::binomial_power(1, -1, a) * Poly::binomial_power(1, 1, b) * Poly::binomial_power(2, -1, e) *
             Poly::binomial_power(3, -1, f);
  return RationalGF(Poly::monomial(shift, c), std::move(den));
}

void require_zero_sum(const CoefficientSet& set, const std::string& what) {
  if (!set.is_zero_sum())
    throw NotApplicable(what + " requires a zero-sum set (A^{1,0} = 0); " + set.literal() + " sums to " +
                        power_sum(set, 1, 0).str());
}

RationalGF case4(const CoefficientSet& set, bool printed) {
  const Sums A(set);
  RationalGF gf = term(A(2, 2) * A.per_d(1), 0, 2);
  gf += term(4 * A(1, 1) * A(1, 1) * A.per_d(2), 1, 3);
  const GaussianRational third = printed ? A(1, 0) * A(1, 0) * A(0, 1) + A(0, 1) * A(0, 1) * A(1, 0)
                                         : A(2, 0) * A(0, 1) * A(0, 1) + A(0, 2) * A(1, 0) * A(1, 0);
  gf += term(2 * third * A.per_d(3), 2, 2, 0, 1);
  gf += term(8 * A(1, 0) * A(1, 0) * A(0, 1) * A(0, 1) * A.per_d(4), 3, 4, 1);
  return gf;
}

RationalGF case00_mu6(const CoefficientSet& set) {
  const Sums A(set);
  RationalGF gf = term(A(3, 3) * A.per_d(1), 0, 2);
  gf += term(18 * A(1, 1) * A(2, 2) * A.per_d(2), 1, 3);
  gf += term(36 * A(1, 1).pow(3) * A.per_d(3), 2, 4);
  return gf;
}

RationalGF case00_mu8(const CoefficientSet& set) {
  const Sums A(set);
  RationalGF gf = term(A(4, 4) * A.per_d(1), 0, 2);
  gf += term(32 * A(1, 1) * A(3, 3) * A.per_d(2), 1, 3);
  gf += term(36 * A(2, 2) * A(2, 2) * A.per_d(2), 1, 3);
  gf += term(432 * A(2, 2) * A(1, 1) * A(1, 1) * A.per_d(3), 2, 4);
  gf += term(72 * A(0, 2) * A(0, 2) * A(2, 0) * A(2, 0) * A.per_d(4), 3, 4, 1);
  gf += term(576 * A(1, 1).pow(4) * A.per_d(4), 3, 5);
  gf += term(48 * (A(0, 3) * A(2, 0) * A(2, 1) + A(3, 0) * A(0, 2) * A(1, 2)) * A.per_d(3), 3, 2, 0, 0, 1);
  gf += term(72 * (A(1, 2) * A(1, 2) * A(2, 0) + A(2, 1) * A(2, 1) * A(0, 2)) * A.per_d(3), 2, 2, 0, 1);
  gf += term(6 * (A(2, 0) * A(2, 0) * A(0, 4) + A(0, 2) * A(0, 2) * A(4, 0)) * A.per_d(3), 2, 2, 0, 1);
  return gf;
}

GaussianRational from_long(long v) { return GaussianRational(Rational(v)); }

}  // namespace

RationalGF gf_mu(const CoefficientSet& set, unsigned alpha) {
  switch (alpha) {
    case 0: return term(1, 0, 1);
    case 1: return term(power_sum(set, 1, 1) * Sums(set).per_d(1), 0, 2);
    case 2: return case4(set, false);
    case 3:
      require_zero_sum(set, "the mu^6 generating function");
      return case00_mu6(set);
    case 4:
      require_zero_sum(set, "the mu^8 generating function");
      return case00_mu8(set);
    default: throw InvalidArgument("no generating function for alpha = " + std::to_string(alpha) + " (max 4)");
  }
}

RationalGF printed_case4_gf(const CoefficientSet& set) { return case4(set, true); }

AverageValue closed_mu(const CoefficientSet& set, unsigned alpha, unsigned n) {
  return gf_mu(set, alpha).coefficient(n);
}

AverageValue weighted_closed(const CoefficientSet& set, unsigned alpha, unsigned n, long m) {
  const Sums A(set);
  const long span = static_cast<long>(n);
  const long am = m < 0 ? -m : m;
  if (alpha == 1) {
    if (am > span) return {};
    if (m == 0) return from_long(span + 1) * A(1, 1) * A.per_d(1);
    return from_long(span + 1 - am) * A(0, 1) * A(1, 0) * A.per_d(2);
  }
  if (alpha == 2) {
    require_zero_sum(set, "the alpha = 2 weighted form");
    if (am > 2 * span || am % 2 != 0) return {};
    if (m == 0)
      return from_long(span + 1) * A(2, 2) * A.per_d(1) +
             GaussianRational(Rational(4 * binomial(n + 1, 2))) * A(1, 1) * A(1, 1) * A.per_d(2);
    return from_long(span + 1 - am / 2) * A(0, 2) * A(2, 0) * A.per_d(2);
  }
  throw InvalidArgument("no weighted closed form for alpha = " + std::to_string(alpha) + " (1 or 2)");
}

AverageValue average_12(const CoefficientSet& set, unsigned n, long m) {
  if (n > 0) require_zero_sum(set, "e(n,1,2,m) in closed form");
  if (m < 0 || m > static_cast<long>(n)) return {};
  return power_sum(set, 1, 2) * Sums(set).per_d(1);
}

AverageValue average_21(const CoefficientSet& set, unsigned n, long m) {
  if (n > 0) require_zero_sum(set, "e(n,2,1,m) in closed form");
  if (m > 0 || m < -static_cast<long>(n)) return {};
  return power_sum(set, 2, 1) * Sums(set).per_d(1);
}

}  // namespace avgnorm
