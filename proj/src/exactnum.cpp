#include "avgnorm/exactnum.hpp"

#include <cctype>
#include <numeric>
#include <ostream>

#include "avgnorm/error.hpp"

namespace avgnorm {

Rational::Rational(const BigInt& num, const BigInt& den) : v_(num, den) {
  if (den == 0) throw DivisionByZero();
  v_.canonicalize();
}

Rational Rational::from_mpq(const mpq_class& value) {
  Rational r;
  r.v_ = value;
  r.v_.canonicalize();
  return r;
}

Rational Rational::abs() const {
  Rational r;
  r.v_ = ::abs(v_);
  return r;
}

Rational Rational::operator-() const {
  Rational r;
  r.v_ = -v_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  v_ += o.v_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  v_ -= o.v_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  v_ *= o.v_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZero();
  v_ /= o.v_;
  return *this;
}

std::string Rational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  std::size_t offset = 0;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
    offset = 1;
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  if (!all_digits(num)) throw ParseError("expected integer in '" + std::string(text) + "'", offset);
  BigInt n{std::string(num)};
  BigInt d(1);
  if (slash != std::string_view::npos) {
    const std::string_view den = body.substr(slash + 1);
    if (!all_digits(den))
      throw ParseError("expected denominator in '" + std::string(text) + "'", offset + slash + 1);
    d = BigInt(std::string(den));
    if (d == 0) throw ParseError("zero denominator", offset + slash + 1);
  }
  if (negative) n = -n;
  return Rational(n, d);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

GaussianRational GaussianRational::pow(unsigned k) const {
  GaussianRational result(1);
  GaussianRational base = *this;
  while (k > 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k > 0) base *= base;
  }
  return result;
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  if (!o.im_.is_zero()) im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  if (!o.im_.is_zero()) im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (im_.is_zero() && o.im_.is_zero()) {
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) throw DivisionByZero();
  if (o.im_.is_zero()) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  const Rational n = o.norm();
  *this *= o.conj();
  re_ /= n;
  im_ /= n;
  return *this;
}

GaussianRational& GaussianRational::add_product(const GaussianRational& a, const GaussianRational& b) {
  if (a.im_.is_zero() && b.im_.is_zero()) {
    re_ += a.re_ * b.re_;
    return *this;
  }
  return *this += a * b;
}

std::string GaussianRational::str() const {
  if (im_.is_zero()) return re_.str();
  std::string imag;
  if (im_ == Rational(1))
    imag = "i";
  else if (im_ == Rational(-1))
    imag = "-i";
  else
    imag = im_.str() + "i";
  if (re_.is_zero()) return imag;
  if (im_.sign() > 0) return re_.str() + "+" + imag;
  return re_.str() + imag;
}

namespace {

// One signed term: rational, rational*i, rational i, or bare i.
void parse_term(std::string_view term, std::size_t offset, Rational& re, Rational& im) {
  if (term.empty()) throw ParseError("empty term", offset);
  bool negative = false;
  std::string_view body = term;
  if (body.front() == '+' || body.front() == '-') {
    negative = body.front() == '-';
    body.remove_prefix(1);
    ++offset;
  }
  if (body.empty()) throw ParseError("dangling sign", offset);
  const bool imaginary = body.back() == 'i';
  if (imaginary) {
    body.remove_suffix(1);
    if (!body.empty() && body.back() == '*') body.remove_suffix(1);
  }
  Rational value(1);
  if (!body.empty()) value = Rational::parse(body);
  else if (!imaginary) throw ParseError("empty term", offset);
  if (body.find_first_of("+-") != std::string_view::npos)
    throw ParseError("unexpected sign", offset);
  if (negative) value = -value;
  (imaginary ? im : re) += value;
}

}  // namespace

GaussianRational GaussianRational::parse(std::string_view text) {
  std::string compact;
  std::vector<std::size_t> origin;
  for (std::size_t k = 0; k < text.size(); ++k) {
    if (std::isspace(static_cast<unsigned char>(text[k]))) continue;
    compact.push_back(text[k]);
    origin.push_back(k);
  }
  if (compact.empty()) throw ParseError("empty number", 0);
  for (std::size_t k = 0; k < compact.size(); ++k) {
    const char c = compact[k];
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '+' || c == '-' || c == '/' ||
          c == 'i' || c == '*'))
      throw ParseError(std::string("unexpected character '") + c + "'", origin[k]);
  }
  Rational re, im;
  std::size_t start = 0;
  int terms = 0;
  for (std::size_t k = 1; k <= compact.size(); ++k) {
    if (k == compact.size() || compact[k] == '+' || compact[k] == '-') {
      parse_term(std::string_view(compact).substr(start, k - start), origin[start], re, im);
      start = k;
      if (++terms > 2) throw ParseError("too many terms", origin[start - 1]);
    }
  }
  return {re, im};
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& x) { return os << x.str(); }

GaussianRational gr_arith(const GaussianRational& a, const GaussianRational& b, ArithOp op) {
  switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    case ArithOp::div: return a / b;
  }
  throw InvalidArgument("unknown arithmetic operation");
}

namespace {

constexpr unsigned kFactorialCacheBound = 512;

const std::vector<BigInt>& factorial_table() {
  static const std::vector<BigInt> table = [] {
    std::vector<BigInt> t(kFactorialCacheBound + 1);
    t[0] = 1;
    for (unsigned k = 1; k <= kFactorialCacheBound; ++k) t[k] = t[k - 1] * k;
    return t;
  }();
  return table;
}

}  // namespace

unsigned factorial_cache_bound() { return kFactorialCacheBound; }

BigInt factorial(unsigned k) {
  if (k <= kFactorialCacheBound) return factorial_table()[k];
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), k);
  return r;
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

BigInt multinomial(unsigned total, std::span<const unsigned> parts) {
  unsigned long sum = 0;
  for (unsigned p : parts) sum += p;
  if (sum != total)
    throw InvalidArgument("multinomial parts sum to " + std::to_string(sum) + ", expected " +
                          std::to_string(total));
  BigInt r = factorial(total);
  for (unsigned p : parts)
    if (p > 1) r /= factorial(p);
  return r;
}

}  // namespace avgnorm
