#include "avgnorm/quasipoly.hpp"

namespace avgnorm {

GaussianRational wave_value(Wave w, unsigned long n) {
  switch (w) {
    case Wave::one: return 1;
    case Wave::alternating: return (n % 2) ? -1 : 1;
    case Wave::i_pow: return GaussianRational::i().pow(static_cast<unsigned>(n % 4));
    case Wave::minus_i_pow: return (-GaussianRational::i()).pow(static_cast<unsigned>(n % 4));
    case Wave::c3: return (n % 3 == 0) ? 2 : -1;
    case Wave::s3: {
      const unsigned long r = n % 3;
      return r == 0 ? 0 : (r == 1 ? 1 : -1);
    }
  }
  return 0;
}

unsigned wave_period(Wave w) {
  switch (w) {
    case Wave::one: return 1;
    case Wave::alternating: return 2;
    case Wave::i_pow:
    case Wave::minus_i_pow: return 4;
    case Wave::c3:
    case Wave::s3: return 3;
  }
  return 1;
}

namespace {

void trim(std::vector<GaussianRational>& c) {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

const std::vector<GaussianRational> kEmpty;

// "(1/2)", "(2+3i)" or "5"
std::string coefficient_text(const GaussianRational& c) {
  if (c.is_real() && c.re().is_integer()) return c.str();
  return "(" + c.str() + ")";
}

bool is_negative_real(const GaussianRational& c) { return c.is_real() && c.re().sign() < 0; }

std::string power_text(std::size_t k) {
  if (k == 0) return "";
  if (k == 1) return "n";
  return "n^" + std::to_string(k);
}

// Polynomial in descending powers; the first term carries its own sign.
std::string polynomial_text(const std::vector<GaussianRational>& c) {
  std::string out;
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k].is_zero()) continue;
    GaussianRational v = c[k];
    const bool negative = is_negative_real(v);
    if (negative) v = -v;
    std::string term;
    if (k > 0 && v == GaussianRational(1))
      term = power_text(k);
    else
      term = coefficient_text(v) + power_text(k);
    if (negative)
      out += "-" + term;
    else
      out += (out.empty() ? "" : "+") + term;
  }
  return out.empty() ? "0" : out;
}

std::string wave_text(Wave w) {
  switch (w) {
    case Wave::one: return "";
    case Wave::alternating: return "(-1)^n";
    case Wave::i_pow: return "i^n";
    case Wave::minus_i_pow: return "(-i)^n";
    case Wave::c3: return "c3(n)";
    case Wave::s3: return "s3(n)";
  }
  return "";
}

}  // namespace

QuasiPolynomial QuasiPolynomial::polynomial(std::vector<GaussianRational> ascending) {
  QuasiPolynomial q;
  q.add_part(Wave::one, ascending);
  return q;
}

QuasiPolynomial& QuasiPolynomial::add_part(Wave w, const std::vector<GaussianRational>& ascending) {
  auto& c = parts_[w];
  if (c.size() < ascending.size()) c.resize(ascending.size());
  for (std::size_t k = 0; k < ascending.size(); ++k) c[k] += ascending[k];
  trim(c);
  if (c.empty()) parts_.erase(w);
  return *this;
}

const std::vector<GaussianRational>& QuasiPolynomial::part(Wave w) const {
  auto it = parts_.find(w);
  return it == parts_.end() ? kEmpty : it->second;
}

int QuasiPolynomial::degree(Wave w) const { return static_cast<int>(part(w).size()) - 1; }

GaussianRational QuasiPolynomial::evaluate(unsigned long n) const {
  GaussianRational total;
  const GaussianRational x{Rational{BigInt{n}}};
  for (const auto& [w, c] : parts_) {
    GaussianRational p;
    for (std::size_t k = c.size(); k-- > 0;) {
      p *= x;
      p += c[k];
    }
    total += wave_value(w, n) * p;
  }
  return total;
}

QuasiPolynomial& QuasiPolynomial::operator+=(const QuasiPolynomial& o) {
  for (const auto& [w, c] : o.parts_) add_part(w, c);
  return *this;
}

QuasiPolynomial& QuasiPolynomial::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    parts_.clear();
    return *this;
  }
  for (auto& [w, coeffs] : parts_)
    for (auto& x : coeffs) x *= c;
  return *this;
}

std::string QuasiPolynomial::str() const {
  if (parts_.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : parts_) {
    if (w == Wave::one) {
      out = polynomial_text(c);
      continue;
    }
    const std::string factor = wave_text(w);
    if (c.size() == 1) {
      // constant multiple: "-3(-1)^n", "+(1/2)i^n"
      GaussianRational v = c[0];
      const bool negative = is_negative_real(v);
      if (negative) v = -v;
      const std::string mult = v == GaussianRational(1) ? "" : coefficient_text(v);
      out += (negative ? "-" : (out.empty() ? "" : "+")) + mult + factor;
    } else {
      out += (out.empty() ? "" : "+") + factor + "(" + polynomial_text(c) + ")";
    }
  }
  return out;
}

}  // namespace avgnorm
