#include "avgnorm/ensemble.hpp"

#include <algorithm>
#include <cctype>
#include <thread>

#include "avgnorm/error.hpp"
#include "avgnorm/laurent.hpp"

namespace avgnorm {

CoefficientSet::CoefficientSet(std::vector<GaussianRational> elements) : elements_(std::move(elements)) {
  if (elements_.empty()) throw InvalidArgument("coefficient set must not be empty");
  for (std::size_t a = 0; a < elements_.size(); ++a) {
    if (elements_[a].is_zero()) contains_zero_ = true;
    for (std::size_t b = a + 1; b < elements_.size(); ++b)
      if (elements_[a] == elements_[b])
        throw InvalidArgument("duplicate element " + elements_[a].str() + " in coefficient set");
  }
}

CoefficientSet CoefficientSet::height(unsigned h) {
  std::vector<GaussianRational> xs;
  for (long v = -static_cast<long>(h); v <= static_cast<long>(h); ++v) xs.emplace_back(v);
  return CoefficientSet(std::move(xs));
}

CoefficientSet CoefficientSet::parse(std::string_view literal) {
  std::string text;
  std::vector<std::size_t> origin;
  for (std::size_t k = 0; k < literal.size(); ++k) {
    if (std::isspace(static_cast<unsigned char>(literal[k]))) continue;
    text.push_back(literal[k]);
    origin.push_back(k);
  }
  if (text.empty()) throw ParseError("empty coefficient set", 0);

  constexpr std::string_view kHeight = "height:";
  if (text.starts_with(kHeight)) {
    const std::string digits = text.substr(kHeight.size());
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw ParseError("expected non-negative integer height", origin[std::min(text.size() - 1, kHeight.size())]);
    return height(static_cast<unsigned>(std::stoul(digits)));
  }

  if (text.front() != '{') throw ParseError("expected '{'", origin.front());
  if (text.back() != '}') throw ParseError("expected '}'", origin.back());
  std::vector<GaussianRational> xs;
  std::size_t start = 1;
  for (std::size_t k = 1; k < text.size(); ++k) {
    if (text[k] != ',' && text[k] != '}') continue;
    if (text[k] == '}' && k != text.size() - 1) throw ParseError("unexpected '}'", origin[k]);
    if (k == start) throw ParseError("empty element", origin[k]);
    try {
      xs.push_back(GaussianRational::parse(std::string_view(text).substr(start, k - start)));
    } catch (const ParseError& e) {
      const std::size_t at = std::min(start + e.position(), k - 1);
      throw ParseError("bad element '" + text.substr(start, k - start) + "'", origin[at]);
    }
    for (std::size_t j = 0; j + 1 < xs.size(); ++j)
      if (xs[j] == xs.back()) throw ParseError("duplicate element " + xs.back().str(), origin[start]);
    start = k + 1;
  }
  return CoefficientSet(std::move(xs));
}

bool CoefficientSet::is_real() const {
  return std::all_of(elements_.begin(), elements_.end(), [](const auto& x) { return x.is_real(); });
}

bool CoefficientSet::is_zero_sum() const {
  GaussianRational sum;
  for (const auto& x : elements_) sum += x;
  return sum.is_zero();
}

CoefficientSet CoefficientSet::scaled(const GaussianRational& c) const {
  if (c.is_zero()) throw InvalidArgument("scaling factor must be nonzero");
  std::vector<GaussianRational> xs;
  xs.reserve(elements_.size());
  for (const auto& x : elements_) xs.push_back(c * x);
  return CoefficientSet(std::move(xs));
}

std::string CoefficientSet::literal() const {
  std::string out = "{";
  for (std::size_t j = 0; j < elements_.size(); ++j) {
    if (j) out += ",";
    out += elements_[j].str();
  }
  return out + "}";
}

BigInt ensemble_size(const CoefficientSet& set, unsigned n) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), set.size(), n + 1);
  return r;
}

BigInt degree_exact_count(const CoefficientSet& set, unsigned n) {
  const BigInt d = static_cast<unsigned long>(set.size());
  if (n == 0) return d;
  BigInt dn;
  mpz_ui_pow_ui(dn.get_mpz_t(), set.size(), n);
  return BigInt(set.contains_zero() ? BigInt(d - 1) : d) * dn;
}

namespace {

// Sums the Laurent coefficients of p^s * conj_reflect(p)^t over tuple indices
// [first, last); index digits in base d are (a_0, ..., a_n) with a_0 fastest.
// acc[e + offset] collects the coefficient of z^e.
void accumulate_range(const CoefficientSet& set, unsigned n, unsigned s, unsigned t, std::uint64_t first,
                      std::uint64_t last, long offset, std::vector<GaussianRational>& acc) {
  const std::size_t d = set.size();
  std::vector<std::size_t> digits(n + 1);
  std::uint64_t rest = first;
  for (auto& digit : digits) {
    digit = rest % d;
    rest /= d;
  }
  std::vector<GaussianRational> coefficients(n + 1);
  for (std::uint64_t index = first; index < last; ++index) {
    for (unsigned k = 0; k <= n; ++k) coefficients[k] = set[digits[k]];
    const LaurentPoly p = LaurentPoly::from_dense(coefficients);
    const LaurentPoly product = poly_mul(poly_pow(p, s), poly_pow(conj_reflect(p), t));
    for (const auto& [e, c] : product.terms()) acc[static_cast<std::size_t>(e + offset)] += c;
    for (auto& digit : digits) {
      if (++digit < d) break;
      digit = 0;
    }
  }
}

}  // namespace

std::map<long, AverageValue> oracle_e_all_m(const CoefficientSet& set, unsigned n, unsigned s, unsigned t,
                                            const OracleOptions& options) {
  const BigInt count = ensemble_size(set, n);
  if (count > BigInt(std::to_string(options.budget)))
    throw BudgetExceeded("enumeration", "enumeration of " + count.get_str() + " tuples exceeds the budget of " +
                                            std::to_string(options.budget) + "; use --method recursion");
  const std::uint64_t total = count.get_ui();
  // z exponents of p^s conj(p)^t lie in [-n t, n s].
  const long offset = static_cast<long>(n * t);
  const std::size_t width = static_cast<std::size_t>(n) * (s + t) + 1;

  unsigned threads = options.threads ? options.threads : std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, std::max<std::uint64_t>(1, total / 64)));
  std::vector<std::vector<GaussianRational>> partials(threads, std::vector<GaussianRational>(width));
  {
    std::vector<std::jthread> workers;
    for (unsigned w = 0; w < threads; ++w) {
      const std::uint64_t first = total * w / threads;
      const std::uint64_t last = total * (w + 1) / threads;
      workers.emplace_back([&, w, first, last] { accumulate_range(set, n, s, t, first, last, offset, partials[w]); });
    }
  }
  std::vector<GaussianRational> sum(width);
  for (const auto& part : partials)
    for (std::size_t k = 0; k < width; ++k) sum[k] += part[k];

  const GaussianRational scale(Rational(BigInt(1), count));
  std::map<long, AverageValue> by_m;
  for (std::size_t k = 0; k < width; ++k) {
    if (sum[k].is_zero()) continue;
    // coefficient of z^e is the constant term of z^(-e) * (...), i.e. m = -e
    const long e = static_cast<long>(k) - offset;
    by_m.emplace(-e, sum[k] * scale);
  }
  return by_m;
}

AverageValue oracle_e(const CoefficientSet& set, const AverageKey& key, const OracleOptions& options) {
  const auto by_m = oracle_e_all_m(set, key.n, key.s, key.t, options);
  auto it = by_m.find(key.m);
  return it == by_m.end() ? AverageValue{} : it->second;
}

AverageValue oracle_mu(const CoefficientSet& set, unsigned n, unsigned alpha, const OracleOptions& options) {
  return oracle_e(set, {n, alpha, alpha, 0}, options);
}

}  // namespace avgnorm
