#include "avgnorm/fitter.hpp"

#include <algorithm>

#include "avgnorm/error.hpp"

namespace avgnorm {

std::vector<Shape> shapes_for(std::span<const unsigned> periods) {
  auto allowed = [&](unsigned p) { return std::find(periods.begin(), periods.end(), p) != periods.end(); };
  for (unsigned p : periods)
    if (p != 1 && p != 2 && p != 3 && p != 4)
      throw InvalidArgument("unsupported period " + std::to_string(p) + " (use 1, 2, 3, 4)");
  std::vector<Shape> out{{Wave::one}};
  if (allowed(2)) out.push_back({Wave::one, Wave::alternating});
  if (allowed(4)) out.push_back({Wave::one, Wave::alternating, Wave::i_pow, Wave::minus_i_pow});
  if (allowed(3)) out.push_back({Wave::one, Wave::alternating, Wave::c3, Wave::s3});
  if (allowed(3) && allowed(4))
    out.push_back({Wave::one, Wave::alternating, Wave::i_pow, Wave::minus_i_pow, Wave::c3, Wave::s3});
  return out;
}

std::string shape_name(const Shape& shape) {
  std::vector<unsigned> periods;
  for (Wave w : shape) {
    const unsigned p = wave_period(w);
    if (std::find(periods.begin(), periods.end(), p) == periods.end()) periods.push_back(p);
  }
  std::sort(periods.begin(), periods.end());
  std::string out = "{";
  for (std::size_t i = 0; i < periods.size(); ++i) out += (i ? "," : "") + std::to_string(periods[i]);
  return out + "}";
}

bool solve_exact(std::vector<std::vector<GaussianRational>> m, std::vector<GaussianRational> b,
                 std::vector<GaussianRational>& x) {
  const std::size_t size = m.size();
  for (std::size_t r = 0; r < size; ++r) m[r].push_back(std::move(b[r]));
  GaussianRational prev(1);
  for (std::size_t k = 0; k < size; ++k) {
    std::size_t pivot = k;
    while (pivot < size && m[pivot][k].is_zero()) ++pivot;
    if (pivot == size) return false;
    std::swap(m[k], m[pivot]);
    for (std::size_t i = k + 1; i < size; ++i) {
      for (std::size_t j = k + 1; j <= size; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      m[i][k] = GaussianRational{};
    }
    prev = m[k][k];
  }
  x.assign(size, GaussianRational{});
  for (std::size_t k = size; k-- > 0;) {
    GaussianRational acc = m[k][size];
    for (std::size_t j = k + 1; j < size; ++j) acc -= m[k][j] * x[j];
    x[k] = acc / m[k][k];
  }
  return true;
}

namespace {

GaussianRational power_of(unsigned long n, unsigned k) {
  return GaussianRational(Rational(BigInt{n})).pow(k);
}

}  // namespace

FitResult fit(std::span<const GaussianRational> values, const FitOptions& options) {
  const std::vector<Shape> shapes = shapes_for(options.periods);
  bool tested = false;
  for (unsigned degree = options.min_degree; degree <= options.max_degree; ++degree) {
    for (const Shape& shape : shapes) {
      const std::size_t unknowns = shape.size() * (degree + 1);
      if (values.size() < unknowns + options.holdout) continue;
      tested = true;
      std::vector<std::vector<GaussianRational>> m(unknowns, std::vector<GaussianRational>(unknowns));
      std::vector<GaussianRational> b(values.begin(), values.begin() + static_cast<long>(unknowns));
      for (std::size_t r = 0; r < unknowns; ++r) {
        const unsigned long n = options.first_n + r;
        for (std::size_t w = 0; w < shape.size(); ++w) {
          const GaussianRational wave = wave_value(shape[w], n);
          for (unsigned k = 0; k <= degree; ++k) m[r][w * (degree + 1) + k] = wave * power_of(n, k);
        }
      }
      std::vector<GaussianRational> x;
      if (!solve_exact(std::move(m), std::move(b), x)) continue;
      QuasiPolynomial candidate;
      for (std::size_t w = 0; w < shape.size(); ++w)
        candidate.add_part(shape[w], std::vector<GaussianRational>(x.begin() + static_cast<long>(w * (degree + 1)),
                                                                   x.begin() + static_cast<long>((w + 1) * (degree + 1))));
      if (verify_fit(candidate, values, options.first_n).empty())
        return FitResult{std::move(candidate), degree, shape, unknowns};
    }
  }
  if (!tested)
    throw InvalidArgument("too few values (" + std::to_string(values.size()) + ") to test any shape from degree " +
                          std::to_string(options.min_degree) + " with " + std::to_string(options.holdout) +
                          " holdout points");
  throw ShapeInsufficient("no quasi-polynomial of degree <= " + std::to_string(options.max_degree) +
                          " with periods in the allowed shapes reproduces the " + std::to_string(values.size()) +
                          " values");
}

QuasiPolynomial fit(std::span<const GaussianRational> values, unsigned max_degree, std::span<const unsigned> periods) {
  FitOptions options;
  options.max_degree = max_degree;
  options.periods.assign(periods.begin(), periods.end());
  return fit(values, options).formula;
}

std::vector<FitMismatch> verify_fit(const QuasiPolynomial& formula, std::span<const GaussianRational> values,
                                    unsigned first_n) {
  std::vector<FitMismatch> out;
  for (std::size_t k = 0; k < values.size(); ++k) {
    const unsigned n = first_n + static_cast<unsigned>(k);
    GaussianRational got = formula.evaluate(n);
    if (got != values[k]) out.push_back({n, values[k], std::move(got)});
  }
  return out;
}

}  // namespace avgnorm
