#pragma once

// Recovers a quasi-polynomial in n from exact values at n = first, first+1, ...

#include <span>
#include <string>
#include <vector>

#include "avgnorm/quasipoly.hpp"

namespace avgnorm {

/// Periodic factors admitted by one attempt, e.g. {one, alternating}.
using Shape = std::vector<Wave>;

/// Shapes in search order for the allowed periods (a subset of {1,2,3,4};
/// 1 is implied): {1}, {1,2}, {1,2,4}, {1,2,3}, {1,2,3,4}.
std::vector<Shape> shapes_for(std::span<const unsigned> periods);
std::string shape_name(const Shape& shape);

struct FitOptions {
  /// Value index 0 is n = first_n.
  unsigned first_n = 0;
  unsigned min_degree = 0;
  unsigned max_degree = 12;
  /// Values beyond the square system that the fit must also reproduce.
  unsigned holdout = 5;
  std::vector<unsigned> periods = {1, 2, 4, 3};
};

struct FitResult {
  QuasiPolynomial formula;
  unsigned degree = 0;  // common degree bound of every part
  Shape shape;
  std::size_t unknowns = 0;
};

/// Smallest degree (then first shape) whose interpolant reproduces every
/// value. Throws ShapeInsufficient when nothing up to max_degree fits and
/// InvalidArgument when there are too few values to test any shape.
FitResult fit(std::span<const GaussianRational> values, const FitOptions& options = {});

/// Convenience form: periods subset of {1, 2, 4} (3 is allowed too).
QuasiPolynomial fit(std::span<const GaussianRational> values, unsigned max_degree, std::span<const unsigned> periods);

struct FitMismatch {
  unsigned n = 0;
  GaussianRational expected;
  GaussianRational formula;
};

/// Values that `formula` does not reproduce; values[k] belongs to n = first_n + k.
std::vector<FitMismatch> verify_fit(const QuasiPolynomial& formula, std::span<const GaussianRational> values,
                                    unsigned first_n = 0);

/// Solves the square system M x = b exactly by fraction-free elimination.
/// Returns false when M is singular.
bool solve_exact(std::vector<std::vector<GaussianRational>> m, std::vector<GaussianRational> b,
                 std::vector<GaussianRational>& x);

}  // namespace avgnorm
