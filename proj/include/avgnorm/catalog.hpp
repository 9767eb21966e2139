#pragma once

// Named closed forms: explicit quasi-polynomials for particular sets,
// generating functions in the power sums, and weighted averages.

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "avgnorm/closedforms.hpp"
#include "avgnorm/quasipoly.hpp"

namespace avgnorm {

enum class FormulaKind { explicit_mu, generating_function, weighted };

std::string_view kind_name(FormulaKind kind);

struct NamedFormula {
  std::string id;
  FormulaKind kind = FormulaKind::explicit_mu;
  /// The exponents of e_T(n, s, t, m); s = t = alpha for mu^{2 alpha}.
  unsigned s = 0;
  unsigned t = 0;
  /// Human-readable domain, e.g. "{-1,1}", "height:h, h >= 1", "zero-sum sets".
  std::string applicability;
  std::function<bool(const CoefficientSet&)> applies;
  /// Set the formula is stated for, when there is exactly one.
  std::optional<std::string> fixed_set;
  std::string source;
  /// Known discrepancy of the printed form, empty when none.
  std::string note;

  std::function<QuasiPolynomial(const CoefficientSet&)> quasi;        // explicit_mu
  std::function<RationalGF(const CoefficientSet&)> gf;                // generating_function
  std::function<AverageValue(const CoefficientSet&, unsigned, long)> weighted;  // weighted

  unsigned alpha() const { return s; }
  /// Value at (n, m); throws NotApplicable outside the domain. m must be 0
  /// for the unweighted kinds.
  AverageValue evaluate(const CoefficientSet& set, unsigned n, long m = 0) const;
};

const std::vector<NamedFormula>& catalog();

/// Throws InvalidArgument listing the known ids.
const NamedFormula& find_formula(std::string_view id);

/// Value of a formula stated for a single set, at n.
AverageValue published_mu(std::string_view id, unsigned n);

/// h when set = {-h, ..., h} with h >= 1.
std::optional<unsigned> height_of(const CoefficientSet& set);

}  // namespace avgnorm
