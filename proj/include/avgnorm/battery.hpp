#pragma once

// Cross-method verification battery shared by `avgnorm verify` and the
// acceptance runner. Each group returns one line per check.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "avgnorm/ensemble.hpp"

namespace avgnorm {

/// A table as printed: numerators per row n, one denominator per alpha column.
struct PrintedTable {
  std::string name;
  std::string set;
  unsigned n_max = 0;
  unsigned alpha_max = 0;
  std::vector<long> denominators;               // per alpha
  std::vector<std::vector<long>> numerators;    // [n][alpha]

  Rational value(unsigned n, unsigned alpha) const;
  std::string cell_text(unsigned n, unsigned alpha) const;
};

/// Tables of mu^{2 alpha}(n) for {-1,1}, {-1,0,1} and {0,1}, as printed.
const std::vector<PrintedTable>& printed_tables();

/// Column denominator of the printed table for (set, alpha), if any.
std::optional<BigInt> printed_denominator(const CoefficientSet& set, unsigned alpha);

/// {-1,1}, {-1,0,1}, {0,1}, {0,i}, {1,2}, {1/2,-1/2,i}
std::vector<CoefficientSet> battery_sets();

struct CheckResult {
  std::string group;
  std::string name;
  bool pass = true;
  std::string detail;
};

struct InjectedCell {
  std::string table;  // printed table name, e.g. "table1"
  unsigned n = 0;
  unsigned alpha = 0;
  long numerator = 0;
};

struct BatteryOptions {
  bool quick = false;  // n <= 4 throughout, smaller fit and property budgets
  /// Skip comparisons against printed tables and formulas.
  bool skip_printed = false;
  std::optional<InjectedCell> inject;
  std::uint32_t seed = 20240601;
  unsigned property_cases = 200;
};

std::vector<CheckResult> check_tables(const BatteryOptions& options);
std::vector<CheckResult> check_published(const BatteryOptions& options);
std::vector<CheckResult> check_methods(const BatteryOptions& options);
std::vector<CheckResult> check_weighted(const BatteryOptions& options);
std::vector<CheckResult> check_fits(const BatteryOptions& options);
std::vector<CheckResult> check_regression(const BatteryOptions& options);
std::vector<CheckResult> check_properties(const BatteryOptions& options);
/// mu^10 of {-1,1} up to n = 50; passes under 60 s.
std::vector<CheckResult> check_performance(const BatteryOptions& options);

std::vector<CheckResult> run_battery(const BatteryOptions& options);

}  // namespace avgnorm
