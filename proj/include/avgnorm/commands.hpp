#pragma once

// Subcommand implementations behind the avgnorm executable. Each writes its
// result to `out`, notices to `err`, and returns the process exit status.
// Library errors (ParseError, BudgetExceeded, ...) propagate to the caller.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "avgnorm/battery.hpp"
#include "avgnorm/fitter.hpp"
#include "avgnorm/recursion.hpp"

namespace avgnorm {

enum class Method { oracle, recursion, multinomial, closedform, all };
enum class OutputFormat { text, json, csv };

Method parse_method(const std::string& name);
std::string method_name(Method m);
OutputFormat parse_output(const std::string& name);

struct RunConfig {
  std::string set_literal = "{-1,1}";
  Method method = Method::recursion;
  unsigned n = 0;
  unsigned n_max = 10;
  unsigned alpha = 1;
  unsigned alpha_max = 5;
  /// Explicit exponents of e(n, s, t, m); default to alpha.
  std::optional<unsigned> s;
  std::optional<unsigned> t;
  long m = 0;
  OutputFormat output = OutputFormat::text;
  bool paper_style = false;
  std::optional<std::filesystem::path> cache_dir;
  bool stats = false;
  std::uint64_t enumeration_budget = 10'000'000;
  std::uint64_t composition_budget = 10'000'000;
  unsigned threads = 0;
};

/// $AVGNORM_CACHE_DIR when set and non-empty.
std::optional<std::filesystem::path> default_cache_dir();

struct CacheStats {
  std::string cache = "off";  // off, hit, miss, extended
  std::uint64_t recursion_entries = 0;
};

/// Cache file holding the table of `set` inside `dir`.
std::filesystem::path cache_file(const std::filesystem::path& dir, const CoefficientSet& set);

/// A table covering `bounds`, read from and written back to the cache
/// directory when one is given.
RecursionTable obtain_table(const CoefficientSet& set, const TableBounds& bounds,
                            const std::optional<std::filesystem::path>& cache_dir, CacheStats& stats);

/// Reduced rendering, or "num/den" over `paper_den` when the value is real
/// and its denominator divides it.
std::string render_value(const GaussianRational& value, const std::optional<BigInt>& paper_den);

struct FitConfig {
  /// Values n = 0 .. n_samples-1; chosen automatically when absent.
  std::optional<unsigned> n_samples;
  std::optional<unsigned> max_degree;
  std::vector<unsigned> periods = {1, 2, 4, 3};
  unsigned holdout = 5;
  unsigned verify_span = 20;
};

struct AutoFit {
  FitResult result;
  unsigned n_fit = 0;  // fitted on n = 0..n_fit
  unsigned verify_first = 0;
  unsigned verify_last = 0;
  std::vector<FitMismatch> mismatches;
};

/// mu_sequence, fit, then verify_fit on the next verify_span values.
AutoFit auto_fit(const CoefficientSet& set, unsigned alpha, const FitConfig& config);

int cmd_compute(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_table(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_fit(const RunConfig& config, const FitConfig& fit, std::ostream& out, std::ostream& err);
int cmd_verify(const BatteryOptions& options, std::ostream& out, std::ostream& err);
int cmd_catalog(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_cache_dump(const RunConfig& config, const std::filesystem::path& file, std::ostream& out, std::ostream& err);
int cmd_cache_load(const RunConfig& config, const std::filesystem::path& file, std::ostream& out, std::ostream& err);

/// "table1:6:2:81" -> InjectedCell; throws ParseError.
InjectedCell parse_injected_cell(const std::string& text);

}  // namespace avgnorm
