// avgnorm: exact average L_{2 alpha} norms of polynomials with coefficients
// from a finite set.

#include <iostream>

#include "CLI11.hpp"
#include "avgnorm/commands.hpp"
#include "avgnorm/error.hpp"

using namespace avgnorm;

namespace {

struct Shared {
  std::string method = "recursion";
  std::string output = "text";
  std::string cache;
  bool no_cache = false;
};

void add_set_options(CLI::App* cmd, RunConfig& config) {
  cmd->add_option("--set", config.set_literal, "coefficient set, e.g. \"{-1,0,1}\" or height:2")->required();
}

void add_output_options(CLI::App* cmd, Shared& shared, RunConfig& config) {
  cmd->add_option("--output", shared.output, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
  cmd->add_flag("--paper-style", config.paper_style, "render over the printed table denominators");
}

void add_cache_options(CLI::App* cmd, Shared& shared, RunConfig& config) {
  cmd->add_option("--cache", shared.cache, "recursion table cache directory (default $AVGNORM_CACHE_DIR)");
  cmd->add_flag("--no-cache", shared.no_cache, "ignore $AVGNORM_CACHE_DIR");
  cmd->add_flag("--stats", config.stats, "report cache use and recursion work on stderr");
}

void finish(RunConfig& config, const Shared& shared) {
  config.method = parse_method(shared.method);
  config.output = parse_output(shared.output);
  if (!shared.cache.empty())
    config.cache_dir = shared.cache;
  else if (!shared.no_cache)
    config.cache_dir = default_cache_dir();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact average L_{2 alpha} norms over polynomials with coefficients in a finite set"};
  app.require_subcommand(1);

  RunConfig config;
  Shared shared;
  FitConfig fit_config;
  BatteryOptions battery;
  std::string inject;
  std::string file;
  unsigned s = 0, t = 0;

  auto* compute = app.add_subcommand("compute", "e(n,s,t,m) or mu^{2 alpha}(n; m) by one or all methods");
  add_set_options(compute, config);
  compute->add_option("--alpha", config.alpha, "alpha, the average of |p|^{2 alpha}")->default_val(1);
  compute->add_option("--n", config.n, "degree bound n")->default_val(0);
  compute->add_option("--m", config.m, "weight exponent m")->default_val(0);
  auto* opt_s = compute->add_option("--s", s, "exponent of p (overrides alpha)");
  auto* opt_t = compute->add_option("--t", t, "exponent of the reflected conjugate (overrides alpha)");
  compute->add_option("--method", shared.method, "oracle, recursion, multinomial, closedform or all")
      ->check(CLI::IsMember({"oracle", "recursion", "multinomial", "closedform", "all"}));
  compute->add_option("--enumeration-budget", config.enumeration_budget, "oracle tuple limit");
  compute->add_option("--composition-budget", config.composition_budget, "multinomial composition pair limit");
  compute->add_option("--threads", config.threads, "oracle threads (0 = hardware)");
  add_output_options(compute, shared, config);
  add_cache_options(compute, shared, config);

  auto* table = app.add_subcommand("table", "grid of mu^{2 alpha}(n) for n <= n-max, alpha <= alpha-max");
  add_set_options(table, config);
  table->add_option("--alpha-max", config.alpha_max, "largest alpha")->default_val(5);
  table->add_option("--n-max", config.n_max, "largest n")->default_val(10);
  table->add_option("--method", shared.method, "recursion, oracle or multinomial")
      ->check(CLI::IsMember({"oracle", "recursion", "multinomial", "closedform"}));
  add_output_options(table, shared, config);
  add_cache_options(table, shared, config);

  auto* fit = app.add_subcommand("fit", "closed form of mu^{2 alpha}(n) as a quasi-polynomial in n");
  add_set_options(fit, config);
  fit->add_option("--alpha", config.alpha, "alpha")->required();
  fit->add_option("--n-samples", fit_config.n_samples, "fit on n = 0..n-samples-1 (default: automatic)");
  fit->add_option("--max-degree", fit_config.max_degree, "degree cap (default 2 alpha + 1)");
  fit->add_option("--periods", fit_config.periods, "allowed periods among 1,2,3,4")->delimiter(',');
  fit->add_option("--verify-span", fit_config.verify_span, "values checked after the fit range")->default_val(20);
  fit->add_option("--output", shared.output, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* verify = app.add_subcommand("verify", "cross-method battery with a pass/fail matrix");
  verify->add_flag("--quick", battery.quick, "n <= 4 subset");
  verify->add_flag("--no-printed", battery.skip_printed, "skip comparisons with printed tables and formulas");
  verify->add_option("--inject-cell", inject, "replace a printed cell, TABLE:N:ALPHA:NUMERATOR (negative control)");
  verify->add_option("--seed", battery.seed, "property test seed");
  verify->add_option("--cases", battery.property_cases, "cases per property")->default_val(200);

  auto* cat = app.add_subcommand("catalog", "list the named closed forms");
  cat->add_option("--output", shared.output, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* cache = app.add_subcommand("cache", "recursion table snapshots");
  cache->require_subcommand(1);
  auto* dump = cache->add_subcommand("dump", "write the table of a set to a file");
  add_set_options(dump, config);
  dump->add_option("--alpha-max", config.alpha_max, "largest alpha")->default_val(5);
  dump->add_option("--n-max", config.n_max, "largest n")->default_val(10);
  dump->add_option("--file", file, "snapshot file")->required();
  add_cache_options(dump, shared, config);
  auto* load = cache->add_subcommand("load", "import a snapshot file into the cache directory");
  load->add_option("--file", file, "snapshot file")->required();
  add_cache_options(load, shared, config);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    finish(config, shared);
    if (*opt_s) config.s = s;
    if (*opt_t) config.t = t;
    if (*compute) return cmd_compute(config, std::cout, std::cerr);
    if (*table) return cmd_table(config, std::cout, std::cerr);
    if (*fit) return cmd_fit(config, fit_config, std::cout, std::cerr);
    if (*verify) {
      if (!inject.empty()) battery.inject = parse_injected_cell(inject);
      return cmd_verify(battery, std::cout, std::cerr);
    }
    if (*cat) return cmd_catalog(config, std::cout, std::cerr);
    if (*dump) return cmd_cache_dump(config, file, std::cout, std::cerr);
    if (*load) return cmd_cache_load(config, file, std::cout, std::cerr);
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.budget() << " budget exceeded: " << e.what() << '\n';
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
