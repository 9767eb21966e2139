#include "avgnorm/commands.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "json.hpp"

#include "avgnorm/catalog.hpp"
#include "avgnorm/closedforms.hpp"
#include "avgnorm/error.hpp"
#include "avgnorm/multinomial.hpp"

namespace avgnorm {

using Json = nlohmann::ordered_json;

Method parse_method(const std::string& name) {
  if (name == "oracle") return Method::oracle;
  if (name == "recursion") return Method::recursion;
  if (name == "multinomial") return Method::multinomial;
  if (name == "closedform") return Method::closedform;
  if (name == "all") return Method::all;
  throw InvalidArgument("unknown method '" + name + "' (oracle, recursion, multinomial, closedform, all)");
}

std::string method_name(Method m) {
  switch (m) {
    case Method::oracle: return "oracle";
    case Method::recursion: return "recursion";
    case Method::multinomial: return "multinomial";
    case Method::closedform: return "closedform";
    case Method::all: return "all";
  }
  return "?";
}

OutputFormat parse_output(const std::string& name) {
  if (name == "text") return OutputFormat::text;
  if (name == "json") return OutputFormat::json;
  if (name == "csv") return OutputFormat::csv;
  throw InvalidArgument("unknown output format '" + name + "' (text, json, csv)");
}

std::optional<std::filesystem::path> default_cache_dir() {
  const char* dir = std::getenv("AVGNORM_CACHE_DIR");
  if (dir == nullptr || *dir == '\0') return std::nullopt;
  return std::filesystem::path(dir);
}

std::filesystem::path cache_file(const std::filesystem::path& dir, const CoefficientSet& set) {
  // hex of the canonical literal keeps names filesystem-safe and stable
  std::ostringstream name;
  for (unsigned char c : set.literal()) name << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(c);
  return dir / (name.str() + ".table");
}

namespace {

void write_atomically(const std::filesystem::path& file, const RecursionTable& table) {
  std::filesystem::create_directories(file.parent_path());
  const std::filesystem::path tmp = file.string() + ".tmp";
  {
    std::ofstream os(tmp);
    if (!os) throw InvalidArgument("cannot write " + tmp.string());
    table.save(os);
    if (!os) throw InvalidArgument("failed writing " + tmp.string());
  }
  std::filesystem::rename(tmp, file);
}

std::optional<RecursionTable> read_table(const std::filesystem::path& file) {
  std::ifstream is(file);
  if (!is) return std::nullopt;
  return RecursionTable::load(is);
}

}  // namespace

RecursionTable obtain_table(const CoefficientSet& set, const TableBounds& bounds,
                            const std::optional<std::filesystem::path>& cache_dir, CacheStats& stats) {
  if (!cache_dir) {
    RecursionTable table(set, bounds);
    stats.cache = "off";
    stats.recursion_entries += table.entries_computed();
    return table;
  }
  const std::filesystem::path file = cache_file(*cache_dir, set);
  std::optional<RecursionTable> cached;
  if (std::filesystem::exists(file)) {
    cached = read_table(file);
    if (cached && !(cached->set() == set)) cached.reset();
  }
  if (cached && cached->bounds().covers(bounds)) {
    stats.cache = "hit";
    return std::move(*cached);
  }
  RecursionTable table = cached ? std::move(*cached) : RecursionTable(set, bounds);
  stats.cache = cached ? "extended" : "miss";
  table.grow(bounds);
  stats.recursion_entries += table.entries_computed();
  write_atomically(file, table);
  return table;
}

std::string render_value(const GaussianRational& value, const std::optional<BigInt>& paper_den) {
  if (!paper_den || !value.is_real()) return value.str();
  const BigInt den = value.re().denominator();
  if (*paper_den % den != 0) return value.str();
  const BigInt num = value.re().numerator() * (*paper_den / den);
  if (*paper_den == 1) return num.get_str();
  return num.get_str() + "/" + paper_den->get_str();
}

namespace {

Json value_json(const GaussianRational& v) { return Json{{"re", v.re().str()}, {"im", v.im().str()}}; }

Json stats_json(const CacheStats& stats) {
  return Json{{"cache", stats.cache}, {"recursion_entries", stats.recursion_entries}};
}

void print_stats(const RunConfig& config, const CacheStats& stats, std::ostream& err) {
  if (config.stats && config.output != OutputFormat::json)
    err << "stats: cache=" << stats.cache << " recursion_entries=" << stats.recursion_entries << '\n';
}

GaussianRational closed_form_value(const CoefficientSet& set, const AverageKey& key) {
  if (key.s == key.t && key.m == 0 && key.s <= kMaxGfAlpha) return closed_mu(set, key.s, key.n);
  if (key.s == key.t && (key.s == 1 || key.s == 2)) return weighted_closed(set, key.s, key.n, key.m);
  if (key.s == 1 && key.t == 2) return average_12(set, key.n, key.m);
  if (key.s == 2 && key.t == 1) return average_21(set, key.n, key.m);
  throw NotApplicable("no closed form for e(n," + std::to_string(key.s) + "," + std::to_string(key.t) + ",m)" +
                      (key.m == 0 ? "" : " at m != 0"));
}

GaussianRational run_method(Method method, const RunConfig& config, const CoefficientSet& set, const AverageKey& key,
                            CacheStats& stats) {
  switch (method) {
    case Method::oracle: {
      OracleOptions options;
      options.budget = config.enumeration_budget;
      options.threads = config.threads;
      return oracle_e(set, key, options);
    }
    case Method::recursion: {
      const RecursionTable table = obtain_table(set, {key.n, key.s, key.t}, config.cache_dir, stats);
      return dp_e(table, key);
    }
    case Method::multinomial: {
      MultinomialOptions options;
      options.budget = config.composition_budget;
      return multinomial_e(set, key, options);
    }
    case Method::closedform: return closed_form_value(set, key);
    case Method::all: break;
  }
  throw InvalidArgument("method 'all' is not a single method");
}

}  // namespace

int cmd_compute(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const CoefficientSet set = CoefficientSet::parse(config.set_literal);
  const unsigned s = config.s.value_or(config.alpha);
  const unsigned t = config.t.value_or(config.alpha);
  const AverageKey key{config.n, s, t, config.m};
  const std::optional<BigInt> paper_den =
      config.paper_style && s == t ? printed_denominator(set, s) : std::optional<BigInt>{};
  CacheStats stats;

  Json head;
  head["set"] = set.literal();
  head["n"] = config.n;
  if (s == t)
    head["alpha"] = s;
  else
    head["alpha"] = nullptr;
  if (s != t) {
    head["s"] = s;
    head["t"] = t;
  }
  head["m"] = config.m;
  head["method"] = method_name(config.method);

  if (config.method != Method::all) {
    const GaussianRational v = run_method(config.method, config, set, key, stats);
    const std::string text = render_value(v, paper_den);
    switch (config.output) {
      case OutputFormat::text: out << text << '\n'; break;
      case OutputFormat::csv: out << "n,alpha,value\n" << config.n << ',' << s << ',' << text << '\n'; break;
      case OutputFormat::json: {
        Json j = head;
        j["value"] = value_json(v);
        if (paper_den) j["value"]["unreduced"] = text;
        j["stats"] = stats_json(stats);
        out << j.dump() << '\n';
        break;
      }
    }
    print_stats(config, stats, err);
    return 0;
  }

  struct Row {
    Method method;
    std::optional<GaussianRational> value;
    std::string skipped;
  };
  std::vector<Row> rows;
  for (Method m : {Method::oracle, Method::recursion, Method::multinomial, Method::closedform}) {
    Row row{m, std::nullopt, {}};
    try {
      row.value = run_method(m, config, set, key, stats);
    } catch (const BudgetExceeded& e) {
      row.skipped = "skipped, " + e.budget() + " budget: " + e.what();
    } catch (const NotApplicable& e) {
      row.skipped = std::string("skipped, not applicable: ") + e.what();
    }
    rows.push_back(std::move(row));
  }
  std::optional<GaussianRational> agreed;
  bool agree = true;
  for (const auto& row : rows) {
    if (!row.value) continue;
    if (!agreed)
      agreed = row.value;
    else if (!(*agreed == *row.value))
      agree = false;
  }
  if (!agreed) agree = false;
  const std::string verdict = agree ? "AGREE" : "DISAGREE";

  switch (config.output) {
    case OutputFormat::text:
      for (const auto& row : rows)
        out << std::left << std::setw(12) << method_name(row.method)
            << (row.value ? render_value(*row.value, paper_den) : row.skipped) << '\n';
      out << verdict << '\n';
      break;
    case OutputFormat::csv:
      out << "n,alpha,value,method\n";
      for (const auto& row : rows)
        if (row.value) out << config.n << ',' << s << ',' << render_value(*row.value, paper_den) << ',' << method_name(row.method) << '\n';
      break;
    case OutputFormat::json: {
      Json j = head;
      j["value"] = agree ? value_json(*agreed) : Json(nullptr);
      Json results = Json::array();
      for (const auto& row : rows) {
        Json r{{"method", method_name(row.method)}};
        if (row.value)
          r["value"] = value_json(*row.value);
        else
          r["skipped"] = row.skipped;
        results.push_back(std::move(r));
      }
      j["results"] = std::move(results);
      j["verdict"] = verdict;
      j["stats"] = stats_json(stats);
      out << j.dump() << '\n';
      break;
    }
  }
  print_stats(config, stats, err);
  return agree ? 0 : 1;
}

int cmd_table(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const CoefficientSet set = CoefficientSet::parse(config.set_literal);
  const unsigned n_max = config.n_max, a_max = config.alpha_max;
  CacheStats stats;
  std::vector<std::vector<GaussianRational>> grid(n_max + 1, std::vector<GaussianRational>(a_max + 1));
  if (config.method == Method::recursion) {
    const RecursionTable table = obtain_table(set, {n_max, a_max, a_max}, config.cache_dir, stats);
    for (unsigned n = 0; n <= n_max; ++n)
      for (unsigned a = 0; a <= a_max; ++a) grid[n][a] = dp_e(table, {n, a, a, 0});
  } else if (config.method == Method::all) {
    throw InvalidArgument("table takes a single method");
  } else {
    for (unsigned n = 0; n <= n_max; ++n)
      for (unsigned a = 0; a <= a_max; ++a) grid[n][a] = run_method(config.method, config, set, {n, a, a, 0}, stats);
  }

  std::vector<std::optional<BigInt>> column_den(a_max + 1);
  if (config.paper_style)
    for (unsigned a = 0; a <= a_max; ++a) {
      column_den[a] = printed_denominator(set, a);
      if (column_den[a]) continue;
      BigInt l = 1;
      bool real = true;
      for (unsigned n = 0; n <= n_max; ++n) {
        real = real && grid[n][a].is_real();
        if (real) l = lcm(l, grid[n][a].re().denominator());
      }
      if (real) column_den[a] = l;
    }

  switch (config.output) {
    case OutputFormat::text:
      out << 'n';
      for (unsigned a = 0; a <= a_max; ++a) out << "\talpha=" << a;
      out << '\n';
      for (unsigned n = 0; n <= n_max; ++n) {
        out << n;
        for (unsigned a = 0; a <= a_max; ++a) out << '\t' << render_value(grid[n][a], column_den[a]);
        out << '\n';
      }
      break;
    case OutputFormat::csv:
      out << "n,alpha,value\n";
      for (unsigned n = 0; n <= n_max; ++n)
        for (unsigned a = 0; a <= a_max; ++a) out << n << ',' << a << ',' << render_value(grid[n][a], column_den[a]) << '\n';
      break;
    case OutputFormat::json: {
      Json j;
      j["set"] = set.literal();
      j["method"] = method_name(config.method);
      j["n_max"] = n_max;
      j["alpha_max"] = a_max;
      Json cells = Json::array();
      for (unsigned n = 0; n <= n_max; ++n)
        for (unsigned a = 0; a <= a_max; ++a) {
          // unreduced uses the printed column denominator even without --paper-style
          std::optional<BigInt> den = column_den[a] ? column_den[a] : printed_denominator(set, a);
          cells.push_back(Json{{"n", n},
                               {"alpha", a},
                               {"value", value_json(grid[n][a])},
                               {"reduced", grid[n][a].str()},
                               {"unreduced", render_value(grid[n][a], den)}});
        }
      j["cells"] = std::move(cells);
      j["stats"] = stats_json(stats);
      out << j.dump() << '\n';
      break;
    }
  }
  print_stats(config, stats, err);
  return 0;
}

AutoFit auto_fit(const CoefficientSet& set, unsigned alpha, const FitConfig& config) {
  FitOptions options;
  options.max_degree = config.max_degree.value_or(2 * alpha + 1);
  options.min_degree = std::min(alpha, options.max_degree);
  options.holdout = config.holdout;
  options.periods = config.periods;

  std::vector<unsigned> attempts;
  if (config.n_samples) {
    attempts.push_back(*config.n_samples);
  } else {
    const unsigned cap = 6 * (options.max_degree + 1) + options.holdout;
    for (unsigned n = 4 * alpha + 6; n < cap; n *= 2) attempts.push_back(n);
    attempts.push_back(cap);
  }

  RecursionTable table(set, {0, alpha, alpha});
  for (std::size_t i = 0; i < attempts.size(); ++i) {
    const unsigned samples = attempts[i];
    if (samples == 0) throw InvalidArgument("need at least one sample");
    table.grow({samples - 1 + config.verify_span, alpha, alpha});
    const std::vector<GaussianRational> all = mu_sequence(table, alpha, samples - 1 + config.verify_span);
    const std::span<const GaussianRational> fitted(all.data(), samples);
    AutoFit out;
    try {
      out.result = fit(fitted, options);
    } catch (const ShapeInsufficient&) {
      if (i + 1 == attempts.size()) throw;
      continue;
    } catch (const InvalidArgument&) {
      if (i + 1 == attempts.size()) throw;
      continue;
    }
    out.n_fit = samples - 1;
    out.verify_first = samples;
    out.verify_last = samples - 1 + config.verify_span;
    out.mismatches = verify_fit(out.result.formula, std::span<const GaussianRational>(all).subspan(samples), samples);
    return out;
  }
  throw ShapeInsufficient("no fit attempted");
}

int cmd_fit(const RunConfig& config, const FitConfig& fit_config, std::ostream& out, std::ostream&) {
  const CoefficientSet set = CoefficientSet::parse(config.set_literal);
  AutoFit result;
  try {
    result = auto_fit(set, config.alpha, fit_config);
  } catch (const ShapeInsufficient& e) {
    throw ShapeInsufficient(std::string(e.what()) +
                            "; raise --max-degree or --n-samples, or allow more --periods");
  }
  const std::string formula = result.result.formula.str();
  if (config.output == OutputFormat::json) {
    Json j;
    j["set"] = set.literal();
    j["alpha"] = config.alpha;
    j["formula"] = formula;
    j["periods"] = shape_name(result.result.shape);
    j["degree"] = result.result.degree;
    j["fit_range"] = {0, result.n_fit};
    j["verify_range"] = {result.verify_first, result.verify_last};
    j["mismatches"] = result.mismatches.size();
    out << j.dump() << '\n';
  } else {
    out << formula << '\n';
    out << "periods " << shape_name(result.result.shape) << ", degree " << result.result.degree << "; fitted on n=0.."
        << result.n_fit << "; verified on n=" << result.verify_first << ".." << result.verify_last << ": "
        << result.mismatches.size() << " mismatches\n";
    for (const auto& m : result.mismatches)
      out << "  n=" << m.n << ": recursion " << m.expected.str() << ", formula " << m.formula.str() << '\n';
  }
  return result.mismatches.empty() ? 0 : 1;
}

int cmd_verify(const BatteryOptions& options, std::ostream& out, std::ostream&) {
  const auto results = run_battery(options);
  std::size_t failed = 0;
  for (const auto& r : results) {
    if (!r.pass) ++failed;
    out << (r.pass ? "PASS  " : "FAIL  ") << std::left << std::setw(12) << r.group << r.name << ": " << r.detail
        << '\n';
  }
  out << results.size() << " checks, " << failed << " failed\n";
  return failed == 0 ? 0 : 1;
}

int cmd_catalog(const RunConfig& config, std::ostream& out, std::ostream&) {
  if (config.output == OutputFormat::json) {
    Json list = Json::array();
    for (const auto& f : catalog()) {
      Json j{{"id", f.id},
             {"kind", std::string(kind_name(f.kind))},
             {"s", f.s},
             {"t", f.t},
             {"applicability", f.applicability},
             {"source", f.source}};
      if (!f.note.empty()) j["note"] = f.note;
      list.push_back(std::move(j));
    }
    out << list.dump() << '\n';
    return 0;
  }
  for (const auto& f : catalog()) {
    out << std::left << std::setw(16) << f.id << std::setw(10) << kind_name(f.kind) << "e(n," << f.s << ',' << f.t
        << ",m)  " << f.applicability << "  -- " << f.source << '\n';
    if (!f.note.empty()) out << std::string(16, ' ') << "note: " << f.note << '\n';
  }
  return 0;
}

int cmd_cache_dump(const RunConfig& config, const std::filesystem::path& file, std::ostream& out, std::ostream& err) {
  const CoefficientSet set = CoefficientSet::parse(config.set_literal);
  CacheStats stats;
  const RecursionTable table =
      obtain_table(set, {config.n_max, config.alpha_max, config.alpha_max}, config.cache_dir, stats);
  write_atomically(std::filesystem::absolute(file), table);
  out << "wrote " << file.string() << ": " << set.literal() << ", bounds n<=" << table.bounds().n_max
      << " s<=" << table.bounds().s_max << " t<=" << table.bounds().t_max << ", " << table.stored_entries()
      << " entries\n";
  print_stats(config, stats, err);
  return 0;
}

int cmd_cache_load(const RunConfig& config, const std::filesystem::path& file, std::ostream& out, std::ostream&) {
  if (!config.cache_dir) throw InvalidArgument("no cache directory: pass --cache DIR or set AVGNORM_CACHE_DIR");
  auto table = read_table(file);
  if (!table) throw InvalidArgument("cannot read " + file.string());
  const std::filesystem::path target = cache_file(*config.cache_dir, table->set());
  write_atomically(target, *table);
  out << "loaded " << table->set().literal() << " (" << table->stored_entries() << " entries) into "
      << target.string() << '\n';
  return 0;
}

InjectedCell parse_injected_cell(const std::string& text) {
  InjectedCell cell;
  std::istringstream in(text);
  std::string n, alpha, value;
  if (!std::getline(in, cell.table, ':') || !std::getline(in, n, ':') || !std::getline(in, alpha, ':') ||
      !std::getline(in, value))
    throw ParseError("expected TABLE:N:ALPHA:NUMERATOR in '" + text + "'", 0);
  try {
    cell.n = static_cast<unsigned>(std::stoul(n));
    cell.alpha = static_cast<unsigned>(std::stoul(alpha));
    cell.numerator = std::stol(value);
  } catch (const std::exception&) {
    throw ParseError("expected integers in '" + text + "'", cell.table.size() + 1);
  }
  return cell;
}

}  // namespace avgnorm
