#include "avgnorm/battery.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include "avgnorm/catalog.hpp"
#include "avgnorm/closedforms.hpp"
#include "avgnorm/commands.hpp"
#include "avgnorm/error.hpp"
#include "avgnorm/laurent.hpp"
#include "avgnorm/multinomial.hpp"
#include "avgnorm/recursion.hpp"

namespace avgnorm {

Rational PrintedTable::value(unsigned n, unsigned alpha) const {
  return Rational(BigInt(numerators.at(n).at(alpha)), BigInt(denominators.at(alpha)));
}

std::string PrintedTable::cell_text(unsigned n, unsigned alpha) const {
  const long num = numerators.at(n).at(alpha);
  const long den = denominators.at(alpha);
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

const std::vector<PrintedTable>& printed_tables() {
  static const std::vector<PrintedTable> tables = {
      {"table1",
       "{-1,1}",
       10,
       5,
       {1, 1, 1, 1, 1, 1},
       {{1, 1, 1, 1, 1, 1},
        {1, 2, 6, 20, 70, 252},
        {1, 3, 15, 93, 651, 4913},
        {1, 4, 28, 256, 2812, 35024},
        {1, 5, 45, 545, 8149, 143945},
        {1, 6, 66, 996, 18882, 433116},
        {1, 7, 81, 1645, 37759, 1062697},
        {1, 8, 120, 2528, 68152, 2272128},
        {1, 9, 153, 3681, 113961, 4385969},
        {1, 10, 190, 5140, 179710, 7839260},
        {1, 11, 231, 6941, 270451, 13178561}}},
      {"table2",
       "{-1,0,1}",
       10,
       5,
       {1, 3, 9, 9, 9, 27},
       {{1, 2, 6, 6, 6, 18},
        {1, 4, 28, 84, 284, 3036},
        {1, 6, 66, 330, 2018, 42334},
        {1, 8, 120, 840, 7480, 239832},
        {1, 10, 190, 1710, 19902, 856010},
        {1, 12, 276, 3036, 43604, 2348788},
        {1, 14, 378, 4914, 83866, 5410646},
        {1, 16, 496, 7440, 147056, 11040304},
        {1, 18, 630, 10710, 240502, 20567042},
        {1, 20, 780, 14820, 372620, 35735180},
        {1, 22, 946, 19866, 552786, 58715598}}},
      {"table3",
       "{0,1}",
       10,
       3,
       {1, 2, 2, 8},
       {{1, 1, 1, 4},
        {1, 2, 4, 44},
        {1, 3, 10, 204},
        {1, 4, 19, 592},
        {1, 5, 32, 1397},
        {1, 6, 49, 2826},
        {1, 7, 71, 5206},
        {1, 8, 98, 8876},
        {1, 9, 131, 14334},
        {1, 10, 170, 22084},
        {1, 11, 216, 32828}}},
  };
  return tables;
}

std::optional<BigInt> printed_denominator(const CoefficientSet& set, unsigned alpha) {
  for (const auto& table : printed_tables()) {
    if (alpha > table.alpha_max) continue;
    if (CoefficientSet::parse(table.set) == set) return BigInt(table.denominators[alpha]);
  }
  return std::nullopt;
}

std::vector<CoefficientSet> battery_sets() {
  std::vector<CoefficientSet> out;
  for (const char* s : {"{-1,1}", "{-1,0,1}", "{0,1}", "{0,i}", "{1,2}", "{1/2,-1/2,i}"})
    out.push_back(CoefficientSet::parse(s));
  return out;
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string seconds_text(double s) {
  std::ostringstream os;
  os.precision(2);
  os << std::fixed << s << " s";
  return os.str();
}

// Collects the first few failures of one check.
class Tally {
 public:
  void fail(const std::string& what) {
    ++failures_;
    if (failures_ <= 5) detail_ += (detail_.empty() ? "" : "; ") + what;
  }
  void count() { ++checked_; }
  CheckResult result(std::string group, std::string name, const std::string& extra = {}) const {
    CheckResult r{std::move(group), std::move(name), failures_ == 0, {}};
    if (failures_ == 0)
      r.detail = std::to_string(checked_) + " values agree" + (extra.empty() ? "" : ", " + extra);
    else
      r.detail = std::to_string(failures_) + " of " + std::to_string(checked_) + " values differ: " + detail_ +
                 (failures_ > 5 ? "; ..." : "");
    return r;
  }

 private:
  std::size_t failures_ = 0;
  std::size_t checked_ = 0;
  std::string detail_;
};

std::vector<CoefficientSet> zero_sum_extras() {
  std::vector<CoefficientSet> out;
  for (const char* s : {"{3,-1,-2}", "{1+i,-1,-i}", "{1,i,-1,-i}"}) out.push_back(CoefficientSet::parse(s));
  return out;
}

std::string key_text(unsigned n, unsigned s, unsigned t, long m) {
  return "(" + std::to_string(n) + "," + std::to_string(s) + "," + std::to_string(t) + "," + std::to_string(m) + ")";
}

// Parses the CSV emitted by cmd_table: "n,alpha,value" rows.
std::map<std::pair<unsigned, unsigned>, std::string> parse_table_csv(const std::string& text) {
  std::map<std::pair<unsigned, unsigned>, std::string> out;
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);  // header
  while (std::getline(in, line)) {
    const auto a = line.find(',');
    const auto b = line.find(',', a + 1);
    if (a == std::string::npos || b == std::string::npos) continue;
    out[{static_cast<unsigned>(std::stoul(line.substr(0, a))), static_cast<unsigned>(std::stoul(line.substr(a + 1, b - a - 1)))}] =
        line.substr(b + 1);
  }
  return out;
}

}  // namespace

std::vector<CheckResult> check_tables(const BatteryOptions& options) {
  std::vector<CheckResult> out;
  if (options.skip_printed) return out;
  for (const auto& printed : printed_tables()) {
    const auto start = Clock::now();
    RunConfig config;
    config.set_literal = printed.set;
    config.method = Method::recursion;
    config.n_max = options.quick ? std::min(4u, printed.n_max) : printed.n_max;
    config.alpha_max = printed.alpha_max;
    config.output = OutputFormat::csv;
    config.paper_style = true;
    std::ostringstream csv, notes;
    cmd_table(config, csv, notes);
    const auto cells = parse_table_csv(csv.str());
    Tally tally;
    for (unsigned n = 0; n <= config.n_max; ++n)
      for (unsigned a = 0; a <= printed.alpha_max; ++a) {
        std::string expected = printed.cell_text(n, a);
        if (options.inject && options.inject->table == printed.name && options.inject->n == n &&
            options.inject->alpha == a) {
          const long den = printed.denominators[a];
          expected = den == 1 ? std::to_string(options.inject->numerator)
                              : std::to_string(options.inject->numerator) + "/" + std::to_string(den);
        }
        tally.count();
        auto it = cells.find({n, a});
        const std::string got = it == cells.end() ? "<missing>" : it->second;
        if (got != expected)
          tally.fail(printed.name + " cell (n=" + std::to_string(n) + ", alpha=" + std::to_string(a) + "): printed " +
                     expected + ", computed " + got);
      }
    out.push_back(tally.result("tables", printed.name + " " + printed.set, seconds_text(seconds_since(start))));
  }
  return out;
}

std::vector<CheckResult> check_published(const BatteryOptions& options) {
  std::vector<CheckResult> out;
  const unsigned n_max = options.quick ? 4 : 30;
  auto compare = [&](const NamedFormula& f, const CoefficientSet& set) {
    RecursionTable table(set, {n_max, f.alpha(), f.alpha()});
    Tally tally;
    for (unsigned n = 0; n <= n_max; ++n) {
      tally.count();
      const GaussianRational want = dp_e(table, {n, f.alpha(), f.alpha(), 0});
      const GaussianRational got = f.evaluate(set, n);
      if (want != got) tally.fail("n=" + std::to_string(n) + ": formula " + got.str() + ", recursion " + want.str());
    }
    out.push_back(tally.result("published", f.id + " on " + set.literal() + ", n<=" + std::to_string(n_max)));
  };
  for (const auto& f : catalog()) {
    if (f.kind == FormulaKind::weighted) continue;
    if (f.fixed_set) {
      if (!options.skip_printed) compare(f, CoefficientSet::parse(*f.fixed_set));
      continue;
    }
    if (f.id.starts_with("height_h")) {
      if (!options.skip_printed)
        for (unsigned h = 1; h <= 4; ++h) compare(f, CoefficientSet::height(h));
      continue;
    }
    std::vector<CoefficientSet> sets = battery_sets();
    for (auto& s : zero_sum_extras()) sets.push_back(s);
    for (const auto& s : sets)
      if (f.applies(s)) compare(f, s);
  }
  return out;
}

std::vector<CheckResult> check_methods(const BatteryOptions& options) {
  std::vector<CheckResult> out;
  const unsigned n_max = options.quick ? 4 : 6;
  const unsigned e_max = 3;
  for (const auto& set : battery_sets()) {
    const auto start = Clock::now();
    RecursionTable table(set, {n_max, e_max, e_max});
    const bool littlewood = set == CoefficientSet::parse("{-1,1}");
    Tally tally;
    std::size_t closed = 0;
    for (unsigned n = 0; n <= n_max; ++n)
      for (unsigned s = 0; s <= e_max; ++s)
        for (unsigned t = 0; t <= e_max; ++t) {
          const auto oracle = oracle_e_all_m(set, n, s, t);
          for (long m = -static_cast<long>(n * s); m <= static_cast<long>(n * t); ++m) {
            const AverageKey key{n, s, t, m};
            tally.count();
            auto it = oracle.find(m);
            const GaussianRational want = it == oracle.end() ? GaussianRational{} : it->second;
            auto check = [&](const std::string& method, const GaussianRational& got) {
              if (got != want)
                tally.fail(method + " at " + key_text(n, s, t, m) + ": " + got.str() + " vs oracle " + want.str());
            };
            check("recursion", dp_e(table, key));
            check("multinomial", multinomial_e(set, key));
            if (littlewood) check("littlewood", GaussianRational(Rational(littlewood_e(key))));
            if (s == t && m == 0 && (s <= 2 || (s <= kMaxGfAlpha && set.is_zero_sum()))) {
              check("generating function", closed_mu(set, s, n));
              ++closed;
            }
            if (s == t && (s == 1 || (s == 2 && set.is_zero_sum()))) {
              check("weighted closed form", weighted_closed(set, s, n, m));
              ++closed;
            }
            if (set.is_zero_sum() && s == 1 && t == 2) {
              check("e(n,1,2,m) closed form", average_12(set, n, m));
              ++closed;
            }
            if (set.is_zero_sum() && s == 2 && t == 1) {
              check("e(n,2,1,m) closed form", average_21(set, n, m));
              ++closed;
            }
          }
        }
    out.push_back(tally.result("methods", set.literal() + " n<=" + std::to_string(n_max) + ", s,t<=3",
                               std::to_string(closed) + " closed-form comparisons, " +
                                   seconds_text(seconds_since(start))));
  }
  return out;
}

std::vector<CheckResult> check_weighted(const BatteryOptions& options) {
  std::vector<CheckResult> out;
  const unsigned n_max = options.quick ? 4 : 10;
  std::vector<CoefficientSet> sets = battery_sets();
  for (auto& s : zero_sum_extras()) sets.push_back(s);
  for (const auto& f : catalog()) {
    if (f.kind != FormulaKind::weighted) continue;
    for (const auto& set : sets) {
      if (!f.applies(set)) continue;
      RecursionTable table(set, {n_max, f.s, f.t});
      Tally tally;
      for (unsigned n = 0; n <= n_max; ++n)
        // two steps past the support on each side, where both must vanish
        for (long m = -static_cast<long>(n * f.s) - 2; m <= static_cast<long>(n * f.t) + 2; ++m) {
          tally.count();
          const GaussianRational want = dp_e(table, {n, f.s, f.t, m});
          const GaussianRational got = f.evaluate(set, n, m);
          if (got != want)
            tally.fail("n=" + std::to_string(n) + ", m=" + std::to_string(m) + ": formula " + got.str() +
                       ", recursion " + want.str());
        }
      out.push_back(tally.result("weighted", f.id + " on " + set.literal() + ", n<=" + std::to_string(n_max)));
    }
  }
  return out;
}

namespace {

std::optional<std::string> named_prefix(const CoefficientSet& set) {
  const std::pair<const char*, const char*> names[] = {
      {"{-1,1}", "littlewood"}, {"{-1,0,1}", "height1"}, {"{0,1}", "zero_one"}, {"{0,i}", "zero_i"}};
  for (const auto& [literal, prefix] : names)
    if (CoefficientSet::parse(literal) == set) return std::string(prefix);
  return std::nullopt;
}

}  // namespace

std::vector<CheckResult> check_fits(const BatteryOptions& options) {
  std::vector<CheckResult> out;
  FitConfig config;
  if (options.quick) config.verify_span = 10;
  auto one = [&](const CoefficientSet& set, unsigned alpha, const NamedFormula* named) {
    CheckResult r{"fits", set.literal() + " alpha=" + std::to_string(alpha), true, {}};
    try {
      const AutoFit fit = auto_fit(set, alpha, config);
      r.detail = fit.result.formula.str() + " [fit n<=" + std::to_string(fit.n_fit) + ", verified n=" +
                 std::to_string(fit.verify_first) + ".." + std::to_string(fit.verify_last) + "]";
      if (!fit.mismatches.empty()) {
        r.pass = false;
        r.detail = std::to_string(fit.mismatches.size()) + " mismatches after the fit range; " + r.detail;
      }
      if (set.is_real() && fit.result.formula.has_period4()) {
        r.pass = false;
        r.detail = "period-4 part for a real set; " + r.detail;
      }
      if (named && !options.skip_printed) {
        const QuasiPolynomial printed = named->quasi(set);
        if (!(printed == fit.result.formula)) {
          r.pass = false;
          r.detail = named->id + " as printed is " + printed.str() + ", fitted " + r.detail;
        } else {
          r.detail = "equals " + named->id + ": " + r.detail;
        }
      }
      if (alpha == 2 && !set.is_zero_sum()) {
        // the generating function stands in for the printed explicit form here
        const auto series = gf_mu(set, 2).series(fit.verify_last);
        for (unsigned n = 0; n <= fit.verify_last; ++n)
          if (series[n] != fit.result.formula.evaluate(n)) {
            r.pass = false;
            r.detail = "differs from the mu^4 generating function at n=" + std::to_string(n) + "; " + r.detail;
            break;
          }
      }
    } catch (const Error& e) {
      r.pass = false;
      r.detail = e.what();
    }
    out.push_back(std::move(r));
  };
  for (const auto& set : battery_sets()) {
    const auto prefix = named_prefix(set);
    const bool long_range = prefix && (*prefix == "littlewood" || *prefix == "height1");
    const unsigned alpha_max = options.quick ? 2 : (long_range ? 5 : 3);
    for (unsigned alpha = 1; alpha <= alpha_max; ++alpha) {
      const NamedFormula* named = nullptr;
      if (prefix) named = &find_formula(*prefix + "_mu" + std::to_string(2 * alpha));
      one(set, alpha, named);
    }
  }
  for (unsigned h = 2; h <= (options.quick ? 2u : 4u); ++h)
    for (unsigned alpha = 1; alpha <= 2; ++alpha)
      one(CoefficientSet::height(h), alpha, &find_formula("height_h_mu" + std::to_string(2 * alpha)));
  return out;
}

std::vector<CheckResult> check_regression(const BatteryOptions&) {
  std::vector<CheckResult> out;
  const CoefficientSet set = CoefficientSet::parse("{1,2}");
  const AverageKey key{1, 2, 2, 0};
  const GaussianRational expected(42);
  {
    const RecursionTable table(set, {1, 2, 2});
    const std::vector<std::pair<std::string, GaussianRational>> values = {
        {"oracle", oracle_e(set, key)},
        {"recursion", dp_e(table, key)},
        {"multinomial", multinomial_e(set, key)},
        {"generating function", gf_mu(set, 2).coefficient(1)},
    };
    CheckResult r{"regression", "{1,2} n=1 alpha=2 equals 42 by every method", true, {}};
    for (const auto& [method, v] : values) {
      r.detail += (r.detail.empty() ? "" : ", ") + method + " " + v.str();
      if (v != expected) r.pass = false;
    }
    out.push_back(std::move(r));
  }
  {
    const NamedFormula& printed = find_formula("case4_mu4");
    const GaussianRational v = printed.quasi(set).evaluate(1);
    CheckResult r{"regression", "case4_mu4 excluded from non-zero-sum sets", true, {}};
    r.pass = !printed.applies(set) && v != expected;
    r.detail = "printed explicit formula gives " + v.str() + " at {1,2}, n=1; applicability: " + printed.applicability;
    out.push_back(std::move(r));
  }
  {
    const RationalGF printed = printed_case4_gf(set);
    const RationalGF corrected = gf_mu(set, 2);
    const auto a = printed.series(4), b = corrected.series(4);
    unsigned first = 0;
    while (first <= 4 && a[first] == b[first]) ++first;
    CheckResult r{"regression", "printed mu^4 generating function third term", first == 2, {}};
    r.detail = first <= 4 ? "printed and corrected series first differ at n=" + std::to_string(first) + " (" +
                                a[first].str() + " vs " + b[first].str() + ")"
                          : "printed and corrected series agree through n=4";
    out.push_back(std::move(r));
  }
  return out;
}

namespace {

// Small random Gaussian rational: numerators in [-3,3], denominators in [1,3],
// imaginary part zero about half the time.
GaussianRational random_gr(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-3, 3), den(1, 3), coin(0, 1);
  Rational re(BigInt(num(rng)), BigInt(den(rng)));
  Rational im = coin(rng) ? Rational(BigInt(num(rng)), BigInt(den(rng))) : Rational(0);
  return {re, im};
}

CoefficientSet random_set(std::mt19937& rng, unsigned max_d = 3) {
  std::uniform_int_distribution<unsigned> size(1, max_d);
  const unsigned d = size(rng);
  std::vector<GaussianRational> elements;
  while (elements.size() < d) {
    GaussianRational x = random_gr(rng);
    bool fresh = true;
    for (const auto& y : elements) fresh = fresh && !(x == y);
    if (fresh) elements.push_back(std::move(x));
  }
  return CoefficientSet(std::move(elements));
}

CheckResult property(const std::string& name, unsigned cases, const std::function<std::string(std::mt19937&)>& body,
                     std::uint32_t seed) {
  std::mt19937 rng(seed);
  Tally tally;
  for (unsigned c = 0; c < cases; ++c) {
    tally.count();
    const std::string failure = body(rng);
    if (!failure.empty()) tally.fail(failure);
  }
  return tally.result("properties", name, "seed " + std::to_string(seed));
}

}  // namespace

std::vector<CheckResult> check_properties(const BatteryOptions& options) {
  std::vector<CheckResult> out;
  const unsigned cases = options.property_cases;
  std::uniform_int_distribution<unsigned> small_n(0, 4), small_e(0, 3);

  out.push_back(property(
      "conjugation symmetry e(n,s,t,m) = conj e(n,t,s,-m)", cases,
      [&](std::mt19937& rng) -> std::string {
        const CoefficientSet set = random_set(rng);
        const unsigned n = small_n(rng), s = small_e(rng), t = small_e(rng);
        const RecursionTable table(set, {n, 3, 3});
        for (long m = -static_cast<long>(n * s); m <= static_cast<long>(n * t); ++m)
          if (dp_e(table, {n, s, t, m}) != dp_e(table, {n, t, s, -m}).conj())
            return set.literal() + " " + key_text(n, s, t, m);
        return {};
      },
      options.seed));

  out.push_back(property(
      "scaling e_{cT} = c^s conj(c)^t e_T", cases,
      [&](std::mt19937& rng) -> std::string {
        const CoefficientSet set = random_set(rng);
        GaussianRational c = random_gr(rng);
        if (c.is_zero()) c = GaussianRational(Rational(1), Rational(1));
        const CoefficientSet scaled = set.scaled(c);
        const unsigned n = small_n(rng), s = small_e(rng), t = small_e(rng);
        const RecursionTable a(set, {n, s, t}), b(scaled, {n, s, t});
        const GaussianRational factor = c.pow(s) * c.conj().pow(t);
        for (long m = -static_cast<long>(n * s); m <= static_cast<long>(n * t); ++m)
          if (dp_e(b, {n, s, t, m}) != factor * dp_e(a, {n, s, t, m}))
            return set.literal() + " c=" + c.str() + " " + key_text(n, s, t, m);
        return {};
      },
      options.seed + 1));

  out.push_back(property(
      "mu is real and non-negative", cases,
      [&](std::mt19937& rng) -> std::string {
        const CoefficientSet set = random_set(rng);
        const unsigned n = small_n(rng), alpha = small_e(rng);
        const GaussianRational oracle = oracle_mu(set, n, alpha);
        const RecursionTable table(set, {n, alpha, alpha});
        const GaussianRational dp = dp_e(table, {n, alpha, alpha, 0});
        if (!(dp == oracle) || !dp.is_real() || dp.re().sign() < 0)
          return set.literal() + " n=" + std::to_string(n) + " alpha=" + std::to_string(alpha) + ": " + dp.str();
        return {};
      },
      options.seed + 2));

  out.push_back(property(
      "constant terms vanish outside -n s <= m <= n t", cases,
      [&](std::mt19937& rng) -> std::string {
        const unsigned n = small_n(rng), s = small_e(rng), t = small_e(rng);
        std::vector<GaussianRational> coeffs(n + 1);
        for (auto& c : coeffs) c = random_gr(rng);
        const LaurentPoly p = LaurentPoly::from_dense(coeffs);
        const LaurentPoly prod = poly_mul(poly_pow(p, s), poly_pow(conj_reflect(p), t));
        const long lo = -static_cast<long>(n * s), hi = static_cast<long>(n * t);
        for (long m = lo - 3; m <= hi + 3; ++m) {
          if (m >= lo && m <= hi) continue;
          if (!constant_term(prod, m).is_zero()) return p.str() + " " + key_text(n, s, t, m);
        }
        const CoefficientSet set = random_set(rng);
        const long outside = (rng() % 2) ? hi + 1 + static_cast<long>(rng() % 3) : lo - 1 - static_cast<long>(rng() % 3);
        if (!multinomial_e(set, {n, s, t, outside}).is_zero() || !oracle_e(set, {n, s, t, outside}).is_zero())
          return set.literal() + " " + key_text(n, s, t, outside);
        return {};
      },
      options.seed + 3));

  out.push_back(property(
      "Parseval: norm_power(p, 1) = sum |a_k|^2", cases,
      [&](std::mt19937& rng) -> std::string {
        const unsigned n = rng() % 9;
        std::vector<GaussianRational> coeffs(n + 1);
        Rational expected;
        for (auto& c : coeffs) {
          c = random_gr(rng);
          expected += c.norm();
        }
        const LaurentPoly p = LaurentPoly::from_dense(coeffs, static_cast<long>(rng() % 5) - 2);
        const GaussianRational got = p.is_zero() ? GaussianRational{} : norm_power(p, 1);
        if (got != GaussianRational(expected)) return p.str() + ": " + got.str() + " vs " + expected.str();
        return {};
      },
      options.seed + 4));
  return out;
}

std::vector<CheckResult> check_performance(const BatteryOptions& options) {
  const unsigned n_max = options.quick ? 20 : 50;
  const auto start = Clock::now();
  const RecursionTable table(CoefficientSet::parse("{-1,1}"), {n_max, 5, 5});
  const GaussianRational last = dp_e(table, {n_max, 5, 5, 0});
  const double elapsed = seconds_since(start);
  const GaussianRational formula = published_mu("littlewood_mu10", n_max);
  CheckResult r{"performance", "mu^10 of {-1,1} for n<=" + std::to_string(n_max), elapsed < 60.0 && last == formula, {}};
  r.detail = "table filled in " + seconds_text(elapsed) + " (" + std::to_string(table.entries_computed()) +
             " entries); mu^10(" + std::to_string(n_max) + ") = " + last.str() +
             (last == formula ? ", matches the explicit formula" : ", explicit formula gives " + formula.str());
  return {r};
}

std::vector<CheckResult> run_battery(const BatteryOptions& options) {
  std::vector<CheckResult> all;
  for (auto group : {check_tables, check_published, check_methods, check_weighted, check_fits, check_regression,
                     check_properties, check_performance}) {
    auto part = group(options);
    all.insert(all.end(), part.begin(), part.end());
  }
  return all;
}

}  // namespace avgnorm
