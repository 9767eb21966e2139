#include "avgnorm/catalog.hpp"

#include "avgnorm/error.hpp"
#include "avgnorm/powersum.hpp"

namespace avgnorm {

std::string_view kind_name(FormulaKind kind) {
  switch (kind) {
    case FormulaKind::explicit_mu: return "explicit";
    case FormulaKind::generating_function: return "gf";
    case FormulaKind::weighted: return "weighted";
  }
  return "?";
}

std::optional<unsigned> height_of(const CoefficientSet& set) {
  if (set.size() < 3 || set.size() % 2 == 0) return std::nullopt;
  const unsigned h = static_cast<unsigned>((set.size() - 1) / 2);
  const CoefficientSet expected = CoefficientSet::height(h);
  for (const auto& x : set.elements()) {
    bool found = false;
    for (const auto& y : expected.elements()) found = found || x == y;
    if (!found) return std::nullopt;
  }
  return h;
}

AverageValue NamedFormula::evaluate(const CoefficientSet& set, unsigned n, long m) const {
  if (!applies(set)) throw NotApplicable(id + " applies to " + applicability + ", not " + set.literal());
  switch (kind) {
    case FormulaKind::explicit_mu:
      if (m != 0) throw InvalidArgument(id + " has no m parameter");
      return quasi(set).evaluate(n);
    case FormulaKind::generating_function:
      if (m != 0) throw InvalidArgument(id + " has no m parameter");
      return gf(set).coefficient(n);
    case FormulaKind::weighted: return weighted(set, n, m);
  }
  return {};
}

namespace {

using GR = GaussianRational;

GR q(long p, long r = 1) { return GR(Rational(BigInt(p), BigInt(r))); }

// c * (ascending integer coefficients)
std::vector<GR> scaled(const GR& c, std::initializer_list<long> ascending) {
  std::vector<GR> out;
  for (long v : ascending) out.push_back(c * q(v));
  return out;
}

bool set_is(const CoefficientSet& set, const char* literal) {
  const CoefficientSet ref = CoefficientSet::parse(literal);
  if (ref.size() != set.size()) return false;
  for (const auto& x : set.elements()) {
    bool found = false;
    for (const auto& y : ref.elements()) found = found || x == y;
    if (!found) return false;
  }
  return true;
}

NamedFormula literal_formula(std::string id, unsigned alpha, const char* set, std::string source, QuasiPolynomial f,
                             std::string note = {}) {
  NamedFormula out;
  out.id = std::move(id);
  out.kind = FormulaKind::explicit_mu;
  out.s = out.t = alpha;
  out.applicability = set;
  out.applies = [set](const CoefficientSet& s) { return set_is(s, set); };
  out.fixed_set = set;
  out.source = std::move(source);
  out.note = std::move(note);
  out.quasi = [f = std::move(f)](const CoefficientSet&) { return f; };
  return out;
}

QuasiPolynomial with_alternating(QuasiPolynomial base, std::vector<GR> alt) {
  base.add_part(Wave::alternating, alt);
  return base;
}

void add_littlewood(std::vector<NamedFormula>& c) {
  const char* set = "{-1,1}";
  const std::string src = "Littlewood polynomials";
  c.push_back(literal_formula("littlewood_mu0", 0, set, src, QuasiPolynomial::polynomial({1})));
  c.push_back(literal_formula("littlewood_mu2", 1, set, src, QuasiPolynomial::polynomial(scaled(1, {1, 1}))));
  c.push_back(literal_formula("littlewood_mu4", 2, set, src, QuasiPolynomial::polynomial(scaled(1, {1, 3, 2}))));
  c.push_back(
      literal_formula("littlewood_mu6", 3, set, src, QuasiPolynomial::polynomial(scaled(1, {1, 4, 9, 6}))));
  c.push_back(literal_formula(
      "littlewood_mu8", 4, set, src,
      with_alternating(QuasiPolynomial::polynomial(scaled(1, {4, 5, 4, 30, 24})), scaled(1, {-3}))));
  // -5(-1)^n(15n - 29)
  c.push_back(literal_formula(
      "littlewood_mu10", 5, set, src,
      with_alternating(QuasiPolynomial::polynomial(scaled(1, {-144, 281, 265, -350, 150, 120})),
                       scaled(-5, {-29, 15}))));
}

void add_height1(std::vector<NamedFormula>& c) {
  const char* set = "{-1,0,1}";
  const std::string src = "polynomials of height 1";
  c.push_back(literal_formula("height1_mu0", 0, set, src, QuasiPolynomial::polynomial({1})));
  c.push_back(literal_formula("height1_mu2", 1, set, src, QuasiPolynomial::polynomial(scaled(q(2, 3), {1, 1}))));
  c.push_back(
      literal_formula("height1_mu4", 2, set, src, QuasiPolynomial::polynomial(scaled(q(2, 9), {3, 7, 4}))));
  c.push_back(
      literal_formula("height1_mu6", 3, set, src, QuasiPolynomial::polynomial(scaled(q(2, 9), {3, 13, 18, 8}))));
  c.push_back(literal_formula(
      "height1_mu8", 4, set, src,
      with_alternating(QuasiPolynomial::polynomial(scaled(q(2, 27), {15, 37, 128, 176, 64})),
                       scaled(q(2, 27), {-6}))));
  // (2/81)(... - 30(-1)^n(10n - 13))
  c.push_back(literal_formula(
      "height1_mu10", 5, set, src,
      with_alternating(QuasiPolynomial::polynomial(scaled(q(2, 81), {-363, 1337, 630, 0, 2400, 640})),
                       scaled(q(2, 81) * q(-30), {-13, 10}))));
}

void add_zero_one(std::vector<NamedFormula>& c) {
  const std::string src = "0-1 polynomials";
  const QuasiPolynomial mu4 =
      with_alternating(QuasiPolynomial::polynomial(scaled(q(1, 96), {45, 92, 54, 4})), scaled(q(1, 96), {3}));
  const char* set = "{0,1}";
  c.push_back(literal_formula("zero_one_mu0", 0, set, src, QuasiPolynomial::polynomial({1})));
  c.push_back(literal_formula("zero_one_mu2", 1, set, src, QuasiPolynomial::polynomial(scaled(q(1, 2), {1, 1}))));
  c.push_back(literal_formula("zero_one_mu4", 2, set, src, mu4));
  // (1/2560)(... + 75(-1)^n(3n + 2))
  c.push_back(literal_formula(
      "zero_one_mu6", 3, set, src,
      with_alternating(QuasiPolynomial::polynomial(scaled(q(1, 2560), {1130, 4143, 5600, 3100, 460, 22})),
                       scaled(q(75, 2560), {2, 3}))));

  const char* iset = "{0,i}";
  const std::string isrc = "polynomials with coefficients in {0,i}";
  c.push_back(literal_formula("zero_i_mu0", 0, iset, isrc, QuasiPolynomial::polynomial({1})));
  c.push_back(literal_formula("zero_i_mu2", 1, iset, isrc, QuasiPolynomial::polynomial(scaled(q(1, 2), {1, 1}))));
  c.push_back(literal_formula("zero_i_mu4", 2, iset, isrc, mu4));
  // (1/5120)(46n^5 + ... + 2455 + 15(-1)^n(23 + 29n)
  //          - 60 i^n (2 + 3i - i n) + 60 (-i)^n (-2 + 3i + i n))
  const GR k = q(1, 5120);
  const GR i = GR::i();
  QuasiPolynomial mu6 = with_alternating(
      QuasiPolynomial::polynomial(scaled(k, {2455, 7789, 11200, 6320, 890, 46})), scaled(k * q(15), {23, 29}));
  mu6.add_part(Wave::i_pow, {k * q(-60) * (q(2) + q(3) * i), k * q(-60) * (-i)});
  mu6.add_part(Wave::minus_i_pow, {k * q(60) * (q(-2) + q(3) * i), k * q(60) * i});
  c.push_back(literal_formula("zero_i_mu6", 3, iset, isrc, mu6,
                              "known misprint: disagrees with the recurrence for every n >= 1 "
                              "(n = 1 gives 707/128, the true value is 11/2, which equals the {0,1} value)"));
}

void add_height_h(std::vector<NamedFormula>& c) {
  auto base = [](std::string id, unsigned alpha, std::function<QuasiPolynomial(unsigned)> f) {
    NamedFormula out;
    out.id = std::move(id);
    out.kind = FormulaKind::explicit_mu;
    out.s = out.t = alpha;
    out.applicability = "height:h, h >= 1";
    out.applies = [](const CoefficientSet& s) { return height_of(s).has_value(); };
    out.source = "polynomials of height h";
    out.quasi = [f = std::move(f)](const CoefficientSet& s) { return f(*height_of(s)); };
    return out;
  };
  c.push_back(base("height_h_mu2", 1, [](unsigned h) {
    const long hh = static_cast<long>(h) * (h + 1);
    return QuasiPolynomial::polynomial(scaled(q(hh, 3), {1, 1}));
  }));
  c.push_back(base("height_h_mu4", 2, [](unsigned h) {
    const long hh = static_cast<long>(h) * (h + 1);
    return QuasiPolynomial::polynomial(scaled(q(hh, 45), {3 * (3 * hh - 1), 19 * hh - 3, 10 * hh}));
  }));
}

void add_general(std::vector<NamedFormula>& c) {
  auto every = [](const CoefficientSet&) { return true; };
  auto zero_sum = [](const CoefficientSet& s) { return s.is_zero_sum(); };

  {
    NamedFormula f;
    f.id = "case2_mu2";
    f.s = f.t = 1;
    f.applicability = "all sets";
    f.applies = every;
    f.source = "mu^2 in power sums";
    f.quasi = [](const CoefficientSet& s) {
      const GR a = power_sum(s, 1, 1) * q(1, static_cast<long>(s.size()));
      return QuasiPolynomial::polynomial({a, a});
    };
    c.push_back(std::move(f));
  }
  {
    NamedFormula f;
    f.id = "case4_mu4";
    f.s = f.t = 2;
    f.applicability = "zero-sum sets";
    f.applies = zero_sum;
    f.source = "mu^4 in power sums, explicit in n";
    f.note = "as printed it disagrees with the recurrence on sets with nonzero element sum "
             "(for example {1,2} from n = 2, {0,1} at odd n)";
    f.quasi = [](const CoefficientSet& s) {
      const GR d = q(static_cast<long>(s.size()));
      const GR a10 = power_sum(s, 1, 0), a01 = power_sum(s, 0, 1);
      const GR a11 = power_sum(s, 1, 1), a22 = power_sum(s, 2, 2);
      const GR x = a10 * a10 * a01 * a01, y = a10 * a10 * a01 + a01 * a01 * a10;
      const GR d2 = d * d, d3 = d2 * d, d4 = d3 * d;
      QuasiPolynomial out = QuasiPolynomial::polynomial({
          a22 / d + x / (q(2) * d4) - y / (q(3) * d3),
          q(2) * a11 * a11 / d2 + a22 / d - q(2) * x / (q(3) * d4),
          q(2) * a11 * a11 / d2 + y / (q(2) * d3) - x / d4,
          q(2) * x / (q(3) * d4),
      });
      out.add_part(Wave::alternating, {-x / (q(2) * d4) + y / (q(3) * d3)});
      return out;
    };
    c.push_back(std::move(f));
  }

  auto gf_entry = [&](std::string id, unsigned alpha, bool needs_zero_sum, std::string source,
                      std::string note = {}) {
    NamedFormula f;
    f.id = std::move(id);
    f.kind = FormulaKind::generating_function;
    f.s = f.t = alpha;
    f.applicability = needs_zero_sum ? "zero-sum sets" : "all sets";
    if (needs_zero_sum)
      f.applies = zero_sum;
    else
      f.applies = every;
    f.source = std::move(source);
    f.note = std::move(note);
    f.gf = [alpha](const CoefficientSet& s) { return gf_mu(s, alpha); };
    c.push_back(std::move(f));
  };
  gf_entry("case2_gf", 1, false, "generating function of mu^2");
  gf_entry("case4_gf", 2, false, "generating function of mu^4",
           "third term uses A20 A01^2 + A02 A10^2; the printed A10^2 A01 + A01^2 A10 fails from n = 2");
  gf_entry("case00_mu2", 1, true, "generating function of mu^2, zero-sum sets");
  gf_entry("case00_mu4", 2, true, "generating function of mu^4, zero-sum sets");
  gf_entry("case00_mu6", 3, true, "generating function of mu^6, zero-sum sets");
  gf_entry("case00_mu8", 4, true, "generating function of mu^8, zero-sum sets",
           "uses 36x A22^2/(d^2(1-x)^3) and 72x^3 (A02 A20)^2/(d^4(1-x)^4(1+x)); "
           "the printed versions of these two terms disagree with the recurrence");

  auto weighted_entry = [&](std::string id, unsigned s, unsigned t, bool needs_zero_sum, std::string source,
                            std::function<AverageValue(const CoefficientSet&, unsigned, long)> eval,
                            std::string note = {}) {
    NamedFormula f;
    f.id = std::move(id);
    f.kind = FormulaKind::weighted;
    f.s = s;
    f.t = t;
    f.applicability = needs_zero_sum ? "zero-sum sets" : "all sets";
    if (needs_zero_sum)
      f.applies = zero_sum;
    else
      f.applies = every;
    f.source = std::move(source);
    f.note = std::move(note);
    f.weighted = std::move(eval);
    c.push_back(std::move(f));
  };
  weighted_entry("weighted_a1", 1, 1, false, "e(n,1,1,m)",
                 [](const CoefficientSet& s, unsigned n, long m) { return weighted_closed(s, 1, n, m); });
  weighted_entry("weighted_a2", 2, 2, true, "e(n,2,2,m), zero-sum sets",
                 [](const CoefficientSet& s, unsigned n, long m) { return weighted_closed(s, 2, n, m); },
                 "the m = 0 value uses A22/d + 4 C(n+1,2) A11^2/d^2");
  weighted_entry("average_12", 1, 2, true, "e(n,1,2,m), zero-sum sets", average_12);
  weighted_entry("average_21", 2, 1, true, "e(n,2,1,m), zero-sum sets", average_21);
}

std::vector<NamedFormula> build() {
  std::vector<NamedFormula> c;
  add_littlewood(c);
  add_height1(c);
  add_zero_one(c);
  add_height_h(c);
  add_general(c);
  return c;
}

}  // namespace

const std::vector<NamedFormula>& catalog() {
  static const std::vector<NamedFormula> entries = build();
  return entries;
}

const NamedFormula& find_formula(std::string_view id) {
  for (const auto& f : catalog())
    if (f.id == id) return f;
  std::string known;
  for (const auto& f : catalog()) known += (known.empty() ? "" : ", ") + f.id;
  throw InvalidArgument("unknown formula id '" + std::string(id) + "'; known ids: " + known);
}

AverageValue published_mu(std::string_view id, unsigned n) {
  const NamedFormula& f = find_formula(id);
  if (!f.fixed_set) throw InvalidArgument(f.id + " is stated for " + f.applicability + "; evaluate it with a set");
  return f.evaluate(CoefficientSet::parse(*f.fixed_set), n);
}

}  // namespace avgnorm
