#include "avgnorm/recursion.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include "avgnorm/error.hpp"
#include "avgnorm/powersum.hpp"

namespace avgnorm {

namespace {

constexpr std::string_view kSnapshotMagic = "avgnorm-table v1";

}  // namespace

RecursionTable::RecursionTable(CoefficientSet set, TableBounds bounds)
    : RecursionTable(std::move(set), bounds, true) {}

RecursionTable::RecursionTable(CoefficientSet set, TableBounds bounds, bool fill)
    : set_(std::move(set)), bounds_(bounds) {
  layers_.assign(bounds_.n_max + 1, std::vector<Row>((bounds_.s_max + 1) * (bounds_.t_max + 1)));
  if (fill) fill_from(0);
}

RecursionTable::Row& RecursionTable::slot(unsigned n, unsigned s, unsigned t) {
  return layers_[n][s * (bounds_.t_max + 1) + t];
}

const RecursionTable::Row& RecursionTable::row(unsigned n, unsigned s, unsigned t) const {
  if (n > bounds_.n_max || s > bounds_.s_max || t > bounds_.t_max) {
    std::ostringstream msg;
    msg << "key (n=" << n << ", s=" << s << ", t=" << t << ") exceeds table bounds (" << bounds_.n_max << ", "
        << bounds_.s_max << ", " << bounds_.t_max << "); grow the table first";
    throw BoundsExceeded(msg.str());
  }
  return layers_[n][s * (bounds_.t_max + 1) + t];
}

void RecursionTable::grow(const TableBounds& wanted) {
  if (bounds_.covers(wanted)) return;
  const TableBounds next{std::max(bounds_.n_max, wanted.n_max), std::max(bounds_.s_max, wanted.s_max),
                         std::max(bounds_.t_max, wanted.t_max)};
  if (next.s_max == bounds_.s_max && next.t_max == bounds_.t_max) {
    const unsigned first = bounds_.n_max + 1;
    bounds_ = next;
    layers_.resize(bounds_.n_max + 1, std::vector<Row>((bounds_.s_max + 1) * (bounds_.t_max + 1)));
    fill_from(first);
    return;
  }
  *this = RecursionTable(set_, next);
}

void RecursionTable::fill_from(unsigned first_layer) {
  const unsigned s_max = bounds_.s_max;
  const unsigned t_max = bounds_.t_max;
  const Rational inv_d(BigInt(1), BigInt(static_cast<unsigned long>(set_.size())));
  const PowerSumCache sums(set_);

  if (first_layer == 0) {
    for (unsigned s = 0; s <= s_max; ++s)
      for (unsigned t = 0; t <= t_max; ++t) {
        GaussianRational v = sums(s, t) * GaussianRational(inv_d);
        if (!v.is_zero()) slot(0, s, t).emplace_back(0, std::move(v));
        ++entries_computed_;
      }
    first_layer = 1;
  }

  // weight[s][t][k][l] = C(s,k) C(t,l) A^{s-k,t-l} / d
  std::vector<GaussianRational> weight((s_max + 1) * (t_max + 1) * (s_max + 1) * (t_max + 1));
  auto w_at = [&](unsigned s, unsigned t, unsigned k, unsigned l) -> GaussianRational& {
    return weight[((s * (t_max + 1) + t) * (s_max + 1) + k) * (t_max + 1) + l];
  };
  for (unsigned s = 0; s <= s_max; ++s)
    for (unsigned t = 0; t <= t_max; ++t)
      for (unsigned k = 0; k <= s; ++k)
        for (unsigned l = 0; l <= t; ++l)
          w_at(s, t, k, l) = sums(s - k, t - l) * GaussianRational(Rational(binomial(s, k) * binomial(t, l)) * inv_d);

  std::vector<GaussianRational> acc;
  for (unsigned n = first_layer; n <= bounds_.n_max; ++n) {
    for (unsigned s = 0; s <= s_max; ++s)
      for (unsigned t = 0; t <= t_max; ++t) {
        // m ranges over [-n s, n t]
        const long low = -static_cast<long>(n * s);
        acc.assign(static_cast<std::size_t>(n) * (s + t) + 1, GaussianRational{});
        for (unsigned k = 0; k <= s; ++k)
          for (unsigned l = 0; l <= t; ++l) {
            const GaussianRational& w = w_at(s, t, k, l);
            if (w.is_zero()) continue;
            // e(n-1,k,l,m') feeds m = m' - k + l
            const long shift = static_cast<long>(l) - static_cast<long>(k);
            for (const auto& [m_prev, v] : slot(n - 1, k, l)) acc[m_prev + shift - low].add_product(w, v);
          }
        Row& out = slot(n, s, t);
        out.clear();
        for (std::size_t i = 0; i < acc.size(); ++i)
          if (!acc[i].is_zero()) out.emplace_back(static_cast<long>(i) + low, std::move(acc[i]));
        entries_computed_ += acc.size();
      }
  }
}

std::size_t RecursionTable::stored_entries() const {
  std::size_t total = 0;
  for (const auto& layer : layers_)
    for (const auto& r : layer) total += r.size();
  return total;
}

void RecursionTable::save(std::ostream& os) const {
  os << kSnapshotMagic << '\n';
  os << "set " << set_.literal() << '\n';
  os << "bounds " << bounds_.n_max << ' ' << bounds_.s_max << ' ' << bounds_.t_max << '\n';
  for (unsigned n = 0; n <= bounds_.n_max; ++n)
    for (unsigned s = 0; s <= bounds_.s_max; ++s)
      for (unsigned t = 0; t <= bounds_.t_max; ++t)
        for (const auto& [m, v] : row(n, s, t)) os << n << ' ' << s << ' ' << t << ' ' << m << ' ' << v.str() << '\n';
  os << "end\n";
}

RecursionTable RecursionTable::load(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != kSnapshotMagic)
    throw InvalidArgument("not a table snapshot (expected header '" + std::string(kSnapshotMagic) + "')");
  if (!std::getline(is, line) || !line.starts_with("set "))
    throw InvalidArgument("table snapshot: missing set line");
  CoefficientSet set = CoefficientSet::parse(line.substr(4));
  TableBounds bounds;
  {
    if (!std::getline(is, line) || !line.starts_with("bounds "))
      throw InvalidArgument("table snapshot: missing bounds line");
    std::istringstream fields(line.substr(7));
    if (!(fields >> bounds.n_max >> bounds.s_max >> bounds.t_max))
      throw InvalidArgument("table snapshot: malformed bounds");
  }
  RecursionTable table(std::move(set), bounds, false);
  bool terminated = false;
  while (std::getline(is, line)) {
    if (line == "end") {
      terminated = true;
      break;
    }
    std::istringstream fields(line);
    unsigned n, s, t;
    long m;
    std::string value;
    if (!(fields >> n >> s >> t >> m >> value) || n > bounds.n_max || s > bounds.s_max || t > bounds.t_max)
      throw InvalidArgument("table snapshot: malformed entry '" + line + "'");
    Row& r = table.slot(n, s, t);
    if (!r.empty() && r.back().first >= m) throw InvalidArgument("table snapshot: entries out of order");
    r.emplace_back(m, GaussianRational::parse(value));
  }
  if (!terminated) throw InvalidArgument("table snapshot: truncated");
  return table;
}

AverageValue dp_e(const RecursionTable& table, const AverageKey& key) {
  const auto& r = table.row(key.n, key.s, key.t);
  if (!key.in_support()) return {};
  auto it = std::lower_bound(r.begin(), r.end(), key.m, [](const auto& e, long m) { return e.first < m; });
  if (it != r.end() && it->first == key.m) return it->second;
  return {};
}

std::vector<AverageValue> mu_sequence(const RecursionTable& table, unsigned alpha, unsigned n_max) {
  std::vector<AverageValue> out;
  out.reserve(n_max + 1);
  for (unsigned n = 0; n <= n_max; ++n) out.push_back(dp_e(table, {n, alpha, alpha, 0}));
  return out;
}

AverageValue weighted_mu(const RecursionTable& table, unsigned alpha, unsigned n, long m) {
  return dp_e(table, {n, alpha, alpha, m});
}

}  // namespace avgnorm
