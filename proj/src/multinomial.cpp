#include "avgnorm/multinomial.hpp"

#include <functional>

#include "avgnorm/error.hpp"
#include "avgnorm/powersum.hpp"

namespace avgnorm {

CompositionStream::CompositionStream(unsigned total, unsigned parts) : total_(total), parts_(parts, 0) {
  if (parts == 0) throw InvalidArgument("composition needs at least one part");
}

bool CompositionStream::next() {
  const std::size_t last = parts_.size() - 1;
  if (!started_) {
    started_ = true;
    parts_[last] = total_;
    return true;
  }
  // rightmost pos < last whose suffix sum(parts_[pos+1..]) is nonzero
  unsigned tail = 0;
  std::size_t pos = last;
  while (pos > 0) {
    tail += parts_[pos];
    --pos;
    if (tail > 0) break;
  }
  if (tail == 0) return false;
  ++parts_[pos];
  for (std::size_t k = pos + 1; k < last; ++k) parts_[k] = 0;
  parts_[last] = tail - 1;
  return true;
}

std::vector<std::vector<unsigned>> enumerate_compositions(unsigned total, unsigned parts) {
  std::vector<std::vector<unsigned>> out;
  CompositionStream stream(total, parts);
  while (stream.next()) out.emplace_back(stream.current().begin(), stream.current().end());
  return out;
}

bool CompositionConstraint::satisfied_by(std::span<const unsigned> k, std::span<const unsigned> l) const {
  if (k.size() != parts || l.size() != parts) return false;
  unsigned long ks = 0, ls = 0;
  long mom = 0;
  for (std::size_t a = 0; a < parts; ++a) {
    ks += k[a];
    ls += l[a];
    mom += static_cast<long>(a) * (static_cast<long>(l[a]) - static_cast<long>(k[a]));
  }
  return ks == k_total && ls == l_total && mom == moment;
}

BigInt composition_pair_count(unsigned n, unsigned s, unsigned t) {
  return binomial(n + s, s) * binomial(n + t, t);
}

namespace {

void check_budget(const AverageKey& key, std::uint64_t budget) {
  const BigInt pairs = composition_pair_count(key.n, key.s, key.t);
  if (pairs > BigInt(std::to_string(budget)))
    throw BudgetExceeded("composition", std::to_string(key.n) + "-degree key needs " + pairs.get_str() +
                                            " composition pairs, over the budget of " + std::to_string(budget) +
                                            "; use --method recursion");
}

// Depth-first walk over (k_a, l_a) position by position, pruning prefixes whose
// moment can no longer reach the target. `leaf` receives complete k, l.
class PairWalker {
 public:
  PairWalker(const AverageKey& key, std::function<void(std::span<const unsigned>, std::span<const unsigned>)> leaf)
      : key_(key), leaf_(std::move(leaf)), k_(key.n + 1), l_(key.n + 1) {}

  void run() {
    if (!key_.in_support()) return;
    walk(0, key_.s, key_.t, 0);
  }

 private:
  void walk(unsigned a, unsigned rs, unsigned rt, long moment) {
    const long n = key_.n;
    const long pos = a;
    if (a == key_.n) {
      if (moment + pos * (static_cast<long>(rt) - static_cast<long>(rs)) != key_.m) return;
      k_[a] = rs;
      l_[a] = rt;
      leaf_(k_, l_);
      return;
    }
    for (unsigned k = 0; k <= rs; ++k)
      for (unsigned l = 0; l <= rt; ++l) {
        const long next = moment + pos * (static_cast<long>(l) - static_cast<long>(k));
        const long ks = rs - k, ls = rt - l;
        const long lo = (pos + 1) * ls - n * ks;
        const long hi = n * ls - (pos + 1) * ks;
        const long need = key_.m - next;
        if (need < lo || need > hi) continue;
        k_[a] = k;
        l_[a] = l;
        walk(a + 1, rs - k, rt - l, next);
      }
  }

  AverageKey key_;
  std::function<void(std::span<const unsigned>, std::span<const unsigned>)> leaf_;
  std::vector<unsigned> k_;
  std::vector<unsigned> l_;
};

}  // namespace

AverageValue multinomial_e(const CoefficientSet& set, const AverageKey& key, const MultinomialOptions& options) {
  check_budget(key, options.budget);
  const std::size_t d = set.size();
  GaussianRational total;

  if (options.j_sum == JSum::factorized) {
    // weight[k][l] = A^{k,l} / (d k! l!); the s! t! factor is applied once at the end.
    const PowerSumCache sums(set);
    std::vector<std::vector<GaussianRational>> weight(key.s + 1, std::vector<GaussianRational>(key.t + 1));
    for (unsigned k = 0; k <= key.s; ++k)
      for (unsigned l = 0; l <= key.t; ++l)
        weight[k][l] = sums(k, l) * GaussianRational(Rational(BigInt(1), factorial(k) * factorial(l) *
                                                                             BigInt(static_cast<unsigned long>(d))));
    PairWalker walker(key, [&](std::span<const unsigned> k, std::span<const unsigned> l) {
      GaussianRational term(1);
      for (std::size_t a = 0; a < k.size() && !term.is_zero(); ++a) term *= weight[k[a]][l[a]];
      total += term;
    });
    walker.run();
    return total * GaussianRational(Rational(factorial(key.s) * factorial(key.t)));
  }

  BigInt tuples = ensemble_size(set, key.n);
  std::vector<std::pair<std::vector<unsigned>, std::vector<unsigned>>> pairs;
  PairWalker collect(key, [&](std::span<const unsigned> k, std::span<const unsigned> l) {
    pairs.emplace_back(std::vector<unsigned>(k.begin(), k.end()), std::vector<unsigned>(l.begin(), l.end()));
  });
  collect.run();
  if (tuples * static_cast<unsigned long>(pairs.size()) > BigInt(std::to_string(options.literal_budget)))
    throw BudgetExceeded("literal", "literal j-sum over " + tuples.get_str() + " tuples is over budget");

  // x^k conj(x)^l per element
  std::vector<std::vector<std::vector<GaussianRational>>> mono(
      d, std::vector<std::vector<GaussianRational>>(key.s + 1, std::vector<GaussianRational>(key.t + 1)));
  for (std::size_t j = 0; j < d; ++j)
    for (unsigned k = 0; k <= key.s; ++k)
      for (unsigned l = 0; l <= key.t; ++l) mono[j][k][l] = set[j].pow(k) * set[j].conj().pow(l);

  std::vector<std::size_t> digits(key.n + 1, 0);
  const std::uint64_t count = tuples.get_ui();
  for (std::uint64_t index = 0; index < count; ++index) {
    for (const auto& [k, l] : pairs) {
      GaussianRational term(Rational(multinomial(key.s, k) * multinomial(key.t, l)));
      for (std::size_t a = 0; a <= key.n; ++a) term *= mono[digits[a]][k[a]][l[a]];
      total += term;
    }
    for (auto& digit : digits) {
      if (++digit < d) break;
      digit = 0;
    }
  }
  return total * GaussianRational(Rational(BigInt(1), tuples));
}

BigInt littlewood_e(const AverageKey& key, const MultinomialOptions& options) {
  check_budget(key, options.budget);
  BigInt total = 0;
  PairWalker walker(key, [&](std::span<const unsigned> k, std::span<const unsigned> l) {
    BigInt sign_product = 1;
    for (std::size_t a = 0; a < k.size(); ++a) {
      // sum over j in {1, 2} of (-1)^(j (k_a + l_a))
      const unsigned e = k[a] + l[a];
      const long per_position = ((e % 2) ? -1 : 1) + 1;
      if (per_position == 0) return;
      sign_product *= per_position;
    }
    total += sign_product * multinomial(key.s, k) * multinomial(key.t, l);
  });
  walker.run();
  // the 1/2^(n+1) normalization cancels the factor 2 per position
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 2, key.n + 1);
  return total / scale;
}

}  // namespace avgnorm
