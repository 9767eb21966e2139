#pragma once

// Brute-force reference for e_T(n, s, t, m), written against raw mpq_class so
// that it shares nothing with the library's number types or Laurent engine.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace naive {

struct C {
  mpq_class re, im;
};

inline C mul(const C& a, const C& b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
inline C add(const C& a, const C& b) { return {a.re + b.re, a.im + b.im}; }

using Series = std::map<long, C>;  // exponent -> coefficient

inline Series times(const Series& a, const Series& b) {
  Series out;
  for (const auto& [i, x] : a)
    for (const auto& [j, y] : b) {
      auto& slot = out[i + j];
      slot = add(slot, mul(x, y));
    }
  return out;
}

// e_T(n,s,t,m): mean over T^(n+1) of [z^0] z^m p(z)^s conj(p)(1/z)^t
inline C average(const std::vector<C>& set, unsigned n, unsigned s, unsigned t, long m) {
  const std::size_t d = set.size();
  std::vector<std::size_t> idx(n + 1, 0);
  C total{0, 0};
  mpq_class count = 0;
  while (true) {
    Series p, q;
    for (unsigned k = 0; k <= n; ++k) {
      p[k] = set[idx[k]];
      q[-static_cast<long>(k)] = {set[idx[k]].re, -set[idx[k]].im};
    }
    Series prod{{0, C{1, 0}}};
    for (unsigned i = 0; i < s; ++i) prod = times(prod, p);
    for (unsigned i = 0; i < t; ++i) prod = times(prod, q);
    auto it = prod.find(-m);
    if (it != prod.end()) total = add(total, it->second);
    count += 1;
    std::size_t k = 0;
    while (k <= n && ++idx[k] == d) idx[k++] = 0;
    if (k > n) break;
  }
  total.re /= count;
  total.im /= count;
  total.re.canonicalize();
  total.im.canonicalize();
  return total;
}

// "a", "a+bi" style, for comparisons with GaussianRational::str()
inline std::string text(const C& c) {
  auto part = [](const mpq_class& q) { return q.get_str(); };
  if (c.im == 0) return part(c.re);
  std::string im;
  if (c.im == 1)
    im = "i";
  else if (c.im == -1)
    im = "-i";
  else
    im = part(c.im) + "i";
  if (c.re == 0) return im;
  return part(c.re) + (c.im > 0 ? "+" : "") + im;
}

inline std::vector<C> littlewood() { return {{-1, 0}, {1, 0}}; }
inline std::vector<C> height1() { return {{-1, 0}, {0, 0}, {1, 0}}; }
inline std::vector<C> zero_one() { return {{0, 0}, {1, 0}}; }
inline std::vector<C> zero_i() { return {{0, 0}, {0, 1}}; }
inline std::vector<C> one_two() { return {{1, 0}, {2, 0}}; }
inline std::vector<C> halves_i() { return {{mpq_class(1, 2), 0}, {mpq_class(-1, 2), 0}, {0, 1}}; }

}  // namespace naive
