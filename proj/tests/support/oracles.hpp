#pragma once

// Brute-force reference implementations. Deliberately naive: plain vectors,
// std::set, nested loops. Nothing here calls into the library.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using Vec = std::vector<std::int64_t>;

inline std::int64_t md(std::int64_t x, std::int64_t n) {
  x %= n;
  return x < 0 ? x + n : x;
}

inline Vec sorted_unique(std::set<std::int64_t> s) { return Vec(s.begin(), s.end()); }

inline Vec sumset_mod(const Vec& a, const Vec& b, std::int64_t n) {
  std::set<std::int64_t> s;
  for (auto x : a)
    for (auto y : b) s.insert(md(x + y, n));
  return sorted_unique(s);
}

inline Vec diffset_mod(const Vec& a, const Vec& b, std::int64_t n) {
  std::set<std::int64_t> s;
  for (auto x : a)
    for (auto y : b) s.insert(md(x - y, n));
  return sorted_unique(s);
}

inline Vec sumset_int(const Vec& a, const Vec& b) {
  std::set<std::int64_t> s;
  for (auto x : a)
    for (auto y : b) s.insert(x + y);
  return sorted_unique(s);
}

inline bool subset(const Vec& a, const Vec& b) {
  std::set<std::int64_t> s(b.begin(), b.end());
  for (auto x : a)
    if (!s.count(x)) return false;
  return true;
}

// Number of k-tuples in [-m, m]^k whose positive and negative parts have
// equal sums, both at most m.
inline std::int64_t j_brute(int k, int m) {
  std::int64_t count = 0;
  std::vector<int> t(k, -m);
  while (true) {
    int pos = 0, neg = 0;
    for (int x : t) (x > 0 ? pos : neg) += std::abs(x);
    if (pos == neg && pos <= m) ++count;
    int i = 0;
    while (i < k && t[i] == m) t[i++] = -m;
    if (i == k) break;
    ++t[i];
  }
  return count;
}

inline std::int64_t gcd(std::int64_t a, std::int64_t b) {
  while (b) {
    a %= b;
    std::swap(a, b);
  }
  return a < 0 ? -a : a;
}

inline std::int64_t inverse(std::int64_t a, std::int64_t n) {
  for (std::int64_t x = 1; x < n; ++x)
    if (md(a * x, n) == 1) return x;
  return 0;
}

// min over units d and shifts a of the smallest l with
// A inside {a, a+d, ..., a+ld}.
inline std::int64_t diameter_brute(const Vec& a, std::int64_t n) {
  if (n == 1) return 0;
  std::int64_t best = n;
  for (std::int64_t d = 1; d < n; ++d) {
    if (gcd(d, n) != 1) continue;
    std::int64_t inv = inverse(d, n);
    for (std::int64_t s = 0; s < n; ++s) {
      std::int64_t l = 0;
      for (auto x : a) l = std::max(l, md((x - s) * inv, n));
      best = std::min(best, l);
    }
  }
  return best;
}

inline std::complex<double> coefficient(const Vec& b, std::int64_t r, std::int64_t n) {
  std::complex<double> s = 0;
  for (auto x : b) {
    double angle = 2.0 * std::numbers::pi * static_cast<double>(md(x * r, n)) / static_cast<double>(n);
    s += std::complex<double>(std::cos(angle), std::sin(angle));
  }
  return s;
}

// r_{m+1}(x) by enumerating every (m+1)-tuple.
inline std::map<std::int64_t, std::int64_t> convolution_brute(const Vec& b, int m, std::int64_t n) {
  std::map<std::int64_t, std::int64_t> r;
  std::vector<std::size_t> idx(m + 1, 0);
  while (true) {
    std::int64_t s = 0;
    for (auto i : idx) s += b[i];
    ++r[md(s, n)];
    std::size_t i = 0;
    while (i < idx.size() && idx[i] + 1 == b.size()) idx[i++] = 0;
    if (i == idx.size()) break;
    ++idx[i];
  }
  return r;
}

// Freiman test over all pairs of ordered k-tuples. `dom` / `img`
// fold a tuple of indices into a comparable sum.
inline bool freiman_brute(std::size_t size, int k, const std::function<std::int64_t(const std::vector<std::size_t>&)>& dom,
                          const std::function<std::int64_t(const std::vector<std::size_t>&)>& img) {
  std::vector<std::vector<std::size_t>> tuples;
  std::vector<std::size_t> t(k, 0);
  while (true) {
    tuples.push_back(t);
    int i = 0;
    while (i < k && t[i] + 1 == size) t[i++] = 0;
    if (i == k) break;
    ++t[i];
  }
  std::vector<std::int64_t> ds, is;
  for (const auto& u : tuples) {
    ds.push_back(dom(u));
    is.push_back(img(u));
  }
  for (std::size_t p = 0; p < tuples.size(); ++p)
    for (std::size_t q = p + 1; q < tuples.size(); ++q)
      if ((ds[p] == ds[q]) != (is[p] == is[q])) return false;
  return true;
}

// Span of X in (Z/r)^n as all combinations sum c_i x_i with 0 <= c_i < r.
// Elements are coordinate vectors.
inline std::set<std::vector<std::int64_t>> span_brute(const std::vector<std::vector<std::int64_t>>& x, std::int64_t r,
                                                      int n) {
  std::set<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> c(x.size(), 0);
  while (true) {
    std::vector<std::int64_t> v(n, 0);
    for (std::size_t i = 0; i < x.size(); ++i)
      for (int j = 0; j < n; ++j) v[j] = md(v[j] + c[i] * x[i][j], r);
    out.insert(v);
    std::size_t i = 0;
    while (i < c.size() && c[i] + 1 == r) c[i++] = 0;
    if (i == c.size()) break;
    ++c[i];
  }
  return out;
}

// Every subset of {0..n-1} with 1 <= size <= max_size, in increasing
// lexicographic order per size.
inline void for_each_subset(std::int64_t n, int max_size, const std::function<void(const Vec&)>& f) {
  for (int size = 1; size <= max_size && size <= n; ++size) {
    Vec s(size);
    for (int i = 0; i < size; ++i) s[i] = i;
    while (true) {
      f(s);
      int i = size - 1;
      while (i >= 0 && s[i] == n - size + i) --i;
      if (i < 0) break;
      ++s[i];
      for (int j = i + 1; j < size; ++j) s[j] = s[j - 1] + 1;
    }
  }
}

inline Vec random_subset(std::mt19937_64& rng, std::int64_t n, std::size_t size) {
  std::set<std::int64_t> s;
  std::uniform_int_distribution<std::int64_t> pick(0, n - 1);
  size = std::min<std::size_t>(size, static_cast<std::size_t>(n));
  while (s.size() < size) s.insert(pick(rng));
  return sorted_unique(s);
}

}  // namespace oracle
