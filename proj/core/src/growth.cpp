#include "addcomb/growth.hpp"

#include <algorithm>
#include <cmath>

#include "addcomb/errors.hpp"

namespace addcomb {

BigInt j_count(int k, int m) {
  if (k < 1) throw DomainError("j_count needs k >= 1");
  if (m < 0) throw DomainError("j_count needs m >= 0");
  const auto side = static_cast<std::size_t>(m) + 1;
  // ways[p][q]: tuples so far with positive-part sum p and negative-part sum q.
  std::vector<BigInt> ways(side * side, 0);
  auto at = [side](std::vector<BigInt>& v, std::size_t p, std::size_t q) -> BigInt& { return v[p * side + q]; };
  at(ways, 0, 0) = 1;

  std::vector<BigInt> next(side * side);
  for (int i = 0; i < k; ++i) {
    // x_i = 0 keeps (p, q); x_i > 0 moves p; x_i < 0 moves q. Running prefix
    // sums along each axis collect all the moves in O(m^2).
    for (std::size_t p = 0; p < side; ++p) {
      BigInt along_q = 0;
      for (std::size_t q = 0; q < side; ++q) {
        at(next, p, q) = at(ways, p, q) + along_q;
        along_q += at(ways, p, q);
      }
    }
    for (std::size_t q = 0; q < side; ++q) {
      BigInt along_p = 0;
      for (std::size_t p = 0; p < side; ++p) {
        const BigInt here = at(ways, p, q);
        at(next, p, q) += along_p;
        along_p += here;
      }
    }
    ways.swap(next);
  }
  BigInt total = 0;
  for (std::size_t s = 0; s < side; ++s) total += at(ways, s, s);
  return total;
}

Rational j_bound(int k, int m) {
  if (k < 1) throw DomainError("j_bound needs k >= 1");
  return rational_pow(make_rational(14 * static_cast<std::int64_t>(m), k), static_cast<unsigned>(k));
}

JBoundReport j_bound_report(int k, int m) {
  if (k < 1 || m < k) throw DomainError("j_bound_report needs m >= k >= 1");
  JBoundReport r;
  r.k = k;
  r.m = m;
  r.count = j_count(k, m);
  r.bound = j_bound(k, m);
  r.holds = Rational(r.count) < r.bound;
  return r;
}

GrowthTable growth_table(int k, int m_lo, int m_hi) {
  if (m_lo < 0 || m_hi < m_lo) throw DomainError("growth_table needs 0 <= m_lo <= m_hi");
  GrowthTable t;
  t.k = k;
  for (int m = m_lo; m <= m_hi; ++m) {
    GrowthRow row{m, j_count(k, m), j_bound(k, m)};
    if (m >= 1) {
      const long double c =
          std::exp(log_rational(Rational(row.count)) / k) * static_cast<long double>(k) / m;
      t.empirical_constant = std::max(t.empirical_constant, static_cast<double>(c));
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

}  // namespace addcomb
