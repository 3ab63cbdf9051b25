#pragma once

#include <vector>

#include "addcomb/numeric.hpp"

namespace addcomb {

// Number of integer k-tuples (x_1..x_k) whose positive parts and negative
// parts have equal sums, both at most m. Counts the representations
// sum x_i t_i of elements of m(T - T) for |T| = k.
BigInt j_count(int k, int m);

// (14m/k)^k, exact.
Rational j_bound(int k, int m);

struct JBoundReport {
  int k = 0;
  int m = 0;
  BigInt count;
  Rational bound;
  bool holds = false;  // count < bound
};

// Requires m >= k >= 1.
JBoundReport j_bound_report(int k, int m);

struct GrowthRow {
  int m = 0;
  BigInt count;
  Rational bound;
};

struct GrowthTable {
  int k = 0;
  std::vector<GrowthRow> rows;
  // max over rows with m >= 1 of J(k,m)^(1/k) * k / m: the smallest constant
  // C for which J(k,m) <= (Cm/k)^k on the tabulated range.
  double empirical_constant = 0.0;
};

GrowthTable growth_table(int k, int m_lo, int m_hi);

}  // namespace addcomb
