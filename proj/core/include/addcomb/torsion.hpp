#pragma once

#include <cstddef>
#include <vector>

#include "addcomb/covering.hpp"
#include "addcomb/gset.hpp"
#include "addcomb/numeric.hpp"

namespace addcomb {

// Smallest subgroup containing X, by breadth-first closure under adding the
// elements of X. Throws BudgetExceeded once the closure passes `budget`.
GSet subgroup_generated(const GSet& x, std::size_t budget = std::size_t{1} << 24);

// T for the torsion certificate came from B1 = B2 = A or from B1 = B2 = -A.
enum class TranslateSource { kSum, kDifference };

struct SubgroupCosetCertificate {
  GSet set;                          // A
  std::int64_t exponent = 0;         // r
  Rational k_sum;                    // |2A| / |A|
  Rational k_difference;             // |A-A| / |A|
  std::size_t difference_size = 0;   // |A-A|

  GSet translates;                   // T
  TranslateSource source = TranslateSource::kSum;
  CoveringBoundKind translates_bound = CoveringBoundKind::kGreedyCount;  // witness or fallback
  std::vector<Code> generators;      // t_i - t_1, i >= 2
  std::size_t translate_span_size = 0;  // |gen(T-T)|

  GSet subgroup;                     // gen(A-A)
  Code coset_rep = 0;                // min A
  std::size_t subgroup_size = 0;

  // (a): K^2 r^floor(2K^2-2) |A| with K = |2A|/|A|.
  // (b): K r^floor(2K^2-2) |A| with K = |A-A|/|A|.
  // (b'): |A-A| r^(|T|-1), the form the argument actually produces.
  Rational bound_a;
  Rational bound_b;
  BigInt bound_b_translates;
  Rational bound_a_capped;           // min(bound, |G|)
  Rational bound_b_capped;

  bool subgroup_closed = false;      // contains 0, closed under + and -
  bool contains_a = false;           // A inside coset_rep + subgroup
  bool gen_inclusion = false;        // gen(A-A) inside (A-A) + gen(T-T)
  bool span_bound_holds = false;     // |gen(T-T)| <= r^(|T|-1)
  bool difference_bound_holds = false;  // |gen(A-A)| <= |A-A| r^(|T|-1)
  bool ruzsa_holds = false;          // |A-A| <= K^2 |A| for K = |2A|/|A|
  bool bound_a_holds = false;        // against the uncapped bound
  bool bound_b_holds = false;

  bool verified() const {
    return subgroup_closed && contains_a && gen_inclusion && span_bound_holds && difference_bound_holds &&
           ruzsa_holds && bound_a_holds && bound_b_holds;
  }
};

// Requires a nonempty A in (Z/r)^n. Builds T from covering certificates for
// both B = A and B = -A (keeping the smaller |T|) and checks every inclusion
// by enumeration.
SubgroupCosetCertificate torsion_cover(const GSet& a, std::size_t witness_budget = kDefaultWitnessBudget);

}  // namespace addcomb
