#pragma once

#include <cstddef>
#include <optional>

#include "addcomb/gset.hpp"
#include "addcomb/numeric.hpp"

namespace addcomb {

// Largest |A| for which the exhaustive Pluennecke witness search runs.
inline constexpr std::size_t kDefaultWitnessBudget = 18;

// Greedy translate selection. Picks t_1, t_2, ... from `candidates` while
// some candidate t still adds at least |base|/2 new points to the union of
// base + t_i, taking the one adding the most (ties: smallest element). On
// return every candidate u leaves fewer than |base|/2 points of base + u
// uncovered.
GSet greedy_translates(const GSet& base, const GSet& candidates);

// Every u in `candidates` has |(base+u) \ U(base+t)| < |base|/2.
bool greedy_maximality_holds(const GSet& base, const GSet& candidates, const GSet& translates);

struct PluenneckeWitness {
  GSet subset;                 // A' (nonempty, subset of A)
  std::size_t sumset_size = 0; // |A' + B1 + B2|
  Rational ratio;              // |A' + B1 + B2| / |A'|
  Rational k1;                 // |A + B1| / |A|
  Rational k2;                 // |A + B2| / |A|
  bool within_bound = false;   // ratio <= k1 * k2
  std::size_t subsets_examined = 0;
};

// Exhaustive minimisation of |A'+B1+B2|/|A'| over nonempty A' in A. Subsets
// are visited by decreasing size, then lexicographically; the first subset
// reaching the minimum wins. Throws BudgetExceeded when |A| > budget.
PluenneckeWitness pluennecke_witness(const GSet& a, const GSet& b1, const GSet& b2,
                                     std::size_t budget = kDefaultWitnessBudget);

enum class CoveringBoundKind {
  kPluennecke,  // |T| <= floor(2 K1 K2 - 1), A' from the witness search
  kGreedyCount, // |T| <= floor(2 |A+B1+B2|/|A| - 1), A' = A
};

struct CoveringCertificate {
  GSet base;        // A
  GSet b1;
  GSet b2;
  GSet witness;     // A'
  GSet translates;  // T, subset of B1 + B2
  CoveringBoundKind bound_kind = CoveringBoundKind::kGreedyCount;
  Rational k1;
  Rational k2;
  std::size_t witness_sumset_size = 0;  // |A' + B1 + B2|
  Rational witness_ratio;
  BigInt size_bound;                    // bound certified for |T| (see bound_kind)
  BigInt greedy_bound;                  // floor(2 |A'+B1+B2|/|A'| - 1)
  std::size_t lhs_size = 0;             // |B1 - B1 + B2 - B2|
  std::size_t rhs_size = 0;             // |A - A + T - T|
  bool translates_in_sumset = false;
  bool witness_in_base = false;
  bool greedy_maximal = false;
  bool inclusion_verified = false;      // B1-B1+B2-B2 inside A-A+T-T
  bool size_bound_holds = false;
  int m_checked = 0;                    // largest m with (m+1)(A-A) in A-A+m(T-T), 0 if unchecked

  bool verified() const {
    return translates_in_sumset && witness_in_base && greedy_maximal && inclusion_verified && size_bound_holds;
  }
};

// Builds T from the greedy selection on A' (the Pluennecke witness when
// use_witness and |A| <= witness_budget, otherwise A itself) against
// B1 + B2, then checks every claimed inclusion by exhaustive membership.
// Throws VerificationError if an inclusion or the size bound fails.
CoveringCertificate covering_certificate(const GSet& a, const GSet& b1, const GSet& b2, bool use_witness,
                                         std::size_t witness_budget = kDefaultWitnessBudget);

// Largest m <= m_max such that (j+1)(A-A) is inside A-A+j(T-T) for all
// j = 1..m.
int verify_incm(const GSet& a, const GSet& t, int m_max);

// B + B inside B + (T - T).
bool is_k_covering(const GSet& b, const GSet& t);

// Smallest T (0 in T, remaining elements drawn from (B+B)-B, lexicographic
// first at the minimal size) making B |T|-covering, or nullopt when none
// exists with |T| <= max_k. Throws BudgetExceeded beyond `budget` trials.
std::optional<GSet> find_covering_translates(const GSet& b, int max_k, std::size_t budget = 2'000'000);

struct GrowthBoundReport {
  int m = 0;
  int k = 0;                          // |T|
  std::size_t base_size = 0;          // |B|
  std::size_t iterated_size = 0;      // |(m+1)B|
  std::size_t difference_span = 0;    // |m(T-T)|
  BigInt j_value;                     // J(k, m)
  bool span_within_j = false;         // |m(T-T)| <= J(k,m)
  bool estjcov_holds = false;         // |(m+1)B| <= |B| J(k,m)
  bool estecov_applicable = false;    // m >= k
  Rational estecov_bound;             // (14m/k)^k |B|
  bool estecov_holds = false;         // |(m+1)B| < (14m/k)^k |B| (true when not applicable)

  bool holds() const { return span_within_j && estjcov_holds && estecov_holds; }
};

// Requires is_k_covering(b, t); throws DomainError otherwise.
GrowthBoundReport growth_bound_check(const GSet& b, const GSet& t, int m);

}  // namespace addcomb
