#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "addcomb/fourier.hpp"
#include "addcomb/gset.hpp"
#include "addcomb/numeric.hpp"

namespace addcomb {

inline constexpr std::int64_t kDefaultDiameterBudget = 1'000'000;
inline constexpr std::uint64_t kDefaultIsoBudget = 2'000'000;

// A inside {a, a+d, ..., a+l d} in Z/N with l minimal over units d.
struct DiameterWitness {
  std::int64_t modulus = 1;
  std::int64_t length = 0;    // l = diam A
  std::int64_t dilation = 0;  // d, canonical representative in [1, N/2]
  Code shift = 0;             // a
  GSet normalized;            // d^{-1} (A - a), as integers in [0, l]
  std::int64_t dilations_scanned = 0;
  bool contained = false;     // A inside the progression, checked per element
};

// Exhaustive over d in (Z/N)^x, using diam(dA) = diam(-dA). For each d the
// diameter is N minus the largest circular gap of d^{-1} A. Ties go to the
// smallest d, then the smallest start. Throws BudgetExceeded when N > budget.
DiameterWitness diameter(const GSet& a, std::int64_t budget = kDefaultDiameterBudget);

// A circular interval [start, start + length] of Z/N.
struct CircularInterval {
  Code start = 0;
  std::int64_t length = 0;

  bool contains(Code x, std::int64_t modulus) const { return mod(x - start, modulus) <= length; }
};

struct LevResult {
  bool applicable = false;       // |B^(1)| >= (1 - 8 eps delta^2) |B|
  double coefficient = 0.0;      // |B^(1)|
  double threshold = 0.0;        // (1 - 8 eps delta^2) |B|
  std::int64_t max_length = 0;   // largest l with l < delta N
  CircularInterval interval;     // trimmed to the covered elements
  std::size_t exceptions = 0;    // |B \ interval|
  bool conclusion_holds = false; // exceptions < eps |B| and length < delta N
};

// When the relaxed Lev hypothesis holds, scans every circular window of
// length ceil(delta N) - 1 and keeps the one with the fewest exceptions
// (ties: smallest start). eps in (0,1), delta in (0,1/2).
LevResult lev_interval(const GSet& b, const Rational& eps, const Rational& delta);

struct GapCoverResult {
  bool hypothesis_holds = false;  // |(A-A) \ [b, b+l]| < |A|/2
  std::size_t exceptions = 0;
  CircularInterval interval;      // [a, a+l], a = element after the longest gap
  bool conclusion_holds = false;  // A inside interval (checked)
};

// Requires 3l < N.
GapCoverResult gap_cover(const GSet& a, Code b, std::int64_t l);

struct DiamSpectrumReport {
  bool hypothesis_met = false;    // some r != 0 with |D^(r)| >= |D| - 4 delta^2 |A|
  CharacterIndex frequency = 0;   // r achieving the largest |D^(r)|
  double coefficient = 0.0;
  double threshold = 0.0;
  LevResult lev;                  // on rD, eps = |A| / 2|D|
  GapCoverResult cover;           // on rA
  std::int64_t chain_length = 0;  // length of the interval found for rA
  std::int64_t true_diameter = 0;
  bool conclusion_holds = false;  // chain verified and diam A < delta N
};

// Requires N prime and delta in (0, 1/3). When the hypothesis is not met the
// report says so and nothing else is asserted.
DiamSpectrumReport diam_from_spectrum(const GSet& a, const Rational& delta);

struct IsoCheck {
  bool is_isomorphism = false;
  std::uint64_t multisets = 0;
  // On failure: two index multisets (into the domain's element order) whose
  // sums agree on one side only.
  std::vector<std::size_t> first;
  std::vector<std::size_t> second;
};

// f maps domain[i] to images[i] (codes in `codomain`). True iff for all
// k-element multisets, equal sums in the domain correspond exactly to equal
// sums of the images. Throws DomainError if f is not injective and
// BudgetExceeded when C(|A|+k-1, k) > budget.
IsoCheck freiman_iso_check(const GSet& domain, const GroupSpec& codomain, std::span<const Code> images, int k,
                           std::uint64_t budget = kDefaultIsoBudget);

struct RectificationWitness {
  int k = 0;
  std::int64_t modulus = 0;
  std::int64_t dilation = 0;  // lambda = d^{-1}: F = lambda (A - shift) mod N, lifted to [0, l]
  Code shift = 0;
  std::int64_t length = 0;
  GSet image;                 // F, an integer set in [0, l]
  std::vector<Code> images;   // image of the i-th element of A
  bool verified = false;
  bool certification_skipped = false;
};

struct RectifyResult {
  bool success = false;       // k l < N
  DiameterWitness diameter;
  std::optional<RectificationWitness> witness;
};

// Requires N prime. Fails (success = false) when k * diam A >= N.
RectifyResult rectify(const GSet& a, int k, std::uint64_t iso_budget = kDefaultIsoBudget);

struct ModelRound {
  std::int64_t bound_before = 0;  // L = max A
  std::int64_t prime = 0;         // smallest prime in (kL, 2kL]
  std::int64_t diameter = 0;      // l; the new set lies in [1, l+1]
  std::int64_t dilation = 0;
  Code shift = 0;
  bool certified = false;
  bool certification_skipped = false;
};

// Local improvement only: the result bounds the shortest F_k-isomorphic
// model from above.
struct IntegerModel {
  int k = 0;
  GSet original;
  GSet model;                  // inside [1, max]
  std::vector<Code> images;    // image of the i-th element of `original`
  std::vector<ModelRound> rounds;
  bool composite_certified = false;
  bool certification_skipped = false;
};

IntegerModel minimal_integer_model(const GSet& a, int k, int rounds = 16,
                                   std::int64_t diameter_budget = kDefaultDiameterBudget,
                                   std::uint64_t iso_budget = kDefaultIsoBudget);

}  // namespace addcomb
