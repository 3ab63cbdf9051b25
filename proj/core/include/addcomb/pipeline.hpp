#pragma once

#include <cstddef>
#include <optional>

#include "addcomb/bounds.hpp"
#include "addcomb/gset.hpp"
#include "addcomb/rectify.hpp"

namespace addcomb {

// Every quantity of the first rectification theorem for one set A in Z/N
// (N prime). The theorem's gates are evaluated honestly; at desk scale they
// normally fail and the report says so.
struct Theorem1Report {
  std::int64_t modulus = 0;
  std::size_t set_size = 0;
  DoublingRatios ratios;
  Rational doubling;                     // K = min(|2A|, |A-A|) / |A|
  Rational alpha;                        // |A| / N
  std::size_t difference_size = 0;       // |D|, D = A - A
  Rational tau;                          // |D| / N
  std::optional<BoundReport> bounds;     // absent when alpha = 1

  bool alpha_gate = false;               // alpha <= (16K)^{-12K^2}
  bool tau_gate = false;                 // tau <= 14^{-2K^2}
  std::optional<double> eta;             // when tau_gate
  std::optional<double> delta;           // 2K sqrt(eta)
  std::optional<DiamSpectrumReport> lemma_diam;  // when delta < 1/3

  std::int64_t true_diameter = 0;
  double diameter_bound = 0.0;           // 12 alpha^{1/4K^2} sqrt(log 1/alpha) N
  bool diameter_within_bound = false;

  bool gates_passed() const { return alpha_gate && tau_gate; }
  bool violation() const {
    return (gates_passed() && !diameter_within_bound) || (lemma_diam && lemma_diam->hypothesis_met &&
                                                          !lemma_diam->conclusion_holds);
  }
};

Theorem1Report theorem1_pipeline(const GSet& a, std::int64_t diameter_budget = kDefaultDiameterBudget);

}  // namespace addcomb
