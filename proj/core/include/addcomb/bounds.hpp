#pragma once

#include <optional>

#include "addcomb/numeric.hpp"

namespace addcomb {

// Explicit constants of the rectification theorems for density alpha,
// doubling K and order k. Everything is carried as natural logs, since the
// thresholds underflow double precision already for K = 3.
struct BoundReport {
  long double log_alpha = 0.0L;
  Rational doubling;  // K
  int k = 2;

  long double log_threshold_thm1 = 0.0L;  // log (16K)^{-12K^2}
  long double log_threshold_thm2 = 0.0L;  // log (16kK)^{-12K^2}
  long double log_model_factor = 0.0L;    // log (16kK)^{12K^2}, integer model length / |A|
  bool alpha_within_thm1 = false;         // alpha <= threshold (closed)
  bool alpha_within_thm2 = false;
  bool gates_exact = false;               // threshold comparisons done in exact arithmetic

  double delta_bound = 0.0;               // 12 alpha^{1/4K^2} sqrt(log 1/alpha), as a fraction of N
  bool delta_bound_below_third = false;
  bool delta_bound_below_inverse_k = false;

  // Replay: tau = K^2 alpha, eta from the second large-coefficient lemma,
  // delta = 2K sqrt(eta).
  long double log_tau = 0.0L;
  bool tau_gate = false;                  // tau <= 14^{-2K^2}
  double eta = 0.0;
  double delta = 0.0;
  bool delta_below_third = false;
  bool delta_below_inverse_k = false;

  // The replayed implication: below a threshold the chain must deliver the
  // corresponding delta bound.
  bool thm1_chain_holds() const { return !alpha_within_thm1 || (tau_gate && delta_below_third); }
  bool thm2_chain_holds() const { return !alpha_within_thm2 || (tau_gate && delta_below_inverse_k); }
};

// alpha in (0,1), K >= 1, k >= 2. Threshold and tau gates are exact when
// 12K^2 (resp. 2K^2) is an integer.
BoundReport bound_calculator(const Rational& alpha, const Rational& doubling, int k);
BoundReport bound_calculator_log(long double log_alpha, const Rational& doubling, int k);

// (16K)^{-12K^2} and (16kK)^{-12K^2} as exact rationals, when 12K^2 is an
// integer of manageable size.
std::optional<Rational> threshold_thm1(const Rational& doubling);
std::optional<Rational> threshold_thm2(const Rational& doubling, int k);

}  // namespace addcomb
