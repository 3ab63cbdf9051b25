#include "addcomb/pipeline.hpp"

#include <cmath>

#include "addcomb/errors.hpp"
#include "addcomb/fourier.hpp"

namespace addcomb {

Theorem1Report theorem1_pipeline(const GSet& a, std::int64_t diameter_budget) {
  if (!a.group().is_cyclic()) throw GroupMismatch("theorem1_pipeline needs a cyclic group Z/N");
  if (a.empty()) throw DomainError("theorem1_pipeline needs a nonempty set");
  const std::int64_t n = a.group().modulus();
  if (!is_prime(static_cast<std::uint64_t>(n))) throw DomainError("theorem1_pipeline needs N prime");

  Theorem1Report r;
  r.modulus = n;
  r.set_size = a.size();
  r.ratios = doubling_ratio(a);
  r.doubling = r.ratios.min;
  r.alpha = make_rational(static_cast<std::int64_t>(a.size()), n);
  r.difference_size = r.ratios.difference_size;
  r.tau = make_rational(static_cast<std::int64_t>(r.difference_size), n);
  r.true_diameter = diameter(a, diameter_budget).length;

  if (r.alpha < 1) {
    r.bounds = bound_calculator(r.alpha, r.doubling, 2);
    r.alpha_gate = r.bounds->alpha_within_thm1;
    r.diameter_bound = r.bounds->delta_bound * static_cast<double>(n);
  }
  r.diameter_within_bound = static_cast<double>(r.true_diameter) <= r.diameter_bound;

  if (r.tau < 1) {
    try {
      r.eta = eta_largecoeff2(r.tau, r.doubling, 1);
      r.tau_gate = true;
    } catch (const DomainError&) {
      r.tau_gate = false;
    }
  }
  if (r.eta) {
    r.delta = 2.0 * std::sqrt(to_double(r.doubling * r.doubling) * *r.eta);
    if (*r.delta > 0 && 3 * *r.delta < 1) r.lemma_diam = diam_from_spectrum(a, Rational(*r.delta));
  }
  return r;
}

}  // namespace addcomb
