#include "addcomb/bounds.hpp"

#include <cmath>

#include "addcomb/errors.hpp"
#include "addcomb/fourier.hpp"

namespace addcomb {

namespace {

constexpr unsigned kMaxExactExponent = 4096;

std::optional<unsigned> integer_exponent(const Rational& e) {
  if (boost::multiprecision::denominator(e) != 1 || e > kMaxExactExponent || e < 0) return std::nullopt;
  return boost::multiprecision::numerator(e).convert_to<unsigned>();
}

void check_inputs(const Rational& doubling, int k) {
  if (doubling < 1) throw DomainError("doubling constant K must be >= 1");
  if (k < 2) throw DomainError("order k must be >= 2");
}

// c^{-e} for an exact base and exponent.
std::optional<Rational> inverse_power(const Rational& base, const Rational& exponent) {
  const auto e = integer_exponent(exponent);
  if (!e) return std::nullopt;
  return 1 / rational_pow(base, *e);
}

BoundReport evaluate(long double log_alpha, const Rational& doubling, int k, const Rational* exact_alpha) {
  check_inputs(doubling, k);
  if (!(log_alpha < 0.0L)) throw DomainError("alpha must lie in (0, 1)");
  BoundReport r;
  r.log_alpha = log_alpha;
  r.doubling = doubling;
  r.k = k;

  const Rational k_sq = doubling * doubling;
  const long double kk = to_long_double(k_sq);
  const long double big_k = std::sqrt(kk);
  const Rational base1 = 16 * doubling;
  const Rational base2 = 16 * k * doubling;
  r.log_threshold_thm1 = -12.0L * kk * log_rational(base1);
  r.log_threshold_thm2 = -12.0L * kk * log_rational(base2);
  r.log_model_factor = -r.log_threshold_thm2;

  const auto t1 = exact_alpha ? inverse_power(base1, 12 * k_sq) : std::nullopt;
  const auto t2 = exact_alpha ? inverse_power(base2, 12 * k_sq) : std::nullopt;
  r.gates_exact = t1.has_value() && t2.has_value();
  if (r.gates_exact) {
    r.alpha_within_thm1 = *exact_alpha <= *t1;
    r.alpha_within_thm2 = *exact_alpha <= *t2;
  } else {
    r.alpha_within_thm1 = log_alpha <= r.log_threshold_thm1;
    r.alpha_within_thm2 = log_alpha <= r.log_threshold_thm2;
  }

  r.delta_bound = static_cast<double>(12.0L * std::exp(log_alpha / (4.0L * kk)) * std::sqrt(-log_alpha));
  r.delta_bound_below_third = 3 * r.delta_bound < 1;
  r.delta_bound_below_inverse_k = k * r.delta_bound < 1;

  r.log_tau = log_rational(k_sq) + log_alpha;
  if (exact_alpha && integer_exponent(2 * k_sq)) {
    r.tau_gate = k_sq * *exact_alpha * rational_pow(Rational(14), *integer_exponent(2 * k_sq)) <= 1;
  } else {
    r.tau_gate = r.log_tau <= -2.0L * kk * std::log(14.0L);
  }
  if (r.log_tau < 0.0L) {
    r.eta = eta_largecoeff2_log(r.log_tau, doubling);
    r.delta = static_cast<double>(2.0L * big_k * std::sqrt(static_cast<long double>(r.eta)));
    r.delta_below_third = 3 * r.delta < 1;
    r.delta_below_inverse_k = k * r.delta < 1;
  }
  return r;
}

}  // namespace

BoundReport bound_calculator(const Rational& alpha, const Rational& doubling, int k) {
  if (alpha <= 0 || alpha >= 1) throw DomainError("alpha must lie in (0, 1)");
  return evaluate(log_rational(alpha), doubling, k, &alpha);
}

BoundReport bound_calculator_log(long double log_alpha, const Rational& doubling, int k) {
  return evaluate(log_alpha, doubling, k, nullptr);
}

std::optional<Rational> threshold_thm1(const Rational& doubling) {
  check_inputs(doubling, 2);
  return inverse_power(16 * doubling, 12 * doubling * doubling);
}

std::optional<Rational> threshold_thm2(const Rational& doubling, int k) {
  check_inputs(doubling, k);
  return inverse_power(16 * k * doubling, 12 * doubling * doubling);
}

}  // namespace addcomb
