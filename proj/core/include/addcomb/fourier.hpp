#pragma once

#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

#include "addcomb/gset.hpp"
#include "addcomb/numeric.hpp"

namespace addcomb {

// Characters of Z/N and (Z/r)^n are indexed like the group elements: the
// character with index c is x -> e(c x / N), resp. x -> e(sum c_i x_i / r).
// Index 0 is the principal character.
using CharacterIndex = Code;

enum class SpectrumMethod { kAuto, kDirect, kFast };

// Relative tolerance on floating-point identities (Parseval and friends).
inline constexpr double kSpectralTolerance = 1e-9;

// Single coefficient B^(gamma) = sum_{b in B} gamma(b), by direct summation.
std::complex<double> fourier_coefficient(const GSet& b, CharacterIndex gamma);

// All coefficients, indexed by character code.
std::vector<std::complex<double>> transform_direct(const GSet& b);
std::vector<std::complex<double>> transform_fast(const GSet& b);

struct SpectrumReport {
  std::size_t set_size = 0;
  std::int64_t group_order = 0;
  Rational density;                  // |B| / |G|
  std::vector<double> magnitudes;    // |B^(gamma)| by character index
  CharacterIndex max_index = 0;      // argmax over nonprincipal characters (smallest index on ties)
  double max_magnitude = 0.0;
  double eta_achieved = 0.0;         // 1 - max / |B|
  double parseval_residual = 0.0;    // |sum |B^|^2 - N|B|| / (N|B|)
  SpectrumMethod method = SpectrumMethod::kDirect;

  // The j largest nonprincipal magnitudes, largest first (ties: smaller index).
  std::vector<std::pair<CharacterIndex, double>> top(std::size_t j) const;
};

// Integer windows are rejected: Z has no finite character group.
SpectrumReport spectrum(const GSet& b, SpectrumMethod method = SpectrumMethod::kAuto);

// r_{m+1}(x): number of (m+1)-tuples from B summing to x, restricted to its
// support (the iterated sumset (m+1)B), sorted by code.
struct ConvolutionCounts {
  int order = 0;  // m + 1
  GroupSpec group = GroupSpec::cyclic(1);
  std::vector<std::pair<Code, BigInt>> counts;

  std::size_t support_size() const { return counts.size(); }
  GSet support() const;
  BigInt total() const;
  BigInt sum_of_squares() const;
};

ConvolutionCounts convolution_counts(const GSet& b, int m, std::size_t budget = std::size_t{1} << 24);

// Replays the high-moment argument for a large nonprincipal coefficient:
//   sum_x r^2 >= |B|^{2m+2} / R                          (exact)
//   sum_gamma |B^|^{2m+2} = N sum_x r^2                  (relative tolerance)
//   max_{gamma != 0} |B^|^{2m} >= (1/R - 1/N) |B|^{2m+1} (relative tolerance)
struct MomentReport {
  int m = 0;
  std::size_t set_size = 0;
  std::int64_t group_order = 0;
  std::size_t support_size = 0;       // R = |(m+1)B|
  BigInt total;                       // sum_x r_{m+1}(x)
  bool total_exact = false;           // == |B|^{m+1}
  BigInt sum_of_squares;
  bool cauchy_schwarz_holds = false;
  double cauchy_schwarz_margin = 0.0; // R sum r^2 / |B|^{2m+2}, >= 1
  long double moment_sum = 0.0L;      // sum_gamma |B^(gamma)|^{2m+2}
  double parseval_residual = 0.0;
  bool parseval_holds = false;
  double max_nonprincipal = 0.0;
  double max_power = 0.0;             // max^{2m}
  double max_bound = 0.0;             // (1/R - 1/N) |B|^{2m+1}
  bool max_bound_holds = false;

  bool holds() const { return total_exact && cauchy_schwarz_holds && parseval_holds && max_bound_holds; }
};

MomentReport moment_lower_bound_check(const GSet& b, int m, SpectrumMethod method = SpectrumMethod::kAuto);

// Parameters of the large-coefficient lemma for a k-covering set of density
// beta <= 14^{-k-1}: the moment order m = floor(k (2 beta)^{-1/k} / 14) and
// eta = 18 beta^{1/k} log(1/beta) / k.
struct LargeCoeffParameters {
  int k = 0;
  Rational beta;
  std::int64_t m = 0;
  double eta = 0.0;
  bool m_at_least_k = false;       // m >= k
  bool m_lower_bound = false;      // m >= k beta^{-1/k} / 36
  double beta_root = 0.0;          // beta^{1/2m}
  double log_term = 0.0;           // 1 - log(1/beta) / 2m
  bool chain_holds = false;        // beta_root > log_term >= 1 - eta
};

// Throws DomainError when beta > 14^{-k-1} or k < 2.
LargeCoeffParameters eta_largecoeff(const Rational& beta, int k);

// eta = 9 K^{-2} tau^{1/(2K^2)} log(1/tau), requiring tau <= 14^{-2K^2} and
// 1 <= k_cover <= 2K^2 - 1.
double eta_largecoeff2(const Rational& tau, const Rational& doubling, int k_cover);

// The same formula from log(tau), without the hypothesis gate; for densities
// below the range of a practical rational.
double eta_largecoeff2_log(long double log_tau, const Rational& doubling);

struct LargeCoefficientCertificate {
  int k = 0;                   // max(|T|, 2)
  LargeCoeffParameters parameters;
  CharacterIndex index = 0;
  double magnitude = 0.0;      // true max nonprincipal |B^|
  double target = 0.0;         // (1 - eta) |B|
  bool holds = false;
};

// Requires B + B inside B + (T - T) and |B|/|G| <= 14^{-k-1}.
LargeCoefficientCertificate certified_large_coefficient(const GSet& b, const GSet& t,
                                                        SpectrumMethod method = SpectrumMethod::kAuto);

}  // namespace addcomb
