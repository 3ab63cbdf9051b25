#include "addcomb/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <numbers>

#include <fftw3.h>

#include "addcomb/covering.hpp"
#include "addcomb/errors.hpp"

namespace addcomb {

namespace {

constexpr std::int64_t kAutoDirectWork = std::int64_t{1} << 22;

void require_finite(const GSet& b, const char* op) {
  if (!b.group().finite()) {
    throw GroupMismatch(std::string(op) + ": integer windows have no finite character group");
  }
}

// Roots of unity e(j/q), j in [0, q).
std::vector<std::complex<double>> root_table(std::int64_t q) {
  std::vector<std::complex<double>> t(static_cast<std::size_t>(q));
  for (std::int64_t j = 0; j < q; ++j) {
    const long double angle = 2.0L * std::numbers::pi_v<long double> * static_cast<long double>(j) / q;
    t[static_cast<std::size_t>(j)] = {static_cast<double>(std::cos(angle)), static_cast<double>(std::sin(angle))};
  }
  return t;
}

// Phase numerator of gamma(x): gamma(x) = e(phase / q).
std::int64_t phase(const GroupSpec& g, Code x, CharacterIndex gamma) {
  if (g.is_cyclic()) return mul_mod(x, gamma, g.modulus());
  const std::int64_t r = g.exponent();
  std::int64_t acc = 0;
  for (int i = 0; i < g.rank(); ++i) {
    acc = (acc + (x % r) * (gamma % r)) % r;
    x /= r;
    gamma /= r;
  }
  return acc;
}

std::int64_t phase_modulus(const GroupSpec& g) { return g.is_cyclic() ? g.modulus() : g.exponent(); }

std::mutex& fftw_planner_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

std::complex<double> fourier_coefficient(const GSet& b, CharacterIndex gamma) {
  require_finite(b, "fourier_coefficient");
  const GroupSpec& g = b.group();
  if (!g.contains(gamma)) throw DomainError("character index outside the dual group");
  const std::int64_t q = phase_modulus(g);
  long double re = 0.0L;
  long double im = 0.0L;
  for (const Code x : b) {
    const long double angle = 2.0L * std::numbers::pi_v<long double> * static_cast<long double>(phase(g, x, gamma)) / q;
    re += std::cos(angle);
    im += std::sin(angle);
  }
  return {static_cast<double>(re), static_cast<double>(im)};
}

std::vector<std::complex<double>> transform_direct(const GSet& b) {
  require_finite(b, "transform_direct");
  const GroupSpec& g = b.group();
  const std::int64_t q = phase_modulus(g);
  const auto roots = root_table(q);
  std::vector<std::complex<double>> out(static_cast<std::size_t>(g.order()));
  for (CharacterIndex c = 0; c < g.order(); ++c) {
    std::complex<double> acc = 0.0;
    for (const Code x : b) acc += roots[static_cast<std::size_t>(phase(g, x, c))];
    out[static_cast<std::size_t>(c)] = acc;
  }
  return out;
}

std::vector<std::complex<double>> transform_fast(const GSet& b) {
  require_finite(b, "transform_fast");
  const GroupSpec& g = b.group();
  const auto n = static_cast<std::size_t>(g.order());
  if (g.order() > (std::int64_t{1} << 30)) throw BudgetExceeded("fast transform size exceeds 2^30");

  fftw_complex* in = fftw_alloc_complex(n);
  fftw_complex* out = fftw_alloc_complex(n);
  if (in == nullptr || out == nullptr) {
    fftw_free(in);
    fftw_free(out);
    throw BudgetExceeded("fast transform allocation failed");
  }
  fftw_plan plan = nullptr;
  {
    std::lock_guard<std::mutex> lock(fftw_planner_mutex());
    if (g.is_cyclic()) {
      plan = fftw_plan_dft_1d(static_cast<int>(n), in, out, FFTW_BACKWARD, FFTW_ESTIMATE);
    } else {
      std::vector<int> dims(static_cast<std::size_t>(g.rank()), static_cast<int>(g.exponent()));
      plan = fftw_plan_dft(g.rank(), dims.data(), in, out, FFTW_BACKWARD, FFTW_ESTIMATE);
    }
  }
  for (std::size_t i = 0; i < n; ++i) in[i][0] = in[i][1] = 0.0;
  for (const Code x : b) in[static_cast<std::size_t>(x)][0] = 1.0;
  // FFTW_BACKWARD computes sum_x in[x] e(+x c / N), matching B^(c). For the
  // product group the row-major layout coincides with the code encoding.
  fftw_execute(plan);

  std::vector<std::complex<double>> result(n);
  for (std::size_t i = 0; i < n; ++i) result[i] = {out[i][0], out[i][1]};
  {
    std::lock_guard<std::mutex> lock(fftw_planner_mutex());
    fftw_destroy_plan(plan);
  }
  fftw_free(in);
  fftw_free(out);
  return result;
}

std::vector<std::pair<CharacterIndex, double>> SpectrumReport::top(std::size_t j) const {
  std::vector<std::pair<CharacterIndex, double>> all;
  all.reserve(magnitudes.size());
  for (std::size_t i = 1; i < magnitudes.size(); ++i) all.emplace_back(static_cast<CharacterIndex>(i), magnitudes[i]);
  const std::size_t keep = std::min(j, all.size());
  std::partial_sort(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(keep), all.end(),
                    [](const auto& x, const auto& y) { return x.second > y.second || (x.second == y.second && x.first < y.first); });
  all.resize(keep);
  return all;
}

SpectrumReport spectrum(const GSet& b, SpectrumMethod method) {
  require_finite(b, "spectrum");
  const GroupSpec& g = b.group();
  SpectrumReport r;
  r.set_size = b.size();
  r.group_order = g.order();
  r.density = make_rational(static_cast<std::int64_t>(b.size()), g.order());

  if (method == SpectrumMethod::kAuto) {
    const Int128 work = static_cast<Int128>(g.order()) * static_cast<Int128>(std::max<std::size_t>(b.size(), 1));
    method = work <= kAutoDirectWork ? SpectrumMethod::kDirect : SpectrumMethod::kFast;
  }
  r.method = method;
  const auto coeffs = method == SpectrumMethod::kDirect ? transform_direct(b) : transform_fast(b);

  r.magnitudes.resize(coeffs.size());
  long double energy = 0.0L;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    r.magnitudes[i] = std::abs(coeffs[i]);
    energy += static_cast<long double>(std::norm(coeffs[i]));
  }
  // The principal coefficient is |B| exactly.
  r.magnitudes[0] = static_cast<double>(b.size());
  r.max_index = 0;
  r.max_magnitude = 0.0;
  for (std::size_t i = 1; i < r.magnitudes.size(); ++i) {
    if (r.max_index == 0 || r.magnitudes[i] > r.max_magnitude) {
      r.max_index = static_cast<CharacterIndex>(i);
      r.max_magnitude = r.magnitudes[i];
    }
  }
  const long double expected = static_cast<long double>(g.order()) * static_cast<long double>(b.size());
  r.parseval_residual = expected == 0.0L ? static_cast<double>(energy) : static_cast<double>(std::fabs(energy - expected) / expected);
  r.eta_achieved = b.empty() ? 0.0 : 1.0 - r.max_magnitude / static_cast<double>(b.size());
  return r;
}

GSet ConvolutionCounts::support() const {
  std::vector<Code> codes;
  codes.reserve(counts.size());
  for (const auto& [x, c] : counts) codes.push_back(x);
  return GSet::from_canonical(group, std::move(codes));
}

BigInt ConvolutionCounts::total() const {
  BigInt t = 0;
  for (const auto& [x, c] : counts) t += c;
  return t;
}

BigInt ConvolutionCounts::sum_of_squares() const {
  BigInt t = 0;
  for (const auto& [x, c] : counts) t += c * c;
  return t;
}

namespace {

// Dense autoconvolution over codes offset by `base`; `add` maps (x, b) to the
// code of x + b.
template <typename Count, typename AddFn>
std::vector<std::pair<Code, BigInt>> autoconvolve(const GSet& b, int order, Code base, std::size_t width, AddFn add) {
  std::vector<Count> cur(width, Count{0});
  std::vector<Count> next(width, Count{0});
  std::vector<Code> support;
  for (const Code x : b) {
    cur[static_cast<std::size_t>(x - base)] = Count{1};
    support.push_back(x);
  }
  for (int step = 1; step < order; ++step) {
    std::vector<Code> grown;
    for (const Code x : support) {
      const Count c = cur[static_cast<std::size_t>(x - base)];
      for (const Code y : b) {
        const Code z = add(x, y);
        Count& slot = next[static_cast<std::size_t>(z - base)];
        if (slot == Count{0}) grown.push_back(z);
        slot += c;
      }
    }
    for (const Code x : support) cur[static_cast<std::size_t>(x - base)] = Count{0};
    std::swap(cur, next);
    support.swap(grown);
  }
  std::sort(support.begin(), support.end());
  std::vector<std::pair<Code, BigInt>> out;
  out.reserve(support.size());
  for (const Code x : support) out.emplace_back(x, BigInt(cur[static_cast<std::size_t>(x - base)]));
  return out;
}

}  // namespace

ConvolutionCounts convolution_counts(const GSet& b, int m, std::size_t budget) {
  if (m < 1) throw DomainError("convolution_counts needs m >= 1");
  ConvolutionCounts result;
  result.order = m + 1;
  result.group = b.group();
  if (b.empty()) return result;

  const GroupSpec& g = b.group();
  Code base = 0;
  std::size_t width = 0;
  if (g.finite()) {
    width = static_cast<std::size_t>(g.order());
  } else {
    const Int128 lo = static_cast<Int128>(b.min()) * result.order;
    const Int128 hi = static_cast<Int128>(b.max()) * result.order;
    if (hi - lo + 1 > static_cast<Int128>(budget)) throw BudgetExceeded("convolution range exceeds budget");
    base = static_cast<Code>(lo);
    width = static_cast<std::size_t>(hi - lo + 1);
    result.group = GroupSpec::window(static_cast<Code>(lo), static_cast<Code>(hi));
  }
  if (width > budget) throw BudgetExceeded("convolution range exceeds budget");

  auto add = [&g](Code x, Code y) { return g.add(x, y); };
  const BigInt total = int_pow(BigInt(b.size()), static_cast<unsigned>(result.order));
  if (total <= BigInt(std::numeric_limits<std::uint64_t>::max())) {
    result.counts = autoconvolve<std::uint64_t>(b, result.order, base, width, add);
  } else {
    result.counts = autoconvolve<BigInt>(b, result.order, base, width, add);
  }
  return result;
}

MomentReport moment_lower_bound_check(const GSet& b, int m, SpectrumMethod method) {
  require_finite(b, "moment_lower_bound_check");
  if (b.empty()) throw DomainError("moment_lower_bound_check needs a nonempty set");
  if (m < 1) throw DomainError("moment_lower_bound_check needs m >= 1");
  MomentReport r;
  r.m = m;
  r.set_size = b.size();
  r.group_order = b.group().order();

  const ConvolutionCounts counts = convolution_counts(b, m);
  r.support_size = counts.support_size();
  r.total = counts.total();
  const BigInt size(b.size());
  r.total_exact = r.total == int_pow(size, static_cast<unsigned>(m + 1));
  r.sum_of_squares = counts.sum_of_squares();

  const BigInt top_power = int_pow(size, static_cast<unsigned>(2 * m + 2));
  r.cauchy_schwarz_holds = r.sum_of_squares * BigInt(r.support_size) >= top_power;
  r.cauchy_schwarz_margin = to_double(Rational(r.sum_of_squares * BigInt(r.support_size), top_power));

  const SpectrumReport spec = spectrum(b, method);
  long double moment = 0.0L;
  for (const double mag : spec.magnitudes) moment += std::pow(static_cast<long double>(mag), 2 * m + 2);
  r.moment_sum = moment;
  const long double expected = static_cast<long double>(r.group_order) * to_long_double(Rational(r.sum_of_squares));
  r.parseval_residual = static_cast<double>(std::fabs(moment - expected) / expected);
  r.parseval_holds = r.parseval_residual <= kSpectralTolerance;

  r.max_nonprincipal = spec.max_magnitude;
  const auto n = static_cast<long double>(b.size());
  const long double lhs = std::pow(static_cast<long double>(spec.max_magnitude), 2 * m);
  const long double rhs = (1.0L / r.support_size - 1.0L / r.group_order) * std::pow(n, 2 * m + 1);
  r.max_power = static_cast<double>(lhs);
  r.max_bound = static_cast<double>(rhs);
  r.max_bound_holds = lhs >= rhs * (1.0L - kSpectralTolerance);
  return r;
}

LargeCoeffParameters eta_largecoeff(const Rational& beta, int k) {
  if (k < 2) throw DomainError("eta_largecoeff needs k >= 2");
  if (beta <= 0 || beta > 1) throw DomainError("density beta must lie in (0, 1]");
  if (beta * Rational(int_pow(BigInt(14), static_cast<unsigned>(k + 1))) > 1) {
    throw DomainError("hypothesis beta <= 14^{-k-1} fails for beta = " + to_string(beta) + ", k = " +
                      std::to_string(k));
  }
  LargeCoeffParameters p;
  p.k = k;
  p.beta = beta;
  const long double log_beta = log_rational(beta);
  const long double kk = k;

  // m = floor(k (2 beta)^{-1/k} / 14), i.e. the largest m with
  // (14 m)^k * 2 beta <= k^k; the float estimate is corrected exactly.
  const BigInt k_power = int_pow(BigInt(k), static_cast<unsigned>(k));
  auto admissible = [&](std::int64_t m) {
    return Rational(int_pow(BigInt(14 * m), static_cast<unsigned>(k))) * 2 * beta <= Rational(k_power);
  };
  std::int64_t m = static_cast<std::int64_t>(
      std::floor(kk * std::exp(-(std::log(2.0L) + log_beta) / kk) / 14.0L));
  while (m > 0 && !admissible(m)) --m;
  while (admissible(m + 1)) ++m;
  p.m = m;

  const long double log_inv = -log_beta;
  p.eta = static_cast<double>(18.0L * std::exp(log_beta / kk) * log_inv / kk);
  p.m_at_least_k = m >= k;
  p.m_lower_bound = static_cast<long double>(m) >= kk * std::exp(-log_beta / kk) / 36.0L;
  const long double root = std::exp(log_beta / (2.0L * m));
  const long double linear = 1.0L - log_inv / (2.0L * m);
  p.beta_root = static_cast<double>(root);
  p.log_term = static_cast<double>(linear);
  p.chain_holds = root > linear && linear >= 1.0L - p.eta;
  return p;
}

double eta_largecoeff2(const Rational& tau, const Rational& doubling, int k_cover) {
  if (tau <= 0 || tau > 1) throw DomainError("density tau must lie in (0, 1]");
  if (doubling < 1) throw DomainError("doubling constant K must be >= 1");
  const Rational two_k_sq = 2 * doubling * doubling;
  if (k_cover < 1 || Rational(k_cover) > two_k_sq - 1) {
    throw DomainError("covering size " + std::to_string(k_cover) + " is outside [1, 2K^2 - 1]");
  }
  bool gate = false;
  if (boost::multiprecision::denominator(two_k_sq) == 1 && two_k_sq <= 100000) {
    const auto e = boost::multiprecision::numerator(two_k_sq).convert_to<unsigned>();
    gate = tau * Rational(int_pow(BigInt(14), e)) <= 1;
  } else {
    gate = log_rational(tau) <= -to_long_double(two_k_sq) * std::log(14.0L);
  }
  if (!gate) throw DomainError("hypothesis tau <= 14^{-2K^2} fails for tau = " + to_string(tau));
  return eta_largecoeff2_log(log_rational(tau), doubling);
}

double eta_largecoeff2_log(long double log_tau, const Rational& doubling) {
  const long double k2 = to_long_double(doubling * doubling);
  return static_cast<double>(9.0L / k2 * std::exp(log_tau / (2.0L * k2)) * -log_tau);
}

LargeCoefficientCertificate certified_large_coefficient(const GSet& b, const GSet& t, SpectrumMethod method) {
  require_finite(b, "certified_large_coefficient");
  if (b.empty() || t.empty()) throw DomainError("certified_large_coefficient needs nonempty B and T");
  if (!is_k_covering(b, t)) throw DomainError("B + B is not inside B + (T - T)");
  LargeCoefficientCertificate c;
  // A k-covering set is (k+1)-covering, so |T| = 1 may be promoted to 2.
  c.k = std::max<int>(2, static_cast<int>(t.size()));
  c.parameters = eta_largecoeff(make_rational(static_cast<std::int64_t>(b.size()), b.group().order()), c.k);
  const SpectrumReport spec = spectrum(b, method);
  c.index = spec.max_index;
  c.magnitude = spec.max_magnitude;
  c.target = (1.0 - c.parameters.eta) * static_cast<double>(b.size());
  c.holds = c.magnitude >= c.target * (1.0 - kSpectralTolerance);
  return c;
}

}  // namespace addcomb
