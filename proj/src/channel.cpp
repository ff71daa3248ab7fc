#include "leocache/channel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "leocache/error.hpp"

namespace leocache {

namespace {

constexpr double kSeriesTolerance = 1e-15;
constexpr double kQuantileTolerance = 1e-9;
constexpr std::size_t kSampleChunk = 1 << 16;

double poisson_pmf(long k, double mean) {
  if (mean == 0.0) return k == 0 ? 1.0 : 0.0;
  const double kd = static_cast<double>(k);
  return std::exp(-mean + kd * std::log(mean) - std::lgamma(kd + 1.0));
}

// Regularized lower incomplete gamma P(a, y) for integer a >= 1, which equals
// P[Poisson(y) >= a].
double gamma_p_integer(long a, double y) {
  if (y <= 0.0) return 0.0;
  const double ad = static_cast<double>(a);
  if (ad > y) {
    // P(a, y) = y^a e^-y / a! * sum_n y^n / ((a+1)...(a+n))
    double term = 1.0;
    double sum = 1.0;
    for (int n = 1; n < kNcx2MaxTerms; ++n) {
      term *= y / (ad + n);
      sum += term;
      if (term < sum * 1e-17) break;
    }
    return std::min(1.0, poisson_pmf(a, y) * sum);
  }
  // Q(a, y) = sum_{m < a} Poisson(m; y); terms shrink as m walks down from a-1.
  double q = 0.0;
  for (long m = a - 1; m >= 0; --m) {
    const double term = poisson_pmf(m, y);
    q += term;
    if (term < q * 1e-17) break;
  }
  return std::clamp(1.0 - q, 0.0, 1.0);
}

void fill_chunk(const ChannelParams& params, std::uint64_t seed, std::size_t chunk,
                std::vector<double>& out) {
  const std::size_t begin = chunk * kSampleChunk;
  const std::size_t end = std::min(out.size(), begin + kSampleChunk);
  Rng rng(mix_seed(seed, chunk));
  for (std::size_t i = begin; i < end; ++i) out[i] = sample_gain(params, rng).value;
}

}  // namespace

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::vector<std::string> validate(const ChannelParams& p) {
  if (!(p.noncentrality >= 0.0)) throw ConfigError("channel noncentrality must be >= 0");
  if (!(p.scale > 0.0)) throw ConfigError("channel mean gain must be > 0");
  if (!(p.noise_power > 0.0)) throw ConfigError("channel noise power must be > 0");
  if (!(p.outage_eps > 0.0 && p.outage_eps <= 0.5)) {
    throw ConfigError("outage probability must lie in (0, 0.5]");
  }
  if (!(p.atmo_loss_db >= 0.0 && p.atmo_loss_db <= 40.0)) {
    throw ConfigError("atmospheric loss must lie in [0, 40] dB");
  }
  std::vector<std::string> warnings;
  if (p.shadowing_sigma_db) {
    if (!(*p.shadowing_sigma_db > 0.0)) throw ConfigError("shadowing sigma must be > 0 dB");
    if (*p.shadowing_sigma_db < 5.0 || *p.shadowing_sigma_db > 20.0) {
      warnings.push_back("shadowing sigma " + std::to_string(*p.shadowing_sigma_db) +
                         " dB outside the typical LEO fading range [5, 20] dB");
    }
  }
  if (p.atmo_loss_db != 0.0 && p.atmo_loss_db < 5.0) {
    warnings.push_back("atmospheric loss " + std::to_string(p.atmo_loss_db) +
                       " dB outside the typical LEO range [5, 40] dB");
  }
  return warnings;
}

double atmospheric_factor(const ChannelParams& params) {
  return std::pow(10.0, -params.atmo_loss_db / 10.0);
}

double ncx2_cdf(double x, double noncentrality) {
  if (!(x > 0.0)) return 0.0;
  if (std::isinf(x)) return 1.0;
  const double y = 0.5 * x;
  const double mu = 0.5 * noncentrality;
  if (mu == 0.0) return -std::expm1(-y);

  // CDF = sum_j Poisson(j; mu) * P(j + 1, y)
  const long mode = static_cast<long>(std::floor(mu));
  const double p_mode = gamma_p_integer(mode + 1, y);
  double sum = poisson_pmf(mode, mu) * p_mode;

  double p = p_mode;
  for (long j = mode + 1; j < mode + kNcx2MaxTerms; ++j) {
    p = std::max(0.0, p - poisson_pmf(j, y));
    const double term = poisson_pmf(j, mu) * p;
    sum += term;
    if (term < kSeriesTolerance) break;
  }
  p = p_mode;
  for (long j = mode - 1; j >= 0 && mode - j < kNcx2MaxTerms; --j) {
    p = std::min(1.0, p + poisson_pmf(j + 1, y));
    const double weight = poisson_pmf(j, mu);
    sum += weight * p;
    if (weight < kSeriesTolerance) break;
  }
  return std::clamp(sum, 0.0, 1.0);
}

double gain_quantile(const ChannelParams& params, double eps) {
  if (!(eps > 0.0 && eps < 1.0)) throw NumericError("quantile probability must lie in (0, 1)");
  const double nc = params.noncentrality;
  double lo = 0.0;
  double hi = std::max(1.0, 2.0 + nc);
  int guard = 0;
  while (ncx2_cdf(hi, nc) < eps) {
    lo = hi;
    hi *= 2.0;
    if (++guard > 1000) throw NumericError("gain quantile bracket did not close");
  }
  double x = 0.5 * (lo + hi);
  bool converged = false;
  for (int it = 0; it < kQuantileMaxIterations; ++it) {
    x = 0.5 * (lo + hi);
    const double c = ncx2_cdf(x, nc);
    if (std::abs(c - eps) <= kQuantileTolerance || x == lo || x == hi) {
      converged = true;
      break;
    }
    (c < eps ? lo : hi) = x;
  }
  if (!converged) throw NumericError("gain quantile bisection did not converge");
  return x * params.scale / (2.0 + nc) * atmospheric_factor(params);
}

GainSample sample_gain(const ChannelParams& params, Rng& rng) {
  std::normal_distribution<double> normal;
  const double los = std::sqrt(0.5 * params.noncentrality);
  const double i = los + normal(rng);
  const double q = los + normal(rng);
  double g = (i * i + q * q) * params.scale / (2.0 + params.noncentrality) *
             atmospheric_factor(params);
  if (params.shadowing_sigma_db) {
    g *= std::pow(10.0, *params.shadowing_sigma_db * normal(rng) / 10.0);
  }
  return {g};
}

std::vector<double> sample_gains_serial(const ChannelParams& params, std::size_t n,
                                        std::uint64_t seed) {
  std::vector<double> out(n);
  const std::size_t chunks = (n + kSampleChunk - 1) / kSampleChunk;
  for (std::size_t c = 0; c < chunks; ++c) fill_chunk(params, seed, c, out);
  return out;
}

std::vector<double> sample_gains(const ChannelParams& params, std::size_t n,
                                 std::uint64_t seed) {
  std::vector<double> out(n);
  const auto chunks = static_cast<std::int64_t>((n + kSampleChunk - 1) / kSampleChunk);
#pragma omp parallel for schedule(static)
  for (std::int64_t c = 0; c < chunks; ++c) {
    fill_chunk(params, seed, static_cast<std::size_t>(c), out);
  }
  return out;
}

double empirical_gain_quantile(const ChannelParams& params, double eps, std::size_t n,
                               std::uint64_t seed) {
  if (n == 0) throw NumericError("empirical quantile needs at least one sample");
  if (!(eps > 0.0 && eps < 1.0)) throw NumericError("quantile probability must lie in (0, 1)");
  auto samples = sample_gains(params, n, seed);
  auto rank = static_cast<std::size_t>(std::ceil(eps * static_cast<double>(n)));
  rank = std::clamp<std::size_t>(rank, 1, n) - 1;
  std::nth_element(samples.begin(), samples.begin() + static_cast<std::ptrdiff_t>(rank),
                   samples.end());
  return samples[rank];
}

double required_power(double rate, double gain, double noise_power) {
  if (!(gain > 0.0)) throw NumericError("zero-gain link");
  if (!(rate >= 0.0)) throw NumericError("rate must be >= 0");
  if (!(noise_power > 0.0)) throw NumericError("noise power must be > 0");
  // exp2 is exact at integer rates; expm1 keeps precision for small ones.
  const double growth = rate < 0.5 ? std::expm1(rate * std::numbers::ln2) : std::exp2(rate) - 1.0;
  return growth * noise_power / gain;
}

double required_power_outage(double rate, const ChannelParams& params) {
  return required_power(rate, gain_quantile(params, params.outage_eps), params.noise_power);
}

}  // namespace leocache
