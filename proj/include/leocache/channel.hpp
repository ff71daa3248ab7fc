#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace leocache {

// Power-gain law of one link: gain = scale * X / (2 + noncentrality) with
// X ~ noncentral chi-squared, 2 degrees of freedom. The mean gain is scale.
// The equivalent Rician K-factor is noncentrality / 2.
struct ChannelParams {
  double noncentrality = 0.0;
  double scale = 1.0;
  double noise_power = 1.0;
  double outage_eps = 0.05;
  std::optional<double> shadowing_sigma_db;
  double atmo_loss_db = 0.0;
};

struct GainSample {
  double value = 0.0;
};

using Rng = std::mt19937_64;

std::vector<std::string> validate(const ChannelParams& params);

inline double rician_k_factor(const ChannelParams& params) { return params.noncentrality / 2.0; }

// Linear factor applied for atmo_loss_db (<= 1).
double atmospheric_factor(const ChannelParams& params);

// P[X <= x] for a noncentral chi-squared variable with 2 degrees of freedom,
// i.e. 1 - Q1(sqrt(noncentrality), sqrt(x)). Evaluated with the
// Poisson-weighted series over central chi-squared CDFs, summed outward from
// the Poisson mode; summation stops once a term drops below 1e-15 or after
// kNcx2MaxTerms terms in each direction.
double ncx2_cdf(double x, double noncentrality);

inline constexpr int kNcx2MaxTerms = 1'000'000;
inline constexpr int kQuantileMaxIterations = 400;

// Gain g with P[gain <= g] = eps (shadowing excluded). Throws NumericError if
// bisection fails to converge.
double gain_quantile(const ChannelParams& params, double eps);

GainSample sample_gain(const ChannelParams& params, Rng& rng);

// Fills n samples. Work is cut into fixed chunks, each seeded from
// (seed, chunk index), so both routines return identical vectors regardless
// of thread count. sample_gains runs the chunks under OpenMP.
std::vector<double> sample_gains(const ChannelParams& params, std::size_t n, std::uint64_t seed);
std::vector<double> sample_gains_serial(const ChannelParams& params, std::size_t n,
                                        std::uint64_t seed);

// Empirical eps-quantile (order statistic ceil(eps*n)) of sampled gains.
double empirical_gain_quantile(const ChannelParams& params, double eps, std::size_t n,
                               std::uint64_t seed);

// Shannon inversion with unit bandwidth: (2^rate - 1) * noise / gain.
double required_power(double rate, double gain, double noise_power);

// Power meeting `rate` with probability >= 1 - outage_eps (analytic
// quantile; shadowing is handled by the scenario cost model).
double required_power_outage(double rate, const ChannelParams& params);

// splitmix64 finalizer; derives independent stream seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace leocache
