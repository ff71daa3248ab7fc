#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "leocache/channel.hpp"
#include "leocache/error.hpp"

using namespace leocache;

namespace {

// Independent sampler: X = (Z1 + sqrt(nc))^2 + Z2^2.
std::vector<double> draw_ncx2(double nc, std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> z;
  std::vector<double> out(n);
  const double m = std::sqrt(nc);
  for (auto& x : out) {
    const double a = z(rng) + m;
    const double b = z(rng);
    x = a * a + b * b;
  }
  return out;
}

double ncx2_pdf(double x, double nc) {
  return 0.5 * std::exp(-0.5 * (x + nc)) * std::cyl_bessel_i(0.0, std::sqrt(nc * x));
}

// Composite Simpson integration of the density on [0, x].
double ncx2_cdf_quadrature(double x, double nc) {
  const int n = 20'000;
  const double h = x / n;
  double s = ncx2_pdf(0.0, nc) + ncx2_pdf(x, nc);
  for (int i = 1; i < n; ++i) s += (i % 2 ? 4.0 : 2.0) * ncx2_pdf(i * h, nc);
  return s * h / 3.0;
}

ChannelParams params(double nc, double scale = 1.0, double eps = 0.05) {
  ChannelParams p;
  p.noncentrality = nc;
  p.scale = scale;
  p.outage_eps = eps;
  return p;
}

}  // namespace

TEST_CASE("ncx2_cdf closed-form and edge values") {
  CHECK(std::abs(ncx2_cdf(2.0 * std::numbers::ln2, 0.0) - 0.5) < 1e-12);
  CHECK(ncx2_cdf(0.0, 0.0) == 0.0);
  CHECK(ncx2_cdf(0.0, 7.5) == 0.0);
  for (double x : {0.01, 0.5, 1.0, 3.0, 10.0, 40.0}) {
    CHECK(ncx2_cdf(x, 0.0) == doctest::Approx(-std::expm1(-x / 2)).epsilon(1e-14));
  }
  CHECK(ncx2_cdf(1e4, 3.0) == 1.0);
}

TEST_CASE("ncx2_cdf agrees with density quadrature") {
  for (double nc : {0.5, 1.0, 3.0, 10.0, 50.0, 200.0}) {
    for (double x : {0.2, 1.0, 5.0, 12.0, 60.0, 250.0}) {
      CAPTURE(nc);
      CAPTURE(x);
      CHECK(std::abs(ncx2_cdf(x, nc) - ncx2_cdf_quadrature(x, nc)) < 1e-9);
    }
  }
}

TEST_CASE("ncx2_cdf matches Monte Carlo at (5, 3)") {
  const std::size_t n = 10'000'000;
  const auto xs = draw_ncx2(3.0, n, 2024);
  const double empirical =
      static_cast<double>(std::count_if(xs.begin(), xs.end(), [](double v) { return v <= 5.0; })) /
      static_cast<double>(n);
  const double cdf = ncx2_cdf(5.0, 3.0);
  const double se = std::sqrt(cdf * (1.0 - cdf) / static_cast<double>(n));
  CHECK(std::abs(empirical - cdf) < 3.0 * se);
}

TEST_CASE("ncx2_cdf monotonicity") {
  for (double nc : {0.0, 0.3, 2.0, 10.0, 100.0, 1e4}) {
    double prev = 0.0;
    for (double x = 0.0; x <= 2.0 * (nc + 40.0); x += (nc + 40.0) / 200.0) {
      const double c = ncx2_cdf(x, nc);
      CHECK(c >= prev - 1e-14);
      CHECK(c >= 0.0);
      CHECK(c <= 1.0);
      prev = c;
    }
  }
  for (double x : {0.5, 2.0, 8.0, 30.0}) {
    double prev = 1.0;
    for (double nc = 0.0; nc <= 60.0; nc += 0.5) {
      const double c = ncx2_cdf(x, nc);
      CHECK(c <= prev + 1e-14);
      prev = c;
    }
  }
}

TEST_CASE("gain quantile") {
  SUBCASE("central median") {
    // |cdf(q) - eps| <= 1e-9 and the density at the median is 1/4.
    CHECK(std::abs(gain_quantile(params(0.0, 2.0), 0.5) - 2.0 * std::numbers::ln2) <= 4e-9);
  }
  SUBCASE("ordered in eps") {
    for (double nc : {0.0, 1.0, 10.0}) {
      CHECK(gain_quantile(params(nc), 0.1) < gain_quantile(params(nc), 0.9));
    }
  }
  SUBCASE("round trip through the CDF") {
    for (double nc : {0.0, 1.0, 10.0, 100.0}) {
      for (double eps : {0.01, 0.05, 0.5}) {
        const ChannelParams p = params(nc);
        const double raw = gain_quantile(p, eps) * (2.0 + nc) / p.scale;
        CHECK(std::abs(ncx2_cdf(raw, nc) - eps) <= 1e-9);
      }
    }
  }
  SUBCASE("atmospheric loss scales the quantile") {
    ChannelParams p = params(10.0);
    const double clear = gain_quantile(p, 0.05);
    p.atmo_loss_db = 10.0;
    CHECK(gain_quantile(p, 0.05) == doctest::Approx(clear / 10.0).epsilon(1e-12));
  }
  SUBCASE("matches Monte Carlo 5th percentile for nc = 10") {
    const std::size_t n = 10'000'000;
    auto xs = draw_ncx2(10.0, n, 99);
    const std::size_t k = static_cast<std::size_t>(std::ceil(0.05 * n)) - 1;
    std::nth_element(xs.begin(), xs.begin() + static_cast<std::ptrdiff_t>(k), xs.end());
    const double empirical = xs[k] / 12.0;  // mean gain 1
    const double q = gain_quantile(params(10.0), 0.05);
    const double se = std::sqrt(0.05 * 0.95 / n) / (ncx2_pdf(q * 12.0, 10.0) * 12.0);
    CHECK(std::abs(empirical - q) < 3.0 * se);
  }
  SUBCASE("invalid probability") {
    CHECK_THROWS_AS(gain_quantile(params(1.0), 0.0), NumericError);
    CHECK_THROWS_AS(gain_quantile(params(1.0), 1.0), NumericError);
  }
}

TEST_CASE("sample_gain") {
  SUBCASE("normalized mean equals the configured scale") {
    const std::size_t n = 1'000'000;
    for (double nc : {0.0, 1.0, 10.0}) {
      const auto g = sample_gains(params(nc), n, 5);
      double sum = 0.0;
      for (double v : g) sum += v;
      const double mean = sum / n;
      // Var(X) = 4 + 4 nc for two degrees of freedom.
      const double sd = std::sqrt(4.0 + 4.0 * nc) / (2.0 + nc);
      CAPTURE(nc);
      CHECK(std::abs(mean - 1.0) < 3.0 * sd / std::sqrt(static_cast<double>(n)));
    }
  }
  SUBCASE("strong line of sight is nearly deterministic") {
    const auto g = sample_gains(params(1e4), 200'000, 8);
    double mean = 0.0;
    for (double v : g) mean += v;
    mean /= g.size();
    double var = 0.0;
    for (double v : g) var += (v - mean) * (v - mean);
    var /= g.size() - 1;
    CHECK(var < 1e-3);
  }
  SUBCASE("reproducible under a fixed seed") {
    Rng a(42), b(42);
    const ChannelParams p = params(3.0);
    for (int i = 0; i < 100; ++i) CHECK(sample_gain(p, a).value == sample_gain(p, b).value);
    CHECK(sample_gains(p, 300'000, 1) == sample_gains(p, 300'000, 1));
  }
  SUBCASE("parallel kernel matches the serial reference bitwise") {
    ChannelParams p = params(2.0);
    p.shadowing_sigma_db = 8.0;
    CHECK(sample_gains(p, 500'000, 77) == sample_gains_serial(p, 500'000, 77));
  }
  SUBCASE("samples are non-negative with shadowing and loss") {
    ChannelParams p = params(0.0);
    p.shadowing_sigma_db = 12.0;
    p.atmo_loss_db = 20.0;
    for (double v : sample_gains(p, 100'000, 3)) CHECK(v >= 0.0);
  }
  SUBCASE("empirical quantile tracks the analytic one without shadowing") {
    const ChannelParams p = params(10.0);
    CHECK(empirical_gain_quantile(p, 0.05, 2'000'000, 4) ==
          doctest::Approx(gain_quantile(p, 0.05)).epsilon(5e-3));
  }
}

TEST_CASE("required power") {
  CHECK(required_power(2.0, 1.0, 1.0) == 3.0);
  CHECK(required_power(1.0, 1.0, 1.0) == 1.0);
  CHECK(required_power(2.0, 3.0, 1.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(required_power(0.0, 1.0, 1.0) == 0.0);
  CHECK_THROWS_WITH(required_power(1.0, 0.0, 1.0), "zero-gain link");

  for (double g : {0.1, 0.7, 2.5}) {
    CHECK(required_power(3.3, g / 2.0, 1.0) == 2.0 * required_power(3.3, g, 1.0));
  }
  // Strictly increasing and strictly convex in rate.
  const double h = 0.05;
  for (double r = h; r < 12.0; r += h) {
    const double lo = required_power(r - h, 0.8, 1.0);
    const double mid = required_power(r, 0.8, 1.0);
    const double hi = required_power(r + h, 0.8, 1.0);
    CHECK(mid > lo);
    CHECK(lo + hi > 2.0 * mid);
  }
}

TEST_CASE("required power under an outage design") {
  SUBCASE("deterministic channel limit") {
    for (double eps : {0.05, 0.5}) {
      CHECK(std::abs(required_power_outage(2.0, params(1e8, 1.0, eps)) - 3.0) < 1e-3);
    }
  }
  SUBCASE("stochastically better channels need less power") {
    CHECK(required_power_outage(2.0, params(10.0, 2.0)) <=
          required_power_outage(2.0, params(10.0, 1.0)));
    CHECK(required_power_outage(2.0, params(30.0, 1.0)) <=
          required_power_outage(2.0, params(3.0, 1.0)));
  }
  SUBCASE("brute-force grid with Monte Carlo outage") {
    const std::size_t n = 1'000'000;
    auto g = draw_ncx2(10.0, n, 31);
    for (double& v : g) v /= 12.0;
    std::sort(g.begin(), g.end());
    auto outage = [&](double p) {
      // Rate 2 fails when log2(1 + p g) < 2, i.e. g < 3 / p.
      const auto it = std::lower_bound(g.begin(), g.end(), 3.0 / p);
      return static_cast<double>(it - g.begin()) / static_cast<double>(n);
    };
    const double step = 1e-3;
    double p = step;
    while (outage(p) > 0.05) p += step;

    const double analytic = required_power_outage(2.0, params(10.0, 1.0, 0.05));
    const double q = 3.0 / analytic;
    const double se_gain = std::sqrt(0.05 * 0.95 / n) / (ncx2_pdf(q * 12.0, 10.0) * 12.0);
    const double se_power = 3.0 / (q * q) * se_gain;
    CHECK(std::abs(p - analytic) <= step + 3.0 * se_power);
  }
}

TEST_CASE("channel validation") {
  ChannelParams p;
  CHECK(validate(p).empty());
  p.shadowing_sigma_db = 25.0;
  CHECK(validate(p).size() == 1);
  p.shadowing_sigma_db.reset();
  p.atmo_loss_db = 2.0;
  CHECK(validate(p).size() == 1);
  p.atmo_loss_db = 45.0;
  CHECK_THROWS_AS(validate(p), ConfigError);
  p.atmo_loss_db = 0.0;
  p.outage_eps = 0.7;
  CHECK_THROWS_AS(validate(p), ConfigError);
  CHECK(rician_k_factor(params(10.0)) == 5.0);
}

TEST_CASE("seed mixing separates streams") {
  CHECK(mix_seed(1, 0) != mix_seed(1, 1));
  CHECK(mix_seed(1, 0) != mix_seed(2, 0));
  CHECK(mix_seed(9, 4) == mix_seed(9, 4));
}
