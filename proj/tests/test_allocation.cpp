#include <doctest.h>

#include <cmath>
#include <random>

#include "leocache/allocation.hpp"
#include "leocache/error.hpp"

using namespace leocache;

namespace {
const TimeFrame kFrame{200, 1e-3};
}

TEST_CASE("uniform rate") {
  CHECK(uniform_rate(400.0, 200) == 2.0);
  CHECK(uniform_rate(0.0, 100) == 0.0);
  CHECK(uniform_rate(400.0, 99) == doctest::Approx(4.04040404040404).epsilon(1e-14));
  CHECK_THROWS_AS(uniform_rate(400.0, 0), InfeasibleDeadline);
  CHECK_THROWS_WITH(uniform_rate(1.0, 0), doctest::Contains("infeasible deadline"));

  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> amount(0.0, 1e6);
  std::uniform_int_distribution<long> slots(1, 100'000);
  for (int i = 0; i < 1000; ++i) {
    const double B = amount(rng);
    const long s = slots(rng);
    CHECK(std::abs(uniform_rate(B, s) * static_cast<double>(s) - B) <= 1e-12 * B);
  }
}

TEST_CASE("baseline deadline") {
  CHECK(baseline_deadline(kFrame, 2, 60'000.0, 2.998e8) == 99);
  CHECK(baseline_deadline(kFrame, 1, 0.0, 2.998e8) == 200);
  CHECK(baseline_deadline(kFrame, 2, 0.0, 2.998e8) == 100);
  CHECK_THROWS_AS(baseline_deadline(kFrame, 201, 0.0, 2.998e8), InfeasibleDeadline);
  CHECK_THROWS_AS(baseline_deadline(kFrame, 1, 6e7, 2.998e8), InfeasibleDeadline);

  long prev = baseline_deadline(kFrame, 1, 60'000.0, 2e8);
  for (long n = 2; n <= 150; ++n) {
    const long cur = baseline_deadline(kFrame, n, 60'000.0, 2e8);
    CHECK(cur <= prev);
    prev = cur;
  }
  prev = baseline_deadline(kFrame, 3, 0.0, 2e8);
  for (double d = 0.0; d <= 8e6; d += 5e4) {
    const long cur = baseline_deadline(kFrame, 3, d, 2e8);
    CHECK(cur <= prev);
    prev = cur;
  }
}

TEST_CASE("scenario 1 deadline") {
  CHECK(scenario1_deadline(kFrame, 0.0, 0.0) == 200);
  CHECK(scenario1_deadline(kFrame, 4.003e-3, 4.003e-3) == 191);
  CHECK_THROWS_AS(scenario1_deadline(TimeFrame{10, 1e-3}, 6e-3, 5e-3), InfeasibleDeadline);
  for (double d = 0.0; d < 0.19; d += 1.7e-3) {
    CHECK(scenario1_deadline(kFrame, d, 0.0) >= scenario1_deadline(kFrame, d + 1e-3, 0.0));
  }
}

TEST_CASE("scenario 2 segments") {
  SUBCASE("symmetric split without relays") {
    const Segmentation s = scenario2_segments(kFrame, 0.0, 0.0, 0, 0.0, 0.5);
    CHECK(s.upload_slots == 100);
    CHECK(s.relay_slots == 0);
    CHECK(s.download_slots == 100);
  }
  SUBCASE("five hops of 2 ms") {
    const Segmentation s = scenario2_segments(kFrame, 0.0, 2e-3, 5, 0.0, 0.5);
    CHECK(s.relay_slots == 10);
    CHECK(s.upload_slots == 95);
    CHECK(s.download_slots == 95);
  }
  SUBCASE("quarter split of 190 remaining slots") {
    const Segmentation s = scenario2_segments(kFrame, 0.0, 2e-3, 5, 0.0, 0.25);
    CHECK(s.upload_slots == 47);
    CHECK(s.download_slots == 143);
  }
  SUBCASE("propagation delays are ceiled") {
    const Segmentation s = scenario2_segments(kFrame, 4.003e-3, 0.0, 0, 4.003e-3, 0.5);
    CHECK(s.prop_adjust_slots == 9);
    CHECK(s.used() == 200);
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(scenario2_segments(kFrame, 0.0, 0.1, 2, 0.0, 0.5), InfeasibleDeadline);
    CHECK_THROWS_AS(scenario2_segments(kFrame, 0.0, 0.0, 0, 0.0, 1.0), NumericError);
    CHECK_THROWS_AS(scenario2_segments(kFrame, 0.0, 0.0, 0, 0.0, 0.0), NumericError);
  }
}

TEST_CASE("scenario 3 segments") {
  SUBCASE("no travel") {
    const Segmentation s = scenario3_segments(kFrame, 0.0, 0.0, 0.0, 0.0, 0.5);
    CHECK(s.upload_slots == 100);
    CHECK(s.travel_slots == 0);
    CHECK(s.download_slots == 100);
  }
  SUBCASE("travel of 50 ms") {
    const Segmentation s = scenario3_segments(kFrame, 0.0, 0.0, 0.0, 0.05, 0.5);
    CHECK(s.upload_slots == 75);
    CHECK(s.travel_slots == 50);
    CHECK(s.download_slots == 75);
  }
  SUBCASE("six seconds of travel cannot fit a 200 ms frame") {
    CHECK_THROWS_AS(scenario3_segments(kFrame, 0.0, 0.0, 0.0, 6.0, 0.5), InfeasibleDeadline);
  }
}

TEST_CASE("segmentation invariants") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> delay(0.0, 0.03);
  std::uniform_real_distribution<double> split(0.01, 0.99);
  std::uniform_int_distribution<long> hops(0, 10);
  std::uniform_int_distribution<long> slots(20, 400);
  int checked = 0;
  for (int i = 0; i < 5000; ++i) {
    const TimeFrame f{slots(rng), 1e-3};
    const double ul = delay(rng), dl = delay(rng), hop = delay(rng) / 5.0, s = split(rng);
    const long h = hops(rng);
    try {
      const Segmentation a = scenario2_segments(f, ul, hop, h, dl, s);
      CHECK(a.used() <= f.total_slots);
      CHECK(a.upload_slots >= 0);
      CHECK(a.download_slots >= 0);
      // Less delay never leaves fewer slots.
      const Segmentation b = scenario2_segments(f, ul / 2, hop / 2, h, dl / 2, s);
      CHECK(b.upload_slots + b.download_slots >= a.upload_slots + a.download_slots);
      CHECK(b.upload_slots >= a.upload_slots);
      CHECK(b.download_slots >= a.download_slots);
      ++checked;
    } catch (const InfeasibleDeadline&) {
    }
    try {
      const double travel = delay(rng) * 3.0;
      const Segmentation a = scenario3_segments(f, ul, dl, hop, travel, s);
      CHECK(a.used() <= f.total_slots);
      const Segmentation b = scenario3_segments(f, ul, dl, hop, travel / 2, s);
      CHECK(b.upload_slots >= a.upload_slots);
      CHECK(b.download_slots >= a.download_slots);
      ++checked;
    } catch (const InfeasibleDeadline&) {
    }
  }
  CHECK(checked > 1000);
}

TEST_CASE("frame validation") {
  CHECK_NOTHROW(validate(kFrame));
  CHECK_THROWS_AS(validate(TimeFrame{0, 1e-3}), ConfigError);
  CHECK_THROWS_AS(validate(TimeFrame{10, 0.0}), ConfigError);
}
