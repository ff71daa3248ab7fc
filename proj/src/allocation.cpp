#include "leocache/allocation.hpp"

#include <cmath>
#include <string>

#include "leocache/error.hpp"

namespace leocache {

namespace {

// Durations are converted to slots with a small guard so that values like
// 0.05 s / 0.001 s = 50.000000000000007 do not ceil to an extra slot.
constexpr double kSlotGuard = 1e-9;

long ceil_slots(double seconds, double slot_s) {
  return static_cast<long>(std::ceil(seconds / slot_s - kSlotGuard));
}

void check_split(double split) {
  if (!(split > 0.0 && split < 1.0)) throw NumericError("split must lie in (0, 1)");
}

Segmentation split_remaining(const TimeFrame& frame, Segmentation seg, double split) {
  const long remaining = frame.total_slots - seg.used();
  if (remaining <= 1) {
    throw InfeasibleDeadline(std::to_string(remaining) + " slots remain of " +
                             std::to_string(frame.total_slots) + " after delays");
  }
  seg.upload_slots = static_cast<long>(std::floor(split * static_cast<double>(remaining)));
  seg.download_slots = remaining - seg.upload_slots;
  return seg;
}

}  // namespace

void validate(const TimeFrame& frame) {
  if (frame.total_slots < 1) throw ConfigError("frame needs at least one slot");
  if (!(frame.slot_duration_s > 0.0)) throw ConfigError("slot duration must be > 0");
}

double uniform_rate(double B, long slots) {
  if (slots <= 0) throw InfeasibleDeadline("no slots available");
  if (!(B >= 0.0)) throw NumericError("data amount must be >= 0");
  return B / static_cast<double>(slots);
}

long baseline_deadline(const TimeFrame& frame, long N, double d_C_m, double s_C_mps) {
  if (N < 1) throw ConfigError("need at least one edge cache");
  const double window = static_cast<double>(frame.total_slots) / static_cast<double>(N) -
                        (d_C_m / s_C_mps) / frame.slot_duration_s;
  const auto slots = static_cast<long>(std::floor(window + kSlotGuard));
  if (slots <= 0) {
    throw InfeasibleDeadline("terrestrial unicast window " + std::to_string(window) +
                             " slots per cache");
  }
  return slots;
}

long scenario1_deadline(const TimeFrame& frame, double mean_ul_delay_s, double mean_dl_delay_s) {
  const long slots =
      frame.total_slots - ceil_slots(mean_ul_delay_s + mean_dl_delay_s, frame.slot_duration_s);
  if (slots <= 0) {
    throw InfeasibleDeadline("satellite propagation delay exceeds the frame");
  }
  return slots;
}

Segmentation scenario2_segments(const TimeFrame& frame, double ul_delay_s, double per_hop_delay_s,
                                long hops, double dl_delay_s, double split) {
  check_split(split);
  if (hops < 0) throw NumericError("hop count must be >= 0");
  Segmentation seg;
  seg.relay_slots =
      ceil_slots(static_cast<double>(hops) * per_hop_delay_s, frame.slot_duration_s);
  seg.prop_adjust_slots = ceil_slots(ul_delay_s + dl_delay_s, frame.slot_duration_s);
  return split_remaining(frame, seg, split);
}

Segmentation scenario3_segments(const TimeFrame& frame, double ul_delay_s, double dl_delay_s,
                                double terr_delay_s, double travel_time_s, double split) {
  check_split(split);
  if (!(travel_time_s >= 0.0)) throw NumericError("travel time must be >= 0");
  Segmentation seg;
  seg.travel_slots = ceil_slots(travel_time_s, frame.slot_duration_s);
  seg.prop_adjust_slots =
      ceil_slots(ul_delay_s + dl_delay_s + terr_delay_s, frame.slot_duration_s);
  return split_remaining(frame, seg, split);
}

}  // namespace leocache
