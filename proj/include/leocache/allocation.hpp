#pragma once

namespace leocache {

struct TimeFrame {
  long total_slots = 200;
  double slot_duration_s = 1e-3;
};

// Slot budget of one delivery path. Any count may be zero.
struct Segmentation {
  long upload_slots = 0;
  long relay_slots = 0;
  long travel_slots = 0;
  long download_slots = 0;
  long prop_adjust_slots = 0;

  long used() const {
    return upload_slots + relay_slots + travel_slots + download_slots + prop_adjust_slots;
  }
};

void validate(const TimeFrame& frame);

// Data units per slot when B is spread evenly over `slots`.
double uniform_rate(double B, long slots);

// Per-cache unicast window floor(T/N - d_C/s_C) in slots.
long baseline_deadline(const TimeFrame& frame, long N, double d_C_m, double s_C_mps);

// Slots left for the single-satellite path after mean uplink and downlink delays.
long scenario1_deadline(const TimeFrame& frame, double mean_ul_delay_s, double mean_dl_delay_s);

// Upload, relay through `hops` inter-satellite links, then broadcast.
// Usable time is floored and consumed time is ceiled.
Segmentation scenario2_segments(const TimeFrame& frame, double ul_delay_s, double per_hop_delay_s,
                                long hops, double dl_delay_s, double split);

// Upload, carry the data for travel_time_s, then broadcast.
Segmentation scenario3_segments(const TimeFrame& frame, double ul_delay_s, double dl_delay_s,
                                double terr_delay_s, double travel_time_s, double split);

}  // namespace leocache
