#pragma once

#include <vector>

#include "mpsvc/deadline.hpp"
#include "mpsvc/plan.hpp"
#include "mpsvc/scheduler.hpp"
#include "mpsvc/trace.hpp"
#include "mpsvc/video.hpp"

namespace mpsvc {

// Default bound on accumulated stall: 10x the video duration.
Slot default_stall_horizon(const VideoSpec& video);

struct StallScan {
  std::vector<Slot> stall;  // d(i), monotone non-decreasing
  DeadlineMap deadlines;    // uniformly shifted by d(C)
};

// Minimum stall such that every chunk can receive its base layer, all
// stalls moved to the start. Throws InfeasibleStall when the (extended)
// trace can never supply the base layers within the horizon.
StallScan min_stall_scan(const VideoSpec& video, const BandwidthTrace& trace,
                         Slot max_stall = -1);

// Variant with explicit unshifted deadlines (online windows).
StallScan min_stall_scan_deadlines(const VideoSpec& video,
                                   const DeadlineMap& base,
                                   const BandwidthTrace& trace,
                                   Slot max_stall);

// No-skip schedulers: every base layer is fetched; enhancement layers may
// still be dropped and are scheduled exactly like the skip-mode pass.
FetchPlan no_skip_mp_svc(const VideoSpec& video, const BandwidthTrace& trace,
                         Slot max_stall = -1);
FetchPlan avoid_stalls_mp_svc(const VideoSpec& video,
                              const BandwidthTrace& trace, Slot max_stall = -1);

FetchPlan no_skip_schedule(const VideoSpec& video, const DeadlineMap& base,
                           const BandwidthTrace& trace, Slot max_stall = -1);
FetchPlan avoid_stalls_schedule(const VideoSpec& video, const DeadlineMap& base,
                                const BandwidthTrace& trace,
                                Slot max_stall = -1);

}  // namespace mpsvc
