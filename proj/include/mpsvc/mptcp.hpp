#pragma once

#include "mpsvc/plan.hpp"
#include "mpsvc/scheduler.hpp"
#include "mpsvc/trace.hpp"
#include "mpsvc/video.hpp"

namespace mpsvc {

// MPTCP treats the links as one aggregated pipe; a single layer may then
// span physical links, which no other scheduler is allowed to do.
struct MptcpPlan {
  FetchPlan plan;      // logical labels (link 1 against the aggregate)
  LinkByteSplit split; // physical per-link byte attribution
};

// MP-SVC (or its no-skip variant) on the aggregated trace.
FetchPlan mptcp_svc(const VideoSpec& video, const BandwidthTrace& trace,
                    Mode mode);

// Preference-aware MPTCP: decisions for layers <= n2 are taken on the
// aggregate, then replayed on link 1 alone; deadline shortfalls move bytes
// of the earliest scheduled layers onto link 2. Layers above n2 are
// scheduled on link 1's remaining bandwidth.
MptcpPlan pref_mptcp_svc(const VideoSpec& video, const BandwidthTrace& trace,
                         const PreferenceConfig& cfg, Mode mode);

}  // namespace mpsvc
