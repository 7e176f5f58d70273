#pragma once

#include <vector>

#include "mpsvc/deadline.hpp"
#include "mpsvc/plan.hpp"
#include "mpsvc/trace.hpp"
#include "mpsvc/video.hpp"

namespace mpsvc {

// Cost of fetching one layer over one link: the bytes the fetch would
// consume in slots at or before the previous chunk's deadline. Infeasible
// when the link cannot supply the layer by its deadline at all.
struct FetchCost {
  bool feasible = false;
  Bytes cost = 0;
};

// Mutable per-link residual bandwidth, materialized (with the last-value
// extension rule) out to a fixed horizon.
class ResidualTrace {
 public:
  ResidualTrace() = default;
  ResidualTrace(const BandwidthTrace& trace, Slot horizon);

  int links() const { return static_cast<int>(bytes_.size()); }
  Slot horizon() const { return horizon_; }

  std::vector<Bytes>& link(int k) { return bytes_[k - 1]; }
  const std::vector<Bytes>& link(int k) const { return bytes_[k - 1]; }

  // Sum of residual bytes over slots 1..slot on one link / on all links.
  Bytes cumulative(int k, Slot slot) const;
  Bytes cumulative_total(Slot slot) const;

 private:
  std::vector<std::vector<Bytes>> bytes_;
  Slot horizon_ = 0;
};

// Simulates fetching `size` bytes on one link backward from `deadline`
// toward slot 1, consuming the residual in place. Returns the bytes drawn
// from slots <= boundary. When the link cannot supply the layer the
// residual is left untouched and feasible is false.
FetchCost backward_fetch(std::vector<Bytes>& residual, Slot deadline,
                         Slot boundary, Bytes size);

// Non-mutating variant (works on a copy).
FetchCost backward_cost(const std::vector<Bytes>& residual, Slot deadline,
                        Slot boundary, Bytes size);

struct LayerScanResult {
  std::vector<int> kept;     // ascending chunk indices surviving the layer
  std::vector<int> dropped;  // chunks whose layer is skipped by the scan
};

// Forward scan: walks the candidate chunks in order and drops the earliest
// not-yet-committed ones whenever the residual capacity on the allowed
// links cannot carry every survivor by the current chunk's deadline.
// With equal candidate sizes capacity is counted in whole per-link units;
// otherwise greedy cumulative packing over the pooled residual is used.
LayerScanResult forward_scan(const std::vector<int>& candidates,
                             const std::vector<Bytes>& size_of_chunk,
                             const DeadlineMap& dls,
                             const ResidualTrace& residual,
                             const std::vector<int>& allowed_links);

// The offline schedulers. Plans satisfy every FetchPlan invariant and are
// bandwidth feasible against the given trace.
FetchPlan mp_svc_offline(const VideoSpec& video, const BandwidthTrace& trace);
FetchPlan pref_mp_svc(const VideoSpec& video, const BandwidthTrace& trace,
                      const PreferenceConfig& cfg);
FetchPlan avoid_skips_mp_svc(const VideoSpec& video,
                             const BandwidthTrace& trace);

// Core entry points taking explicit deadlines (used by the online planner,
// whose windows do not start at slot 1 of the video).
FetchPlan mp_svc_schedule(const VideoSpec& video, const DeadlineMap& dls,
                          const BandwidthTrace& trace);
FetchPlan pref_mp_svc_schedule(const VideoSpec& video, const DeadlineMap& dls,
                               const BandwidthTrace& trace,
                               const PreferenceConfig& cfg);
FetchPlan avoid_skips_schedule(const VideoSpec& video, const DeadlineMap& dls,
                               const BandwidthTrace& trace);

}  // namespace mpsvc
