#pragma once

#include <utility>
#include <vector>

#include "mpsvc/deadline.hpp"
#include "mpsvc/plan.hpp"
#include "mpsvc/trace.hpp"
#include "mpsvc/video.hpp"

namespace mpsvc {

// Everything a replay or an online session produced: when each layer
// finished, what each link spent per slot, and the realized per-chunk
// quality. Effective quality respects decode order: a layer only counts
// when every lower layer also arrived in time.
struct DownloadLog {
  // completion_slot[n][i-1]: slot the layer finished, 0 = never.
  std::vector<std::vector<Slot>> completion_slot;
  std::vector<std::vector<Bytes>> consumed;  // [link][slot-1]
  std::vector<bool> skipped;                 // base layer missed its deadline
  std::vector<int> effective_quality;        // per chunk, -1 when skipped
  Slot stall_slots = 0;
  std::vector<std::pair<Slot, Slot>> stall_intervals;  // (first slot, length)
  int late_layers = 0;  // committed layers that finished after their deadline

  int chunks() const {
    return completion_slot.empty() ? 0
                                   : static_cast<int>(completion_slot[0].size());
  }
  int layers() const { return static_cast<int>(completion_slot.size()); }

  Bytes link_bytes(int link) const;
};

// Replays a link-annotated plan: each link serves its committed layers in
// (chunk, layer) order against the per-slot capacities. Service stops at
// the last deadline; layers finishing after their own deadline are marked
// late, not errors.
DownloadLog simulate_download(const FetchPlan& plan,
                              const BandwidthTrace& trace,
                              const VideoSpec& video, const DeadlineMap& dls);

struct QoeReport {
  int skip_count = 0;
  Slot skip_slots = 0;
  Slot stall_slots = 0;
  int played_count = 0;
  double avg_playback_rate = 0;  // bytes/slot over played chunks
  double layer_switching_rate = 0;  // mean |rate delta| per transition
  std::vector<Bytes> link_bytes;
  // Fraction of chunks at each quality; index 0 = skipped, 1 = base, ...
  std::vector<double> layer_pmf;
};

QoeReport compute_metrics(const DownloadLog& log, const VideoSpec& video);

}  // namespace mpsvc
