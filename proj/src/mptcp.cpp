#include "mpsvc/mptcp.hpp"

#include <algorithm>
#include <stdexcept>

#include "mpsvc/noskip.hpp"
#include "scheduler_detail.hpp"

namespace mpsvc {

FetchPlan mptcp_svc(const VideoSpec& video, const BandwidthTrace& trace,
                    Mode mode) {
  BandwidthTrace agg = aggregate_trace(trace);
  return mode == Mode::kSkip ? mp_svc_offline(video, agg)
                             : no_skip_mp_svc(video, agg);
}

namespace {

struct Item {
  int chunk;
  int layer;
  Slot deadline;
  Bytes on_link1;
  Bytes on_link2;
};

// Moves bytes from link 1 to link 2 until link 1's demand prefix fits its
// capacity at every deadline. Bytes always come from the earliest items
// link 2 can still admit.
void split_onto_links(std::vector<Item>& items, const ResidualTrace& caps) {
  auto link1_shortfall = [&](Slot* at) {
    Bytes demand = 0;
    for (const auto& it : items) {
      demand += it.on_link1;
      Bytes cap = caps.cumulative(1, it.deadline);
      if (demand > cap) {
        *at = it.deadline;
        return demand - cap;
      }
    }
    return Bytes{0};
  };
  auto link2_slack_from = [&](Slot from) {
    // Smallest remaining room on link 2 at any checkpoint >= from.
    Bytes slack = -1;
    Bytes demand = 0;
    for (const auto& it : items) {
      demand += it.on_link2;
      if (it.deadline < from) continue;
      Bytes room = caps.cumulative(2, it.deadline) - demand;
      if (slack < 0 || room < slack) slack = room;
    }
    if (items.empty()) return Bytes{0};
    // Checkpoint past the last item (link 2 gains no further demand).
    Bytes room = caps.cumulative(2, items.back().deadline) - demand;
    if (slack < 0 || room < slack) slack = room;
    return slack < 0 ? Bytes{0} : slack;
  };

  for (;;) {
    Slot violated = 0;
    Bytes need = link1_shortfall(&violated);
    if (need == 0) return;
    Bytes moved = 0;
    for (auto& it : items) {
      if (need == 0) break;
      if (it.deadline > violated || it.on_link1 == 0) continue;
      Bytes slack = link2_slack_from(it.deadline);
      Bytes take = std::min({it.on_link1, need, slack});
      if (take <= 0) continue;
      it.on_link1 -= take;
      it.on_link2 += take;
      need -= take;
      moved += take;
    }
    if (moved == 0)
      throw std::logic_error("mptcp split cannot relieve link 1");
  }
}

}  // namespace

MptcpPlan pref_mptcp_svc(const VideoSpec& video, const BandwidthTrace& trace,
                         const PreferenceConfig& cfg, Mode mode) {
  video.validate();
  trace.validate();
  cfg.validate(video);

  MptcpPlan out;
  out.plan = FetchPlan::empty(video);
  out.split.bytes.assign(
      2, std::vector<std::vector<Bytes>>(
             video.layer_count(), std::vector<Bytes>(video.chunk_count, 0)));
  if (video.chunk_count == 0) return out;

  // Phase 1: decide layers 0..n2 on the aggregated pipe.
  BandwidthTrace agg = aggregate_trace(trace);
  DeadlineMap dls = deadlines(video);
  ResidualTrace agg_residual;
  if (mode == Mode::kSkip) {
    agg_residual = ResidualTrace(agg, dls.last());
    detail::schedule_layer_range(out.plan, agg_residual, video, dls, 0, cfg.n2,
                                 {1});
  } else {
    StallScan scan = min_stall_scan(video, agg);
    dls = scan.deadlines;
    out.plan.stall.assign(video.chunk_count, scan.stall.back());
    agg_residual = ResidualTrace(agg, dls.last());
    for (int i = 1; i <= video.chunk_count; ++i) {
      auto& link1 = agg_residual.link(1);
      FetchCost c = backward_fetch(link1, dls.at(i), dls.before(i),
                                   video.layer_size(0, i));
      if (!c.feasible)
        throw InfeasibleStall("aggregate cannot carry every base layer");
      out.plan.link_of[0][i - 1] = 1;
    }
    if (cfg.n2 >= 1)
      detail::schedule_layer_range(out.plan, agg_residual, video, dls, 1,
                                   cfg.n2, {1});
  }

  // Phase 2: replay those decisions on the physical links, shifting the
  // earliest bytes onto link 2 only where link 1 alone would miss a
  // deadline.
  std::vector<Item> items;
  for (int i = 1; i <= video.chunk_count; ++i)
    for (int n = 0; n <= cfg.n2; ++n)
      if (out.plan.fetched(n, i))
        items.push_back({i, n, dls.at(i), video.layer_size(n, i), 0});
  ResidualTrace caps(trace, dls.last());
  split_onto_links(items, caps);
  for (const auto& it : items) {
    out.split.bytes[0][it.layer][it.chunk - 1] = it.on_link1;
    out.split.bytes[1][it.layer][it.chunk - 1] = it.on_link2;
  }

  // Phase 3: layers above n2 on link 1's leftover bandwidth, packed the
  // same way the scheduler accounts for committed layers.
  if (cfg.n2 < video.top_layer()) {
    ResidualTrace residual(trace, dls.last());
    residual.link(2).assign(residual.link(2).size(), 0);
    for (const auto& it : items) {
      if (it.on_link1 == 0) continue;
      FetchCost c =
          backward_fetch(residual.link(1), it.deadline, 0, it.on_link1);
      if (!c.feasible)
        throw std::logic_error("mptcp split is not schedulable on link 1");
    }
    detail::schedule_layer_range(out.plan, residual, video, dls, cfg.n2 + 1,
                                 video.top_layer(), {1});
    for (int n = cfg.n2 + 1; n < video.layer_count(); ++n)
      for (int i = 1; i <= video.chunk_count; ++i)
        if (out.plan.fetched(n, i))
          out.split.bytes[0][n][i - 1] = video.layer_size(n, i);
  }
  return out;
}

}  // namespace mpsvc
