#include "mpsvc/noskip.hpp"

#include <algorithm>

#include "scheduler_detail.hpp"

namespace mpsvc {

Slot default_stall_horizon(const VideoSpec& video) {
  return 10 * (static_cast<Slot>(video.chunk_count) * video.chunk_duration +
               video.startup_delay + 1);
}

namespace {

Slot resolve_horizon(const VideoSpec& video, Slot max_stall) {
  return max_stall >= 0 ? max_stall : default_stall_horizon(video);
}

}  // namespace

StallScan min_stall_scan_deadlines(const VideoSpec& video,
                                   const DeadlineMap& base,
                                   const BandwidthTrace& trace,
                                   Slot max_stall) {
  video.validate();
  trace.validate();
  CumulativeBandwidth cum(trace);

  const auto& sizes0 = video.layer_sizes[0];
  bool uniform = video.layer_is_cbr(0);
  Bytes unit = sizes0.empty() ? 0 : sizes0.front();

  std::vector<Slot> d(video.chunk_count, 0);
  Bytes demand = 0;
  for (int i = 1; i <= video.chunk_count; ++i) {
    demand += sizes0[i - 1];
    d[i - 1] = i > 1 ? d[i - 2] : 0;
    for (;;) {
      Slot dl = base.at(i) + d[i - 1];
      bool ok;
      if (uniform && unit > 0) {
        long long units = 0;
        for (int k = 1; k <= trace.links(); ++k)
          units += cum.at(k, dl) / unit;
        ok = units >= i;
      } else {
        ok = cum.total(dl) >= demand;
      }
      if (ok) break;
      if (++d[i - 1] > max_stall)
        throw InfeasibleStall("base layers cannot be delivered within the stall horizon");
    }
  }

  StallScan out;
  out.stall = std::move(d);
  Slot shift = out.stall.empty() ? 0 : out.stall.back();
  out.deadlines = base;
  for (Slot& dl : out.deadlines.deadline) dl += shift;
  return out;
}

StallScan min_stall_scan(const VideoSpec& video, const BandwidthTrace& trace,
                         Slot max_stall) {
  return min_stall_scan_deadlines(video, deadlines(video), trace,
                                  resolve_horizon(video, max_stall));
}

namespace {

// Commit every base layer against the shifted deadlines. The stall scan's
// capacity promise can under-count the per-link packing in VBR mode, so a
// failed commit bumps the stall by one slot and retries.
struct BaseAttempt {
  bool ok = false;
  FetchPlan plan;
  ResidualTrace residual;
  DeadlineMap dls;
};

BaseAttempt try_base_assign(const VideoSpec& video, const DeadlineMap& base,
                            const BandwidthTrace& trace, Slot shift,
                            const std::vector<int>& allowed,
                            bool preference_sweep) {
  BaseAttempt attempt;
  attempt.dls = base;
  for (Slot& dl : attempt.dls.deadline) dl += shift;
  attempt.plan = FetchPlan::empty(video);
  attempt.plan.stall.assign(video.chunk_count, shift);
  attempt.residual = ResidualTrace(trace, attempt.dls.last());

  const auto& sizes0 = video.layer_sizes[0];
  std::vector<int> survivors(video.chunk_count);
  for (int i = 0; i < video.chunk_count; ++i) survivors[i] = i + 1;

  std::vector<int> on_link2;
  if (preference_sweep) {
    size_t before = survivors.size();
    detail::avoid_skips_base_sweep(survivors, on_link2, sizes0, attempt.dls,
                                   attempt.residual);
    if (survivors.size() != before) return attempt;  // a base layer fell off
  }

  for (int i : survivors) {
    Slot dl = attempt.dls.at(i);
    Slot boundary = attempt.dls.before(i);
    int best_link = 0;
    Bytes best_cost = 0;
    std::vector<Bytes> best_state;
    std::vector<int> links = allowed;
    if (preference_sweep)
      links = {std::binary_search(on_link2.begin(), on_link2.end(), i) ? 2 : 1};
    for (int k : links) {
      std::vector<Bytes> copy = attempt.residual.link(k);
      FetchCost c = backward_fetch(copy, dl, boundary, sizes0[i - 1]);
      if (!c.feasible) continue;
      if (best_link == 0 || c.cost < best_cost) {
        best_link = k;
        best_cost = c.cost;
        best_state = std::move(copy);
      }
    }
    if (best_link == 0) return attempt;
    attempt.residual.link(best_link) = std::move(best_state);
    attempt.plan.link_of[0][i - 1] = best_link;
  }
  attempt.ok = true;
  return attempt;
}

FetchPlan schedule_no_skip(const VideoSpec& video, const DeadlineMap& base,
                           const BandwidthTrace& trace, Slot max_stall,
                           bool preference_sweep) {
  video.validate();
  trace.validate();
  FetchPlan empty = FetchPlan::empty(video);
  if (video.chunk_count == 0) return empty;

  StallScan scan = min_stall_scan_deadlines(video, base, trace, max_stall);
  Slot shift = scan.stall.back();

  std::vector<int> both = {1, 2};
  for (; shift <= max_stall; ++shift) {
    BaseAttempt attempt =
        try_base_assign(video, base, trace, shift, both, preference_sweep);
    if (!attempt.ok) continue;
    int top = video.top_layer();
    if (top >= 1) {
      std::vector<int> allowed = preference_sweep ? std::vector<int>{1} : both;
      detail::schedule_layer_range(attempt.plan, attempt.residual, video,
                                   attempt.dls, 1, top, allowed);
    }
    return attempt.plan;
  }
  throw InfeasibleStall("no feasible base-layer assignment within the stall horizon");
}

}  // namespace

FetchPlan no_skip_schedule(const VideoSpec& video, const DeadlineMap& base,
                           const BandwidthTrace& trace, Slot max_stall) {
  return schedule_no_skip(video, base, trace, resolve_horizon(video, max_stall),
                          false);
}

FetchPlan no_skip_mp_svc(const VideoSpec& video, const BandwidthTrace& trace,
                         Slot max_stall) {
  return no_skip_schedule(video, deadlines(video), trace, max_stall);
}

FetchPlan avoid_stalls_schedule(const VideoSpec& video, const DeadlineMap& base,
                                const BandwidthTrace& trace, Slot max_stall) {
  return schedule_no_skip(video, base, trace, resolve_horizon(video, max_stall),
                          true);
}

FetchPlan avoid_stalls_mp_svc(const VideoSpec& video,
                              const BandwidthTrace& trace, Slot max_stall) {
  return avoid_stalls_schedule(video, deadlines(video), trace, max_stall);
}

}  // namespace mpsvc
