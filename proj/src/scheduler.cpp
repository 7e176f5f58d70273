#include "mpsvc/scheduler.hpp"

#include <algorithm>

#include "scheduler_detail.hpp"

namespace mpsvc {

ResidualTrace::ResidualTrace(const BandwidthTrace& trace, Slot horizon)
    : horizon_(horizon < 0 ? 0 : horizon) {
  bytes_.resize(trace.links());
  for (int k = 1; k <= trace.links(); ++k)
    bytes_[k - 1] = trace.materialize(k, horizon_);
}

Bytes ResidualTrace::cumulative(int k, Slot slot) const {
  const auto& series = bytes_[k - 1];
  Slot end = std::min<Slot>(slot, static_cast<Slot>(series.size()));
  Bytes sum = 0;
  for (Slot j = 1; j <= end; ++j) sum += series[j - 1];
  return sum;
}

Bytes ResidualTrace::cumulative_total(Slot slot) const {
  Bytes sum = 0;
  for (int k = 1; k <= links(); ++k) sum += cumulative(k, slot);
  return sum;
}

FetchCost backward_fetch(std::vector<Bytes>& residual, Slot deadline,
                         Slot boundary, Bytes size) {
  FetchCost out;
  if (size == 0) {  // empty fetch
    out.feasible = true;
    return out;
  }
  Slot last = std::min<Slot>(deadline, static_cast<Slot>(residual.size()));
  Bytes available = 0;
  for (Slot j = 1; j <= last && available < size; ++j) available += residual[j - 1];
  if (available < size) return out;  // residual untouched

  out.feasible = true;
  Bytes remaining = size;
  for (Slot j = last; j >= 1 && remaining > 0; --j) {
    Bytes take = std::min(residual[j - 1], remaining);
    residual[j - 1] -= take;
    remaining -= take;
    if (j <= boundary) out.cost += take;
  }
  return out;
}

FetchCost backward_cost(const std::vector<Bytes>& residual, Slot deadline,
                        Slot boundary, Bytes size) {
  std::vector<Bytes> copy = residual;
  return backward_fetch(copy, deadline, boundary, size);
}

LayerScanResult forward_scan(const std::vector<int>& candidates,
                             const std::vector<Bytes>& size_of_chunk,
                             const DeadlineMap& dls,
                             const ResidualTrace& residual,
                             const std::vector<int>& allowed_links) {
  LayerScanResult result;
  if (candidates.empty()) return result;

  bool uniform = true;
  Bytes unit = size_of_chunk[candidates.front() - 1];
  for (int i : candidates)
    if (size_of_chunk[i - 1] != unit) uniform = false;

  // Prefix sums of the residual per allowed link, so capacity queries at
  // each deadline are O(1).
  std::vector<std::vector<Bytes>> prefix;
  prefix.reserve(allowed_links.size());
  for (int k : allowed_links) {
    const auto& series = residual.link(k);
    std::vector<Bytes> p(series.size() + 1, 0);
    for (size_t j = 0; j < series.size(); ++j) p[j + 1] = p[j] + series[j];
    prefix.push_back(std::move(p));
  }
  auto capacity_at = [&](size_t idx, Slot slot) {
    const auto& p = prefix[idx];
    Slot end = std::min<Slot>(slot, static_cast<Slot>(p.size()) - 1);
    return p[end < 0 ? 0 : end];
  };

  std::vector<int> kept;
  Bytes kept_bytes = 0;
  for (int i : candidates) {
    kept.push_back(i);
    kept_bytes += size_of_chunk[i - 1];
    Slot dl = dls.at(i);
    if (uniform) {
      if (unit == 0) continue;  // zero-size layers always fit
      long long units = 0;
      for (size_t idx = 0; idx < allowed_links.size(); ++idx)
        units += capacity_at(idx, dl) / unit;
      while (static_cast<long long>(kept.size()) > units) {
        result.dropped.push_back(kept.front());
        kept_bytes -= size_of_chunk[kept.front() - 1];
        kept.erase(kept.begin());
      }
    } else {
      Bytes cap = 0;
      for (size_t idx = 0; idx < allowed_links.size(); ++idx)
        cap += capacity_at(idx, dl);
      while (kept_bytes > cap) {
        // Drop the earliest survivor that actually frees bytes.
        auto victim = std::find_if(kept.begin(), kept.end(), [&](int c) {
          return size_of_chunk[c - 1] > 0;
        });
        if (victim == kept.end()) break;
        kept_bytes -= size_of_chunk[*victim - 1];
        result.dropped.push_back(*victim);
        kept.erase(victim);
      }
    }
  }
  result.kept = std::move(kept);
  std::sort(result.dropped.begin(), result.dropped.end());
  return result;
}

namespace {

std::vector<Bytes> sizes_by_chunk(const VideoSpec& video, int layer) {
  return video.layer_sizes[layer];
}

std::vector<int> chained_candidates(const FetchPlan& plan, int layer, int chunks) {
  std::vector<int> out;
  out.reserve(chunks);
  for (int i = 1; i <= chunks; ++i)
    if (layer == 0 || plan.fetched(layer - 1, i)) out.push_back(i);
  return out;
}

// Commits the kept chunks of one layer to the cheapest allowed link.
// Ties go to the lowest link index. Chunks no link can carry stay skipped
// (only reachable when the pooled VBR scan over-promised).
void assign_layer(FetchPlan& plan, int layer, const std::vector<int>& kept,
                  const std::vector<Bytes>& sizes, const DeadlineMap& dls,
                  ResidualTrace& residual, const std::vector<int>& allowed) {
  for (int i : kept) {
    Slot dl = dls.at(i);
    Slot boundary = dls.before(i);
    int best_link = 0;
    Bytes best_cost = 0;
    std::vector<Bytes> best_state;
    for (int k : allowed) {
      std::vector<Bytes> copy = residual.link(k);
      FetchCost c = backward_fetch(copy, dl, boundary, sizes[i - 1]);
      if (!c.feasible) continue;
      if (best_link == 0 || c.cost < best_cost) {
        best_link = k;
        best_cost = c.cost;
        best_state = std::move(copy);
      }
    }
    if (best_link == 0) continue;
    residual.link(best_link) = std::move(best_state);
    plan.link_of[layer][i - 1] = best_link;
  }
}

std::vector<int> all_links(const BandwidthTrace& trace) {
  std::vector<int> links(trace.links());
  for (int k = 0; k < trace.links(); ++k) links[k] = k + 1;
  return links;
}

}  // namespace

namespace detail {

// Forward-scan then backward-assign layers [from, to] with chaining from
// the plan's lower layers. Shared by every offline scheduler.
void schedule_layer_range(FetchPlan& plan, ResidualTrace& residual,
                          const VideoSpec& video, const DeadlineMap& dls,
                          int from_layer, int to_layer,
                          const std::vector<int>& allowed) {
  for (int n = from_layer; n <= to_layer; ++n) {
    auto sizes = sizes_by_chunk(video, n);
    auto cands = chained_candidates(plan, n, video.chunk_count);
    auto scan = forward_scan(cands, sizes, dls, residual, allowed);
    assign_layer(plan, n, scan.kept, sizes, dls, residual, allowed);
  }
}

}  // namespace detail

FetchPlan mp_svc_schedule(const VideoSpec& video, const DeadlineMap& dls,
                          const BandwidthTrace& trace) {
  video.validate();
  trace.validate();
  FetchPlan plan = FetchPlan::empty(video);
  if (video.chunk_count == 0) return plan;
  ResidualTrace residual(trace, dls.last());
  detail::schedule_layer_range(plan, residual, video, dls, 0, video.top_layer(),
                               all_links(trace));
  return plan;
}

FetchPlan mp_svc_offline(const VideoSpec& video, const BandwidthTrace& trace) {
  return mp_svc_schedule(video, deadlines(video), trace);
}

FetchPlan pref_mp_svc_schedule(const VideoSpec& video, const DeadlineMap& dls,
                               const BandwidthTrace& trace,
                               const PreferenceConfig& cfg) {
  video.validate();
  trace.validate();
  cfg.validate(video);
  FetchPlan plan = FetchPlan::empty(video);
  if (video.chunk_count == 0) return plan;
  ResidualTrace residual(trace, dls.last());

  // Phase 1: plain MP-SVC for layers 0..n2, both links admitted.
  detail::schedule_layer_range(plan, residual, video, dls, 0, cfg.n2, {1, 2});

  // Phase 2: try to pull every link-2 fetch over to link 1's leftover
  // bandwidth. The re-run keeps the earliest immovable chunks on link 2.
  const std::vector<int> link1_only = {1};
  for (int n = 0; n <= cfg.n2; ++n) {
    std::vector<int> on_link2;
    for (int i = 1; i <= video.chunk_count; ++i)
      if (plan.link(n, i) == 2) on_link2.push_back(i);
    if (on_link2.empty()) continue;
    auto sizes = sizes_by_chunk(video, n);
    auto scan = forward_scan(on_link2, sizes, dls, residual, link1_only);
    for (int i : scan.kept) {
      std::vector<Bytes> copy = residual.link(1);
      FetchCost c = backward_fetch(copy, dls.at(i), dls.before(i), sizes[i - 1]);
      if (!c.feasible) continue;
      residual.link(1) = std::move(copy);
      plan.link_of[n][i - 1] = 1;
    }
  }

  // Phase 3: layers above n2 ride link 1 only.
  if (cfg.n2 < video.top_layer())
    detail::schedule_layer_range(plan, residual, video, dls, cfg.n2 + 1,
                                 video.top_layer(), link1_only);
  return plan;
}

FetchPlan pref_mp_svc(const VideoSpec& video, const BandwidthTrace& trace,
                      const PreferenceConfig& cfg) {
  return pref_mp_svc_schedule(video, deadlines(video), trace, cfg);
}

namespace detail {

// Base-layer sweep of the avoid-skips scheduler: all survivors start on
// link 1; whenever link 1's capacity by a survivor's deadline cannot carry
// its charge, the earliest base layer link 2 can admit moves over.
// Returns false for survivors that had to be dropped outright (pooled VBR
// scans can over-promise; under CBR this does not happen).
void avoid_skips_base_sweep(std::vector<int>& survivors,
                            std::vector<int>& on_link2,
                            const std::vector<Bytes>& sizes,
                            const DeadlineMap& dls,
                            const ResidualTrace& residual) {
  std::vector<int> m1 = survivors;  // ascending
  std::vector<int> m2;

  auto bytes_through = [&](const std::vector<int>& set, int limit) {
    Bytes sum = 0;
    for (int c : set)
      if (c <= limit) sum += sizes[c - 1];
    return sum;
  };
  auto link2_admits = [&](int extra) {
    std::vector<int> merged = m2;
    merged.insert(std::upper_bound(merged.begin(), merged.end(), extra), extra);
    Bytes running = 0;
    for (int c : merged) {
      running += sizes[c - 1];
      if (running > residual.cumulative(2, dls.at(c))) return false;
    }
    return true;
  };

  std::vector<int> checkpoints = survivors;
  for (int i : checkpoints) {
    while (bytes_through(m1, i) > residual.cumulative(1, dls.at(i))) {
      bool moved = false;
      for (size_t idx = 0; idx < m1.size(); ++idx) {
        if (link2_admits(m1[idx])) {
          int e = m1[idx];
          m1.erase(m1.begin() + idx);
          m2.insert(std::upper_bound(m2.begin(), m2.end(), e), e);
          moved = true;
          break;
        }
      }
      if (!moved) {
        // Neither link can carry the earliest charge; drop it.
        int victim = m1.front();
        m1.erase(m1.begin());
        survivors.erase(
            std::find(survivors.begin(), survivors.end(), victim));
      }
      if (m1.empty()) break;
    }
  }
  on_link2 = m2;
}

}  // namespace detail

FetchPlan avoid_skips_schedule(const VideoSpec& video, const DeadlineMap& dls,
                               const BandwidthTrace& trace) {
  video.validate();
  trace.validate();
  FetchPlan plan = FetchPlan::empty(video);
  if (video.chunk_count == 0) return plan;
  ResidualTrace residual(trace, dls.last());

  // Base layer: minimum skips over the pooled capacity of both links.
  auto sizes0 = sizes_by_chunk(video, 0);
  std::vector<int> cands(video.chunk_count);
  for (int i = 0; i < video.chunk_count; ++i) cands[i] = i + 1;
  auto scan = forward_scan(cands, sizes0, dls, residual, {1, 2});

  std::vector<int> survivors = scan.kept;
  std::vector<int> on_link2;
  detail::avoid_skips_base_sweep(survivors, on_link2, sizes0, dls, residual);

  for (int i : survivors) {
    int k = std::binary_search(on_link2.begin(), on_link2.end(), i) ? 2 : 1;
    std::vector<Bytes> copy = residual.link(k);
    FetchCost c = backward_fetch(copy, dls.at(i), dls.before(i), sizes0[i - 1]);
    if (!c.feasible) continue;
    residual.link(k) = std::move(copy);
    plan.link_of[0][i - 1] = k;
  }

  // Enhancement layers never touch link 2 in this regime.
  if (video.top_layer() >= 1)
    detail::schedule_layer_range(plan, residual, video, dls, 1,
                                 video.top_layer(), {1});
  return plan;
}

FetchPlan avoid_skips_mp_svc(const VideoSpec& video,
                             const BandwidthTrace& trace) {
  return avoid_skips_schedule(video, deadlines(video), trace);
}

}  // namespace mpsvc
