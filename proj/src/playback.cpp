#include "mpsvc/playback.hpp"

#include <algorithm>
#include <cmath>

namespace mpsvc {

Bytes DownloadLog::link_bytes(int link) const {
  Bytes total = 0;
  for (Bytes b : consumed[link - 1]) total += b;
  return total;
}

DownloadLog simulate_download(const FetchPlan& plan,
                              const BandwidthTrace& trace,
                              const VideoSpec& video, const DeadlineMap& dls) {
  plan.validate(video);
  trace.validate();

  DownloadLog log;
  int layers = video.layer_count();
  int chunks = video.chunk_count;
  Slot horizon = dls.last();
  log.completion_slot.assign(layers, std::vector<Slot>(chunks, 0));
  log.consumed.assign(trace.links(),
                      std::vector<Bytes>(static_cast<size_t>(horizon), 0));
  log.skipped.assign(chunks, false);
  log.effective_quality.assign(chunks, -1);
  log.stall_slots = plan.final_stall();
  if (log.stall_slots > 0)
    log.stall_intervals.push_back({video.startup_delay + 1, log.stall_slots});

  struct Item {
    int chunk;
    int layer;
    Bytes remaining;
  };
  std::vector<std::vector<Item>> queue(trace.links());
  for (int i = 1; i <= chunks; ++i)
    for (int n = 0; n < layers; ++n) {
      int k = plan.link(n, i);
      if (k != kSkipped)
        queue[k - 1].push_back({i, n, video.layer_size(n, i)});
    }
  // (chunk, layer) order == deadline order; forward service preserves
  // feasibility of any backward-packed plan.

  for (int k = 0; k < trace.links(); ++k) {
    size_t head = 0;
    for (Slot j = 1; j <= horizon && head < queue[k].size(); ++j) {
      Bytes cap = trace.at(k + 1, j);
      while (cap > 0 && head < queue[k].size()) {
        Item& item = queue[k][head];
        Bytes take = std::min(cap, item.remaining);
        item.remaining -= take;
        cap -= take;
        log.consumed[k][j - 1] += take;
        if (item.remaining == 0) {
          log.completion_slot[item.layer][item.chunk - 1] = j;
          if (j > dls.at(item.chunk)) ++log.late_layers;
          ++head;
        }
      }
    }
  }

  for (int i = 1; i <= chunks; ++i) {
    int q = -1;
    for (int n = 0; n < layers; ++n) {
      Slot done = log.completion_slot[n][i - 1];
      if (done == 0 || done > dls.at(i)) break;
      q = n;
    }
    log.effective_quality[i - 1] = q;
    log.skipped[i - 1] = q < 0;
  }
  return log;
}

QoeReport compute_metrics(const DownloadLog& log, const VideoSpec& video) {
  if (video.nominal_rates.empty())
    throw ValidationError("metrics need the video's nominal rate ladder");
  QoeReport report;
  int chunks = video.chunk_count;
  report.layer_pmf.assign(video.layer_count() + 1, 0.0);
  report.link_bytes.resize(log.consumed.size());
  for (size_t k = 0; k < log.consumed.size(); ++k)
    report.link_bytes[k] = log.link_bytes(static_cast<int>(k) + 1);
  report.stall_slots = log.stall_slots;

  auto rate_of = [&](int chunk) -> Bytes {
    int q = log.effective_quality[chunk - 1];
    return q < 0 ? 0 : video.nominal_rates[q];
  };

  double rate_sum = 0;
  for (int i = 1; i <= chunks; ++i) {
    int q = log.effective_quality[i - 1];
    if (q < 0) {
      ++report.skip_count;
      report.layer_pmf[0] += 1.0;
    } else {
      ++report.played_count;
      rate_sum += static_cast<double>(video.nominal_rates[q]);
      report.layer_pmf[q + 1] += 1.0;
    }
  }
  report.skip_slots = static_cast<Slot>(report.skip_count) * video.chunk_duration;
  if (report.played_count > 0)
    report.avg_playback_rate = rate_sum / report.played_count;
  if (chunks > 0)
    for (double& p : report.layer_pmf) p /= chunks;

  if (chunks >= 2) {
    double total = 0;
    for (int i = 2; i <= chunks; ++i)
      total += std::abs(static_cast<double>(rate_of(i) - rate_of(i - 1)));
    report.layer_switching_rate = total / (chunks - 1);
  }
  return report;
}

}  // namespace mpsvc
