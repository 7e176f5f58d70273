#include "mpsvc/trace.hpp"

#include <numeric>

namespace mpsvc {

Bytes BandwidthTrace::at(int link, Slot slot) const {
  const auto& series = bw[link - 1];
  if (series.empty()) return 0;
  if (slot <= static_cast<Slot>(series.size())) return series[slot - 1];
  return series.back();  // extension rule
}

std::vector<Bytes> BandwidthTrace::materialize(int link, Slot horizon) const {
  std::vector<Bytes> out(static_cast<size_t>(horizon), 0);
  for (Slot j = 1; j <= horizon; ++j) out[j - 1] = at(link, j);
  return out;
}

void BandwidthTrace::validate() const {
  if (bw.empty()) throw ValidationError("trace needs at least one link");
  for (const auto& series : bw) {
    if (series.size() != bw[0].size())
      throw ValidationError("all links must cover the same slots");
    for (Bytes b : series)
      if (b < 0) throw ValidationError("bandwidth must be non-negative");
  }
}

CumulativeBandwidth::CumulativeBandwidth(const BandwidthTrace& trace) {
  slots_ = trace.slots();
  prefix_.resize(trace.links());
  last_value_.resize(trace.links());
  for (int k = 0; k < trace.links(); ++k) {
    prefix_[k].resize(slots_ + 1, 0);
    for (Slot j = 1; j <= slots_; ++j)
      prefix_[k][j] = prefix_[k][j - 1] + trace.bw[k][j - 1];
    last_value_[k] = slots_ > 0 ? trace.bw[k][slots_ - 1] : 0;
  }
}

Bytes CumulativeBandwidth::at(int link, Slot slot) const {
  const auto& p = prefix_[link - 1];
  if (slot <= slots_) return p[slot < 0 ? 0 : slot];
  return p[slots_] + (slot - slots_) * last_value_[link - 1];
}

Bytes CumulativeBandwidth::total(Slot slot) const {
  Bytes sum = 0;
  for (int k = 1; k <= links(); ++k) sum += at(k, slot);
  return sum;
}

CumulativeBandwidth cumulative_bandwidth(const BandwidthTrace& trace) {
  return CumulativeBandwidth(trace);
}

BandwidthTrace aggregate_trace(const BandwidthTrace& trace) {
  BandwidthTrace out;
  Slot T = trace.slots();
  out.bw.assign(2, std::vector<Bytes>(static_cast<size_t>(T), 0));
  for (int k = 0; k < trace.links(); ++k)
    for (Slot j = 0; j < T; ++j) out.bw[0][j] += trace.bw[k][j];
  return out;
}

}  // namespace mpsvc
