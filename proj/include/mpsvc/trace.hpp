#pragma once

#include <vector>

#include "mpsvc/types.hpp"

namespace mpsvc {

// Per-link available bandwidth, bytes per slot. Queries past the recorded
// horizon extend the trace with its final value (the documented rule for
// traces shorter than the video).
struct BandwidthTrace {
  // bw[k][j-1] = bytes available on link k+1 during slot j.
  std::vector<std::vector<Bytes>> bw;

  int links() const { return static_cast<int>(bw.size()); }
  Slot slots() const { return bw.empty() ? 0 : static_cast<Slot>(bw[0].size()); }

  Bytes at(int link, Slot slot) const;

  // Per-link bytes as a vector of length `horizon`, extended with the last
  // recorded value when horizon exceeds the trace.
  std::vector<Bytes> materialize(int link, Slot horizon) const;

  void validate() const;
};

// Prefix sums R(k, j) = sum of bw over slots 1..j, with R(k, 0) = 0.
// Queries beyond the trace extrapolate linearly with the last slot value.
class CumulativeBandwidth {
 public:
  explicit CumulativeBandwidth(const BandwidthTrace& trace);

  Bytes at(int link, Slot slot) const;
  int links() const { return static_cast<int>(prefix_.size()); }
  Slot slots() const { return slots_; }

  // Sum over all links at `slot`.
  Bytes total(Slot slot) const;

 private:
  std::vector<std::vector<Bytes>> prefix_;  // prefix_[k][j], j = 0..T
  std::vector<Bytes> last_value_;
  Slot slots_ = 0;
};

CumulativeBandwidth cumulative_bandwidth(const BandwidthTrace& trace);

// Sum of all links on link 1, zeros elsewhere; the MPTCP view of the pipe.
BandwidthTrace aggregate_trace(const BandwidthTrace& trace);

}  // namespace mpsvc
