#pragma once

#include <vector>

#include "mpsvc/types.hpp"
#include "mpsvc/video.hpp"

namespace mpsvc {

struct DeadlineMap {
  // deadline[i-1] = last slot in which chunk i may receive bytes.
  std::vector<Slot> deadline;

  Slot at(int chunk) const { return deadline[chunk - 1]; }
  // deadline(0) = 0 by convention; used as the cost boundary of chunk 1.
  Slot before(int chunk) const { return chunk <= 1 ? 0 : deadline[chunk - 2]; }
  int chunks() const { return static_cast<int>(deadline.size()); }
  Slot last() const { return deadline.empty() ? 0 : deadline.back(); }
};

// Skip mode: deadline(i) = (i-1)*L + s.
DeadlineMap deadlines(const VideoSpec& video);

// No-skip offline mode: all stalls are moved to the start, so every chunk
// shifts uniformly by the final stall d(C). The stall vector must be
// monotone non-decreasing and non-negative.
DeadlineMap deadlines(const VideoSpec& video, const std::vector<Slot>& stall);

}  // namespace mpsvc
