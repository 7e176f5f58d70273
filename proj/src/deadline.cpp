#include "mpsvc/deadline.hpp"

namespace mpsvc {

DeadlineMap deadlines(const VideoSpec& video) {
  DeadlineMap map;
  map.deadline.resize(video.chunk_count);
  for (int i = 1; i <= video.chunk_count; ++i)
    map.deadline[i - 1] =
        static_cast<Slot>(i - 1) * video.chunk_duration + video.startup_delay;
  return map;
}

DeadlineMap deadlines(const VideoSpec& video, const std::vector<Slot>& stall) {
  if (static_cast<int>(stall.size()) != video.chunk_count)
    throw ValidationError("stall vector length must equal chunk count");
  Slot prev = 0;
  for (Slot d : stall) {
    if (d < prev) throw ValidationError("stall vector must be non-decreasing");
    prev = d;
  }
  Slot shift = stall.empty() ? 0 : stall.back();
  DeadlineMap map = deadlines(video);
  for (Slot& d : map.deadline) d += shift;
  return map;
}

}  // namespace mpsvc
