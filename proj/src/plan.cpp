#include "mpsvc/plan.hpp"

#include <cinttypes>
#include <cstdio>

namespace mpsvc {

int FetchPlan::quality(int chunk) const {
  int q = -1;
  for (int n = 0; n < layers(); ++n) {
    if (!fetched(n, chunk)) break;
    q = n;
  }
  return q;
}

int FetchPlan::skip_count() const {
  int skips = 0;
  for (int i = 1; i <= chunks(); ++i)
    if (!fetched(0, i)) ++skips;
  return skips;
}

Bytes FetchPlan::bytes_on_link(int link, const VideoSpec& video) const {
  Bytes total = 0;
  for (int n = 0; n < layers(); ++n)
    for (int i = 1; i <= chunks(); ++i)
      if (link_of[n][i - 1] == link) total += video.layer_size(n, i);
  return total;
}

int FetchPlan::fetch_count(int layer) const {
  int count = 0;
  for (int i = 1; i <= chunks(); ++i)
    if (fetched(layer, i)) ++count;
  return count;
}

void FetchPlan::validate(const VideoSpec& video, int n2) const {
  if (layers() != video.layer_count() || chunks() != video.chunk_count)
    throw ValidationError("plan dimensions do not match video");
  for (int i = 1; i <= chunks(); ++i) {
    for (int n = 1; n < layers(); ++n) {
      if (fetched(n, i) && !fetched(n - 1, i))
        throw ValidationError("layer monotonicity violated");
    }
    if (n2 >= 0) {
      for (int n = n2 + 1; n < layers(); ++n)
        if (link(n, i) == 2)
          throw ValidationError("link 2 carries a layer above n2");
    }
  }
  if (!stall.empty()) {
    if (static_cast<int>(stall.size()) != chunks())
      throw ValidationError("stall vector length mismatch");
    Slot prev = 0;
    for (Slot d : stall) {
      if (d < prev) throw ValidationError("stall vector must be non-decreasing");
      prev = d;
    }
  }
}

std::string FetchPlan::digest() const {
  // FNV-1a over the assignment table and stall vector.
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t v) {
    for (int b = 0; b < 8; ++b) {
      h ^= (v >> (8 * b)) & 0xff;
      h *= 1099511628211ull;
    }
  };
  for (const auto& row : link_of)
    for (int v : row) mix(static_cast<std::uint64_t>(v));
  for (Slot d : stall) mix(static_cast<std::uint64_t>(d));
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016" PRIx64, h);
  return buf;
}

FetchPlan FetchPlan::empty(const VideoSpec& video) {
  FetchPlan p;
  p.link_of.assign(video.layer_count(),
                   std::vector<int>(video.chunk_count, kSkipped));
  return p;
}

void PreferenceConfig::validate(const VideoSpec& video) const {
  if (n2 < 0 || n2 > video.top_layer())
    throw ValidationError("n2 must lie in [0, N]");
}

Bytes LinkByteSplit::link_total(int link) const {
  Bytes total = 0;
  for (const auto& layer : bytes[link - 1])
    for (Bytes b : layer) total += b;
  return total;
}

}  // namespace mpsvc
