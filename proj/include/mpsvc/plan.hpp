#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mpsvc/types.hpp"
#include "mpsvc/video.hpp"

namespace mpsvc {

inline constexpr int kSkipped = 0;  // link label of an unfetched layer

// Which link fetches each layer of each chunk (0 = skipped, else 1..K),
// plus the per-chunk stall vector for no-skip plans (empty or all-zero in
// skip mode). Layer monotonicity holds for every plan produced here: a
// fetched layer implies its lower layer is fetched.
struct FetchPlan {
  // link_of[n][i-1] = link fetching layer n of chunk i, or kSkipped.
  std::vector<std::vector<int>> link_of;
  std::vector<Slot> stall;  // d(i); empty means no stalls

  int layers() const { return static_cast<int>(link_of.size()); }
  int chunks() const {
    return link_of.empty() ? 0 : static_cast<int>(link_of[0].size());
  }

  int link(int layer, int chunk) const { return link_of[layer][chunk - 1]; }
  bool fetched(int layer, int chunk) const {
    return link(layer, chunk) != kSkipped;
  }

  Slot final_stall() const { return stall.empty() ? 0 : stall.back(); }

  // Highest quality with layers 0..q fetched; -1 when the chunk is skipped.
  int quality(int chunk) const;

  // Number of base-layer skips.
  int skip_count() const;

  // Bytes assigned to `link` across all fetched layers.
  Bytes bytes_on_link(int link, const VideoSpec& video) const;

  // Count of fetched layer-n units.
  int fetch_count(int layer) const;

  // Throws ValidationError on layer-monotonicity or stall-monotonicity
  // violations; checks the n2 cap when n2 >= 0.
  void validate(const VideoSpec& video, int n2 = -1) const;

  // Stable content hash for regression records.
  std::string digest() const;

  static FetchPlan empty(const VideoSpec& video);
};

// Link preference: link 2 may only carry layers up to index n2.
// n2 = N disables the preference; n2 = 0 leaves link 2 for base layers.
struct PreferenceConfig {
  int n2 = 0;

  void validate(const VideoSpec& video) const;
};

// Per-link byte attribution when a layer may be split across physical
// links (MPTCP plans only).
struct LinkByteSplit {
  // bytes[k-1][n][i-1] = bytes of layer n of chunk i carried by link k.
  std::vector<std::vector<std::vector<Bytes>>> bytes;

  Bytes link_total(int link) const;
};

}  // namespace mpsvc
