#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "mpsvc/types.hpp"
#include "mpsvc/video.hpp"

namespace mpsvc {

using Weight = boost::multiprecision::cpp_int;

// Priority weights of the objective. lambda[n][k-1] is the utility of
// fetching layer n over link k; mu is the per-slot stall penalty. Values
// are exact big integers so plan comparisons are never subject to
// rounding or overflow.
struct WeightTable {
  std::vector<std::vector<Weight>> lambda;  // [layer][link-1], 2 links
  Weight mu = 0;

  int layers() const { return static_cast<int>(lambda.size()); }
};

// Fully ordered lexicographic construction: walking the priority list
//   lambda_0^(1) > lambda_0^(2) > lambda_1^(1) > lambda_1^(2) > ...
// from the lowest priority upward, each weight is
//   1 + C * ymax * (sum of all lower-priority weights),
// and mu = (C+1) * lambda_0^(1) + 1 so one slot of stall outweighs any
// quality gain. The result always passes validate_weights.
WeightTable build_weights(int chunk_count, int enhancement_layers, Bytes ymax);

// Strict check of the two weight-ordering conditions, using the video's
// per-layer maximum chunk size for the size factor (VBR safe).
bool validate_weights(const WeightTable& weights, const VideoSpec& video);

}  // namespace mpsvc
