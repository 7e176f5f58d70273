#pragma once

#include <vector>

#include "mpsvc/deadline.hpp"
#include "mpsvc/plan.hpp"
#include "mpsvc/scheduler.hpp"
#include "mpsvc/video.hpp"

namespace mpsvc::detail {

// Forward-scan then backward-assign layers [from, to] with chaining from
// the plan's lower layers.
void schedule_layer_range(FetchPlan& plan, ResidualTrace& residual,
                          const VideoSpec& video, const DeadlineMap& dls,
                          int from_layer, int to_layer,
                          const std::vector<int>& allowed);

// Avoid-skips base sweep: survivors start on link 1; the earliest base
// layers link 2 can admit move over whenever link 1 is overloaded.
// Survivors neither link can carry are removed from the vector.
void avoid_skips_base_sweep(std::vector<int>& survivors,
                            std::vector<int>& on_link2,
                            const std::vector<Bytes>& sizes,
                            const DeadlineMap& dls,
                            const ResidualTrace& residual);

}  // namespace mpsvc::detail
