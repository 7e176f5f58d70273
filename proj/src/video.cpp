#include "mpsvc/video.hpp"

#include <algorithm>
#include <utility>

namespace mpsvc {

bool VideoSpec::layer_is_cbr(int layer) const {
  const auto& sizes = layer_sizes[layer];
  return std::all_of(sizes.begin(), sizes.end(),
                     [&](Bytes b) { return b == sizes.front(); });
}

Bytes VideoSpec::max_layer_size() const {
  Bytes best = 1;
  for (const auto& sizes : layer_sizes)
    for (Bytes b : sizes) best = std::max(best, b);
  return best;
}

Bytes VideoSpec::cumulative_size(int quality, int chunk) const {
  Bytes total = 0;
  for (int n = 0; n <= quality; ++n) total += layer_size(n, chunk);
  return total;
}

void VideoSpec::validate() const {
  if (chunk_count < 0) throw ValidationError("chunk_count must be >= 0");
  if (chunk_duration < 1) throw ValidationError("chunk_duration must be >= 1");
  if (startup_delay < 0) throw ValidationError("startup_delay must be >= 0");
  if (layer_sizes.empty()) throw ValidationError("at least one layer required");
  for (const auto& sizes : layer_sizes) {
    if (static_cast<int>(sizes.size()) != chunk_count)
      throw ValidationError("layer size table does not match chunk_count");
    for (Bytes b : sizes)
      if (b <= 0) throw ValidationError("layer sizes must be positive");
  }
  if (!nominal_rates.empty()) {
    if (static_cast<int>(nominal_rates.size()) != layer_count())
      throw ValidationError("nominal_rates does not match layer count");
    for (size_t n = 1; n < nominal_rates.size(); ++n)
      if (nominal_rates[n] <= nominal_rates[n - 1])
        throw ValidationError("cumulative nominal rates must increase");
  }
}

VideoSpec VideoSpec::cbr(int chunk_count, int chunk_duration, int startup_delay,
                         const std::vector<Bytes>& cumulative_rates) {
  VideoSpec v;
  v.chunk_count = chunk_count;
  v.chunk_duration = chunk_duration;
  v.startup_delay = startup_delay;
  v.nominal_rates = cumulative_rates;
  v.layer_sizes.resize(cumulative_rates.size());
  for (size_t n = 0; n < cumulative_rates.size(); ++n) {
    Bytes prev = n == 0 ? 0 : cumulative_rates[n - 1];
    Bytes size = static_cast<Bytes>(chunk_duration) * (cumulative_rates[n] - prev);
    v.layer_sizes[n].assign(chunk_count, size);
  }
  v.validate();
  return v;
}

VideoSpec VideoSpec::vbr(int chunk_count, int chunk_duration, int startup_delay,
                         std::vector<std::vector<Bytes>> layer_sizes,
                         std::vector<Bytes> nominal_rates) {
  VideoSpec v;
  v.chunk_count = chunk_count;
  v.chunk_duration = chunk_duration;
  v.startup_delay = startup_delay;
  v.layer_sizes = std::move(layer_sizes);
  v.nominal_rates = std::move(nominal_rates);
  v.validate();
  return v;
}

}  // namespace mpsvc
