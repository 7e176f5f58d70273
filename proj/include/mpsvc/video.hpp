#pragma once

#include <vector>

#include "mpsvc/types.hpp"

namespace mpsvc {

// A chunked, layered (SVC) video. Layer 0 is the base layer; layer n is
// decodable only if layers 0..n-1 are present. Sizes are per chunk so VBR
// encodings are first class; nominal_rates keeps the cumulative ladder
// (bytes/slot up to and including each layer) for metrics.
struct VideoSpec {
  int chunk_count = 0;     // C
  int chunk_duration = 1;  // L, slots per chunk
  int startup_delay = 0;   // s, slots

  // layer_sizes[n][i-1] = bytes of layer n of chunk i.
  std::vector<std::vector<Bytes>> layer_sizes;
  // Cumulative nominal rate of quality n, bytes per slot.
  std::vector<Bytes> nominal_rates;

  int layer_count() const { return static_cast<int>(layer_sizes.size()); }
  int top_layer() const { return layer_count() - 1; }

  Bytes layer_size(int layer, int chunk) const {
    return layer_sizes[layer][chunk - 1];
  }

  // True when every chunk has the same size at this layer.
  bool layer_is_cbr(int layer) const;

  Bytes max_layer_size() const;

  // Total bytes of layers 0..quality of one chunk.
  Bytes cumulative_size(int quality, int chunk) const;

  // Throws ValidationError on inconsistent dimensions or non-positive sizes.
  void validate() const;

  // CBR video: layer n size is L*(rates[n] - rates[n-1]) for every chunk.
  static VideoSpec cbr(int chunk_count, int chunk_duration, int startup_delay,
                       const std::vector<Bytes>& cumulative_rates);

  // VBR video: explicit per-chunk sizes; nominal rates kept for metrics.
  static VideoSpec vbr(int chunk_count, int chunk_duration, int startup_delay,
                       std::vector<std::vector<Bytes>> layer_sizes,
                       std::vector<Bytes> nominal_rates);
};

}  // namespace mpsvc
