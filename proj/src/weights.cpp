#include "mpsvc/weights.hpp"

namespace mpsvc {

WeightTable build_weights(int chunk_count, int enhancement_layers, Bytes ymax) {
  if (chunk_count < 1 || enhancement_layers < 0 || ymax < 1)
    throw ValidationError("build_weights: need C >= 1, N >= 0, ymax >= 1");

  WeightTable w;
  int layers = enhancement_layers + 1;
  w.lambda.assign(layers, std::vector<Weight>(2, 0));

  Weight running = 0;  // sum of everything strictly below the current slot
  Weight factor = Weight(chunk_count) * ymax;
  for (int n = layers - 1; n >= 0; --n) {
    for (int k = 2; k >= 1; --k) {
      Weight value = 1 + factor * running;
      w.lambda[n][k - 1] = value;
      running += value;
    }
  }
  w.mu = Weight(chunk_count + 1) * w.lambda[0][0] + 1;
  return w;
}

bool validate_weights(const WeightTable& weights, const VideoSpec& video) {
  int layers = video.layer_count();
  if (weights.layers() != layers)
    throw ValidationError("weight table layer count does not match video");

  // Per-layer maximum chunk size stands in for the size factor under VBR.
  std::vector<Bytes> ymax(layers, 0);
  for (int n = 0; n < layers; ++n)
    for (Bytes b : video.layer_sizes[n]) ymax[n] = std::max(ymax[n], b);

  Weight C = video.chunk_count;
  for (int a = 0; a < layers; ++a) {
    Weight bound1 = 0;
    for (int n = a; n < layers; ++n) bound1 += weights.lambda[n][1];
    for (int n = a + 1; n < layers; ++n) bound1 += weights.lambda[n][0];
    if (!(weights.lambda[a][0] > C * bound1)) return false;

    Weight bound2 = 0;
    for (int n = a + 1; n < layers; ++n)
      bound2 += weights.lambda[n][1] * ymax[n];
    if (!(weights.lambda[a][1] > C * bound2)) return false;
  }
  return true;
}

}  // namespace mpsvc
