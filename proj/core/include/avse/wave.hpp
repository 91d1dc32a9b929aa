#pragma once

#include <vector>

namespace avse {

// Mono sampled signal, nominal amplitude range [-1, 1].
struct Waveform {
  std::vector<double> samples;
  int sample_rate = 0;

  double duration_s() const {
    return sample_rate > 0 ? static_cast<double>(samples.size()) / sample_rate : 0.0;
  }
  size_t size() const { return samples.size(); }
};

}  // namespace avse
