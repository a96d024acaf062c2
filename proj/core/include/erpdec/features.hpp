#pragma once

#include "erpdec/io.hpp"
#include "erpdec/types.hpp"

namespace erpdec {

inline constexpr int kFeatureWindows = 15;
inline constexpr double kFeatureStartMs = 50.0;
inline constexpr double kFeatureWindowMs = 50.0;  // windows tile [50, 800)

struct FeatureVector {
  std::string participant_id;
  std::string stimulus_id;
  int label = 0;
  Eigen::VectorXd values;  // channel-major: channel 0 windows 0..14, ...
};

/// Window index for a post-stimulus offset, or -1 outside [50, 800) ms.
int feature_window_of(double t_ms);

/// Averages each channel over the 15 windows. Throws on rejected epochs,
/// epochs not covering 800 ms, or empty windows.
FeatureVector vectorize(const Epoch& epoch);

/// Vectorizes every epoch of a labeled set into one matrix.
FeatureMatrix vectorize_set(const LabeledEpochSet& labeled);

}  // namespace erpdec
