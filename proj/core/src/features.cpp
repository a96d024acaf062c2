#include "erpdec/features.hpp"

#include <cmath>
#include <stdexcept>

namespace erpdec {

int feature_window_of(double t_ms) {
  if (t_ms < kFeatureStartMs) return -1;
  const int w = static_cast<int>(
      std::floor((t_ms - kFeatureStartMs) / kFeatureWindowMs));
  return w < kFeatureWindows ? w : -1;
}

FeatureVector vectorize(const Epoch& epoch) {
  if (epoch.rejected) {
    throw std::invalid_argument("cannot vectorize a rejected epoch");
  }
  const double end_ms =
      kFeatureStartMs + kFeatureWindows * kFeatureWindowMs;  // 800
  const double last_ms = epoch.time_ms(epoch.data.cols() - 1);
  if (last_ms < end_ms - 1000.0 / epoch.sampling_rate_hz) {
    throw std::invalid_argument("epoch too short to cover 800 ms");
  }

  const Eigen::Index channels = epoch.data.rows();
  Eigen::VectorXd sums = Eigen::VectorXd::Zero(channels * kFeatureWindows);
  std::array<int, kFeatureWindows> counts{};
  for (Eigen::Index s = 0; s < epoch.data.cols(); ++s) {
    const int w = feature_window_of(epoch.time_ms(s));
    if (w < 0) continue;
    ++counts[static_cast<std::size_t>(w)];
    for (Eigen::Index c = 0; c < channels; ++c) {
      sums[c * kFeatureWindows + w] += epoch.data(c, s);
    }
  }
  for (int w = 0; w < kFeatureWindows; ++w) {
    if (counts[static_cast<std::size_t>(w)] == 0) {
      throw std::invalid_argument(
          "sampling rate too low: feature window has no samples");
    }
  }

  FeatureVector fv;
  fv.participant_id = epoch.participant_id;
  fv.stimulus_id = epoch.stimulus_id;
  fv.label = epoch.label.value_or(0);
  fv.values = std::move(sums);
  for (Eigen::Index c = 0; c < channels; ++c) {
    for (int w = 0; w < kFeatureWindows; ++w) {
      fv.values[c * kFeatureWindows + w] /= counts[static_cast<std::size_t>(w)];
    }
  }
  return fv;
}

FeatureMatrix vectorize_set(const LabeledEpochSet& labeled) {
  const auto& set = labeled.set;
  FeatureMatrix fm;
  const Eigen::Index dim =
      static_cast<Eigen::Index>(set.channel_labels.size()) * kFeatureWindows;
  fm.x.resize(static_cast<Eigen::Index>(set.epochs.size()), dim);
  fm.labels.reserve(set.epochs.size());
  fm.participant_ids.reserve(set.epochs.size());
  fm.stimulus_ids.reserve(set.epochs.size());
  Eigen::Index row = 0;
  for (const auto& e : set.epochs) {
    FeatureVector fv = vectorize(e);
    fm.x.row(row++) = fv.values.transpose();
    fm.labels.push_back(fv.label);
    fm.participant_ids.push_back(std::move(fv.participant_id));
    fm.stimulus_ids.push_back(std::move(fv.stimulus_id));
  }
  return fm;
}

}  // namespace erpdec
