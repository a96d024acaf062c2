#include "erpdec/preprocess.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace erpdec {

RejectionPolicy RejectionPolicy::fixed(double threshold_uv) {
  if (!(threshold_uv > 0.0)) {
    throw std::invalid_argument("fixed rejection threshold must be positive");
  }
  RejectionPolicy p;
  p.mode = Mode::FixedThreshold;
  p.threshold_uv = threshold_uv;
  return p;
}

RejectionPolicy RejectionPolicy::target(double fraction) {
  if (!(fraction > 0.0) || !(fraction < 1.0)) {
    throw std::invalid_argument("target rejection fraction must be in (0,1)");
  }
  RejectionPolicy p;
  p.mode = Mode::TargetFraction;
  p.fraction = fraction;
  return p;
}

void common_average_reference_inplace(ChannelMatrix& samples) {
  if (samples.rows() < 2) {
    throw std::invalid_argument(
        "common average reference needs at least 2 channels");
  }
  const Eigen::RowVectorXd mean = samples.colwise().mean();
  samples.rowwise() -= mean;
}

ContinuousRecording common_average_reference(ContinuousRecording rec) {
  common_average_reference_inplace(rec.samples);
  return rec;
}

void bandpass_inplace(ChannelMatrix& samples, double sampling_rate_hz,
                      const FilterSpec& spec) {
  if (!samples.allFinite()) {
    throw std::invalid_argument("non-finite samples in band-pass input");
  }
  const SosCascade sos = design_butterworth_bandpass(spec, sampling_rate_hz);
  const int pad = 3 * (2 * spec.order);
  const std::size_t n = static_cast<std::size_t>(samples.cols());
  if (spec.zero_phase) {
    for (Eigen::Index c = 0; c < samples.rows(); ++c) {
      sos_filtfilt(sos, pad, samples.row(c).data(), n);
    }
  } else {
    std::vector<double> row(n);
    for (Eigen::Index c = 0; c < samples.rows(); ++c) {
      std::copy(samples.row(c).data(), samples.row(c).data() + n, row.begin());
      sos_filter_forward(sos, row);
      std::copy(row.begin(), row.end(), samples.row(c).data());
    }
  }
}

ContinuousRecording bandpass(ContinuousRecording rec, const FilterSpec& spec) {
  bandpass_inplace(rec.samples, rec.sampling_rate_hz, spec);
  return rec;
}

Epoch extract_single_epoch(const ContinuousRecording& rec,
                           const EventMarker& event) {
  const int total = epoch_samples(rec.sampling_rate_hz);
  const int baseline = epoch_baseline_samples(rec.sampling_rate_hz);
  Epoch e;
  e.participant_id = rec.participant_id;
  e.stimulus_id = event.stimulus_id;
  e.presentation_ordinal = event.presentation_ordinal;
  e.baseline_samples = baseline;
  e.sampling_rate_hz = rec.sampling_rate_hz;
  const std::int64_t first = event.sample_index - baseline;
  const std::int64_t last = first + total;  // one past the end
  if (first < 0 || last > rec.samples.cols()) {
    e.data = ChannelMatrix::Zero(rec.samples.rows(), total);
    e.rejected = true;
    e.rejection_reason = "edge";
    return e;
  }
  e.data = rec.samples.middleCols(static_cast<Eigen::Index>(first), total);
  return e;
}

EpochSet extract_epochs(const ContinuousRecording& rec) {
  EpochSet set;
  set.sampling_rate_hz = rec.sampling_rate_hz;
  set.channel_labels = rec.channel_labels;
  set.epochs.reserve(rec.events.size());
  for (const auto& ev : rec.events) {
    set.epochs.push_back(extract_single_epoch(rec, ev));
  }
  return set;
}

void baseline_correct(Epoch& epoch) {
  if (epoch.baseline_samples <= 0) {
    throw std::invalid_argument("epoch has no baseline region");
  }
  const Eigen::VectorXd mean =
      epoch.data.leftCols(epoch.baseline_samples).rowwise().mean();
  epoch.data.colwise() -= mean;
}

void baseline_correct(EpochSet& set) {
  for (auto& e : set.epochs) baseline_correct(e);
}

double epoch_max_abs(const Epoch& epoch) {
  return epoch.data.cwiseAbs().maxCoeff();
}

double target_fraction_threshold(std::vector<double> maxima, double fraction,
                                 int* n_rejected) {
  if (maxima.empty()) {
    throw std::invalid_argument("no epochs to threshold");
  }
  std::sort(maxima.begin(), maxima.end());
  const int n = static_cast<int>(maxima.size());
  // Rejecting everything above maxima[c-1] keeps c epochs; a cut is only
  // achievable where consecutive order statistics differ.
  int best_keep = n;
  double best_err = std::abs(0.0 - fraction);
  for (int keep = n - 1; keep >= 0; --keep) {
    if (keep > 0 && maxima[keep - 1] == maxima[keep]) continue;
    const double err = std::abs(double(n - keep) / n - fraction);
    if (err < best_err) {
      best_err = err;
      best_keep = keep;
    }
  }
  if (n_rejected != nullptr) *n_rejected = n - best_keep;
  if (best_keep == 0) {
    // Reject-all cut: anything strictly below the smallest maximum.
    return std::nextafter(maxima.front(), -std::numeric_limits<double>::infinity());
  }
  return maxima[best_keep - 1];
}

RejectionOutcome reject_artifacts(EpochSet& set, const RejectionPolicy& policy) {
  if (set.epochs.empty()) {
    throw std::invalid_argument("cannot reject artifacts on an empty set");
  }
  RejectionOutcome out;
  std::vector<double> maxima;
  std::vector<std::size_t> candidates;
  for (std::size_t i = 0; i < set.epochs.size(); ++i) {
    if (set.epochs[i].rejected) continue;
    candidates.push_back(i);
    maxima.push_back(epoch_max_abs(set.epochs[i]));
  }
  out.n_candidates = static_cast<int>(candidates.size());
  if (candidates.empty()) return out;

  double threshold = policy.threshold_uv;
  if (policy.mode == RejectionPolicy::Mode::TargetFraction) {
    threshold = target_fraction_threshold(maxima, policy.fraction);
  }
  out.threshold_uv = threshold;
  for (std::size_t k = 0; k < candidates.size(); ++k) {
    if (maxima[k] > threshold) {
      auto& e = set.epochs[candidates[k]];
      e.rejected = true;
      e.rejection_reason = "amplitude";
      ++out.n_rejected;
    }
  }
  return out;
}

}  // namespace erpdec
