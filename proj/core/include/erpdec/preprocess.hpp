#pragma once

#include <string>

#include "erpdec/filter.hpp"
#include "erpdec/types.hpp"

namespace erpdec {

/// How epochs containing artifacts are selected for rejection, applied to
/// per-epoch absolute maximum voltage after baseline correction.
struct RejectionPolicy {
  enum class Mode { FixedThreshold, TargetFraction };
  Mode mode = Mode::TargetFraction;
  double threshold_uv = 100.0;  // FixedThreshold
  double fraction = 0.122;      // TargetFraction

  static RejectionPolicy fixed(double threshold_uv);
  static RejectionPolicy target(double fraction);
};

struct RejectionOutcome {
  int n_rejected = 0;
  int n_candidates = 0;       // epochs not already rejected upstream
  double threshold_uv = 0.0;  // threshold actually applied
};

/// Subtracts the instantaneous mean across channels from every channel.
/// Throws std::invalid_argument on fewer than 2 channels.
ContinuousRecording common_average_reference(ContinuousRecording rec);
void common_average_reference_inplace(ChannelMatrix& samples);

/// Per-channel zero-phase band-pass (forward-backward when
/// spec.zero_phase, single causal pass otherwise). Throws on invalid band
/// edges or non-finite samples.
ContinuousRecording bandpass(ContinuousRecording rec, const FilterSpec& spec);
void bandpass_inplace(ChannelMatrix& samples, double sampling_rate_hz,
                      const FilterSpec& spec);

/// Cuts one [-200, +900) ms epoch per event. Events too close to the
/// recording edge yield zero-filled epochs flagged rejected with reason
/// "edge" rather than being dropped.
EpochSet extract_epochs(const ContinuousRecording& rec);

/// Copies one event's epoch without materializing the whole set; the
/// streaming pipeline path. Returns the same epoch extract_epochs would.
Epoch extract_single_epoch(const ContinuousRecording& rec,
                           const EventMarker& event);

/// Subtracts each channel's mean over [-200, 0) ms from the whole epoch
/// (baseline region included). Idempotent.
void baseline_correct(EpochSet& set);
void baseline_correct(Epoch& epoch);

/// Largest absolute voltage in the epoch.
double epoch_max_abs(const Epoch& epoch);

/// Flags artifact epochs. FixedThreshold rejects max|v| > threshold;
/// TargetFraction picks the achievable order-statistic cut whose rejected
/// fraction is closest to the target. Throws std::invalid_argument on an
/// empty set.
RejectionOutcome reject_artifacts(EpochSet& set, const RejectionPolicy& policy);

/// TargetFraction threshold from precomputed per-epoch maxima; shared by
/// the set-based and streaming paths.
double target_fraction_threshold(std::vector<double> maxima, double fraction,
                                 int* n_rejected = nullptr);

}  // namespace erpdec
