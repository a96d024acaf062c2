#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace erpdec {

using Matrix = Eigen::MatrixXd;
/// channels x time storage; rows are contiguous so per-channel filtering
/// walks memory linearly.
using ChannelMatrix =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

struct EventMarker {
  std::int64_t sample_index = 0;
  std::string stimulus_id;
  int presentation_ordinal = 0;  // 1-based count of this stimulus so far

  bool operator==(const EventMarker&) const = default;
};

/// One simulated (or ingested) session: multichannel voltage time series in
/// microvolts plus stimulus onset markers.
struct ContinuousRecording {
  std::string participant_id;
  std::vector<std::string> channel_labels;
  double sampling_rate_hz = 2000.0;
  ChannelMatrix samples;  // channels x time, microvolts
  std::vector<EventMarker> events;

  Eigen::Index n_channels() const { return samples.rows(); }
  Eigen::Index n_samples() const { return samples.cols(); }
};

/// Returns all invariant violations; an empty list means the recording is
/// consistent.
std::vector<std::string> validate_recording(const ContinuousRecording& rec);

/// Epoch length in samples for a sampling rate: round(1.1 * rate).
int epoch_samples(double sampling_rate_hz);
/// Samples before stimulus onset: round(0.2 * rate).
int epoch_baseline_samples(double sampling_rate_hz);

/// Stimulus-locked segment covering [-200, +900) ms around onset. The onset
/// sample belongs to the post-stimulus region.
struct Epoch {
  std::string participant_id;
  std::string stimulus_id;
  int presentation_ordinal = 0;
  ChannelMatrix data;  // channels x samples, microvolts
  int baseline_samples = 0;
  double sampling_rate_hz = 2000.0;
  bool rejected = false;
  std::string rejection_reason;  // in-memory only, not serialized
  std::optional<std::int8_t> label;

  double time_ms(Eigen::Index sample) const {
    return (static_cast<double>(sample) - baseline_samples) * 1000.0 /
           sampling_rate_hz;
  }
};

struct EpochSet {
  std::vector<Epoch> epochs;
  double sampling_rate_hz = 2000.0;
  std::vector<std::string> channel_labels;

  std::size_t size() const { return epochs.size(); }
  bool empty() const { return epochs.empty(); }
};

/// Per-(participant, stimulus) selection count across blocks, 0..3.
struct ExplicitRating {
  std::string participant_id;
  std::string stimulus_id;
  int count = 0;

  bool operator==(const ExplicitRating&) const = default;
};

enum class Tertile { Low, Medium, High };

const char* to_string(Tertile t);

struct RankedStimulus {
  std::string stimulus_id;
  long long score = 0;  // exact integer sum of counts across participants
  int rank = 0;         // dense, 1 = highest score
  Tertile tertile = Tertile::Medium;
};

/// Population preference ranking; entries ordered by (score desc,
/// stimulus_id asc).
struct GroupRanking {
  std::vector<RankedStimulus> entries;

  const RankedStimulus* find(const std::string& stimulus_id) const;
};

enum class LabelDomain { Rating, GroupTertile };

/// EpochSet whose epochs all carry one label from a homogeneous domain;
/// rejected epochs are dropped on construction.
struct LabeledEpochSet {
  EpochSet set;
  LabelDomain domain = LabelDomain::Rating;
};

/// Electrode layout: label plus schematic 2-D head position used for the
/// simulator's spatial falloff.
struct Montage {
  std::vector<std::string> labels;
  std::vector<std::pair<double, double>> positions;

  int index_of(const std::string& label) const;  // -1 when unknown
  double distance(int a, int b) const;
};

/// The 32-electrode 10-20 layout used throughout; includes Fz, Cz, Pz,
/// TP9/TP10, P7/P8.
const Montage& standard_montage_32();

}  // namespace erpdec
