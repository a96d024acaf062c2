#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "erpdec/types.hpp"

namespace erpdec {

// Epoch file layout ("ERP1", little-endian):
//   magic "ERP1"
//   u32 epoch count, u32 channels, u32 samples per epoch, f64 sampling rate
//   per channel: u32 byte length + UTF-8 label
//   per epoch:
//     u32 byte length + UTF-8 participant_id
//     u32 byte length + UTF-8 stimulus_id
//     i32 presentation_ordinal
//     u8 rejected flag
//     i8 label (-128 = none)
//     f64 x channels x samples voltages, row-major (channel 0 first)
void write_epochs(const std::filesystem::path& path, const EpochSet& set);
EpochSet read_epochs(const std::filesystem::path& path);

/// Inspection export: one row per sample per epoch
/// (epoch, participant_id, stimulus_id, label, rejected, t_ms, <channels...>).
void write_epochs_csv(const std::filesystem::path& path, const EpochSet& set);

// Recording file layout ("ERC1", little-endian):
//   magic "ERC1"
//   u32 channels, u64 samples, f64 sampling rate
//   u32 byte length + UTF-8 participant_id
//   per channel: u32 byte length + UTF-8 label
//   u32 event count; per event: i64 sample index,
//     u32 byte length + UTF-8 stimulus_id, i32 presentation_ordinal
//   f64 x channels x samples voltages, row-major
void write_recording(const std::filesystem::path& path,
                     const ContinuousRecording& rec);
ContinuousRecording read_recording(const std::filesystem::path& path);

void write_ratings_csv(const std::filesystem::path& path,
                       const std::vector<ExplicitRating>& ratings);
std::vector<ExplicitRating> read_ratings_csv(const std::filesystem::path& path);

void write_ranking_csv(const std::filesystem::path& path,
                       const GroupRanking& ranking);

struct FeatureMatrix {
  Matrix x;  // n x (channels * windows)
  std::vector<int> labels;
  std::vector<std::string> participant_ids;
  std::vector<std::string> stimulus_ids;

  Eigen::Index size() const { return x.rows(); }
};

/// Features CSV: participant_id, stimulus_id, label, f0..f<d-1>.
void write_features_csv(const std::filesystem::path& path,
                        const FeatureMatrix& features);
FeatureMatrix read_features_csv(const std::filesystem::path& path);

/// FNV-1a 64-bit over a file's bytes, as a 16-digit hex string. Used for
/// artifact manifests and payload pinning; not cryptographic.
std::uint64_t fnv1a64(const void* data, std::size_t size);
std::string hash_file(const std::filesystem::path& path);

/// Formats a double with enough digits to round-trip (shortest %.17g form).
std::string format_double(double v);
std::string json_escape(const std::string& s);

}  // namespace erpdec
