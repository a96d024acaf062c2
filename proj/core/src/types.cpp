#include "erpdec/types.hpp"

#include <cmath>
#include <sstream>

namespace erpdec {

std::vector<std::string> validate_recording(const ContinuousRecording& rec) {
  std::vector<std::string> errors;
  if (rec.samples.rows() != static_cast<Eigen::Index>(rec.channel_labels.size())) {
    std::ostringstream os;
    os << "channel count mismatch: " << rec.samples.rows() << " sample rows vs "
       << rec.channel_labels.size() << " labels";
    errors.push_back(os.str());
  }
  if (!(rec.sampling_rate_hz > 0.0)) {
    errors.push_back("sampling rate must be positive");
  }
  const std::int64_t n = rec.samples.cols();
  std::int64_t prev = -1;
  for (std::size_t i = 0; i < rec.events.size(); ++i) {
    const auto& ev = rec.events[i];
    if (ev.sample_index < 0 || ev.sample_index >= n) {
      std::ostringstream os;
      os << "event " << i << " sample index " << ev.sample_index
         << " outside recording of " << n << " samples";
      errors.push_back(os.str());
    }
    if (i > 0 && ev.sample_index <= prev) {
      errors.push_back("events not increasing");
      break;
    }
    prev = ev.sample_index;
  }
  return errors;
}

int epoch_samples(double sampling_rate_hz) {
  return static_cast<int>(std::llround(1.1 * sampling_rate_hz));
}

int epoch_baseline_samples(double sampling_rate_hz) {
  return static_cast<int>(std::llround(0.2 * sampling_rate_hz));
}

const char* to_string(Tertile t) {
  switch (t) {
    case Tertile::Low: return "Low";
    case Tertile::Medium: return "Medium";
    case Tertile::High: return "High";
  }
  return "?";
}

const RankedStimulus* GroupRanking::find(const std::string& stimulus_id) const {
  for (const auto& e : entries) {
    if (e.stimulus_id == stimulus_id) return &e;
  }
  return nullptr;
}

int Montage::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == label) return static_cast<int>(i);
  }
  return -1;
}

double Montage::distance(int a, int b) const {
  const double dx = positions[a].first - positions[b].first;
  const double dy = positions[a].second - positions[b].second;
  return std::sqrt(dx * dx + dy * dy);
}

const Montage& standard_montage_32() {
  // Schematic top-view coordinates on the unit head disc (x toward the right
  // ear, y toward the nasion).
  static const Montage montage = [] {
    Montage m;
    const std::pair<const char*, std::pair<double, double>> table[32] = {
        {"Fp1", {-0.31, 0.95}}, {"Fp2", {0.31, 0.95}},
        {"F7", {-0.81, 0.59}},  {"F3", {-0.41, 0.53}},
        {"Fz", {0.00, 0.50}},   {"F4", {0.41, 0.53}},
        {"F8", {0.81, 0.59}},   {"FC5", {-0.67, 0.29}},
        {"FC1", {-0.23, 0.27}}, {"FC2", {0.23, 0.27}},
        {"FC6", {0.67, 0.29}},  {"T7", {-1.00, 0.00}},
        {"C3", {-0.50, 0.00}},  {"Cz", {0.00, 0.00}},
        {"C4", {0.50, 0.00}},   {"T8", {1.00, 0.00}},
        {"TP9", {-1.05, -0.36}},{"CP5", {-0.67, -0.29}},
        {"CP1", {-0.23, -0.27}},{"CP2", {0.23, -0.27}},
        {"CP6", {0.67, -0.29}}, {"TP10", {1.05, -0.36}},
        {"P7", {-0.81, -0.59}}, {"P3", {-0.41, -0.53}},
        {"Pz", {0.00, -0.50}},  {"P4", {0.41, -0.53}},
        {"P8", {0.81, -0.59}},  {"PO9", {-0.59, -0.85}},
        {"O1", {-0.31, -0.95}}, {"Oz", {0.00, -1.00}},
        {"O2", {0.31, -0.95}},  {"PO10", {0.59, -0.85}},
    };
    for (const auto& [label, pos] : table) {
      m.labels.emplace_back(label);
      m.positions.push_back(pos);
    }
    return m;
  }();
  return montage;
}

}  // namespace erpdec
