#include "erpdec/io.hpp"

#include <charconv>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace erpdec {
namespace {

void write_bytes(std::ostream& os, const void* data, std::size_t size) {
  os.write(static_cast<const char*>(data), static_cast<std::streamsize>(size));
}

template <typename T>
void write_pod(std::ostream& os, T value) {
  static_assert(std::is_trivially_copyable_v<T>);
  write_bytes(os, &value, sizeof(T));
}

void write_string(std::ostream& os, const std::string& s) {
  write_pod<std::uint32_t>(os, static_cast<std::uint32_t>(s.size()));
  write_bytes(os, s.data(), s.size());
}

void read_bytes(std::istream& is, void* data, std::size_t size,
                const char* what) {
  is.read(static_cast<char*>(data), static_cast<std::streamsize>(size));
  if (static_cast<std::size_t>(is.gcount()) != size) {
    throw std::runtime_error(std::string("truncated file while reading ") + what);
  }
}

template <typename T>
T read_pod(std::istream& is, const char* what) {
  T value;
  read_bytes(is, &value, sizeof(T), what);
  return value;
}

std::string read_string(std::istream& is, const char* what) {
  const auto len = read_pod<std::uint32_t>(is, what);
  if (len > (1u << 20)) {
    throw std::runtime_error(std::string("implausible string length in ") + what);
  }
  std::string s(len, '\0');
  if (len > 0) read_bytes(is, s.data(), len, what);
  return s;
}

void check_magic(std::istream& is, const char expected[4], const char* format) {
  char magic[4];
  read_bytes(is, magic, 4, "magic");
  if (std::memcmp(magic, expected, 4) != 0) {
    throw std::runtime_error(std::string("not a ") + format +
                             " file (bad magic)");
  }
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw std::runtime_error("cannot open for writing: " + path.string());
  return os;
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("cannot open for reading: " + path.string());
  return is;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

double parse_double(const std::string& s, const char* what) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw std::runtime_error(std::string("bad number in ") + what + ": '" + s + "'");
  }
}

}  // namespace

void write_epochs(const std::filesystem::path& path, const EpochSet& set) {
  auto os = open_out(path);
  write_bytes(os, "ERP1", 4);
  const std::uint32_t channels = static_cast<std::uint32_t>(set.channel_labels.size());
  std::uint32_t samples = 0;
  if (!set.epochs.empty()) {
    samples = static_cast<std::uint32_t>(set.epochs.front().data.cols());
  } else {
    samples = static_cast<std::uint32_t>(epoch_samples(set.sampling_rate_hz));
  }
  write_pod<std::uint32_t>(os, static_cast<std::uint32_t>(set.epochs.size()));
  write_pod<std::uint32_t>(os, channels);
  write_pod<std::uint32_t>(os, samples);
  write_pod<double>(os, set.sampling_rate_hz);
  for (const auto& label : set.channel_labels) write_string(os, label);
  for (const auto& e : set.epochs) {
    if (e.data.rows() != channels || e.data.cols() != samples) {
      throw std::runtime_error("epoch dimensions differ within set");
    }
    write_string(os, e.participant_id);
    write_string(os, e.stimulus_id);
    write_pod<std::int32_t>(os, e.presentation_ordinal);
    write_pod<std::uint8_t>(os, e.rejected ? 1 : 0);
    write_pod<std::int8_t>(os, e.label.value_or(std::int8_t{-128}));
    write_bytes(os, e.data.data(), sizeof(double) * channels * samples);
  }
  if (!os) throw std::runtime_error("write failed: " + path.string());
}

EpochSet read_epochs(const std::filesystem::path& path) {
  auto is = open_in(path);
  check_magic(is, "ERP1", "ERP1");
  const auto count = read_pod<std::uint32_t>(is, "epoch count");
  const auto channels = read_pod<std::uint32_t>(is, "channel count");
  const auto samples = read_pod<std::uint32_t>(is, "sample count");
  EpochSet set;
  set.sampling_rate_hz = read_pod<double>(is, "sampling rate");
  if (!(set.sampling_rate_hz > 0.0)) {
    throw std::runtime_error("header sampling rate not positive");
  }
  set.channel_labels.reserve(channels);
  for (std::uint32_t c = 0; c < channels; ++c) {
    set.channel_labels.push_back(read_string(is, "channel label"));
  }
  const int baseline = epoch_baseline_samples(set.sampling_rate_hz);
  set.epochs.reserve(count);
  for (std::uint32_t i = 0; i < count; ++i) {
    Epoch e;
    e.participant_id = read_string(is, "participant id");
    e.stimulus_id = read_string(is, "stimulus id");
    e.presentation_ordinal = read_pod<std::int32_t>(is, "ordinal");
    e.rejected = read_pod<std::uint8_t>(is, "rejected flag") != 0;
    const auto label = read_pod<std::int8_t>(is, "label");
    if (label != -128) e.label = label;
    e.sampling_rate_hz = set.sampling_rate_hz;
    e.baseline_samples = baseline;
    e.data.resize(channels, samples);
    read_bytes(is, e.data.data(), sizeof(double) * channels * samples, "voltages");
    set.epochs.push_back(std::move(e));
  }
  // A well-formed file ends exactly after the last epoch.
  char extra;
  if (is.read(&extra, 1)) {
    throw std::runtime_error("trailing bytes: header inconsistent with payload");
  }
  return set;
}

void write_epochs_csv(const std::filesystem::path& path, const EpochSet& set) {
  auto os = open_out(path);
  os << "epoch,participant_id,stimulus_id,label,rejected,t_ms";
  for (const auto& label : set.channel_labels) os << ',' << label;
  os << '\n';
  for (std::size_t i = 0; i < set.epochs.size(); ++i) {
    const auto& e = set.epochs[i];
    for (Eigen::Index s = 0; s < e.data.cols(); ++s) {
      os << i << ',' << e.participant_id << ',' << e.stimulus_id << ','
         << (e.label ? std::to_string(*e.label) : std::string())
         << ',' << (e.rejected ? 1 : 0) << ',' << format_double(e.time_ms(s));
      for (Eigen::Index c = 0; c < e.data.rows(); ++c) {
        os << ',' << format_double(e.data(c, s));
      }
      os << '\n';
    }
  }
}

void write_recording(const std::filesystem::path& path,
                     const ContinuousRecording& rec) {
  auto os = open_out(path);
  write_bytes(os, "ERC1", 4);
  write_pod<std::uint32_t>(os, static_cast<std::uint32_t>(rec.samples.rows()));
  write_pod<std::uint64_t>(os, static_cast<std::uint64_t>(rec.samples.cols()));
  write_pod<double>(os, rec.sampling_rate_hz);
  write_string(os, rec.participant_id);
  for (const auto& label : rec.channel_labels) write_string(os, label);
  write_pod<std::uint32_t>(os, static_cast<std::uint32_t>(rec.events.size()));
  for (const auto& ev : rec.events) {
    write_pod<std::int64_t>(os, ev.sample_index);
    write_string(os, ev.stimulus_id);
    write_pod<std::int32_t>(os, ev.presentation_ordinal);
  }
  write_bytes(os, rec.samples.data(),
              sizeof(double) * static_cast<std::size_t>(rec.samples.size()));
  if (!os) throw std::runtime_error("write failed: " + path.string());
}

ContinuousRecording read_recording(const std::filesystem::path& path) {
  auto is = open_in(path);
  check_magic(is, "ERC1", "ERC1");
  const auto channels = read_pod<std::uint32_t>(is, "channel count");
  const auto samples = read_pod<std::uint64_t>(is, "sample count");
  ContinuousRecording rec;
  rec.sampling_rate_hz = read_pod<double>(is, "sampling rate");
  rec.participant_id = read_string(is, "participant id");
  rec.channel_labels.reserve(channels);
  for (std::uint32_t c = 0; c < channels; ++c) {
    rec.channel_labels.push_back(read_string(is, "channel label"));
  }
  const auto n_events = read_pod<std::uint32_t>(is, "event count");
  rec.events.reserve(n_events);
  for (std::uint32_t i = 0; i < n_events; ++i) {
    EventMarker ev;
    ev.sample_index = read_pod<std::int64_t>(is, "event sample");
    ev.stimulus_id = read_string(is, "event stimulus");
    ev.presentation_ordinal = read_pod<std::int32_t>(is, "event ordinal");
    rec.events.push_back(std::move(ev));
  }
  rec.samples.resize(channels, static_cast<Eigen::Index>(samples));
  read_bytes(is, rec.samples.data(),
             sizeof(double) * static_cast<std::size_t>(rec.samples.size()),
             "voltages");
  return rec;
}

void write_ratings_csv(const std::filesystem::path& path,
                       const std::vector<ExplicitRating>& ratings) {
  auto os = open_out(path);
  os << "participant_id,stimulus_id,count\n";
  for (const auto& r : ratings) {
    os << r.participant_id << ',' << r.stimulus_id << ',' << r.count << '\n';
  }
}

std::vector<ExplicitRating> read_ratings_csv(const std::filesystem::path& path) {
  auto is = open_in(path);
  std::string line;
  if (!std::getline(is, line)) throw std::runtime_error("empty ratings CSV");
  std::vector<ExplicitRating> out;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    auto fields = split_csv_line(line);
    if (fields.size() != 3) {
      throw std::runtime_error("ratings CSV row needs 3 fields: " + line);
    }
    ExplicitRating r;
    r.participant_id = fields[0];
    r.stimulus_id = fields[1];
    r.count = static_cast<int>(parse_double(fields[2], "ratings CSV"));
    out.push_back(std::move(r));
  }
  return out;
}

void write_ranking_csv(const std::filesystem::path& path,
                       const GroupRanking& ranking) {
  auto os = open_out(path);
  os << "stimulus_id,score,rank,tertile\n";
  for (const auto& e : ranking.entries) {
    os << e.stimulus_id << ',' << e.score << ',' << e.rank << ','
       << to_string(e.tertile) << '\n';
  }
}

void write_features_csv(const std::filesystem::path& path,
                        const FeatureMatrix& features) {
  auto os = open_out(path);
  os << "participant_id,stimulus_id,label";
  for (Eigen::Index j = 0; j < features.x.cols(); ++j) os << ",f" << j;
  os << '\n';
  for (Eigen::Index i = 0; i < features.x.rows(); ++i) {
    os << features.participant_ids[i] << ',' << features.stimulus_ids[i] << ','
       << features.labels[i];
    for (Eigen::Index j = 0; j < features.x.cols(); ++j) {
      os << ',' << format_double(features.x(i, j));
    }
    os << '\n';
  }
}

FeatureMatrix read_features_csv(const std::filesystem::path& path) {
  auto is = open_in(path);
  std::string line;
  if (!std::getline(is, line)) throw std::runtime_error("empty features CSV");
  const auto header = split_csv_line(line);
  if (header.size() < 4 || header[0] != "participant_id") {
    throw std::runtime_error("unexpected features CSV header");
  }
  const std::size_t dim = header.size() - 3;
  std::vector<std::vector<double>> rows;
  FeatureMatrix fm;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    auto fields = split_csv_line(line);
    if (fields.size() != header.size()) {
      throw std::runtime_error("features CSV row width mismatch");
    }
    fm.participant_ids.push_back(fields[0]);
    fm.stimulus_ids.push_back(fields[1]);
    fm.labels.push_back(static_cast<int>(parse_double(fields[2], "label")));
    std::vector<double> row(dim);
    for (std::size_t j = 0; j < dim; ++j) {
      row[j] = parse_double(fields[3 + j], "feature");
    }
    rows.push_back(std::move(row));
  }
  fm.x.resize(static_cast<Eigen::Index>(rows.size()),
              static_cast<Eigen::Index>(dim));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      fm.x(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
    }
  }
  return fm;
}

std::uint64_t fnv1a64(const void* data, std::size_t size) {
  const auto* p = static_cast<const unsigned char*>(data);
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (std::size_t i = 0; i < size; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hash_file(const std::filesystem::path& path) {
  auto is = open_in(path);
  std::uint64_t h = 0xcbf29ce484222325ULL;
  char buf[65536];
  while (is) {
    is.read(buf, sizeof(buf));
    const auto got = static_cast<std::size_t>(is.gcount());
    for (std::size_t i = 0; i < got; ++i) {
      h ^= static_cast<unsigned char>(buf[i]);
      h *= 0x100000001b3ULL;
    }
  }
  char out[17];
  std::snprintf(out, sizeof(out), "%016llx", static_cast<unsigned long long>(h));
  return out;
}

std::string format_double(double v) {
  char buf[40];
  // Shortest representation that still round-trips.
  for (int prec = 1; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof(buf), "%.*g", prec, v);
    if (std::strtod(buf, nullptr) == v) return buf;
  }
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 8);
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

}  // namespace erpdec
