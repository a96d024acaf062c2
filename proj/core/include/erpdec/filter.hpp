#pragma once

#include <vector>

#include "erpdec/types.hpp"

namespace erpdec {

/// Band-pass specification. `order` is the order of the underlying
/// Butterworth low/high-pass prototype; the band-pass filter has 2*order
/// poles (the butter(order, band) convention).
struct FilterSpec {
  double low_hz = 0.2;
  double high_hz = 35.0;
  int order = 4;
  bool zero_phase = true;
};

struct Biquad {
  double b0, b1, b2;  // numerator
  double a1, a2;      // denominator, a0 normalized to 1
};

using SosCascade = std::vector<Biquad>;

/// Designs a digital Butterworth band-pass as second-order sections.
/// Throws std::invalid_argument when 0 < low < high < Nyquist fails.
SosCascade design_butterworth_bandpass(const FilterSpec& spec,
                                       double sampling_rate_hz);

/// Magnitude of the cascade's frequency response at `freq_hz`.
double sos_magnitude(const SosCascade& sos, double freq_hz,
                     double sampling_rate_hz);

/// Single forward pass with step steady-state initial conditions.
void sos_filter_forward(const SosCascade& sos, std::vector<double>& x);

/// Forward-backward application with odd-reflection padding of
/// 3 * (2 * order) samples per side: zero phase, squared magnitude.
void sos_filtfilt(const SosCascade& sos, int pad_samples, double* x,
                  std::size_t n);

}  // namespace erpdec
