#include "erpdec/filter.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace erpdec {
namespace {

using Complex = std::complex<double>;

struct Zpk {
  std::vector<Complex> zeros;
  std::vector<Complex> poles;
  double gain = 1.0;
};

// Analog Butterworth low-pass prototype: unit cutoff, no zeros.
Zpk butterworth_prototype(int order) {
  Zpk zpk;
  zpk.poles.reserve(order);
  for (int k = 1; k <= order; ++k) {
    const double theta =
        std::numbers::pi * (2.0 * k + order - 1.0) / (2.0 * order);
    zpk.poles.emplace_back(std::cos(theta), std::sin(theta));
  }
  return zpk;
}

// Low-pass (unit cutoff) to band-pass with center w0 and width bw, rad/s.
Zpk lowpass_to_bandpass(const Zpk& lp, double w0, double bw) {
  Zpk bp;
  const int degree = static_cast<int>(lp.poles.size());
  bp.poles.reserve(2 * lp.poles.size());
  for (const Complex& p : lp.poles) {
    const Complex s = p * (bw / 2.0);
    const Complex disc = std::sqrt(s * s - w0 * w0);
    bp.poles.push_back(s + disc);
    bp.poles.push_back(s - disc);
  }
  // Each prototype pole contributes one zero at s = 0.
  bp.zeros.assign(lp.poles.size(), Complex(0.0, 0.0));
  bp.gain = lp.gain * std::pow(bw, degree);
  return bp;
}

// Bilinear transform with sampling rate fs: z = (2fs + s) / (2fs - s).
Zpk bilinear(const Zpk& analog, double fs) {
  Zpk digital;
  const double fs2 = 2.0 * fs;
  Complex num(1.0, 0.0), den(1.0, 0.0);
  for (const Complex& z : analog.zeros) {
    digital.zeros.push_back((fs2 + z) / (fs2 - z));
    num *= (fs2 - z);
  }
  for (const Complex& p : analog.poles) {
    digital.poles.push_back((fs2 + p) / (fs2 - p));
    den *= (fs2 - p);
  }
  // Zeros at analog infinity land at z = -1.
  const std::size_t deficit = analog.poles.size() - analog.zeros.size();
  for (std::size_t i = 0; i < deficit; ++i) {
    digital.zeros.emplace_back(-1.0, 0.0);
  }
  digital.gain = analog.gain * (num / den).real();
  return digital;
}

}  // namespace

SosCascade design_butterworth_bandpass(const FilterSpec& spec,
                                       double sampling_rate_hz) {
  const double nyquist = sampling_rate_hz / 2.0;
  if (!(spec.low_hz > 0.0) || !(spec.low_hz < spec.high_hz) ||
      !(spec.high_hz < nyquist)) {
    throw std::invalid_argument(
        "band edges must satisfy 0 < low < high < Nyquist");
  }
  if (spec.order < 1 || spec.order > 12) {
    throw std::invalid_argument("filter order out of range [1, 12]");
  }

  const double fs = sampling_rate_hz;
  // Prewarped edges so the digital response crosses -3 dB at the requested
  // frequencies.
  const double w1 = 2.0 * fs * std::tan(std::numbers::pi * spec.low_hz / fs);
  const double w2 = 2.0 * fs * std::tan(std::numbers::pi * spec.high_hz / fs);
  const double bw = w2 - w1;
  const double w0 = std::sqrt(w1 * w2);

  Zpk digital =
      bilinear(lowpass_to_bandpass(butterworth_prototype(spec.order), w0, bw), fs);

  // Pair conjugate poles into biquads; run the highest-Q pair last.
  std::vector<Complex> upper;
  for (const Complex& p : digital.poles) {
    if (p.imag() > 0.0) upper.push_back(p);
  }
  if (static_cast<int>(upper.size()) != spec.order) {
    throw std::logic_error("expected order conjugate pole pairs");
  }
  std::sort(upper.begin(), upper.end(), [](const Complex& a, const Complex& b) {
    return std::abs(a) < std::abs(b);
  });

  const double section_gain =
      std::pow(std::abs(digital.gain), 1.0 / spec.order);
  const double sign = digital.gain < 0.0 ? -1.0 : 1.0;

  SosCascade sos;
  sos.reserve(upper.size());
  for (std::size_t i = 0; i < upper.size(); ++i) {
    const Complex p = upper[i];
    Biquad q;
    // Numerator (z - 1)(z + 1) = z^2 - 1 carries one of the n zeros at z=1
    // and one at z=-1.
    const double g = (i == 0) ? sign * section_gain : section_gain;
    q.b0 = g;
    q.b1 = 0.0;
    q.b2 = -g;
    q.a1 = -2.0 * p.real();
    q.a2 = std::norm(p);
    sos.push_back(q);
  }
  return sos;
}

double sos_magnitude(const SosCascade& sos, double freq_hz,
                     double sampling_rate_hz) {
  const double w = 2.0 * std::numbers::pi * freq_hz / sampling_rate_hz;
  const Complex z1 = std::polar(1.0, -w);
  const Complex z2 = z1 * z1;
  double mag = 1.0;
  for (const Biquad& q : sos) {
    const Complex num = q.b0 + q.b1 * z1 + q.b2 * z2;
    const Complex den = 1.0 + q.a1 * z1 + q.a2 * z2;
    mag *= std::abs(num) / std::abs(den);
  }
  return mag;
}

void sos_filter_forward(const SosCascade& sos, std::vector<double>& x) {
  if (x.empty()) return;
  // Step steady-state initial conditions per section (direct form II
  // transposed): a constant input produces a constant output with no
  // start-up transient. The state scales with the section's incoming DC
  // level.
  double level = x.front();
  std::vector<double> s1(sos.size()), s2(sos.size());
  for (std::size_t k = 0; k < sos.size(); ++k) {
    const Biquad& q = sos[k];
    const double denom = 1.0 + q.a1 + q.a2;
    const double dc_gain = (q.b0 + q.b1 + q.b2) / denom;
    s1[k] = (dc_gain - q.b0) * level;
    s2[k] = (q.b2 - q.a2 * dc_gain) * level;
    level *= dc_gain;
  }
  for (double& sample : x) {
    double v = sample;
    for (std::size_t k = 0; k < sos.size(); ++k) {
      const Biquad& q = sos[k];
      const double y = q.b0 * v + s1[k];
      s1[k] = q.b1 * v - q.a1 * y + s2[k];
      s2[k] = q.b2 * v - q.a2 * y;
      v = y;
    }
    sample = v;
  }
}

void sos_filtfilt(const SosCascade& sos, int pad_samples, double* x,
                  std::size_t n) {
  if (n == 0) return;
  const std::size_t pad = static_cast<std::size_t>(std::max(pad_samples, 0));
  if (n <= pad) {
    throw std::invalid_argument(
        "signal shorter than the filtfilt reflection pad");
  }
  std::vector<double> ext(n + 2 * pad);
  // Odd reflection about the end samples.
  for (std::size_t i = 0; i < pad; ++i) {
    ext[i] = 2.0 * x[0] - x[pad - i];
    ext[pad + n + i] = 2.0 * x[n - 1] - x[n - 2 - i];
  }
  std::copy(x, x + n, ext.begin() + static_cast<std::ptrdiff_t>(pad));

  sos_filter_forward(sos, ext);
  std::reverse(ext.begin(), ext.end());
  sos_filter_forward(sos, ext);
  std::reverse(ext.begin(), ext.end());

  std::copy(ext.begin() + static_cast<std::ptrdiff_t>(pad),
            ext.begin() + static_cast<std::ptrdiff_t>(pad + n), x);
}

}  // namespace erpdec
