#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace subjam::dsp {

/// Levels with zero linear power report this floor instead of -inf.
inline constexpr double kPowerFloorDb = -300.0;

/// Real audio samples, full scale +/-1.0.
struct SampleBuffer {
    std::vector<double> samples;
    double sample_rate_hz = 0.0;
};

/// Complex baseband samples around a tuned center frequency.
struct IQBuffer {
    std::vector<std::complex<double>> samples;
    double sample_rate_hz = 0.0;
    double center_freq_hz = 0.0;
};

/// Power spectral estimate: uniformly spaced bins, powers in dBFS.
struct Spectrum {
    std::vector<double> bin_freqs_hz;  // strictly increasing
    std::vector<double> power_db;      // same length
    double rbw_hz = 0.0;               // bin spacing
};

struct NoiseSpec {
    uint64_t seed = 0;
    std::size_t n_samples = 0;
    double sample_rate_hz = 48000.0;
};

enum class Window { Rectangular, Hann };

/// Seeded uniform white noise in [-1, 1]. Identical spec -> identical buffer.
SampleBuffer generate_white_noise(const NoiseSpec& spec);

/// FM modulation by phase accumulation:
///   phi[k] = phi[k-1] + 2*pi*deviation_hz*x[k]/fs, phi[-1] = 0,
/// output sample = exp(j*phi[k]). Rejects deviation >= Nyquist.
IQBuffer fm_modulate(const SampleBuffer& audio, double deviation_hz);

/// Inverse of fm_modulate given the deviation used at modulation.
/// out[0] = 0; out[k] = arg(s[k] * conj(s[k-1])) * fs / (2*pi*deviation_hz).
SampleBuffer fm_demodulate(const IQBuffer& iq, double deviation_hz);

/// In-place radix-2 FFT; size must be a power of two.
void fft_inplace(std::vector<std::complex<double>>& x);

/// Welch-averaged power spectrum, 50% overlap,
/// segment count = floor((len - n_fft/2) / (n_fft/2)).
/// Bin powers are normalized so their linear sum equals the mean square of
/// the windowed signal (exact Parseval on a single rectangular segment).
/// Real input: bins at k*fs/n_fft, k = 0..n_fft-1.
/// IQ input: bins shifted around center_freq_hz.
Spectrum power_spectrum(const SampleBuffer& buffer, std::size_t n_fft, Window window);
Spectrum power_spectrum(const IQBuffer& buffer, std::size_t n_fft, Window window);

/// 10*log10 of the summed linear power of all bins inside [f_lo, f_hi].
/// Throws if no bin falls inside the band.
double band_power_db(const Spectrum& spectrum, double f_lo_hz, double f_hi_hz);

/// Frequency of the strongest bin; ties break toward the lowest frequency.
double find_peak_hz(const Spectrum& spectrum);

}  // namespace subjam::dsp
