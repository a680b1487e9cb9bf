#include "subjam/dsp.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "subjam/rng.hpp"

namespace subjam::dsp {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

bool is_power_of_two(std::size_t n) {
    return n > 0 && (n & (n - 1)) == 0;
}

double to_db_floored(double linear_power) {
    if (linear_power <= 0.0) return kPowerFloorDb;
    return std::max(10.0 * std::log10(linear_power), kPowerFloorDb);
}

std::vector<double> make_window(Window window, std::size_t n) {
    std::vector<double> w(n, 1.0);
    if (window == Window::Hann) {
        for (std::size_t k = 0; k < n; ++k)
            w[k] = 0.5 * (1.0 - std::cos(kTwoPi * static_cast<double>(k) / static_cast<double>(n)));
    }
    return w;
}

// Shared Welch worker over complex data. Returns linear bin powers in
// natural FFT order (bin k at k*fs/N).
std::vector<double> welch_linear(const std::vector<std::complex<double>>& data,
                                 std::size_t n_fft, Window window) {
    if (!is_power_of_two(n_fft))
        throw std::invalid_argument("power_spectrum: n_fft must be a power of two");
    if (data.size() < n_fft)
        throw std::invalid_argument("power_spectrum: buffer shorter than n_fft");

    const std::size_t hop = n_fft / 2;
    const std::size_t n_segments = (data.size() - hop) / hop;
    const std::vector<double> w = make_window(window, n_fft);
    const double norm = 1.0 / (static_cast<double>(n_fft) * static_cast<double>(n_fft));

    std::vector<double> acc(n_fft, 0.0);
    std::vector<std::complex<double>> seg(n_fft);
    for (std::size_t s = 0; s < n_segments; ++s) {
        const std::size_t off = s * hop;
        for (std::size_t k = 0; k < n_fft; ++k) seg[k] = data[off + k] * w[k];
        fft_inplace(seg);
        for (std::size_t k = 0; k < n_fft; ++k) acc[k] += std::norm(seg[k]) * norm;
    }
    const double inv_segments = 1.0 / static_cast<double>(n_segments);
    for (auto& p : acc) p *= inv_segments;
    return acc;
}

}  // namespace

SampleBuffer generate_white_noise(const NoiseSpec& spec) {
    if (spec.n_samples == 0)
        throw std::invalid_argument("generate_white_noise: n_samples must be >= 1");
    if (!(spec.sample_rate_hz > 0.0))
        throw std::invalid_argument("generate_white_noise: sample_rate_hz must be > 0");

    rng::Xoshiro256StarStar gen(spec.seed);
    SampleBuffer out;
    out.sample_rate_hz = spec.sample_rate_hz;
    out.samples.resize(spec.n_samples);
    for (auto& s : out.samples) s = gen.uniform_pm1();
    return out;
}

IQBuffer fm_modulate(const SampleBuffer& audio, double deviation_hz) {
    if (!(audio.sample_rate_hz > 0.0))
        throw std::invalid_argument("fm_modulate: sample rate must be > 0");
    if (!(deviation_hz > 0.0) || deviation_hz >= audio.sample_rate_hz / 2.0)
        throw std::invalid_argument("fm_modulate: deviation must be in (0, fs/2)");

    IQBuffer out;
    out.sample_rate_hz = audio.sample_rate_hz;
    out.samples.reserve(audio.samples.size());

    const double scale = kTwoPi * deviation_hz / audio.sample_rate_hz;
    double phase = 0.0;
    for (double x : audio.samples) {
        phase += scale * x;
        // keep the accumulator bounded over long buffers
        phase = std::remainder(phase, kTwoPi);
        out.samples.emplace_back(std::cos(phase), std::sin(phase));
    }
    return out;
}

SampleBuffer fm_demodulate(const IQBuffer& iq, double deviation_hz) {
    if (iq.samples.empty())
        throw std::invalid_argument("fm_demodulate: empty input");
    if (!(deviation_hz > 0.0))
        throw std::invalid_argument("fm_demodulate: deviation must be > 0");

    SampleBuffer out;
    out.sample_rate_hz = iq.sample_rate_hz;
    out.samples.resize(iq.samples.size());
    out.samples[0] = 0.0;

    const double scale = iq.sample_rate_hz / (kTwoPi * deviation_hz);
    for (std::size_t k = 1; k < iq.samples.size(); ++k) {
        const double dphi = std::arg(iq.samples[k] * std::conj(iq.samples[k - 1]));
        out.samples[k] = dphi * scale;
    }
    return out;
}

void fft_inplace(std::vector<std::complex<double>>& x) {
    const std::size_t n = x.size();
    if (!is_power_of_two(n))
        throw std::invalid_argument("fft_inplace: size must be a power of two");

    // bit reversal
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(x[i], x[j]);
    }
    // butterflies
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = -kTwoPi / static_cast<double>(len);
        for (std::size_t i = 0; i < n; i += len) {
            for (std::size_t k = 0; k < len / 2; ++k) {
                // direct twiddle evaluation keeps off-bin leakage near the
                // numeric floor (a multiplicative recurrence drifts)
                const std::complex<double> w =
                    std::polar(1.0, ang * static_cast<double>(k));
                const std::complex<double> u = x[i + k];
                const std::complex<double> v = x[i + k + len / 2] * w;
                x[i + k] = u + v;
                x[i + k + len / 2] = u - v;
            }
        }
    }
}

Spectrum power_spectrum(const SampleBuffer& buffer, std::size_t n_fft, Window window) {
    std::vector<std::complex<double>> data(buffer.samples.begin(), buffer.samples.end());
    std::vector<double> linear = welch_linear(data, n_fft, window);

    Spectrum out;
    out.rbw_hz = buffer.sample_rate_hz / static_cast<double>(n_fft);
    out.bin_freqs_hz.resize(n_fft);
    out.power_db.resize(n_fft);
    for (std::size_t k = 0; k < n_fft; ++k) {
        out.bin_freqs_hz[k] = static_cast<double>(k) * out.rbw_hz;
        out.power_db[k] = to_db_floored(linear[k]);
    }
    return out;
}

Spectrum power_spectrum(const IQBuffer& buffer, std::size_t n_fft, Window window) {
    std::vector<double> linear = welch_linear(buffer.samples, n_fft, window);

    Spectrum out;
    out.rbw_hz = buffer.sample_rate_hz / static_cast<double>(n_fft);
    out.bin_freqs_hz.resize(n_fft);
    out.power_db.resize(n_fft);
    const std::size_t half = n_fft / 2;
    for (std::size_t k = 0; k < n_fft; ++k) {
        // fftshift: bins run from center - fs/2 to center + fs/2 - rbw
        const std::size_t src = (k + half) % n_fft;
        const double offset = (static_cast<double>(k) - static_cast<double>(half)) * out.rbw_hz;
        out.bin_freqs_hz[k] = buffer.center_freq_hz + offset;
        out.power_db[k] = to_db_floored(linear[src]);
    }
    return out;
}

double band_power_db(const Spectrum& spectrum, double f_lo_hz, double f_hi_hz) {
    if (!(f_lo_hz < f_hi_hz))
        throw std::invalid_argument("band_power_db: f_lo must be < f_hi");

    double total = 0.0;
    bool any = false;
    for (std::size_t k = 0; k < spectrum.bin_freqs_hz.size(); ++k) {
        const double f = spectrum.bin_freqs_hz[k];
        if (f < f_lo_hz || f > f_hi_hz) continue;
        any = true;
        if (spectrum.power_db[k] > kPowerFloorDb)
            total += std::pow(10.0, spectrum.power_db[k] / 10.0);
    }
    if (!any)
        throw std::invalid_argument("band_power_db: band contains no bins");
    return to_db_floored(total);
}

double find_peak_hz(const Spectrum& spectrum) {
    if (spectrum.bin_freqs_hz.empty())
        throw std::invalid_argument("find_peak_hz: empty spectrum");

    std::size_t best = 0;
    for (std::size_t k = 1; k < spectrum.power_db.size(); ++k) {
        if (spectrum.power_db[k] > spectrum.power_db[best]) best = k;
    }
    return spectrum.bin_freqs_hz[best];
}

}  // namespace subjam::dsp
