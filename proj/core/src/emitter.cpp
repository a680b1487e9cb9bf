#include "subjam/emitter.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace subjam::emitter {

namespace {

// |sin(n*pi*d)| is exactly zero when n*d is an integer; detect that case
// before evaluating, since std::sin of a near-multiple of pi returns a
// tiny nonzero residue.
double rect_pulse_amplitude(int n, double duty) {
    const double nd = static_cast<double>(n) * duty;
    if (std::abs(nd - std::round(nd)) < 1e-12) return 0.0;
    return std::abs(std::sin(std::numbers::pi * nd)) / static_cast<double>(n);
}

}  // namespace

double harmonic_frequency(const EmitterModel& model, int n) {
    if (n < 1) throw std::invalid_argument("harmonic_frequency: n must be >= 1");
    return static_cast<double>(n) * model.fundamental_freq_hz;
}

double harmonic_level_dbc(const EmitterModel& model, int n) {
    if (n < 1) throw std::invalid_argument("harmonic_level_dbc: n must be >= 1");

    if (model.rolloff == RolloffModel::Envelope)
        return -20.0 * std::log10(static_cast<double>(n));

    if (!(model.duty > 0.0 && model.duty < 1.0))
        throw std::invalid_argument("harmonic_level_dbc: duty must be in (0,1)");
    const double a_n = rect_pulse_amplitude(n, model.duty);
    if (a_n == 0.0) return kFloorDb;
    const double a_1 = rect_pulse_amplitude(1, model.duty);
    return 20.0 * std::log10(a_n / a_1);
}

double filter_rejection_db(const std::optional<BandpassFilter>& filter, double freq_hz) {
    if (!filter) return 0.0;
    const double half = filter->passband_width_hz / 2.0;
    if (freq_hz >= filter->center_hz - half && freq_hz <= filter->center_hz + half)
        return 0.0;
    return filter->stopband_atten_db;
}

std::vector<HarmonicLine> emitted_lines(const EmitterModel& model,
                                        double deviation_hz,
                                        double audio_bw_hz,
                                        int n_max) {
    if (n_max < 1) throw std::invalid_argument("emitted_lines: n_max must be >= 1");

    std::vector<HarmonicLine> lines;
    lines.reserve(static_cast<std::size_t>(n_max));
    for (int n = 1; n <= n_max; ++n) {
        HarmonicLine line;
        line.order = n;
        line.freq_hz = harmonic_frequency(model, n);
        line.power_dbm = model.tx_power_dbm + harmonic_level_dbc(model, n) -
                         model.attenuation_db -
                         filter_rejection_db(model.filter, line.freq_hz);
        if (line.power_dbm < kFloorDb) continue;
        const double dev = model.bandwidth_model == BandwidthModel::CarsonScaled
                               ? static_cast<double>(n) * deviation_hz
                               : deviation_hz;
        line.occupied_bw_hz = 2.0 * (dev + audio_bw_hz);
        lines.push_back(line);
    }
    return lines;
}

}  // namespace subjam::emitter
