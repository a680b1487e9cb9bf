#pragma once

#include <optional>
#include <vector>

namespace subjam::emitter {

/// Levels and line powers never go below this floor.
inline constexpr double kFloorDb = -300.0;

/// Brick-wall bandpass: zero loss inside [center +/- width/2] (edges
/// inclusive), constant stopband attenuation outside.
struct BandpassFilter {
    double center_hz = 0.0;
    double passband_width_hz = 0.0;
    double stopband_atten_db = 0.0;
};

/// Harmonic power rolloff model.
///  - Envelope: amplitude proportional to 1/n at every order.
///  - RectPulse: Fourier series of a rectangular pulse train with the given
///    duty cycle; a symmetric clock (duty 0.5) emits no even harmonics.
enum class RolloffModel { Envelope, RectPulse };

/// Occupied bandwidth at order n: Carson's rule with the deviation
/// multiplied by n (frequency multiplication), or held constant.
enum class BandwidthModel { CarsonScaled, Constant };

/// Unfiltered square-wave-clock transmitter.
struct EmitterModel {
    double fundamental_freq_hz = 0.0;
    double tx_power_dbm = 10.0;
    double max_carrier_hz = 500e6;  // software carrier ceiling
    RolloffModel rolloff = RolloffModel::Envelope;
    double duty = 0.45;             // RectPulse only, strictly in (0,1)
    double attenuation_db = 0.0;
    std::optional<BandpassFilter> filter;
    BandwidthModel bandwidth_model = BandwidthModel::CarsonScaled;
};

/// One spectral line of the emitted harmonic series.
struct HarmonicLine {
    int order = 1;
    double freq_hz = 0.0;
    double power_dbm = 0.0;
    double occupied_bw_hz = 0.0;
};

/// Frequency of the nth harmonic: n * fundamental. n >= 1.
double harmonic_frequency(const EmitterModel& model, int n);

/// Level of the nth harmonic relative to the fundamental, in dBc.
/// Harmonics with exactly zero amplitude report the -300 dB floor.
double harmonic_level_dbc(const EmitterModel& model, int n);

/// Attenuation the filter applies at the given frequency. 0 dB when no
/// filter is fitted or the frequency lies inside the passband.
double filter_rejection_db(const std::optional<BandpassFilter>& filter, double freq_hz);

/// Full emitted line set for orders 1..n_max. Lines whose power falls
/// below -300 dBm are dropped.
std::vector<HarmonicLine> emitted_lines(const EmitterModel& model,
                                        double deviation_hz,
                                        double audio_bw_hz,
                                        int n_max);

}  // namespace subjam::emitter
