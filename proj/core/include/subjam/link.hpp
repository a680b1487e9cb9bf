#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "subjam/channel.hpp"
#include "subjam/emitter.hpp"

namespace subjam::link {

/// Microphone <-> receiver link parameters. Defaults model the 606-670 MHz
/// band with a fixed 614 MHz handshake channel.
struct LinkConfig {
    double band_lo_hz = 606e6;
    double band_hi_hz = 670e6;
    double handshake_freq_hz = 614e6;
    int n_hop_channels = 16;
    uint64_t hop_seed = 42;
    int handshake_windows = 3;         // retries per power-on
    double jam_threshold_js_db = 0.0;  // J/S at or above this denies a channel
    double jam_break_fraction = 0.5;   // fraction of jammed hop channels that breaks a link
    bool wired_handshake = false;
};

enum class Phase { Unlinked, Handshaking, Linked, Blocked };

const char* phase_name(Phase phase);

struct LinkState {
    Phase phase = Phase::Unlinked;
    int window = 0;                    // Handshaking: failed attempts so far
    std::vector<double> hop_sequence;  // Linked: permutation of the channel grid
    std::size_t hop_index = 0;
};

/// J/S in dB per frequency, keyed by the frequency rounded to whole Hz.
using JsMap = std::map<int64_t, double>;

struct LinkEvent {
    enum class Kind { PowerOn, PowerOff, BatteryPull, Tick };
    Kind kind = Kind::Tick;
    JsMap js_by_freq;  // Tick only

    static LinkEvent power_on() { return {Kind::PowerOn, {}}; }
    static LinkEvent power_off() { return {Kind::PowerOff, {}}; }
    static LinkEvent battery_pull() { return {Kind::BatteryPull, {}}; }
    static LinkEvent tick(JsMap js) { return {Kind::Tick, std::move(js)}; }
};

/// Evenly spaced channel grid strictly inside (band_lo, band_hi), sorted.
std::vector<double> channel_grid(const LinkConfig& config);

/// Deterministic seeded permutation of the channel grid.
std::vector<double> hop_sequence(const LinkConfig& config);

/// Pure transition function. Throws if a Tick is missing a J/S entry for a
/// frequency the current state consults.
LinkState step(const LinkState& state, const LinkEvent& event, const LinkConfig& config);

/// Everything needed to turn a jam schedule into per-tick J/S maps.
struct RfEnvironment {
    emitter::EmitterModel emitter;
    channel::ChannelModel jam_path;  // jammer -> receiver
    channel::ChannelModel mic_path;  // microphone -> receiver
    double mic_tx_power_dbm = 10.0;
    double deviation_hz = 75e3;
    double audio_bw_hz = 20e3;
    int n_orders_max = 8;
};

/// Jam schedule entry: the jammer is (in)active from this tick onward.
struct JamWindow {
    int tick = 0;
    bool active = false;
};

struct TickRecord {
    int tick = 0;
    Phase phase = Phase::Unlinked;
    double handshake_js_db = 0.0;
    double jammed_fraction = 0.0;  // of hop channels at/above threshold
};

/// Powers the microphone on at tick 0 and drives one Tick per tick.
/// J/S values come from the emitter's harmonic lines propagated through
/// jam_path against the microphone signal through mic_path. Deterministic.
std::vector<TickRecord> run_scenario(const LinkConfig& config,
                                     const std::vector<JamWindow>& jam_schedule,
                                     const RfEnvironment& env,
                                     int duration_ticks);

/// J/S map for the handshake channel plus the full hop grid, with the
/// jammer either active or silent.
JsMap js_snapshot(const LinkConfig& config, const RfEnvironment& env, bool jam_active);

}  // namespace subjam::link
