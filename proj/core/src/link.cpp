#include "subjam/link.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "subjam/rng.hpp"

namespace subjam::link {

namespace {

int64_t freq_key(double freq_hz) {
    return static_cast<int64_t>(std::llround(freq_hz));
}

double js_at(const JsMap& js, double freq_hz) {
    const auto it = js.find(freq_key(freq_hz));
    if (it == js.end())
        throw std::invalid_argument("link: Tick missing J/S entry for a consulted frequency");
    return it->second;
}

void validate(const LinkConfig& config) {
    if (!(config.band_lo_hz < config.handshake_freq_hz &&
          config.handshake_freq_hz < config.band_hi_hz))
        throw std::invalid_argument("link: handshake frequency must lie inside the band");
    if (config.n_hop_channels < 1)
        throw std::invalid_argument("link: n_hop_channels must be >= 1");
}

}  // namespace

const char* phase_name(Phase phase) {
    switch (phase) {
        case Phase::Unlinked: return "unlinked";
        case Phase::Handshaking: return "handshaking";
        case Phase::Linked: return "linked";
        case Phase::Blocked: return "blocked";
    }
    return "?";
}

std::vector<double> channel_grid(const LinkConfig& config) {
    validate(config);
    const int n = config.n_hop_channels;
    const double span = config.band_hi_hz - config.band_lo_hz;
    std::vector<double> grid(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        grid[static_cast<std::size_t>(i)] =
            config.band_lo_hz + static_cast<double>(i + 1) * span / static_cast<double>(n + 1);
    return grid;
}

std::vector<double> hop_sequence(const LinkConfig& config) {
    std::vector<double> seq = channel_grid(config);
    rng::Xoshiro256StarStar gen(config.hop_seed);
    // Fisher-Yates
    for (std::size_t i = seq.size() - 1; i > 0; --i) {
        const std::size_t j = static_cast<std::size_t>(gen.bounded(i + 1));
        std::swap(seq[i], seq[j]);
    }
    return seq;
}

LinkState step(const LinkState& state, const LinkEvent& event, const LinkConfig& config) {
    validate(config);

    switch (event.kind) {
        case LinkEvent::Kind::PowerOff:
        case LinkEvent::Kind::BatteryPull:
            return LinkState{};  // Unlinked from any state

        case LinkEvent::Kind::PowerOn:
            if (state.phase == Phase::Unlinked)
                return LinkState{Phase::Handshaking, 0, {}, 0};
            return state;

        case LinkEvent::Kind::Tick:
            break;
    }

    const auto handshake_clear = [&] {
        return config.wired_handshake ||
               js_at(event.js_by_freq, config.handshake_freq_hz) < config.jam_threshold_js_db;
    };

    switch (state.phase) {
        case Phase::Unlinked:
            return state;  // powered off / idle until PowerOn

        case Phase::Handshaking: {
            if (handshake_clear())
                return LinkState{Phase::Linked, 0, hop_sequence(config), 0};
            LinkState next = state;
            next.window += 1;
            if (next.window >= config.handshake_windows) return LinkState{Phase::Blocked, 0, {}, 0};
            return next;
        }

        case Phase::Blocked:
            // keeps retrying the handshake every tick
            if (handshake_clear())
                return LinkState{Phase::Linked, 0, hop_sequence(config), 0};
            return state;

        case Phase::Linked: {
            int jammed = 0;
            for (double f : state.hop_sequence)
                if (js_at(event.js_by_freq, f) >= config.jam_threshold_js_db) ++jammed;
            const double fraction =
                static_cast<double>(jammed) / static_cast<double>(state.hop_sequence.size());
            if (fraction >= config.jam_break_fraction) return LinkState{};
            LinkState next = state;
            next.hop_index = (next.hop_index + 1) % next.hop_sequence.size();
            return next;
        }
    }
    return state;
}

JsMap js_snapshot(const LinkConfig& config, const RfEnvironment& env, bool jam_active) {
    std::vector<emitter::HarmonicLine> lines;
    if (jam_active)
        lines = emitter::emitted_lines(env.emitter, env.deviation_hz, env.audio_bw_hz,
                                       env.n_orders_max);

    std::vector<double> freqs = channel_grid(config);
    freqs.push_back(config.handshake_freq_hz);

    JsMap js;
    for (double f : freqs) {
        double jam_linear_mw = 0.0;
        for (const auto& line : lines) {
            if (std::abs(f - line.freq_hz) > line.occupied_bw_hz / 2.0) continue;
            jam_linear_mw +=
                std::pow(10.0, channel::received_power_dbm(line.power_dbm, f, env.jam_path) / 10.0);
        }
        const double jam_dbm = jam_linear_mw > 0.0
                                   ? 10.0 * std::log10(jam_linear_mw)
                                   : emitter::kFloorDb;
        const double sig_dbm = channel::received_power_dbm(env.mic_tx_power_dbm, f, env.mic_path);
        js[freq_key(f)] = jam_dbm - sig_dbm;
    }
    return js;
}

std::vector<TickRecord> run_scenario(const LinkConfig& config,
                                     const std::vector<JamWindow>& jam_schedule,
                                     const RfEnvironment& env,
                                     int duration_ticks) {
    if (duration_ticks < 1)
        throw std::invalid_argument("run_scenario: duration must be >= 1");
    for (const auto& w : jam_schedule)
        if (w.tick < 0 || w.tick >= duration_ticks)
            throw std::invalid_argument("run_scenario: schedule tick outside duration");

    std::vector<JamWindow> schedule = jam_schedule;
    std::stable_sort(schedule.begin(), schedule.end(),
                     [](const JamWindow& a, const JamWindow& b) { return a.tick < b.tick; });

    // The two J/S maps are tick-invariant; compute once.
    const JsMap js_on = js_snapshot(config, env, true);
    const JsMap js_off = js_snapshot(config, env, false);
    const std::vector<double> grid = channel_grid(config);

    const auto jammed_fraction = [&](const JsMap& js) {
        int jammed = 0;
        for (double f : grid)
            if (js.at(static_cast<int64_t>(std::llround(f))) >= config.jam_threshold_js_db)
                ++jammed;
        return static_cast<double>(jammed) / static_cast<double>(grid.size());
    };

    LinkState state = step(LinkState{}, LinkEvent::power_on(), config);

    std::vector<TickRecord> transcript;
    transcript.reserve(static_cast<std::size_t>(duration_ticks));
    bool active = false;
    std::size_t next_window = 0;
    for (int t = 0; t < duration_ticks; ++t) {
        while (next_window < schedule.size() && schedule[next_window].tick <= t)
            active = schedule[next_window++].active;
        const JsMap& js = active ? js_on : js_off;
        state = step(state, LinkEvent::tick(js), config);

        TickRecord rec;
        rec.tick = t;
        rec.phase = state.phase;
        rec.handshake_js_db = js.at(static_cast<int64_t>(std::llround(config.handshake_freq_hz)));
        rec.jammed_fraction = jammed_fraction(js);
        transcript.push_back(rec);
    }
    return transcript;
}

}  // namespace subjam::link
