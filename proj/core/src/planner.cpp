#include "subjam/planner.hpp"

#include <algorithm>
#include <cmath>

namespace subjam::planner {

double carrier_for_harmonic(double target_freq_hz, int n) {
    if (n < 1) throw std::invalid_argument("carrier_for_harmonic: n must be >= 1");
    return target_freq_hz / static_cast<double>(n);
}

int min_feasible_order(double target_freq_hz, double max_carrier_hz) {
    if (!(target_freq_hz > 0.0) || !(max_carrier_hz > 0.0))
        throw std::invalid_argument("min_feasible_order: frequencies must be > 0");
    if (target_freq_hz <= max_carrier_hz) return 1;
    return static_cast<int>(std::ceil(target_freq_hz / max_carrier_hz - 1e-12));
}

link::RfEnvironment environment_for_carrier(const ScenarioConfig& scenario,
                                            double carrier_freq_hz) {
    link::RfEnvironment env;
    env.emitter = scenario.emitter;
    env.emitter.fundamental_freq_hz = carrier_freq_hz;
    env.jam_path = scenario.channel_jam;
    env.mic_path = scenario.channel_mic;
    env.mic_tx_power_dbm = scenario.mic_tx_power_dbm;
    env.deviation_hz = scenario.jam_deviation_hz;
    env.audio_bw_hz = scenario.jam_audio_bw_hz;
    env.n_orders_max = scenario.n_orders_max;
    return env;
}

std::vector<JamPlan> plan(const ScenarioConfig& scenario, double target_freq_hz) {
    const int n_min = min_feasible_order(target_freq_hz, scenario.emitter.max_carrier_hz);
    if (n_min > scenario.n_orders_max)
        throw NoFeasibleOrderError("plan: no harmonic order within n_orders_max reaches the target");

    const int n_hi = n_min == 1 ? 1 : scenario.n_orders_max;

    const double signal_dbm = channel::received_power_dbm(
        scenario.mic_tx_power_dbm, target_freq_hz, scenario.channel_mic);

    std::vector<JamPlan> plans;
    for (int n = n_min; n <= n_hi; ++n) {
        JamPlan p;
        p.target_freq_hz = target_freq_hz;
        p.harmonic_order = n;
        p.carrier_freq_hz = carrier_for_harmonic(target_freq_hz, n);

        emitter::EmitterModel model = scenario.emitter;
        model.fundamental_freq_hz = p.carrier_freq_hz;
        const auto lines = emitter::emitted_lines(model, scenario.jam_deviation_hz,
                                                  scenario.jam_audio_bw_hz, n);
        const auto it = std::find_if(lines.begin(), lines.end(),
                                     [n](const auto& l) { return l.order == n; });
        p.predicted_jam_power_dbm =
            it != lines.end()
                ? channel::received_power_dbm(it->power_dbm, target_freq_hz, scenario.channel_jam)
                : emitter::kFloorDb;
        p.predicted_js_db = p.predicted_jam_power_dbm - signal_dbm;

        // a wired handshake makes every over-the-air denial attempt moot
        const bool denies = !scenario.link.wired_handshake &&
                            p.predicted_js_db >= scenario.link.jam_threshold_js_db;
        p.verdict = denies ? Verdict::Success : Verdict::Fail;
        plans.push_back(p);
    }
    return plans;
}

bool verify_plan(const JamPlan& p, const ScenarioConfig& scenario, int duration_ticks) {
    const link::RfEnvironment env = environment_for_carrier(scenario, p.carrier_freq_hz);
    const auto transcript =
        link::run_scenario(scenario.link, {{0, true}}, env, duration_ticks);
    const bool ever_linked =
        std::any_of(transcript.begin(), transcript.end(),
                    [](const auto& r) { return r.phase == link::Phase::Linked; });
    return (p.verdict == Verdict::Success) == !ever_linked;
}

}  // namespace subjam::planner
