#pragma once

#include <stdexcept>
#include <vector>

#include "subjam/channel.hpp"
#include "subjam/emitter.hpp"
#include "subjam/link.hpp"

namespace subjam::planner {

enum class Verdict { Success, Fail };

/// One candidate attack: carrier at target/n so the nth harmonic lands on
/// the target frequency.
struct JamPlan {
    double target_freq_hz = 0.0;
    int harmonic_order = 1;
    double carrier_freq_hz = 0.0;
    double predicted_jam_power_dbm = 0.0;  // at the receiver
    double predicted_js_db = 0.0;
    Verdict verdict = Verdict::Fail;
};

/// Full experiment description; loaded from a scenario file by the CLI.
struct ScenarioConfig {
    emitter::EmitterModel emitter;
    channel::ChannelModel channel_jam;  // jammer -> receiver
    channel::ChannelModel channel_mic;  // microphone -> receiver
    link::LinkConfig link;
    double mic_tx_power_dbm = 10.0;
    int n_orders_max = 8;
    double jam_deviation_hz = 75e3;
    double jam_audio_bw_hz = 20e3;
};

struct NoFeasibleOrderError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Exact carrier so that the nth harmonic hits the target: target / n.
double carrier_for_harmonic(double target_freq_hz, int n);

/// Lowest order whose carrier fits under the ceiling; 1 when the target is
/// directly reachable.
int min_feasible_order(double target_freq_hz, double max_carrier_hz);

/// RF environment for a jammer re-tuned to the given carrier.
link::RfEnvironment environment_for_carrier(const ScenarioConfig& scenario, double carrier_freq_hz);

/// Candidate plans ordered by ascending harmonic order. A target below the
/// carrier ceiling yields the single direct-transmission plan (order 1).
/// Throws NoFeasibleOrderError when no order within n_orders_max fits.
std::vector<JamPlan> plan(const ScenarioConfig& scenario, double target_freq_hz);

/// Cross-checks a plan against the link simulator: jamming from tick 0 at
/// the plan's carrier. True iff the verdict matches whether the transcript
/// ever reaches Linked.
bool verify_plan(const JamPlan& p, const ScenarioConfig& scenario, int duration_ticks = 40);

}  // namespace subjam::planner
