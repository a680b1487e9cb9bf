// Acceptance suite: one line per criterion, exit nonzero when any fails.
//
//   1. table1 regression on the shipped default scenario
//   2. handshake semantics (jam-before, jam-after, battery pull)
//   3. mitigation flip (bandpass filter, wired handshake)
//   4. DSP property suite
//   5. planner exactness
//   6. byte-identical outputs for identical manifests

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>
#include <vector>

#include "subjam/dsp.hpp"
#include "subjam/emitter.hpp"
#include "subjam/channel.hpp"
#include "subjam/link.hpp"
#include "subjam/planner.hpp"
#include "subjam/scenario.hpp"

namespace fs = std::filesystem;
using namespace subjam;

namespace {

const std::string kCli = SUBJAM_CLI_PATH;
const std::string kScenario = SUBJAM_SCENARIO_PATH;

int failures = 0;

void report(int criterion, const char* what, bool ok) {
    std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", criterion, what);
    if (!ok) ++failures;
}

int run(const std::string& args, const fs::path& log) {
    const std::string cmd = kCli + " " + args + " > " + log.string() + " 2>&1";
    const int rc = std::system(cmd.c_str());
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// --------------------------------------------------------------------------
// 1. Table-1 regression
// --------------------------------------------------------------------------
void criterion_table1(const fs::path& tmp) {
    const auto t0 = std::chrono::steady_clock::now();
    const int rc = run("table1 --scenario " + kScenario + " --out " + (tmp / "t1").string(),
                       tmp / "t1.log");
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    const std::string csv = slurp(tmp / "t1" / "table1.csv");
    const bool pattern = csv.find("2,3.07e+08") != std::string::npos &&
                         csv.find(",OK,yes\n3,") != std::string::npos &&
                         csv.find(",OK,yes\n4,") != std::string::npos &&
                         csv.find(",OK,yes\n5,") != std::string::npos &&
                         csv.find(",FAIL,yes\n") != std::string::npos;
    report(1, "table1 verdicts are OK,OK,OK,FAIL for orders 2..5 with exit 0",
           rc == 0 && pattern);
    report(1, "table1 completes in under 10 s", secs < 10.0);
}

// --------------------------------------------------------------------------
// 2. Handshake semantics
// --------------------------------------------------------------------------
void criterion_handshake() {
    const auto cfg = scenario::default_config();
    const auto env = planner::environment_for_carrier(cfg, 307e6);

    // (a) jam before handshake: never linked over the full run
    {
        const auto transcript = link::run_scenario(cfg.link, {{0, true}}, env, 100);
        bool never_linked = true;
        for (const auto& r : transcript) never_linked &= r.phase != link::Phase::Linked;
        report(2, "jam-before-handshake: link never established", never_linked);
    }

    // (b) jam after link-up: linked for the rest of the run
    {
        const auto transcript = link::run_scenario(cfg.link, {{50, true}}, env, 100);
        bool linked_from_2 = true;
        for (std::size_t t = 2; t < transcript.size(); ++t)
            linked_from_2 &= transcript[t].phase == link::Phase::Linked;
        report(2, "jam-after-link: link persists to the end", linked_from_2);
    }

    // (c) battery pull + power-on under jamming: still blocked
    {
        const auto js = link::js_snapshot(cfg.link, env, true);
        auto state = link::step(link::LinkState{}, link::LinkEvent::power_on(), cfg.link);
        for (int t = 0; t < 10; ++t)
            state = link::step(state, link::LinkEvent::tick(js), cfg.link);
        const bool blocked_first = state.phase == link::Phase::Blocked;

        state = link::step(state, link::LinkEvent::battery_pull(), cfg.link);
        state = link::step(state, link::LinkEvent::power_on(), cfg.link);
        bool never_linked = true;
        for (int t = 0; t < 10; ++t) {
            state = link::step(state, link::LinkEvent::tick(js), cfg.link);
            never_linked &= state.phase != link::Phase::Linked;
        }
        report(2, "battery-pull + power-on under jamming: never establishes",
               blocked_first && never_linked && state.phase == link::Phase::Blocked);
    }
}

// --------------------------------------------------------------------------
// 3. Mitigation flip
// --------------------------------------------------------------------------
void criterion_mitigation() {
    // 40 dB bandpass filter -> every verdict flips to Fail
    {
        auto cfg = scenario::default_config();
        cfg.emitter.filter =
            emitter::BandpassFilter{cfg.emitter.fundamental_freq_hz, 10e6, 40.0};
        bool all_fail = true;
        for (const auto& p : planner::plan(cfg, 614e6))
            all_fail &= p.verdict == planner::Verdict::Fail;
        report(3, "40 dB bandpass filter turns all verdicts to Fail", all_fail);
    }

    // wired handshake -> the link connects under full-band jamming
    {
        auto cfg = scenario::default_config();
        cfg.link.wired_handshake = true;
        cfg.jam_audio_bw_hz = 60e6;  // jam skirt covers the whole hop band
        const auto env = planner::environment_for_carrier(cfg, 307e6);
        const auto transcript = link::run_scenario(cfg.link, {{0, true}}, env, 10);
        bool linked = false;
        for (const auto& r : transcript) linked |= r.phase == link::Phase::Linked;
        report(3, "wired handshake connects under full-band jamming",
               linked && transcript[0].phase == link::Phase::Linked);
    }
}

// --------------------------------------------------------------------------
// 4. DSP property suite
// --------------------------------------------------------------------------
void criterion_dsp() {
    // Parseval, rectangular window, single segment
    {
        const auto noise = dsp::generate_white_noise({11, 4096, 48000.0});
        const auto spec = dsp::power_spectrum(noise, 4096, dsp::Window::Rectangular);
        double sum = 0.0, ms = 0.0;
        for (double db : spec.power_db)
            if (db > dsp::kPowerFloorDb) sum += std::pow(10.0, db / 10.0);
        for (double s : noise.samples) ms += s * s;
        ms /= static_cast<double>(noise.samples.size());
        report(4, "Parseval identity within 1e-9 relative", std::abs(sum - ms) / ms <= 1e-9);
    }

    // FM roundtrip SNR on a 1 kHz tone
    {
        const double fs = 400e3, dev = 75e3;
        const std::size_t n = 1u << 16;
        dsp::SampleBuffer tone{std::vector<double>(n), fs};
        for (std::size_t k = 0; k < n; ++k)
            tone.samples[k] = std::sin(2.0 * std::numbers::pi * 1e3 * k / fs);
        const auto demod = dsp::fm_demodulate(dsp::fm_modulate(tone, dev), dev);
        const std::size_t guard = 400;  // 1 ms
        double sig = 0.0, err = 0.0;
        for (std::size_t k = guard; k < n - guard; ++k) {
            sig += tone.samples[k] * tone.samples[k];
            const double e = demod.samples[k] - tone.samples[k];
            err += e * e;
        }
        report(4, "FM modulate->demodulate SNR >= 40 dB on a 1 kHz tone",
               10.0 * std::log10(sig / err) >= 40.0);
    }

    // harmonic level identities
    {
        emitter::EmitterModel env_model;
        env_model.fundamental_freq_hz = 100e6;
        env_model.rolloff = emitter::RolloffModel::Envelope;
        bool envelope_ok = true;
        for (int n = 1; n <= 8; ++n)
            envelope_ok &=
                std::abs(emitter::harmonic_level_dbc(env_model, n) + 20.0 * std::log10(n)) <= 1e-9;
        report(4, "envelope harmonic levels equal -20*log10(n) within 1e-9", envelope_ok);

        emitter::EmitterModel square = env_model;
        square.rolloff = emitter::RolloffModel::RectPulse;
        square.duty = 0.5;
        bool even_null = true;
        for (int n = 2; n <= 10; n += 2)
            even_null &= emitter::harmonic_level_dbc(square, n) == emitter::kFloorDb;
        report(4, "symmetric square wave even harmonics sit at the -300 dB floor", even_null);
    }

    // white-noise flatness at 2^18 samples
    {
        const auto noise = dsp::generate_white_noise({7, 1u << 18, 48000.0});
        const auto spec = dsp::power_spectrum(noise, 1024, dsp::Window::Rectangular);
        std::vector<double> sorted = spec.power_db;
        std::sort(sorted.begin(), sorted.end());
        const double median = sorted[sorted.size() / 2];
        std::size_t within = 0;
        for (double db : spec.power_db)
            if (std::abs(db - median) < 3.0) ++within;
        report(4, "white-noise spectrum: >= 99% of bins within 3 dB of the median",
               static_cast<double>(within) >= 0.99 * static_cast<double>(spec.power_db.size()));
    }
}

// --------------------------------------------------------------------------
// 5. Planner exactness
// --------------------------------------------------------------------------
void criterion_planner() {
    bool exact = true;
    for (int n = 1; n <= 8; ++n)
        exact &= planner::carrier_for_harmonic(614e6, n) * static_cast<double>(n) == 614e6;
    report(5, "carrier_for_harmonic(614 MHz, n) * n == 614 MHz exactly for n = 1..8", exact);

    const auto plans = planner::plan(scenario::default_config(), 614e6);
    bool decreasing = true;
    for (std::size_t i = 1; i < plans.size(); ++i)
        decreasing &= plans[i].predicted_jam_power_dbm < plans[i - 1].predicted_jam_power_dbm;
    report(5, "predicted jam power strictly decreasing in harmonic order", decreasing);

    // independently computed: 20*log10(4*pi*10*614e6/299792458) = 48.2112
    report(5, "FSPL(614 MHz, 10 m) = 48.2 +/- 0.1 dB",
           std::abs(channel::fspl_db(614e6, 10.0) - 48.2) < 0.1);
}

// --------------------------------------------------------------------------
// 6. Determinism
// --------------------------------------------------------------------------
void criterion_determinism(const fs::path& tmp) {
    const std::string plan_args = "plan --scenario " + kScenario + " --target-hz 614000000";
    run(plan_args + " --out " + (tmp / "p1").string(), tmp / "p1.log");
    run(plan_args + " --out " + (tmp / "p2").string(), tmp / "p2.log");
    const bool plan_stable =
        !slurp(tmp / "p1" / "plan.csv").empty() &&
        slurp(tmp / "p1" / "plan.csv") == slurp(tmp / "p2" / "plan.csv") &&
        slurp(tmp / "p1" / "plan.json") == slurp(tmp / "p2" / "plan.json");
    report(6, "plan outputs are byte-identical across runs", plan_stable);

    const std::string sim_args =
        "simulate --scenario " + kScenario + " --order 2 --jam-start 0 --duration 80";
    run(sim_args + " --out " + (tmp / "s1").string(), tmp / "s1.log");
    run(sim_args + " --out " + (tmp / "s2").string(), tmp / "s2.log");
    const bool sim_stable =
        !slurp(tmp / "s1" / "transcript.csv").empty() &&
        slurp(tmp / "s1" / "transcript.csv") == slurp(tmp / "s2" / "transcript.csv");
    report(6, "simulate transcripts are byte-identical across runs", sim_stable);
}

}  // namespace

int main() {
    const fs::path tmp =
        fs::temp_directory_path() / ("subjam_acceptance_" + std::to_string(::getpid()));
    fs::create_directories(tmp);

    criterion_table1(tmp);
    criterion_handshake();
    criterion_mitigation();
    criterion_dsp();
    criterion_planner();
    criterion_determinism(tmp);

    fs::remove_all(tmp);
    if (failures > 0) {
        std::printf("%d criterion check(s) FAILED\n", failures);
        return 1;
    }
    std::printf("all acceptance criteria passed\n");
    return 0;
}
