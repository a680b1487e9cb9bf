// subjam - sub-harmonic jamming planner and link simulator CLI.
//
// Subcommands:
//   plan      enumerate feasible sub-harmonic carriers for a target
//   simulate  run the link state machine against a jam schedule
//   table1    plan + simulate for harmonic orders 2..5, cross-checked
//   spectrum  FM-modulate a WAV and report its power spectrum and peak
//   noise     generate a seeded white-noise WAV
//
// Exit codes: 0 success, 2 config error, 3 infeasible request,
// 4 internal consistency failure.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "subjam/dsp.hpp"
#include "subjam/iq_io.hpp"
#include "subjam/link.hpp"
#include "subjam/planner.hpp"
#include "subjam/scenario.hpp"
#include "subjam/wav.hpp"

namespace fs = std::filesystem;
using namespace subjam;

namespace {

constexpr const char* kVersion = "subjam 0.1.0";

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitInconsistent = 4;

// Fixed float formatting for machine outputs: 6 significant digits,
// '.' decimal separator, LF line endings.
std::string g6(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << content;
}

void write_manifest(const fs::path& out_dir, const std::string& command,
                    const std::string& scenario_file, uint64_t seed,
                    const std::vector<std::string>& argv_copy) {
    nlohmann::json j;
    j["command"] = command;
    j["scenario_file"] = scenario_file;
    j["seed"] = seed;
    j["out_dir"] = out_dir.string();
    j["version"] = kVersion;
    j["argv"] = argv_copy;
    write_file(out_dir / "manifest.json", j.dump(2) + "\n");
}

const char* verdict_ascii(planner::Verdict v) {
    return v == planner::Verdict::Success ? "OK" : "FAIL";
}

const char* verdict_mark(planner::Verdict v) {
    return v == planner::Verdict::Success ? "✓" : "✗";
}

std::string ordinal(int n) {
    const char* suffix = "th";
    if (n % 100 < 11 || n % 100 > 13) {
        switch (n % 10) {
            case 1: suffix = "st"; break;
            case 2: suffix = "nd"; break;
            case 3: suffix = "rd"; break;
        }
    }
    return std::to_string(n) + suffix;
}

std::string plan_csv(const std::vector<planner::JamPlan>& plans) {
    std::string csv = "order,carrier_hz,jam_power_dbm,js_db,verdict\n";
    for (const auto& p : plans) {
        csv += std::to_string(p.harmonic_order) + "," + g6(p.carrier_freq_hz) + "," +
               g6(p.predicted_jam_power_dbm) + "," + g6(p.predicted_js_db) + "," +
               verdict_ascii(p.verdict) + "\n";
    }
    return csv;
}

std::string plan_json(const std::vector<planner::JamPlan>& plans) {
    // hand-assembled so numbers carry the same 6-significant-digit
    // formatting as the CSV
    std::string out = "[\n";
    for (std::size_t i = 0; i < plans.size(); ++i) {
        const auto& p = plans[i];
        out += "  {\"order\": " + std::to_string(p.harmonic_order) +
               ", \"carrier_hz\": " + g6(p.carrier_freq_hz) +
               ", \"jam_power_dbm\": " + g6(p.predicted_jam_power_dbm) +
               ", \"js_db\": " + g6(p.predicted_js_db) + ", \"verdict\": \"" +
               verdict_ascii(p.verdict) + "\"}";
        out += (i + 1 < plans.size()) ? ",\n" : "\n";
    }
    out += "]\n";
    return out;
}

void print_plan_table(const std::vector<planner::JamPlan>& plans) {
    std::printf("%-6s %-14s %-14s %-10s %s\n", "order", "carrier (MHz)", "jam (dBm)",
                "J/S (dB)", "verdict");
    for (const auto& p : plans) {
        std::printf("%-6d %-14s %-14s %-10s %s\n", p.harmonic_order,
                    g6(p.carrier_freq_hz / 1e6).c_str(),
                    g6(p.predicted_jam_power_dbm).c_str(), g6(p.predicted_js_db).c_str(),
                    verdict_mark(p.verdict));
    }
}

std::string transcript_csv(const std::vector<link::TickRecord>& transcript) {
    std::string csv = "tick,state,handshake_js_db,jammed_fraction\n";
    for (const auto& r : transcript) {
        csv += std::to_string(r.tick) + "," + link::phase_name(r.phase) + "," +
               g6(r.handshake_js_db) + "," + g6(r.jammed_fraction) + "\n";
    }
    return csv;
}

int cmd_plan(const std::string& scenario_file, int64_t target_hz, const fs::path& out_dir,
             uint64_t seed, const std::vector<std::string>& argv_copy) {
    const auto scenario = scenario::load(scenario_file);
    const auto plans = planner::plan(scenario, static_cast<double>(target_hz));

    fs::create_directories(out_dir);
    write_file(out_dir / "plan.csv", plan_csv(plans));
    write_file(out_dir / "plan.json", plan_json(plans));
    write_manifest(out_dir, "plan", scenario_file, seed, argv_copy);

    print_plan_table(plans);
    return kExitOk;
}

int cmd_simulate(const std::string& scenario_file, int order, int jam_start, int duration,
                 const fs::path& out_dir, uint64_t seed,
                 const std::vector<std::string>& argv_copy) {
    const auto scenario = scenario::load(scenario_file);
    const double target = scenario.link.handshake_freq_hz;

    const int n_min = planner::min_feasible_order(target, scenario.emitter.max_carrier_hz);
    if (order < n_min || order > scenario.n_orders_max) {
        std::cerr << "simulate: order " << order << " infeasible (carrier ceiling allows "
                  << n_min << ".." << scenario.n_orders_max << ")\n";
        return kExitInfeasible;
    }

    const double carrier = planner::carrier_for_harmonic(target, order);
    const auto env = planner::environment_for_carrier(scenario, carrier);
    std::vector<link::JamWindow> schedule;
    if (jam_start < duration) schedule.push_back({jam_start, true});
    const auto transcript = link::run_scenario(scenario.link, schedule, env, duration);

    fs::create_directories(out_dir);
    write_file(out_dir / "transcript.csv", transcript_csv(transcript));
    write_manifest(out_dir, "simulate", scenario_file, seed, argv_copy);

    std::printf("order %d, carrier %s MHz, jam from tick %d\n", order, g6(carrier / 1e6).c_str(),
                jam_start);
    std::printf("final state after %d ticks: %s\n", duration,
                link::phase_name(transcript.back().phase));
    return kExitOk;
}

int cmd_table1(const std::string& scenario_file, const fs::path& out_dir, uint64_t seed,
               const std::vector<std::string>& argv_copy) {
    const auto scenario = scenario::load(scenario_file);
    const double target = scenario.link.handshake_freq_hz;
    const auto all_plans = planner::plan(scenario, target);

    std::vector<planner::JamPlan> rows;
    for (const auto& p : all_plans)
        if (p.harmonic_order >= 2 && p.harmonic_order <= 5) rows.push_back(p);

    std::string csv = "order,carrier_hz,jam_power_dbm,js_db,verdict,agree\n";
    bool all_agree = true;
    std::printf("%-14s %-10s %s\n", "Frequency", "Harmonic", "Result");
    for (const auto& p : rows) {
        const bool agree = planner::verify_plan(p, scenario);
        all_agree = all_agree && agree;
        std::printf("%-14s %-10s %s\n", (g6(p.carrier_freq_hz / 1e6) + " MHz").c_str(),
                    ordinal(p.harmonic_order).c_str(), verdict_mark(p.verdict));
        csv += std::to_string(p.harmonic_order) + "," + g6(p.carrier_freq_hz) + "," +
               g6(p.predicted_jam_power_dbm) + "," + g6(p.predicted_js_db) + "," +
               verdict_ascii(p.verdict) + "," + (agree ? "yes" : "no") + "\n";
    }

    fs::create_directories(out_dir);
    write_file(out_dir / "table1.csv", csv);
    write_manifest(out_dir, "table1", scenario_file, seed, argv_copy);

    if (!all_agree) {
        std::cerr << "table1: planner and simulator disagree\n";
        return kExitInconsistent;
    }
    return kExitOk;
}

// Zero-order-hold resampler; the modulator needs an IQ rate well above the
// deviation while WAV audio is typically 48 kHz. Holding each sample keeps
// the full modulating power (interpolation would lowpass the audio and
// shrink the occupied bandwidth).
dsp::SampleBuffer resample_hold(const dsp::SampleBuffer& in, double new_rate_hz) {
    dsp::SampleBuffer out;
    out.sample_rate_hz = new_rate_hz;
    if (in.samples.empty()) return out;
    const double ratio = in.sample_rate_hz / new_rate_hz;
    const auto n_out = static_cast<std::size_t>(
        std::floor(static_cast<double>(in.samples.size() - 1) / ratio)) + 1;
    out.samples.resize(n_out);
    for (std::size_t k = 0; k < n_out; ++k)
        out.samples[k] = in.samples[static_cast<std::size_t>(static_cast<double>(k) * ratio)];
    return out;
}

// Smallest symmetric band around the strongest bin holding the given
// fraction of total power.
double occupied_bandwidth_hz(const dsp::Spectrum& spectrum, double fraction) {
    std::vector<double> linear(spectrum.power_db.size());
    double total = 0.0;
    std::size_t peak = 0;
    for (std::size_t k = 0; k < linear.size(); ++k) {
        linear[k] = spectrum.power_db[k] > dsp::kPowerFloorDb
                        ? std::pow(10.0, spectrum.power_db[k] / 10.0)
                        : 0.0;
        total += linear[k];
        if (spectrum.power_db[k] > spectrum.power_db[peak]) peak = k;
    }
    double acc = linear[peak];
    std::size_t lo = peak, hi = peak;
    while (acc < fraction * total && (lo > 0 || hi + 1 < linear.size())) {
        const double next_lo = lo > 0 ? linear[lo - 1] : -1.0;
        const double next_hi = hi + 1 < linear.size() ? linear[hi + 1] : -1.0;
        if (next_lo >= next_hi) acc += linear[--lo];
        else acc += linear[++hi];
    }
    return static_cast<double>(hi - lo + 1) * spectrum.rbw_hz;
}

int cmd_spectrum(const std::string& wav_file, int64_t deviation_hz, std::size_t n_fft,
                 const fs::path& out_dir, uint64_t seed,
                 const std::vector<std::string>& argv_copy) {
    dsp::SampleBuffer audio;
    try {
        audio = wav::read_pcm16_mono(wav_file);
    } catch (const std::exception& e) {
        std::cerr << "spectrum: " << e.what() << "\n";
        return kExitConfig;
    }

    const double dev = static_cast<double>(deviation_hz);
    const double iq_rate = std::max(8.0 * dev, 4.0 * audio.sample_rate_hz);
    const dsp::SampleBuffer upsampled = resample_hold(audio, iq_rate);
    dsp::IQBuffer iq = dsp::fm_modulate(upsampled, dev);

    if (iq.samples.size() < n_fft) {
        std::cerr << "spectrum: input too short for the requested FFT size\n";
        return kExitConfig;
    }
    const dsp::Spectrum spectrum = dsp::power_spectrum(iq, n_fft, dsp::Window::Hann);

    std::string csv = "freq_hz,power_db\n";
    for (std::size_t k = 0; k < spectrum.bin_freqs_hz.size(); ++k)
        csv += g6(spectrum.bin_freqs_hz[k]) + "," + g6(spectrum.power_db[k]) + "\n";

    fs::create_directories(out_dir);
    write_file(out_dir / "spectrum.csv", csv);
    write_manifest(out_dir, "spectrum", wav_file, seed, argv_copy);

    const double peak = dsp::find_peak_hz(spectrum);
    const double obw = occupied_bandwidth_hz(spectrum, 0.99);
    std::printf("peak_hz %s\n", g6(peak).c_str());
    std::printf("occupied_bw99_hz %s\n", g6(obw).c_str());
    return kExitOk;
}

int cmd_noise(uint64_t seed, std::size_t n_samples, int64_t rate_hz, const fs::path& out_dir,
              const std::vector<std::string>& argv_copy) {
    dsp::NoiseSpec spec;
    spec.seed = seed;
    spec.n_samples = n_samples;
    spec.sample_rate_hz = static_cast<double>(rate_hz);
    const dsp::SampleBuffer noise = dsp::generate_white_noise(spec);

    fs::create_directories(out_dir);
    wav::write_pcm16_mono((out_dir / "noise.wav").string(), noise);
    write_manifest(out_dir, "noise", "", seed, argv_copy);

    std::printf("wrote %zu samples at %lld Hz to %s\n", n_samples,
                static_cast<long long>(rate_hz), (out_dir / "noise.wav").string().c_str());
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<std::string> argv_copy(argv, argv + argc);

    CLI::App app{"sub-harmonic RF jamming planner and link simulator"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    std::string scenario_file;
    std::string wav_file;
    std::string out_dir = "out";
    int64_t target_hz = 614000000;
    int64_t deviation_hz = 75000;
    int64_t rate_hz = 48000;
    std::size_t n_fft = 4096;
    std::size_t n_samples = 240000;  // 5 s at 48 kHz
    int order = 2;
    int jam_start = 0;
    int duration = 100;
    uint64_t seed = 0;

    auto* plan_cmd = app.add_subcommand("plan", "enumerate sub-harmonic attack plans");
    plan_cmd->add_option("--scenario", scenario_file, "scenario JSON file")->required();
    plan_cmd->add_option("--target-hz", target_hz, "target frequency in Hz");
    plan_cmd->add_option("--out", out_dir, "output directory");
    plan_cmd->add_option("--seed", seed, "manifest seed");

    auto* sim_cmd = app.add_subcommand("simulate", "run the link simulator");
    sim_cmd->add_option("--scenario", scenario_file, "scenario JSON file")->required();
    sim_cmd->add_option("--order", order, "harmonic order")->required();
    sim_cmd->add_option("--jam-start", jam_start, "tick at which jamming starts");
    sim_cmd->add_option("--duration", duration, "ticks to simulate");
    sim_cmd->add_option("--out", out_dir, "output directory");
    sim_cmd->add_option("--seed", seed, "manifest seed");

    auto* table_cmd = app.add_subcommand("table1", "verdict table for orders 2..5");
    table_cmd->add_option("--scenario", scenario_file, "scenario JSON file")->required();
    table_cmd->add_option("--out", out_dir, "output directory");
    table_cmd->add_option("--seed", seed, "manifest seed");

    auto* spec_cmd = app.add_subcommand("spectrum", "FM-modulate a WAV and analyze it");
    spec_cmd->add_option("wav", wav_file, "input WAV (PCM16 mono)")->required();
    spec_cmd->add_option("--deviation-hz", deviation_hz, "FM deviation in Hz");
    spec_cmd->add_option("--fft", n_fft, "FFT size (power of two)");
    spec_cmd->add_option("--out", out_dir, "output directory");
    spec_cmd->add_option("--seed", seed, "manifest seed");

    auto* noise_cmd = app.add_subcommand("noise", "generate a white-noise WAV");
    noise_cmd->add_option("--seed", seed, "noise seed");
    noise_cmd->add_option("--samples", n_samples, "number of samples");
    noise_cmd->add_option("--rate-hz", rate_hz, "sample rate in Hz");
    noise_cmd->add_option("--out", out_dir, "output directory");

    CLI11_PARSE(app, argc, argv);

    try {
        if (plan_cmd->parsed())
            return cmd_plan(scenario_file, target_hz, out_dir, seed, argv_copy);
        if (sim_cmd->parsed())
            return cmd_simulate(scenario_file, order, jam_start, duration, out_dir, seed,
                                argv_copy);
        if (table_cmd->parsed()) return cmd_table1(scenario_file, out_dir, seed, argv_copy);
        if (spec_cmd->parsed())
            return cmd_spectrum(wav_file, deviation_hz, n_fft, out_dir, seed, argv_copy);
        if (noise_cmd->parsed()) return cmd_noise(seed, n_samples, rate_hz, out_dir, argv_copy);
    } catch (const scenario::ScenarioError& e) {
        std::cerr << e.what() << "\n";
        return kExitConfig;
    } catch (const planner::NoFeasibleOrderError& e) {
        std::cerr << e.what() << "\n";
        return kExitInfeasible;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    }
    return kExitOk;
}
