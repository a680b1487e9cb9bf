#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <unistd.h>

#include "subjam/dsp.hpp"
#include "subjam/iq_io.hpp"
#include "subjam/scenario.hpp"
#include "subjam/wav.hpp"

using namespace subjam;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("subjam_test_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("WAV round trip preserves samples to 16-bit precision") {
    TempDir tmp;
    const auto noise = dsp::generate_white_noise({21, 4096, 48000.0});
    const std::string path = (tmp.path / "rt.wav").string();
    wav::write_pcm16_mono(path, noise);
    const auto back = wav::read_pcm16_mono(path);

    CHECK(back.sample_rate_hz == 48000.0);
    REQUIRE(back.samples.size() == noise.samples.size());
    for (std::size_t i = 0; i < noise.samples.size(); ++i)
        CHECK(std::abs(back.samples[i] - noise.samples[i]) <= 1.0 / 32768.0);
}

TEST_CASE("WAV reader rejects garbage") {
    TempDir tmp;
    const std::string path = (tmp.path / "bad.wav").string();
    std::ofstream(path) << "definitely not RIFF";
    CHECK_THROWS(wav::read_pcm16_mono(path));
    CHECK_THROWS(wav::read_pcm16_mono((tmp.path / "missing.wav").string()));
}

TEST_CASE("IQ dump round trip with sidecar metadata") {
    TempDir tmp;
    const auto noise = dsp::generate_white_noise({5, 2048, 400e3});
    auto iq = dsp::fm_modulate(noise, 50e3);
    iq.center_freq_hz = 614e6;

    const std::string path = (tmp.path / "sig.iq").string();
    iq_io::write_f32(path, iq);
    CHECK(fs::exists(path + ".txt"));

    const auto back = iq_io::read_f32(path);
    CHECK(back.sample_rate_hz == doctest::Approx(400e3));
    CHECK(back.center_freq_hz == doctest::Approx(614e6));
    REQUIRE(back.samples.size() == iq.samples.size());
    for (std::size_t i = 0; i < iq.samples.size(); ++i)
        CHECK(std::abs(back.samples[i] - iq.samples[i]) < 1e-6);
}

TEST_CASE("IQ reader rejects a missing sidecar") {
    TempDir tmp;
    const std::string path = (tmp.path / "orphan.iq").string();
    std::ofstream(path, std::ios::binary).write("\0\0\0\0\0\0\0\0", 8);
    CHECK_THROWS(iq_io::read_f32(path));
}

TEST_CASE("shipped default scenario file matches the built-in defaults") {
    const auto loaded = scenario::load(SUBJAM_SCENARIO_PATH);
    const auto builtin = scenario::default_config();
    CHECK(loaded.emitter.fundamental_freq_hz == builtin.emitter.fundamental_freq_hz);
    CHECK(loaded.emitter.tx_power_dbm == builtin.emitter.tx_power_dbm);
    CHECK(loaded.emitter.max_carrier_hz == builtin.emitter.max_carrier_hz);
    CHECK(loaded.emitter.rolloff == builtin.emitter.rolloff);
    CHECK_FALSE(loaded.emitter.filter.has_value());
    CHECK(loaded.channel_jam.distance_m == builtin.channel_jam.distance_m);
    CHECK(loaded.channel_mic.extra_loss_db == builtin.channel_mic.extra_loss_db);
    CHECK(loaded.link.handshake_freq_hz == builtin.link.handshake_freq_hz);
    CHECK(loaded.link.n_hop_channels == builtin.link.n_hop_channels);
    CHECK(loaded.link.jam_threshold_js_db == builtin.link.jam_threshold_js_db);
    CHECK(loaded.mic_tx_power_dbm == builtin.mic_tx_power_dbm);
    CHECK(loaded.n_orders_max == builtin.n_orders_max);
    CHECK(loaded.jam_deviation_hz == builtin.jam_deviation_hz);
}

TEST_CASE("scenario JSON round trips through to_json/parse") {
    auto cfg = scenario::default_config();
    cfg.emitter.rolloff = emitter::RolloffModel::RectPulse;
    cfg.emitter.duty = 0.45;
    cfg.emitter.filter = emitter::BandpassFilter{307000000.0, 10000000.0, 40.0};
    cfg.link.wired_handshake = true;

    const auto back = scenario::parse(scenario::to_json(cfg));
    CHECK(back.emitter.rolloff == emitter::RolloffModel::RectPulse);
    CHECK(back.emitter.duty == 0.45);
    REQUIRE(back.emitter.filter.has_value());
    CHECK(back.emitter.filter->stopband_atten_db == 40.0);
    CHECK(back.link.wired_handshake);
}

TEST_CASE("scenario parser rejects malformed input") {
    CHECK_THROWS_AS(scenario::parse("{ not json"), scenario::ScenarioError);
    CHECK_THROWS_AS(scenario::parse("[1,2,3]"), scenario::ScenarioError);
    CHECK_THROWS_AS(scenario::load("/nonexistent/scenario.json"), scenario::ScenarioError);

    // every field must be explicit - dropping one key is an error
    auto cfg = scenario::default_config();
    std::string text = scenario::to_json(cfg);
    const auto pos = text.find("\"hop_seed\"");
    REQUIRE(pos != std::string::npos);
    text.erase(pos, text.find('\n', pos) - pos + 1);
    CHECK_THROWS_AS(scenario::parse(text), scenario::ScenarioError);
}

TEST_CASE("scenario parser enforces invariants") {
    auto cfg = scenario::default_config();

    auto swap_value = [&](const std::string& from, const std::string& to) {
        std::string text = scenario::to_json(cfg);
        const auto pos = text.find(from);
        REQUIRE(pos != std::string::npos);
        text.replace(pos, from.size(), to);
        return text;
    };

    // handshake outside the band
    CHECK_THROWS_AS(scenario::parse(swap_value("\"handshake_freq_hz\": 614000000",
                                               "\"handshake_freq_hz\": 700000000")),
                    scenario::ScenarioError);
    // zero hop channels
    CHECK_THROWS_AS(scenario::parse(swap_value("\"n_hop_channels\": 16",
                                               "\"n_hop_channels\": 0")),
                    scenario::ScenarioError);
    // frequencies must be integers
    CHECK_THROWS_AS(scenario::parse(swap_value("\"band_lo_hz\": 606000000",
                                               "\"band_lo_hz\": 606000000.5")),
                    scenario::ScenarioError);

    cfg.emitter.rolloff = emitter::RolloffModel::RectPulse;
    cfg.emitter.duty = 0.45;
    CHECK_THROWS_AS(scenario::parse(swap_value("\"duty\": 0.45", "\"duty\": 1.5")),
                    scenario::ScenarioError);
}
