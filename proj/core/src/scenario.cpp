#include "subjam/scenario.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace subjam::scenario {

namespace {

using nlohmann::json;

const json& require(const json& obj, const std::string& key) {
    const auto it = obj.find(key);
    if (it == obj.end())
        throw ScenarioError("scenario: missing key \"" + key + "\"");
    return *it;
}

double require_number(const json& obj, const std::string& key) {
    const json& v = require(obj, key);
    if (!v.is_number())
        throw ScenarioError("scenario: key \"" + key + "\" must be a number");
    return v.get<double>();
}

int64_t require_integer(const json& obj, const std::string& key) {
    const json& v = require(obj, key);
    if (!v.is_number_integer())
        throw ScenarioError("scenario: key \"" + key + "\" must be an integer");
    return v.get<int64_t>();
}

bool require_bool(const json& obj, const std::string& key) {
    const json& v = require(obj, key);
    if (!v.is_boolean())
        throw ScenarioError("scenario: key \"" + key + "\" must be a boolean");
    return v.get<bool>();
}

std::string require_string(const json& obj, const std::string& key) {
    const json& v = require(obj, key);
    if (!v.is_string())
        throw ScenarioError("scenario: key \"" + key + "\" must be a string");
    return v.get<std::string>();
}

emitter::EmitterModel parse_emitter(const json& j) {
    emitter::EmitterModel m;
    m.fundamental_freq_hz = static_cast<double>(require_integer(j, "fundamental_freq_hz"));
    m.tx_power_dbm = require_number(j, "tx_power_dbm");
    m.max_carrier_hz = static_cast<double>(require_integer(j, "max_carrier_hz"));

    const json& rolloff = require(j, "rolloff");
    const std::string model = require_string(rolloff, "model");
    if (model == "envelope") {
        m.rolloff = emitter::RolloffModel::Envelope;
    } else if (model == "rect_pulse") {
        m.rolloff = emitter::RolloffModel::RectPulse;
        m.duty = require_number(rolloff, "duty");
        if (!(m.duty > 0.0 && m.duty < 1.0))
            throw ScenarioError("scenario: rolloff duty must be strictly inside (0,1)");
    } else {
        throw ScenarioError("scenario: unknown rolloff model \"" + model + "\"");
    }

    m.attenuation_db = require_number(j, "attenuation_db");
    if (m.attenuation_db < 0.0)
        throw ScenarioError("scenario: attenuation_db must be >= 0");

    const json& filter = require(j, "filter");
    if (!filter.is_null()) {
        emitter::BandpassFilter f;
        f.center_hz = static_cast<double>(require_integer(filter, "center_hz"));
        f.passband_width_hz = static_cast<double>(require_integer(filter, "passband_width_hz"));
        f.stopband_atten_db = require_number(filter, "stopband_atten_db");
        if (!(f.passband_width_hz > 0.0) || !(f.stopband_atten_db > 0.0))
            throw ScenarioError("scenario: filter width and stopband attenuation must be > 0");
        m.filter = f;
    }

    const std::string bw = require_string(j, "bandwidth_model");
    if (bw == "carson_scaled") m.bandwidth_model = emitter::BandwidthModel::CarsonScaled;
    else if (bw == "constant") m.bandwidth_model = emitter::BandwidthModel::Constant;
    else throw ScenarioError("scenario: unknown bandwidth_model \"" + bw + "\"");

    return m;
}

channel::ChannelModel parse_channel(const json& j) {
    channel::ChannelModel c;
    c.distance_m = require_number(j, "distance_m");
    c.extra_loss_db = require_number(j, "extra_loss_db");
    c.noise_floor_dbm_hz = require_number(j, "noise_floor_dbm_hz");
    if (!(c.distance_m > 0.0))
        throw ScenarioError("scenario: distance_m must be > 0");
    if (c.extra_loss_db < 0.0)
        throw ScenarioError("scenario: extra_loss_db must be >= 0");
    return c;
}

link::LinkConfig parse_link(const json& j) {
    link::LinkConfig l;
    l.band_lo_hz = static_cast<double>(require_integer(j, "band_lo_hz"));
    l.band_hi_hz = static_cast<double>(require_integer(j, "band_hi_hz"));
    l.handshake_freq_hz = static_cast<double>(require_integer(j, "handshake_freq_hz"));
    l.n_hop_channels = static_cast<int>(require_integer(j, "n_hop_channels"));
    l.hop_seed = static_cast<uint64_t>(require_integer(j, "hop_seed"));
    l.handshake_windows = static_cast<int>(require_integer(j, "handshake_windows"));
    l.jam_threshold_js_db = require_number(j, "jam_threshold_js_db");
    l.jam_break_fraction = require_number(j, "jam_break_fraction");
    l.wired_handshake = require_bool(j, "wired_handshake");

    if (!(l.band_lo_hz < l.handshake_freq_hz && l.handshake_freq_hz < l.band_hi_hz))
        throw ScenarioError("scenario: handshake_freq_hz must lie inside the band");
    if (l.n_hop_channels < 1)
        throw ScenarioError("scenario: n_hop_channels must be >= 1");
    if (l.handshake_windows < 1)
        throw ScenarioError("scenario: handshake_windows must be >= 1");
    if (!(l.jam_break_fraction > 0.0 && l.jam_break_fraction <= 1.0))
        throw ScenarioError("scenario: jam_break_fraction must be in (0,1]");
    return l;
}

}  // namespace

planner::ScenarioConfig parse(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ScenarioError(std::string("scenario: invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ScenarioError("scenario: top level must be an object");

    planner::ScenarioConfig cfg;
    cfg.emitter = parse_emitter(require(j, "emitter"));
    cfg.channel_jam = parse_channel(require(j, "channel_jam"));
    cfg.channel_mic = parse_channel(require(j, "channel_mic"));
    cfg.link = parse_link(require(j, "link"));
    cfg.mic_tx_power_dbm = require_number(j, "mic_tx_power_dbm");
    cfg.n_orders_max = static_cast<int>(require_integer(j, "n_orders_max"));
    cfg.jam_deviation_hz = static_cast<double>(require_integer(j, "jam_deviation_hz"));
    cfg.jam_audio_bw_hz = static_cast<double>(require_integer(j, "jam_audio_bw_hz"));
    if (cfg.n_orders_max < 1)
        throw ScenarioError("scenario: n_orders_max must be >= 1");
    if (!(cfg.jam_deviation_hz > 0.0) || !(cfg.jam_audio_bw_hz > 0.0))
        throw ScenarioError("scenario: jam deviation and audio bandwidth must be > 0");
    return cfg;
}

planner::ScenarioConfig load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ScenarioError("scenario: cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

std::string to_json(const planner::ScenarioConfig& config) {
    json j;
    json e;
    e["fundamental_freq_hz"] = static_cast<int64_t>(config.emitter.fundamental_freq_hz);
    e["tx_power_dbm"] = config.emitter.tx_power_dbm;
    e["max_carrier_hz"] = static_cast<int64_t>(config.emitter.max_carrier_hz);
    if (config.emitter.rolloff == emitter::RolloffModel::Envelope)
        e["rolloff"] = {{"model", "envelope"}};
    else
        e["rolloff"] = {{"model", "rect_pulse"}, {"duty", config.emitter.duty}};
    e["attenuation_db"] = config.emitter.attenuation_db;
    if (config.emitter.filter) {
        e["filter"] = {
            {"center_hz", static_cast<int64_t>(config.emitter.filter->center_hz)},
            {"passband_width_hz", static_cast<int64_t>(config.emitter.filter->passband_width_hz)},
            {"stopband_atten_db", config.emitter.filter->stopband_atten_db},
        };
    } else {
        e["filter"] = nullptr;
    }
    e["bandwidth_model"] =
        config.emitter.bandwidth_model == emitter::BandwidthModel::CarsonScaled ? "carson_scaled"
                                                                                : "constant";
    j["emitter"] = e;

    const auto channel_json = [](const channel::ChannelModel& c) {
        return json{{"distance_m", c.distance_m},
                    {"extra_loss_db", c.extra_loss_db},
                    {"noise_floor_dbm_hz", c.noise_floor_dbm_hz}};
    };
    j["channel_jam"] = channel_json(config.channel_jam);
    j["channel_mic"] = channel_json(config.channel_mic);

    j["link"] = {
        {"band_lo_hz", static_cast<int64_t>(config.link.band_lo_hz)},
        {"band_hi_hz", static_cast<int64_t>(config.link.band_hi_hz)},
        {"handshake_freq_hz", static_cast<int64_t>(config.link.handshake_freq_hz)},
        {"n_hop_channels", config.link.n_hop_channels},
        {"hop_seed", config.link.hop_seed},
        {"handshake_windows", config.link.handshake_windows},
        {"jam_threshold_js_db", config.link.jam_threshold_js_db},
        {"jam_break_fraction", config.link.jam_break_fraction},
        {"wired_handshake", config.link.wired_handshake},
    };
    j["mic_tx_power_dbm"] = config.mic_tx_power_dbm;
    j["n_orders_max"] = config.n_orders_max;
    j["jam_deviation_hz"] = static_cast<int64_t>(config.jam_deviation_hz);
    j["jam_audio_bw_hz"] = static_cast<int64_t>(config.jam_audio_bw_hz);
    return j.dump(2) + "\n";
}

planner::ScenarioConfig default_config() {
    planner::ScenarioConfig cfg;
    cfg.emitter.fundamental_freq_hz = 307e6;
    cfg.emitter.tx_power_dbm = 10.0;
    cfg.emitter.max_carrier_hz = 500e6;
    cfg.emitter.rolloff = emitter::RolloffModel::Envelope;
    cfg.emitter.attenuation_db = 0.0;
    cfg.emitter.bandwidth_model = emitter::BandwidthModel::CarsonScaled;

    cfg.channel_jam = {5.0, 0.0, -174.0};
    // The 21 dB mic-side loss is the calibration knob: it places the
    // order-4 J/S 1.0 dB above the 0 dB threshold and order 5 0.94 dB
    // below, reproducing the observed success/failure pattern.
    cfg.channel_mic = {2.0, 21.0, -174.0};

    cfg.link = link::LinkConfig{};
    cfg.mic_tx_power_dbm = 10.0;
    cfg.n_orders_max = 8;
    cfg.jam_deviation_hz = 75e3;
    cfg.jam_audio_bw_hz = 20e3;
    return cfg;
}

}  // namespace subjam::scenario
