#include "subjam/channel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace subjam::channel {

namespace {
constexpr double kSpeedOfLight = 299792458.0;  // m/s
}

double fspl_db(double freq_hz, double distance_m) {
    if (!(freq_hz > 0.0) || !(distance_m > 0.0))
        throw std::invalid_argument("fspl_db: frequency and distance must be > 0");
    return 20.0 * std::log10(4.0 * std::numbers::pi * distance_m * freq_hz / kSpeedOfLight);
}

double received_power_dbm(double tx_power_dbm, double freq_hz, const ChannelModel& ch) {
    if (ch.extra_loss_db < 0.0)
        throw std::invalid_argument("received_power_dbm: extra_loss_db must be >= 0");
    return tx_power_dbm - fspl_db(freq_hz, ch.distance_m) - ch.extra_loss_db;
}

}  // namespace subjam::channel
