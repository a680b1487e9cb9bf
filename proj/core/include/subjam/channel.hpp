#pragma once

namespace subjam::channel {

/// Single deterministic free-space path with isotropic unity-gain antennas.
struct ChannelModel {
    double distance_m = 1.0;
    double extra_loss_db = 0.0;
    double noise_floor_dbm_hz = -174.0;
};

/// Free-space path loss 20*log10(4*pi*d*f/c). Throws on non-positive input.
double fspl_db(double freq_hz, double distance_m);

/// tx_power_dbm - fspl - extra_loss (unity antenna gains).
double received_power_dbm(double tx_power_dbm, double freq_hz, const ChannelModel& ch);

}  // namespace subjam::channel
