#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "subjam/channel.hpp"

using namespace subjam::channel;

TEST_CASE("fspl spot value at 614 MHz / 10 m") {
    // oracle: 20*log10(4*pi*10*614e6 / 299792458) = 48.211 dB
    CHECK(std::abs(fspl_db(614e6, 10.0) - 48.2) < 0.1);
}

TEST_CASE("doubling distance or frequency adds 20*log10(2)") {
    const double six = 20.0 * std::log10(2.0);
    CHECK(fspl_db(614e6, 20.0) - fspl_db(614e6, 10.0) == doctest::Approx(six).epsilon(1e-12));
    CHECK(fspl_db(1228e6, 10.0) - fspl_db(614e6, 10.0) == doctest::Approx(six).epsilon(1e-12));
}

TEST_CASE("fspl rejects non-positive inputs") {
    CHECK_THROWS_AS(fspl_db(0.0, 10.0), std::invalid_argument);
    CHECK_THROWS_AS(fspl_db(614e6, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(fspl_db(-614e6, 10.0), std::invalid_argument);
}

TEST_CASE("received power spot values") {
    ChannelModel ch{10.0, 0.0, -174.0};
    CHECK(std::abs(received_power_dbm(0.0, 614e6, ch) - (-48.2)) < 0.1);

    ch.extra_loss_db = 10.0;
    CHECK(received_power_dbm(0.0, 614e6, ch) ==
          doctest::Approx(received_power_dbm(0.0, 614e6, {10.0, 0.0, -174.0}) - 10.0));

    // 1 GHz at 1 m: FSPL = 32.45 dB
    CHECK(std::abs(received_power_dbm(0.0, 1e9, {1.0, 0.0, -174.0}) - (-32.4)) < 0.1);
}

TEST_CASE("received power decreases monotonically in distance, frequency and loss") {
    double prev = received_power_dbm(0.0, 614e6, {1.0, 0.0, -174.0});
    for (double d = 2.0; d <= 64.0; d *= 2.0) {
        const double p = received_power_dbm(0.0, 614e6, {d, 0.0, -174.0});
        CHECK(p < prev);
        prev = p;
    }
    prev = received_power_dbm(0.0, 100e6, {10.0, 0.0, -174.0});
    for (double f = 200e6; f <= 3200e6; f *= 2.0) {
        const double p = received_power_dbm(0.0, f, {10.0, 0.0, -174.0});
        CHECK(p < prev);
        prev = p;
    }
}

TEST_CASE("path loss is reciprocal") {
    // swapping endpoints leaves (f, d) unchanged, hence the loss
    CHECK(fspl_db(614e6, 5.0) == fspl_db(614e6, 5.0));
}
