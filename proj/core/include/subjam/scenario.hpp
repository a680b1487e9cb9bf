#pragma once

#include <stdexcept>
#include <string>

#include "subjam/planner.hpp"

namespace subjam::scenario {

struct ScenarioError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Loads a scenario JSON file. Every field must be present explicitly;
/// missing keys, wrong types, or invariant violations raise ScenarioError.
planner::ScenarioConfig load(const std::string& path);

/// Parses scenario JSON from a string (same strictness as load).
planner::ScenarioConfig parse(const std::string& json_text);

/// Serializes a scenario back to JSON text (all fields explicit).
std::string to_json(const planner::ScenarioConfig& config);

/// The shipped default scenario: 614 MHz link, calibrated so harmonic
/// orders 2-4 deny the handshake and order 5 does not.
planner::ScenarioConfig default_config();

}  // namespace subjam::scenario
