#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "qmc/channels.hpp"

namespace qmc {

/// A channel as read from a JSON config object, e.g.
///   {"kind": "svc", "A": 1.0, "N": 1.0, "M": 1.41421356, "omega": 0.0}
///   {"kind": "custom", "inv_T1": 3, "inv_T2": 1.5, "inv_T3": 1.4, "w_eq": -0.33, "omega": 0}
/// Other kinds: "amplitude_damping" {A}, "phase_damping" {Gamma},
/// "thermal" {A, N}. "A" defaults to 1 and "omega" to 0. Unknown keys are
/// rejected.
struct ChannelConfig {
    ChannelKind kind = ChannelKind::SqueezedVacuum;
    ChannelParams params;  ///< unused for Custom
    RateParams rates;

    /// Reservoir view for kinds backed by (A, N, M); empty for phase
    /// damping and custom channels.
    std::optional<ReservoirParams> reservoir() const;
};

/// Throws ConfigError for schema problems and DomainError /
/// CompletePositivityError for out-of-range values.
ChannelConfig channel_config_from_json(const nlohmann::json& j);
ChannelConfig load_channel_config(const std::string& path);

nlohmann::json to_json(const ChannelConfig& c);

/// The channel of the reference example: squeezed vacuum, A=1, N=1, M=sqrt(2).
ChannelConfig default_channel_config();

}  // namespace qmc
