#include "qmc/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>

#include "qmc/error.hpp"

namespace qmc {

namespace {

using nlohmann::json;

double number(const json& j, const std::string& key) {
    const auto& v = j.at(key);
    if (!v.is_number()) throw ConfigError("config key '" + key + "' must be a number");
    return v.get<double>();
}

double number_or(const json& j, const std::string& key, double fallback) {
    return j.contains(key) ? number(j, key) : fallback;
}

void require_keys(const json& j, const std::set<std::string>& required, const std::set<std::string>& optional) {
    for (const auto& [key, value] : j.items()) {
        if (key == "kind") continue;
        if (!required.count(key) && !optional.count(key)) {
            throw ConfigError("unknown config key '" + key + "'");
        }
    }
    for (const auto& key : required) {
        if (!j.contains(key)) throw ConfigError("missing config key '" + key + "'");
    }
}

ChannelKind parse_kind(const std::string& s) {
    for (auto k : {ChannelKind::AmplitudeDamping, ChannelKind::PhaseDamping, ChannelKind::ThermalField,
                   ChannelKind::SqueezedVacuum, ChannelKind::Custom}) {
        if (to_string(k) == s) return k;
    }
    throw ConfigError("unknown channel kind '" + s + "'");
}

}  // namespace

std::optional<ReservoirParams> ChannelConfig::reservoir() const {
    switch (kind) {
        case ChannelKind::AmplitudeDamping: return ReservoirParams{params.A, 0.0, 0.0, params.omega};
        case ChannelKind::ThermalField: return ReservoirParams{params.A, params.N, 0.0, params.omega};
        case ChannelKind::SqueezedVacuum: return ReservoirParams{params.A, params.N, params.M, params.omega};
        default: return std::nullopt;
    }
}

ChannelConfig channel_config_from_json(const json& j) {
    if (!j.is_object()) throw ConfigError("channel config must be a JSON object");
    if (!j.contains("kind") || !j.at("kind").is_string()) throw ConfigError("config needs a string 'kind'");

    ChannelConfig c;
    c.kind = parse_kind(j.at("kind").get<std::string>());
    switch (c.kind) {
        case ChannelKind::AmplitudeDamping:
            require_keys(j, {}, {"A", "omega"});
            break;
        case ChannelKind::PhaseDamping:
            require_keys(j, {"Gamma"}, {"omega"});
            c.params.gamma = number(j, "Gamma");
            break;
        case ChannelKind::ThermalField:
            require_keys(j, {"N"}, {"A", "omega"});
            c.params.N = number(j, "N");
            break;
        case ChannelKind::SqueezedVacuum:
            require_keys(j, {"N", "M"}, {"A", "omega"});
            c.params.N = number(j, "N");
            c.params.M = number(j, "M");
            break;
        case ChannelKind::Custom:
            require_keys(j, {"inv_T1", "inv_T2", "inv_T3", "w_eq"}, {"omega"});
            break;
    }
    c.params.A = number_or(j, "A", 1.0);
    c.params.omega = number_or(j, "omega", 0.0);

    if (c.kind == ChannelKind::Custom) {
        c.rates = RateParams{number(j, "inv_T1"), number(j, "inv_T2"), number(j, "inv_T3"), number(j, "w_eq"),
                             c.params.omega};
        c.rates.validate();
    } else {
        c.rates = named_channel(c.kind, c.params);
    }
    return c;
}

ChannelConfig load_channel_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("invalid JSON in '") + path + "': " + e.what());
    }
    return channel_config_from_json(j);
}

json to_json(const ChannelConfig& c) {
    json j;
    j["kind"] = std::string(to_string(c.kind));
    switch (c.kind) {
        case ChannelKind::AmplitudeDamping: j["A"] = c.params.A; break;
        case ChannelKind::PhaseDamping: j["Gamma"] = c.params.gamma; break;
        case ChannelKind::ThermalField:
            j["A"] = c.params.A;
            j["N"] = c.params.N;
            break;
        case ChannelKind::SqueezedVacuum:
            j["A"] = c.params.A;
            j["N"] = c.params.N;
            j["M"] = c.params.M;
            break;
        case ChannelKind::Custom:
            j["inv_T1"] = c.rates.inv_T1;
            j["inv_T2"] = c.rates.inv_T2;
            j["inv_T3"] = c.rates.inv_T3;
            j["w_eq"] = c.rates.w_eq;
            break;
    }
    j["omega"] = c.rates.omega;
    return j;
}

ChannelConfig default_channel_config() {
    return channel_config_from_json({{"kind", "svc"}, {"A", 1.0}, {"N", 1.0}, {"M", std::sqrt(2.0)}});
}

}  // namespace qmc
